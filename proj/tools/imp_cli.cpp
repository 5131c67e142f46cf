// Copyright 2026 The IMP Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// imp_cli: experiment driver.
//
//   imp_cli play --eq alg2 --ne lang:3 --rounds 200
//   imp_cli matrix --eq-set basic --ne-set basic --rounds 512
//   imp_cli learn-demo --ne co-na:PARITY --rounds 4096
//   imp_cli dissim --l1 chameleon --l2 PARITY --horizon 5040 --csv traj.csv
//   imp_cli alg3-trace --eq alg3:j=3,k=1 --ne co-na:PARITY --rounds 64
//   imp_cli accept
//   imp_cli replay --config run.json

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "imp/imp.hpp"

namespace {

struct Options {
  imp::ExperimentConfig cfg;
  std::uint64_t tail = 0;
  std::uint64_t seed = 0;
  bool emit_config = false;
};

void add_common(CLI::App* sub, Options& o, bool with_tail = true) {
  sub->add_option("--rounds,--horizon,-n", o.cfg.rounds, "number of rounds (or word ranks)");
  sub->add_option("--fuel", o.cfg.fuel, "step budget per simulation (default: $IMP_FUEL or 10000)");
  if (with_tail) sub->add_option("--tail-start", o.tail, "first n of the liminf/limsup window (default rounds/2)");
  sub->add_option("--seed", o.seed, "seed for probabilistic strategies");
  sub->add_option("--enumeration", o.cfg.enumeration, "machine enumeration for learners: library|godel");
  sub->add_option("--output,-o", o.cfg.output, "write records here instead of stdout");
  sub->add_option("--csv", o.cfg.csv, "write the trajectory / matrix CSV here");
  sub->add_flag("--emit-config", o.emit_config, "print the configuration as JSON and exit");
}

int execute(const imp::ExperimentConfig& cfg) {
  std::unique_ptr<std::ofstream> file, csv;
  if (!cfg.output.empty()) {
    file = std::make_unique<std::ofstream>(cfg.output);
    if (!*file) throw std::runtime_error("cannot open " + cfg.output);
  }
  if (!cfg.csv.empty()) {
    csv = std::make_unique<std::ofstream>(cfg.csv);
    if (!*csv) throw std::runtime_error("cannot open " + cfg.csv);
  }
  imp::run(cfg, file ? *file : std::cout, csv.get());
  return 0;
}

int table() {
  for (const auto& m : imp::library()) {
    std::cout << imp::Json{{"name", m.name}, {"index", m.index}, {"total", m.total}, {"summary", m.summary},
                           {"instructions", m.program.code.size()}}
                     .dump()
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated matching pennies workbench"};
  app.require_subcommand(1);
  Options o;
  try {
    o.cfg.fuel = imp::default_fuel();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  auto* play = app.add_subcommand("play", "play two strategies");
  play->add_option("--eq", o.cfg.eq, "strategy of player '='")->required();
  play->add_option("--ne", o.cfg.ne, "strategy of player '!='")->required();
  add_common(play, o);

  auto* matrix = app.add_subcommand("matrix", "empirical game matrix over two strategy sets");
  matrix->add_option("--eq-set", o.cfg.eq_set, "basic|nonadaptive|spec;spec;...")->required();
  matrix->add_option("--ne-set", o.cfg.ne_set, "basic|nonadaptive|spec;spec;...")->required();
  add_common(matrix, o);

  auto* demo = app.add_subcommand("learn-demo", "every atom of the learner mixture against one evader");
  demo->add_option("--eq", o.cfg.eq, "learner mixture (default alg3-mix:k=1)");
  demo->add_option("--ne", o.cfg.ne, "evader (default co-na:PARITY)");
  add_common(demo, o);

  auto* dis = app.add_subcommand("dissim", "dissimilarity of two languages");
  dis->add_option("--l1", o.cfg.l1, "language spec")->required();
  dis->add_option("--l2", o.cfg.l2, "language spec")->required();
  add_common(dis, o);

  auto* trace = app.add_subcommand("alg3-trace", "per-round annotated learner trace");
  trace->add_option("--eq", o.cfg.eq, "learner (default alg3:j=0,k=1)");
  trace->add_option("--ne", o.cfg.ne, "opponent")->required();
  add_common(trace, o);

  auto* accept = app.add_subcommand("accept", "run the acceptance suite");

  std::string config_path;
  auto* replay = app.add_subcommand("replay", "run a configuration emitted earlier");
  replay->add_option("--config", config_path, "JSON configuration file")->required();

  app.add_subcommand("table", "list the named machines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (app.got_subcommand("table")) return table();
    if (accept->parsed()) {
      const auto results = imp::acceptance_suite(&std::cout);
      std::size_t failed = 0;
      for (const auto& r : results) failed += !r.pass;
      std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
      return failed == 0 ? 0 : 1;
    }
    if (replay->parsed()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open " + config_path);
      return execute(imp::ExperimentConfig::from_json(imp::Json::parse(in)));
    }
    for (auto* sub : app.get_subcommands()) o.cfg.subcommand = sub->get_name();
    for (auto* sub : app.get_subcommands()) {
      if (sub->count("--tail-start")) o.cfg.tail_start = o.tail;
      if (sub->count("--seed")) o.cfg.seed = o.seed;
    }
    if (o.emit_config) {
      std::cout << o.cfg.to_json().dump(2) << '\n';
      return 0;
    }
    return execute(o.cfg);
  } catch (const imp::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
