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

#include <catch_amalgamated.hpp>

#include <sstream>

#include "imp/harness.hpp"

using namespace imp;

namespace {

std::vector<Json> records_of(const ExperimentConfig& c) {
  std::ostringstream os;
  run(c, os);
  std::vector<Json> out;
  std::istringstream in(os.str());
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("experiment configs round-trip through JSON", "[harness]") {
  ExperimentConfig c;
  c.subcommand = "matrix";
  c.eq_set = "basic";
  c.ne_set = "zeros;ones";
  c.rounds = 77;
  c.tail_start = 12;
  c.seed = 5;
  c.enumeration = "godel";
  const ExperimentConfig back = ExperimentConfig::from_json(Json::parse(c.to_json().dump()));
  CHECK(back == c);
  CHECK(back.hash() == c.hash());
  ExperimentConfig d = c;
  d.rounds = 78;
  CHECK(d.hash() != c.hash());
}

TEST_CASE("replaying a config reproduces the transcript digest", "[harness]") {
  ExperimentConfig c;
  c.eq = "alg2";
  c.ne = "prob";
  c.seed = 9;
  c.rounds = 150;
  c.fuel = 500;
  const auto first = records_of(c);
  const auto second = records_of(ExperimentConfig::from_json(c.to_json()));
  REQUIRE(first.size() == 1);
  CHECK(first[0]["digest"] == second[0]["digest"]);
  CHECK(first[0]["config_hash"] == c.hash());
}

TEST_CASE("unknown specs list the registered ones", "[harness]") {
  const SpecContext ctx;
  try {
    resolve_strategy("nonsense", ctx);
    FAIL("expected a usage error");
  } catch (const UsageError& e) {
    const std::string what = e.what();
    for (const auto& s : registered_strategy_specs()) CHECK(what.find(s) != std::string::npos);
  }
  CHECK_THROWS_AS(resolve_language("NOT_A_MACHINE", ctx), UsageError);
  CHECK_THROWS_AS(resolve_strategy("alg3:j=9,k=1", ctx), std::invalid_argument);
  CHECK_THROWS_AS(strategy_set("other"), UsageError);
}

TEST_CASE("probabilistic runs need a seed", "[harness]") {
  ExperimentConfig c;
  c.eq = "zeros";
  c.ne = "prob";
  CHECK_THROWS_AS(validate(c), UsageError);
  c.ne = "prob:seed=4";
  CHECK_NOTHROW(validate(c));
  c.ne = "prob";
  c.seed = 4;
  CHECK_NOTHROW(validate(c));
  c.tail_start = 0;
  CHECK_THROWS_AS(validate(c), UsageError);
}

TEST_CASE("matrix emits one record per cell and a summary", "[harness]") {
  ExperimentConfig c;
  c.subcommand = "matrix";
  c.eq_set = "zeros;ones;alg2";
  c.ne_set = "zeros;ones";
  c.rounds = 64;
  c.fuel = 500;
  const auto recs = records_of(c);
  REQUIRE(recs.size() == 3 * 2 + 1);
  CHECK(recs.back()["kind"] == "matrix");
  CHECK(recs.back()["rows"].size() == 3);
  CHECK(recs.back()["cols"].size() == 2);
  CHECK(recs.back()["maxmin_est"] == "0");
}

TEST_CASE("play reports losses for pure pairs", "[harness]") {
  ExperimentConfig c;
  c.eq = "alg2";
  c.ne = "lang:3";
  c.rounds = 200;
  c.fuel = 1000;
  const auto recs = records_of(c);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["losses_eq"].get<std::size_t>() <= 3);
}

TEST_CASE("spec parameters are parsed strictly", "[harness]") {
  CHECK(detail::parse_u64("42") == 42u);
  CHECK_FALSE(detail::parse_u64("").has_value());
  CHECK_FALSE(detail::parse_u64("4x").has_value());
  CHECK_FALSE(detail::parse_u64("99999999999999999999").has_value());
}
