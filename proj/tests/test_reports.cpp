// Copyright 2026 The qowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "qowlab/experiments.hpp"
#include "qowlab/report.hpp"

using namespace qowlab;

TEST_CASE("report envelope keeps a fixed field order") {
  Report r;
  r.experiment = "demo";
  r.seed = 42;
  r.params = Json{{"p", 3}};
  r.results = Json{{"value", 1.5}};
  r.verdict = true;

  Json j = report_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"experiment", "artifact_version",
                                         "seed", "params", "results",
                                         "verdict"});
  CHECK(j["verdict"] == "pass");
  CHECK(j["artifact_version"].get<std::string>().find('.') !=
        std::string::npos);

  r.verdict = false;
  CHECK(report_json(r)["verdict"] == "fail");
}

TEST_CASE("rendered JSON is byte-stable") {
  Report r;
  r.experiment = "demo";
  r.seed = 7;
  r.params = Json{{"a", 1}, {"b", "two"}};
  r.results = Json{{"x", 0.125}};
  std::string first = render_report_json(r);
  std::string second = render_report_json(r);
  CHECK(first == second);
  CHECK(first.back() == '\n');
}

TEST_CASE("rationals render as num, den and decimal") {
  Json j = rational_json(Rational(2) / 9);
  CHECK(j["num"] == 2);
  CHECK(j["den"] == 9);
  CHECK(j["decimal"].get<double>() == doctest::Approx(2.0 / 9.0));

  Json neg = rational_json(Rational(-3) / 4);
  CHECK(neg["num"] == -3);
  CHECK(neg["den"] == 4);

  // Values beyond 64 bits keep exactness through decimal strings.
  Rational huge(1);
  for (int i = 0; i < 5; ++i) huge *= Rational(1000000000);
  Json big = rational_json(huge + Rational(1) / 3);
  CHECK(big["num"].is_string());
  CHECK(big["den"] == 3);
}

TEST_CASE("CSV turns the first array of objects into rows") {
  Report r;
  r.experiment = "demo";
  r.seed = 3;
  r.params = Json{{"n", 2}};
  r.results = Json{
      {"total", 4},
      {"steps", Json::array({Json{{"y", 0}, {"err", 0.5}},
                             Json{{"y", 1}, {"err", 0.25}}})},
  };

  std::string csv = render_report_csv(r);
  std::vector<std::string> lines;
  size_t start = 0;
  for (size_t i = 0; i <= csv.size(); ++i)
    if (i == csv.size() || csv[i] == '\n') {
      if (i > start) lines.push_back(csv.substr(start, i - start));
      start = i + 1;
    }

  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        "experiment,seed,params.n,results.total,verdict,steps.y,steps.err");
  CHECK(lines[1] == "demo,3,2,4,pass,0,0.5");
  CHECK(lines[2] == "demo,3,2,4,pass,1,0.25");
}

TEST_CASE("CSV without row arrays emits a single data line") {
  Report r;
  r.experiment = "demo";
  r.seed = 0;
  r.results = Json{{"value", 2.5}, {"ok", true}};
  std::string csv = render_report_csv(r);
  CHECK(csv == "experiment,seed,results.value,results.ok,verdict\n"
               "demo,0,2.5,true,pass\n");
}

TEST_CASE("CSV escapes quotes, commas and newlines") {
  Report r;
  r.experiment = "weird,name";
  r.seed = 1;
  r.results = Json{{"note", "say \"hi\"\nbye"}};
  std::string csv = render_report_csv(r);
  CHECK(csv.find("\"weird,name\"") != std::string::npos);
  CHECK(csv.find("\"say \"\"hi\"\"\nbye\"") != std::string::npos);
}

TEST_CASE("nested result objects flatten into dotted columns") {
  Report r;
  r.experiment = "demo";
  r.seed = 9;
  r.results = Json{{"delta", Json{{"num", 2}, {"den", 9}}}};
  std::string csv = render_report_csv(r);
  CHECK(csv.find("results.delta.num") != std::string::npos);
  CHECK(csv.find("results.delta.den") != std::string::npos);
}

TEST_CASE("experiment registry exposes every subcommand") {
  auto names = experiment_names();
  CHECK(names.size() == 15);
  for (const char* expected :
       {"goodasnew", "reconstruct", "coset-delta", "subset-delta", "randset",
        "vardist-check", "membership", "pqp", "diagnostics", "cheb", "markov",
        "degree-bound", "direct-product", "grover-all", "fingerprint"}) {
    bool found = false;
    for (const auto& n : names)
      if (n == expected) found = true;
    CHECK_MESSAGE(found, expected);
  }
}

TEST_CASE("experiments validate their parameters") {
  CHECK_THROWS_AS(run_experiment("nonsense", Json::object()), LabError);
  CHECK_THROWS_AS(run_experiment("coset-delta", Json{{"p", 3}, {"zz", 1}}),
                  LabError);
  CHECK_THROWS_AS(run_experiment("coset-delta", Json{{"p", "three"}}),
                  LabError);

  // Parameters default sensibly when omitted.
  CHECK(run_experiment("coset-delta", Json::object()).verdict);

  Report rep = run_experiment("coset-delta", Json{{"p", 3}});
  CHECK(rep.experiment == "coset-delta");
  CHECK(rep.verdict);
  Json j = report_json(rep);
  CHECK(j["results"]["delta"]["num"] == 2);
  CHECK(j["results"]["delta"]["den"] == 9);
}

TEST_CASE("experiment reports are deterministic end to end") {
  Json params{{"n", 64}, {"k", 2}, {"trials", 400}, {"seed", 5}};
  std::string a = render_report_json(run_experiment("grover-all", params));
  std::string b = render_report_json(run_experiment("grover-all", params));
  CHECK(a == b);
}
