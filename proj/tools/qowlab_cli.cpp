// Copyright 2026 The qowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. All computation happens behind the C API in
// libqowlab; this file only maps flags to parameter JSON and prints the
// report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qowlab.h"

namespace {

using Json = nlohmann::ordered_json;

struct FlagSpec {
  const char* flag;  // command-line name, without the leading dashes
  const char* key;   // parameter key
  char type;         // i: integer, u: unsigned, d: double, s: string
  const char* help;
};

struct SubSpec {
  const char* name;
  const char* help;
  std::vector<FlagSpec> flags;
};

const FlagSpec kSeed{"seed", "seed", 'u', "random seed (default 1)"};
const FlagSpec kJobs{"jobs", "jobs", 'i', "worker threads for trials"};

std::vector<SubSpec> subcommands() {
  return {
      {"goodasnew",
       "measure-and-recover sweep: recovered state stays within sqrt(eps)",
       {{"dim", "dim", 'i', "system dimension (2..32)"},
        {"trials", "trials", 'i', "seeded instances"},
        kSeed}},
      {"reconstruct",
       "replace a quantum message by recorded corrections and re-decode",
       {{"problem", "problem", 's', "problem id, e.g. eq:2 or promise:4"},
        {"protocol", "protocol", 's', "basis, rotated or boosted"},
        {"r", "r", 'i', "boost copies (odd)"},
        {"theta", "theta", 'd', "rotation angle / bias for noisy encoders"},
        kSeed}},
      {"coset-delta",
       "exact pair-mixture gap for points vs lines mod p",
       {{"p", "p", 'i', "prime (2..101)"}, kSeed}},
      {"subset-delta",
       "exact two-route translate-overlap gap over a finite group",
       {{"group", "group", 's', "group spec, e.g. z5 or z2^3"},
        {"set", "set", 's', "comma-separated subset elements"},
        {"random-instances", "random_instances", 'i',
         "seeded random instances instead of one explicit set"},
        {"max-order", "max_order", 'i', "group order cap for random mode"},
        kSeed}},
      {"randset",
       "expected squared bias of a random K-subset translate distribution",
       {{"group", "group", 's', "group spec"},
        {"k", "k", 'i', "subset size"},
        {"trials", "trials", 'i', "Monte Carlo trials"},
        kSeed,
        kJobs}},
      {"vardist-check",
       "trace-distance certificate against the pair-mixture gap",
       {{"problem", "problem", 's', "coset:p for the built-in instance"},
        {"random-protocols", "random_protocols", 'i',
         "random small-protocol instances"},
        {"beta", "beta", 'd', "distinguishing bias for the length floor"},
        kSeed}},
      {"membership",
       "subgroup-membership advice test over every subgroup",
       {{"group", "group", 's', "group spec (order <= 16)"}, kSeed}},
      {"pqp",
       "truth-table advice guessing success 1/2 + 2^-(n+1)",
       {{"n", "n", 'i', "input bits (1..8)"},
        {"tables", "tables", 'i', "random truth tables"},
        kSeed}},
      {"diagnostics",
       "communication-matrix row counts, VC dimension and the Sauer bound",
       {{"problem", "problem", 's', "problem id"},
        {"random-functions", "random_functions", 'i',
         "seeded random total functions instead"},
        kSeed}},
      {"cheb",
       "Chebyshev derivative values: closed form vs differentiated recurrence",
       {{"d", "d", 'i', "single degree"},
        {"m", "m", 'i', "derivative order for single mode"},
        {"max-d", "max_d", 'i', "sweep degree cap"},
        {"max-m", "max_m", 'i', "sweep order cap"},
        kSeed}},
      {"markov",
       "derivative bounds on [0, n]: equality case and random polynomials",
       {{"suite", "suite", 's', "aa-equality or va-random"},
        {"max-d", "max_d", 'i', "degree cap for the equality sweep"},
        {"n", "n", 'i', "interval end"},
        {"count", "count", 'i', "random polynomials"},
        kSeed}},
      {"degree-bound",
       "minimum degree to vanish at 0..k-1 and reach delta at k",
       {{"n", "n", 'd', "interval end"},
        {"k", "k", 'i', "vanishing count"},
        {"delta", "delta", 'd', "offset at node k"},
        {"r0", "r0", 'd', "sup-norm budget"},
        kSeed}},
      {"direct-product",
       "success ceiling for finding all k marked items in t queries",
       {{"n", "n", 'd', "search space size"},
        {"k", "k", 'i', "marked items"},
        {"t", "t", 'd', "total queries"},
        kSeed}},
      {"grover-all",
       "staged search with removal, empirical success vs the ceiling",
       {{"n", "n", 'i', "search space size"},
        {"k", "k", 'i', "marked items"},
        {"schedule", "schedule", 's', "comma iterations per stage"},
        {"trials", "trials", 'i', "Monte Carlo trials"},
        kSeed,
        kJobs}},
      {"fingerprint",
       "classical prime-residue fingerprints for equality and subset",
       {{"mode", "mode", 's', "eq or subset"},
        {"n", "n", 'i', "string bits for eq mode"},
        {"target", "target", 'd', "false-accept target for eq mode"},
        {"group", "group", 's', "group spec for subset mode"},
        {"set", "set", 's', "comma subset elements for subset mode"},
        {"trials", "trials", 'i', "sampled message checks"},
        kSeed}},
  };
}

Json convert_value(const FlagSpec& f, const std::string& text) {
  try {
    switch (f.type) {
      case 'i':
        return static_cast<int64_t>(std::stoll(text));
      case 'u':
        return static_cast<uint64_t>(std::stoull(text));
      case 'd':
        return std::stod(text);
      default:
        return text;
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string("--") + f.flag,
                               "cannot parse '" + text + "'");
  }
}

struct SubState {
  SubSpec spec;
  std::vector<std::string> values;
  std::vector<CLI::Option*> options;
  std::string format = "json";
  std::string out_path;
};

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << out_path << "'\n";
    return 1;
  }
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  return f.good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("qowlab ") + qowlab_version() +
               ": desk-scale experiments on one-way quantum messages"};
  app.require_subcommand(1);

  auto subs = std::make_shared<std::vector<SubState>>();
  auto specs = subcommands();
  subs->reserve(specs.size());
  int exit_code = 0;

  for (const auto& spec : specs) {
    subs->push_back(SubState{spec, {}, {}, "json", ""});
    SubState& state = subs->back();
    state.values.resize(spec.flags.size());
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    for (size_t j = 0; j < spec.flags.size(); ++j) {
      state.options.push_back(
          sub->add_option(std::string("--") + spec.flags[j].flag,
                          state.values[j], spec.flags[j].help));
    }
    sub->add_option("--format", state.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", state.out_path,
                    "write the report to a file instead of stdout");

    SubState* sp = &state;
    int* code = &exit_code;
    sub->callback([sp, code]() {
      Json params = Json::object();
      for (size_t j = 0; j < sp->spec.flags.size(); ++j) {
        if (sp->options[j]->count() > 0)
          params[sp->spec.flags[j].key] =
              convert_value(sp->spec.flags[j], sp->values[j]);
      }

      qowlab_runner* runner = qowlab_runner_new();
      if (runner == nullptr) {
        std::cerr << "error: runner allocation failed\n";
        *code = 1;
        return;
      }
      char* report = nullptr;
      int rc = qowlab_run(runner, sp->spec.name, params.dump().c_str(),
                          sp->format.c_str(), &report);
      if (report != nullptr) {
        int emit_rc = emit(report, sp->out_path);
        qowlab_free_string(report);
        if (emit_rc != 0 && rc == 0) rc = 1;
      }
      if (rc != 0 && rc != 2) {
        std::cerr << "error: " << qowlab_last_error(runner) << "\n";
      } else if (rc == 2 && report == nullptr) {
        std::cerr << "check failed: " << qowlab_last_error(runner) << "\n";
      }
      qowlab_runner_free(runner);
      *code = rc < 0 ? 1 : rc;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  return exit_code;
}
