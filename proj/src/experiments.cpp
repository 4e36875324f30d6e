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

#include "qowlab/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qowlab/groups.hpp"
#include "qowlab/lowerbounds.hpp"
#include "qowlab/polymethod.hpp"
#include "qowlab/protocols.hpp"
#include "qowlab/qcore.hpp"
#include "qowlab/reconstruct.hpp"

namespace qowlab {

namespace {

// Typed parameter access with unknown-key rejection.
class Params {
 public:
  explicit Params(const Json& j) {
    if (j.is_null()) return;
    require(j.is_object(), ErrorCode::invalid_argument,
            "parameters must be a JSON object");
    for (const auto& [k, v] : j.items()) values_[k] = v;
  }

  bool has(const std::string& k) const { return values_.count(k) > 0; }

  int64_t integer(const std::string& k, int64_t def) {
    auto v = take(k);
    if (!v) return def;
    require(v->is_number_integer() || v->is_number_unsigned(),
            ErrorCode::invalid_argument,
            "parameter '" + k + "' must be an integer");
    return v->get<int64_t>();
  }

  double real(const std::string& k, double def) {
    auto v = take(k);
    if (!v) return def;
    require(v->is_number(), ErrorCode::invalid_argument,
            "parameter '" + k + "' must be a number");
    return v->get<double>();
  }

  std::string str(const std::string& k, const std::string& def) {
    auto v = take(k);
    if (!v) return def;
    require(v->is_string(), ErrorCode::invalid_argument,
            "parameter '" + k + "' must be a string");
    return v->get<std::string>();
  }

  uint64_t seed_value() {
    auto v = take("seed");
    if (!v) return 1;
    require(v->is_number_unsigned() ||
                (v->is_number_integer() && v->get<int64_t>() >= 0),
            ErrorCode::invalid_argument,
            "parameter 'seed' must be a nonnegative integer");
    return v->get<uint64_t>();
  }

  std::vector<int> int_list(const std::string& k,
                            const std::vector<int>& def) {
    auto v = take(k);
    if (!v) return def;
    std::vector<int> out;
    if (v->is_array()) {
      for (const auto& e : *v) {
        require(e.is_number_integer() || e.is_number_unsigned(),
                ErrorCode::invalid_argument,
                "parameter '" + k + "' must hold integers");
        out.push_back(e.get<int>());
      }
      return out;
    }
    require(v->is_string(), ErrorCode::invalid_argument,
            "parameter '" + k + "' must be a list or a comma string");
    std::string s = v->get<std::string>();
    size_t pos = 0;
    while (pos < s.size()) {
      size_t comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos
                                          ? std::string::npos
                                          : comma - pos);
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail(ErrorCode::invalid_argument,
             "parameter '" + k + "' has a non-integer entry");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    require(!out.empty(), ErrorCode::invalid_argument,
            "parameter '" + k + "' must not be empty");
    return out;
  }

  void finish() const {
    if (!values_.empty())
      fail(ErrorCode::invalid_argument,
           "unknown parameter '" + values_.begin()->first + "'");
  }

 private:
  std::optional<Json> take(const std::string& k) {
    auto it = values_.find(k);
    if (it == values_.end()) return std::nullopt;
    Json v = it->second;
    values_.erase(it);
    return v;
  }

  std::map<std::string, Json> values_;
};

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

Json bound_report_json(const BoundReport& b) {
  Json j = Json::object();
  j["problem"] = b.problem;
  j["measure"] = b.measure;
  j["kind"] = b.kind;
  j["value"] = b.value;
  j["provenance"] = b.provenance;
  return j;
}

int problem_suffix(const std::string& id) {
  size_t colon = id.find(':');
  require(colon != std::string::npos && colon + 1 < id.size(),
          ErrorCode::invalid_argument, "problem id has no numeric suffix");
  try {
    return std::stoi(id.substr(colon + 1));
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_argument, "problem id has no numeric suffix");
  }
}

// ---------------------------------------------------------------------------

Report goodasnew_exp(Params& p) {
  int dim = static_cast<int>(p.integer("dim", 4));
  int trials = static_cast<int>(p.integer("trials", 1000));
  uint64_t seed = p.seed_value();
  p.finish();
  require(dim >= 2 && dim <= 32, ErrorCode::invalid_argument,
          "dim must lie in [2, 32]");
  require(trials >= 1 && trials <= 1000000, ErrorCode::invalid_argument,
          "trials must lie in [1, 1000000]");

  bool pow2 = (dim & (dim - 1)) == 0;
  int system_bits = pow2 ? std::bit_width(static_cast<unsigned>(dim)) - 1 : 0;

  double max_violation = -1.0;
  double worst_recovered = 0.0;
  double pure_intermediate_err = 0.0;
  int pure_instances = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<uint64_t>(t));
    bool pure = (t % 2 == 0);
    DensityMatrix rho =
        pure ? random_pure_density(dim, rng) : random_density(dim, rng);
    Cmat u = random_unitary(2 * dim, rng);
    int output_bit =
        pow2 ? static_cast<int>(rng.below(1 + system_bits)) : 0;
    TwoOutcomeMeasurement m(dim, 1, output_bit, u);
    RecoveryResult rr = measure_and_recover(rho, m);
    double eps = rr.p_err;
    double dist = trace_distance(rr.recovered, rho);
    max_violation =
        std::max(max_violation, dist - (std::sqrt(eps) + kDerivedTol));
    worst_recovered = std::max(worst_recovered, dist);
    if (pure) {
      ++pure_instances;
      pure_intermediate_err =
          std::max(pure_intermediate_err,
                   std::abs(rr.intermediate_tdist -
                            std::sqrt(eps * (1.0 - eps))));
    }
  }

  Report r;
  r.seed = seed;
  r.params = {{"dim", dim}, {"trials", trials}, {"seed", seed}};
  r.results["dim"] = dim;
  r.results["trials"] = trials;
  r.results["pure_instances"] = pure_instances;
  r.results["max_violation"] = max_violation;
  r.results["worst_recovered_distance"] = worst_recovered;
  r.results["pure_intermediate_max_err"] = pure_intermediate_err;
  r.verdict =
      max_violation <= 0.0 && pure_intermediate_err <= kDerivedTol;
  return r;
}

Report reconstruct_exp(Params& p) {
  std::string problem = p.str("problem", "eq:1");
  std::string kind = p.str("protocol", "basis");
  int boost_r = static_cast<int>(p.integer("r", 1));
  double theta = p.real("theta", 0.02);
  uint64_t seed = p.seed_value();
  p.finish();

  OneWayProblem f = parse_problem(problem);
  QuantumOneWayProtocol proto;
  if (kind == "rotated") {
    require(problem.rfind("eq:", 0) == 0, ErrorCode::invalid_argument,
            "rotated protocol exists for eq problems only");
    proto = rotated_equality_protocol(problem_suffix(problem), theta);
  } else {
    require(kind == "basis" || kind == "boosted",
            ErrorCode::invalid_argument,
            "protocol must be basis, rotated or boosted");
    QuantumOneWayProtocol base;
    if (problem.rfind("eq:", 0) == 0) {
      base = basis_equality_protocol(problem_suffix(problem));
    } else if (problem.rfind("promise:", 0) == 0) {
      base = promise_clause_protocol(problem_suffix(problem));
    } else if (problem.rfind("coset:", 0) == 0) {
      base = coset_basis_protocol(problem_suffix(problem));
    } else if (problem == "sendbit") {
      base = biased_bit_protocol(theta);
    } else {
      fail(ErrorCode::invalid_argument,
           "no built-in protocol for problem '" + problem + "'");
    }
    proto = kind == "boosted" ? boost_protocol(base, boost_r) : base;
  }

  ProtocolEvaluation ev = evaluate_protocol(proto);
  int k = proto.message_qubits;
  double budget = compliance_budget(k);

  int t_max = 0;
  int tie_total = 0;
  bool all_correct = true;
  Json per_x = Json::array();
  for (int x = 0; x < f.alice_size; ++x) {
    SimulationResult sim = simulate_message(proto, x);
    int t_x = static_cast<int>(sim.advice.entries.size());
    bool correct = true;
    for (int y : f.bob_domain(x))
      correct = correct && bob_decode(proto, sim.advice, y) == f.f(x, y);
    per_x.push_back({{"x", x},
                     {"T", t_x},
                     {"ties", sim.tie_count},
                     {"correct", correct}});
    t_max = std::max(t_max, t_x);
    tie_total += sim.tie_count;
    all_correct = all_correct && correct;
  }

  Report r;
  r.seed = seed;
  r.params = {{"problem", problem},
              {"protocol", kind},
              {"r", boost_r},
              {"theta", theta},
              {"seed", seed}};
  r.results["problem"] = problem;
  r.results["protocol"] = kind;
  r.results["K"] = k;
  r.results["T"] = t_max;
  r.results["all_correct"] = all_correct;
  r.results["tie_count"] = tie_total;
  r.results["eta"] = ev.worst_error;
  r.results["eta_budget"] = budget;
  r.results["compliant"] = ev.worst_error <= budget;
  r.results["per_x"] = per_x;
  r.verdict = all_correct;
  return r;
}

Report coset_delta_exp(Params& p) {
  int prime = static_cast<int>(p.integer("p", 3));
  uint64_t seed = p.seed_value();
  p.finish();
  CosetDeltaReport rep = coset_delta_exact(prime);

  Report r;
  r.seed = seed;
  r.params = {{"p", prime}, {"seed", seed}};
  r.results["p"] = rep.p;
  r.results["delta"] = rational_json(rep.delta);
  r.results["enumerated"] = rational_json(rep.enumerated);
  r.results["match"] = rep.match;
  r.results["pr_f0"] = rational_json(rep.pr_f0);
  r.results["pr_f0_expected"] =
      rational_json(Rational(1) - Rational(1, prime));
  r.results["pr_f0_match"] = rep.pr_f0_match;
  r.results["path"] = rep.path;
  r.verdict = rep.match && rep.pr_f0_match;
  return r;
}

FiniteGroup random_group(Rng& rng, int max_order) {
  int first_cap = std::min(8, max_order);
  std::vector<int> factors;
  factors.push_back(2 + static_cast<int>(rng.below(first_cap - 1)));
  int order = factors[0];
  int extra = static_cast<int>(rng.below(3));
  for (int i = 0; i < extra; ++i) {
    int f = 2 + static_cast<int>(rng.below(7));
    if (order * f > max_order) break;
    factors.push_back(f);
    order *= f;
  }
  return FiniteGroup::product(factors);
}

std::vector<int> random_subset(Rng& rng, int n, int k) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int j = 0; j < k; ++j)
    std::swap(idx[j], idx[j + rng.below(n - j)]);
  std::vector<int> s(idx.begin(), idx.begin() + k);
  std::sort(s.begin(), s.end());
  return s;
}

Report subset_delta_exp(Params& p) {
  Report r;
  if (p.has("group")) {
    std::string group = p.str("group", "");
    std::vector<int> set = p.int_list("set", {});
    uint64_t seed = p.seed_value();
    p.finish();
    FiniteGroup g = FiniteGroup::parse(group);
    SubsetDeltaReport rep = subset_delta(g, set);
    r.seed = seed;
    r.params = {{"group", group}, {"set", join_ints(set)}, {"seed", seed}};
    r.results["group"] = g.name();
    r.results["order"] = g.order();
    r.results["set"] = join_ints(set);
    r.results["delta"] = rational_json(rep.delta);
    r.results["pair_delta"] = rational_json(rep.pair_delta);
    r.results["equal"] = rep.equal;
    r.verdict = rep.equal;
    return r;
  }

  int count = static_cast<int>(p.integer("random_instances", 50));
  int max_order = static_cast<int>(p.integer("max_order", 256));
  uint64_t seed = p.seed_value();
  p.finish();
  require(count >= 1 && count <= 10000, ErrorCode::invalid_argument,
          "random_instances must lie in [1, 10000]");
  require(max_order >= 4 && max_order <= 1024, ErrorCode::invalid_argument,
          "max_order must lie in [4, 1024]");

  bool all_equal = true;
  Json rows = Json::array();
  for (int i = 0; i < count; ++i) {
    Rng rng = Rng::stream(seed, static_cast<uint64_t>(i));
    FiniteGroup g = random_group(rng, max_order);
    int k = 1 + static_cast<int>(rng.below(g.order() / 2));
    std::vector<int> s = random_subset(rng, g.order(), k);
    SubsetDeltaReport rep = subset_delta(g, s);
    rows.push_back({{"group", g.name()},
                    {"order", g.order()},
                    {"set_size", k},
                    {"delta", rep.delta.get_d()},
                    {"equal", rep.equal}});
    all_equal = all_equal && rep.equal;
  }
  r.seed = seed;
  r.params = {{"random_instances", count},
              {"max_order", max_order},
              {"seed", seed}};
  r.results["instances"] = rows;
  r.results["all_equal"] = all_equal;
  r.verdict = all_equal;
  return r;
}

Report randset_exp(Params& p) {
  std::string group = p.str("group", "z101");
  int k = static_cast<int>(p.integer("k", 10));
  int trials = static_cast<int>(p.integer("trials", 10000));
  uint64_t seed = p.seed_value();
  int jobs = static_cast<int>(p.integer("jobs", 1));
  p.finish();

  FiniteGroup g = FiniteGroup::parse(group);
  RandsetReport rep = randset_check(g, k, trials, seed, jobs);

  Report r;
  r.seed = seed;
  r.params = {{"group", group},
              {"k", k},
              {"trials", trials},
              {"seed", seed},
              {"jobs", jobs}};
  r.results["group"] = g.name();
  r.results["order"] = rep.group_order;
  r.results["k"] = rep.k;
  r.results["exact"] = rational_json(rep.exact);
  r.results["enumerated_available"] = rep.enumerated_available;
  if (rep.enumerated_available)
    r.results["enumerated"] = rational_json(rep.enumerated);
  r.results["closed_form_matches"] = rep.closed_form_matches;
  r.results["trials"] = rep.trials;
  r.results["mc_mean"] = rep.mc_mean;
  r.results["mc_se"] = rep.mc_se;
  r.results["mean_ok"] = rep.mean_ok;
  r.results["median_delta"] = rep.median_delta;
  r.results["median_bound"] = rep.median_bound;
  r.results["median_ok"] = rep.median_ok;
  r.verdict = rep.closed_form_matches && rep.mean_ok && rep.median_ok;
  return r;
}

Json tdist_report_json(const TraceDistanceReport& rep) {
  Json j = Json::object();
  j["l"] = rep.l;
  j["delta"] = rational_json(rep.delta);
  j["expected_tdist"] = rep.expected_tdist;
  j["bound"] = rep.bound;
  j["beta"] = rep.beta;
  j["required_l"] = rep.required_l;
  j["within"] = rep.verdict;
  return j;
}

Report vardist_exp(Params& p) {
  double beta = p.real("beta", 1.0 / 3.0);
  Report r;
  if (p.has("problem")) {
    std::string problem = p.str("problem", "");
    uint64_t seed = p.seed_value();
    p.finish();
    require(problem.rfind("coset:", 0) == 0, ErrorCode::invalid_argument,
            "built-in certificate instances cover coset problems only");
    int prime = problem_suffix(problem);
    QuantumOneWayProtocol proto = coset_basis_protocol(prime);
    std::vector<FiniteDist> family = coset_a_family(prime);
    FiniteDist b = FiniteDist::uniform(prime * prime);
    TraceDistanceReport rep = vardist_certificate(proto, family, b, beta);
    r.seed = seed;
    r.params = {{"problem", problem}, {"beta", beta}, {"seed", seed}};
    r.results["problem"] = problem;
    r.results.update(tdist_report_json(rep));
    r.verdict = rep.verdict;
    return r;
  }

  int count = static_cast<int>(p.integer("random_protocols", 20));
  uint64_t seed = p.seed_value();
  p.finish();
  require(count >= 1 && count <= 1000, ErrorCode::invalid_argument,
          "random_protocols must lie in [1, 1000]");

  bool all_within = true;
  Json rows = Json::array();
  for (int i = 0; i < count; ++i) {
    Rng rng = Rng::stream(seed, static_cast<uint64_t>(i));
    int alice = 2 + static_cast<int>(rng.below(3));
    int bob = 2 + static_cast<int>(rng.below(3));
    int qubits = 1 + static_cast<int>(rng.below(2));

    OneWayProblem f;
    f.id = "anypair";
    f.alice_size = alice;
    f.bob_size = bob;
    f.f = [](int, int) { return 1; };

    std::vector<DensityMatrix> states;
    states.reserve(alice);
    for (int x = 0; x < alice; ++x)
      states.push_back(random_pure_density(1 << qubits, rng));

    QuantumOneWayProtocol proto;
    proto.problem = f;
    proto.message_qubits = qubits;
    proto.encoder = [states](int x) { return states[x]; };
    proto.decoder = [qubits](int) {
      return TwoOutcomeMeasurement::computational(qubits, 0);
    };

    auto random_dist = [&rng](int n) {
      FiniteDist d;
      d.p.resize(n);
      Rational total(0);
      for (int j = 0; j < n; ++j) {
        d.p[j] = Rational(1 + static_cast<long>(rng.below(8)));
        total += d.p[j];
      }
      for (int j = 0; j < n; ++j) d.p[j] /= total;
      return d;
    };
    std::vector<FiniteDist> family;
    family.reserve(bob);
    for (int y = 0; y < bob; ++y) family.push_back(random_dist(alice));
    FiniteDist b = random_dist(bob);

    TraceDistanceReport rep = vardist_certificate(proto, family, b, beta);
    Json row = tdist_report_json(rep);
    row["instance"] = i;
    rows.push_back(row);
    all_within = all_within && rep.verdict;
  }
  r.seed = seed;
  r.params = {{"random_protocols", count}, {"beta", beta}, {"seed", seed}};
  r.results["instances"] = rows;
  r.results["all_within"] = all_within;
  r.verdict = all_within;
  return r;
}

Report membership_exp(Params& p) {
  std::string group = p.str("group", "z2^3");
  uint64_t seed = p.seed_value();
  p.finish();
  FiniteGroup g = FiniteGroup::parse(group);
  std::vector<Subgroup> subs = all_subgroups(g);

  double max_err = 0.0;
  Json rows = Json::array();
  for (const auto& h : subs) {
    double in_err = 0.0, out_err = 0.0;
    for (int x = 0; x < g.order(); ++x) {
      double prob = membership_advice_probability(g, h, x);
      if (h.contains(x))
        in_err = std::max(in_err, std::abs(prob - 1.0));
      else
        out_err = std::max(out_err, std::abs(prob - 0.5));
    }
    rows.push_back({{"subgroup", join_ints(h.elements())},
                    {"order", h.order()},
                    {"in_err", in_err},
                    {"out_err", out_err}});
    max_err = std::max(max_err, std::max(in_err, out_err));
  }

  Report r;
  r.seed = seed;
  r.params = {{"group", group}, {"seed", seed}};
  r.results["group"] = g.name();
  r.results["subgroup_count"] = static_cast<int>(subs.size());
  r.results["max_abs_err"] = max_err;
  r.results["subgroups"] = rows;
  r.verdict = max_err <= kInvariantTol;
  return r;
}

Report pqp_exp(Params& p) {
  int n = static_cast<int>(p.integer("n", 3));
  int tables = static_cast<int>(p.integer("tables", 5));
  uint64_t seed = p.seed_value();
  p.finish();
  require(n >= 1 && n <= 8, ErrorCode::invalid_argument,
          "n must lie in [1, 8]");
  require(tables >= 1 && tables <= 1000, ErrorCode::invalid_argument,
          "tables must lie in [1, 1000]");

  double expected = 0.5 + std::ldexp(1.0, -n - 1);
  double max_err = 0.0;
  for (int i = 0; i < tables; ++i) {
    Rng rng = Rng::stream(seed, static_cast<uint64_t>(i));
    std::vector<int> table(1 << n);
    for (auto& b : table) b = static_cast<int>(rng.below(2));
    for (int x = 0; x < (1 << n); ++x) {
      double prob = truth_table_advice_probability(table, x);
      max_err = std::max(max_err, std::abs(prob - expected));
    }
  }

  Report r;
  r.seed = seed;
  r.params = {{"n", n}, {"tables", tables}, {"seed", seed}};
  r.results["n"] = n;
  r.results["tables"] = tables;
  r.results["expected"] = expected;
  r.results["max_abs_err"] = max_err;
  r.verdict = max_err == 0.0;
  return r;
}

Json diagnostics_json(const MatrixDiagnostics& d) {
  Json j = Json::object();
  j["rows"] = d.rows;
  j["cols"] = d.cols;
  j["distinct_rows"] = d.distinct_rows;
  j["distinct_cols"] = d.distinct_cols;
  j["d1"] = d.d1;
  j["vc"] = d.vc;
  j["sauer_holds"] = d.sauer_holds;
  j["sauer_bound"] = d.sauer_bound;
  Json reports = Json::array();
  for (const auto& b : d.reports) reports.push_back(bound_report_json(b));
  j["bounds"] = reports;
  return j;
}

Report diagnostics_exp(Params& p) {
  Report r;
  if (p.has("problem")) {
    std::string problem = p.str("problem", "");
    uint64_t seed = p.seed_value();
    p.finish();
    OneWayProblem f = parse_problem(problem);
    MatrixDiagnostics d = matrix_diagnostics(f);
    r.seed = seed;
    r.params = {{"problem", problem}, {"seed", seed}};
    r.results["problem"] = problem;
    r.results.update(diagnostics_json(d));
    r.verdict = d.sauer_holds;
    return r;
  }

  int count = static_cast<int>(p.integer("random_functions", 50));
  uint64_t seed = p.seed_value();
  p.finish();
  require(count >= 1 && count <= 10000, ErrorCode::invalid_argument,
          "random_functions must lie in [1, 10000]");

  bool all_hold = true;
  Json rows = Json::array();
  for (int i = 0; i < count; ++i) {
    Rng rng = Rng::stream(seed, static_cast<uint64_t>(i));
    // Shapes keep the exact-by-subset-search dimension count cheap while
    // still reaching the 2^16-cell size cap: wide matrices only with few
    // rows (their distinct columns collapse) and tall matrices only with
    // few columns (few subsets to scan).
    static const int kBobCap[9] = {0, 15, 14, 13, 7, 6, 5, 4, 4};
    int alice_bits = 1 + static_cast<int>(rng.below(8));
    int bob_bits = 1 + static_cast<int>(rng.below(kBobCap[alice_bits]));
    int rows_n = 1 << alice_bits, cols_n = 1 << bob_bits;
    std::vector<char> table(static_cast<size_t>(rows_n) * cols_n);
    for (auto& b : table) b = static_cast<char>(rng.below(2));

    OneWayProblem f;
    f.id = "random";
    f.alice_size = rows_n;
    f.bob_size = cols_n;
    f.f = [table, cols_n](int x, int y) {
      return static_cast<int>(table[static_cast<size_t>(x) * cols_n + y]);
    };
    MatrixDiagnostics d = matrix_diagnostics(f);
    rows.push_back({{"instance", i},
                    {"rows", rows_n},
                    {"cols", cols_n},
                    {"distinct_rows", d.distinct_rows},
                    {"d1", d.d1},
                    {"vc", d.vc},
                    {"sauer_holds", d.sauer_holds}});
    all_hold = all_hold && d.sauer_holds;
  }
  r.seed = seed;
  r.params = {{"random_functions", count}, {"seed", seed}};
  r.results["instances"] = rows;
  r.results["all_hold"] = all_hold;
  r.verdict = all_hold;
  return r;
}

Report cheb_exp(Params& p) {
  Report r;
  if (p.has("d")) {
    int d = static_cast<int>(p.integer("d", 0));
    int m = static_cast<int>(p.integer("m", 1));
    uint64_t seed = p.seed_value();
    p.finish();
    Rational closed = chebyshev_derivative_at_one(d, m);
    Rational recurrence = chebyshev(d).derivative(m).eval(Rational(1));
    r.seed = seed;
    r.params = {{"d", d}, {"m", m}, {"seed", seed}};
    r.results["d"] = d;
    r.results["m"] = m;
    r.results["closed"] = rational_json(closed);
    r.results["recurrence"] = rational_json(recurrence);
    r.results["match"] = closed == recurrence;
    r.verdict = closed == recurrence;
    return r;
  }

  int max_d = static_cast<int>(p.integer("max_d", 20));
  int max_m = static_cast<int>(p.integer("max_m", 5));
  uint64_t seed = p.seed_value();
  p.finish();
  require(max_d >= 0 && max_d <= 64, ErrorCode::invalid_argument,
          "max_d must lie in [0, 64]");
  require(max_m >= 0 && max_m <= 16, ErrorCode::invalid_argument,
          "max_m must lie in [0, 16]");

  bool all_match = true;
  Json rows = Json::array();
  for (int d = 0; d <= max_d; ++d) {
    Poly t = chebyshev(d);
    for (int m = 0; m <= max_m; ++m) {
      Rational closed = chebyshev_derivative_at_one(d, m);
      Rational recurrence = t.derivative(m).eval(Rational(1));
      bool match = closed == recurrence;
      rows.push_back(
          {{"d", d}, {"m", m}, {"value", closed.get_d()}, {"match", match}});
      all_match = all_match && match;
    }
  }
  r.seed = seed;
  r.params = {{"max_d", max_d}, {"max_m", max_m}, {"seed", seed}};
  r.results["values"] = rows;
  r.results["all_match"] = all_match;
  r.verdict = all_match;
  return r;
}

// T_d rescaled from [-1, 1] to [0, n].
Poly rescaled_chebyshev(int d, int n) {
  Poly t = chebyshev(d);
  Poly u({Rational(-1), Rational(2) / n});
  Poly acc({t.c.back()});
  for (int i = t.degree() - 1; i >= 0; --i)
    acc = acc * u + Poly({t.c[i]});
  return acc;
}

Report markov_exp(Params& p) {
  std::string suite = p.str("suite", "aa-equality");
  Report r;
  if (suite == "aa-equality") {
    int max_d = static_cast<int>(p.integer("max_d", 10));
    int n = static_cast<int>(p.integer("n", 4));
    uint64_t seed = p.seed_value();
    p.finish();
    require(max_d >= 1 && max_d <= 24, ErrorCode::invalid_argument,
            "max_d must lie in [1, 24]");
    require(n >= 1 && n <= 64, ErrorCode::invalid_argument,
            "n must lie in [1, 64]");

    bool all_ok = true;
    Json rows = Json::array();
    for (int d = 1; d <= max_d; ++d) {
      Poly q = rescaled_chebyshev(d, n);
      double r0 = sup_norm(q, Rational(n), 0);
      double r1 = sup_norm(q, Rational(n), 1);
      MarkovBounds mb = markov_bounds(r0, r1, n, d, 1);
      bool aa_exact = mb.aa_lower_degree == static_cast<double>(d);
      bool va_ok = true;
      for (int m = 1; m <= std::min(3, d); ++m) {
        double sup_m = sup_norm(q, Rational(n), m);
        double rhs = markov_bounds(r0, 0.0, n, d, m).va_rhs;
        va_ok = va_ok && sup_m <= rhs + kInvariantTol;
      }
      rows.push_back({{"d", d},
                      {"r0", r0},
                      {"r1", r1},
                      {"aa_lower_degree", mb.aa_lower_degree},
                      {"aa_exact", aa_exact},
                      {"va_ok", va_ok}});
      all_ok = all_ok && aa_exact && va_ok;
    }
    r.seed = seed;
    r.params =
        {{"suite", suite}, {"max_d", max_d}, {"n", n}, {"seed", seed}};
    r.results["instances"] = rows;
    r.results["all_ok"] = all_ok;
    r.verdict = all_ok;
    return r;
  }

  require(suite == "va-random", ErrorCode::invalid_argument,
          "suite must be aa-equality or va-random");
  int count = static_cast<int>(p.integer("count", 200));
  int n = static_cast<int>(p.integer("n", 4));
  uint64_t seed = p.seed_value();
  p.finish();
  require(count >= 1 && count <= 10000, ErrorCode::invalid_argument,
          "count must lie in [1, 10000]");
  require(n >= 1 && n <= 64, ErrorCode::invalid_argument,
          "n must lie in [1, 64]");

  bool all_ok = true;
  Json rows = Json::array();
  for (int i = 0; i < count; ++i) {
    Rng rng = Rng::stream(seed, static_cast<uint64_t>(i));
    std::vector<Rational> coeffs(4);
    for (int j = 0; j < 3; ++j) {
      long num = static_cast<long>(rng.below(2001)) - 1000;
      long den = 1 + static_cast<long>(rng.below(16));
      coeffs[j] = Rational(num) / den;
    }
    long lead = 1 + static_cast<long>(rng.below(1000));
    if (rng.below(2)) lead = -lead;
    coeffs[3] = Rational(lead) / (1 + static_cast<long>(rng.below(16)));
    Poly poly(coeffs);

    double r0 = sup_norm(poly, Rational(n), 0);
    bool ok = true;
    for (int m = 1; m <= 3; ++m) {
      double sup_m = sup_norm(poly, Rational(n), m);
      double rhs = markov_bounds(r0, 0.0, n, 3, m).va_rhs;
      ok = ok && sup_m <= rhs + kInvariantTol;
    }
    rows.push_back({{"instance", i}, {"r0", r0}, {"ok", ok}});
    all_ok = all_ok && ok;
  }
  r.seed = seed;
  r.params = {{"suite", suite}, {"count", count}, {"n", n}, {"seed", seed}};
  r.results["instances"] = rows;
  r.results["all_ok"] = all_ok;
  r.verdict = all_ok;
  return r;
}

Report degree_bound_exp(Params& p) {
  double n = p.real("n", 100.0);
  int k = static_cast<int>(p.integer("k", 1));
  double delta = p.real("delta", 1.0);
  double r0 = p.real("r0", 1.0);
  uint64_t seed = p.seed_value();
  p.finish();
  DegreeBound db = degree_lower_bound(n, k, delta, r0);

  Report r;
  r.seed = seed;
  r.params =
      {{"n", n}, {"k", k}, {"delta", delta}, {"r0", r0}, {"seed", seed}};
  r.results["n"] = db.n;
  r.results["k"] = db.k;
  r.results["delta"] = db.delta;
  r.results["r0"] = db.r0;
  r.results["branch"] = db.branch;
  r.results["value"] = db.value;
  r.verdict = true;
  return r;
}

Report direct_product_exp(Params& p) {
  double n = p.real("n", 10000.0);
  int k = static_cast<int>(p.integer("k", 2));
  double t = p.real("t", 10.0);
  uint64_t seed = p.seed_value();
  p.finish();
  double bound = direct_product_bound(n, k, t);
  bool vacuous = k == 0 || !(2.0 * t < std::sqrt(n / 2.0));

  Report r;
  r.seed = seed;
  r.params = {{"n", n}, {"k", k}, {"t", t}, {"seed", seed}};
  r.results["n"] = n;
  r.results["k"] = k;
  r.results["t"] = t;
  r.results["bound"] = bound;
  r.results["vacuous"] = vacuous;
  r.verdict = true;
  return r;
}

Report grover_all_exp(Params& p) {
  int n = static_cast<int>(p.integer("n", 64));
  int k = static_cast<int>(p.integer("k", 2));
  std::vector<int> schedule =
      p.int_list("schedule", std::vector<int>(std::max(k, 0), 1));
  int trials = static_cast<int>(p.integer("trials", 10000));
  uint64_t seed = p.seed_value();
  int jobs = static_cast<int>(p.integer("jobs", 1));
  p.finish();

  GroverReport rep = grover_find_all(n, k, schedule, trials, seed, jobs);

  Report r;
  r.seed = seed;
  r.params = {{"n", n},
              {"k", k},
              {"schedule", join_ints(schedule)},
              {"trials", trials},
              {"seed", seed},
              {"jobs", jobs}};
  r.results["n"] = rep.n;
  r.results["k"] = rep.k;
  r.results["schedule"] = join_ints(rep.schedule);
  r.results["total_queries"] = rep.total_queries;
  r.results["trials"] = rep.trials;
  r.results["empirical"] = rep.empirical;
  r.results["se"] = rep.se;
  r.results["bound"] = rep.bound;
  r.results["within"] = rep.within;
  r.verdict = rep.within;
  return r;
}

Report fingerprint_exp(Params& p) {
  std::string mode = p.str("mode", "eq");
  Report r;
  if (mode == "eq") {
    int n = static_cast<int>(p.integer("n", 8));
    double target = p.real("target", 0.01);
    int trials = static_cast<int>(p.integer("trials", 2000));
    uint64_t seed = p.seed_value();
    p.finish();
    require(n >= 1 && n <= 30, ErrorCode::invalid_argument,
            "n must lie in [1, 30] for the sampled check");
    require(trials >= 1 && trials <= 1000000, ErrorCode::invalid_argument,
            "trials must lie in [1, 1000000]");

    FingerprintProtocol fp = equality_fingerprint(n, target);
    uint64_t space = uint64_t{1} << n;
    bool equal_all_accept = true;
    int collisions = 0;
    for (int t = 0; t < trials; ++t) {
      Rng rng = Rng::stream(seed, static_cast<uint64_t>(t));
      uint64_t x = rng.below(space);
      auto [prime, residue] = fp.sample_message(x, rng);
      equal_all_accept = equal_all_accept &&
                         fp.decide(prime, residue, static_cast<int>(x));
      uint64_t y = x ^ (1 + rng.below(space - 1));
      if (fp.decide(prime, residue, static_cast<int>(y))) ++collisions;
    }
    double rate = static_cast<double>(collisions) / trials;
    double se = std::sqrt(rate * (1.0 - rate) / trials);
    bool rate_ok = rate <= fp.error_bound + 4.0 * se + 1e-12;

    r.seed = seed;
    r.params = {{"mode", mode},
                {"n", n},
                {"target", target},
                {"trials", trials},
                {"seed", seed}};
    r.results["mode"] = mode;
    r.results["n"] = n;
    r.results["prime_lo"] = fp.prime_lo;
    r.results["prime_hi"] = fp.prime_hi;
    r.results["prime_count"] = static_cast<int64_t>(fp.primes.size());
    r.results["message_bits"] = fp.message_bits;
    r.results["error_bound"] = fp.error_bound;
    r.results["bound"] =
        bound_report_json(fp.bound_report("eq:" + std::to_string(n)));
    r.results["trials"] = trials;
    r.results["equal_always_accepted"] = equal_all_accept;
    r.results["collision_rate"] = rate;
    r.results["collision_ok"] = rate_ok;
    r.verdict = equal_all_accept && rate_ok;
    return r;
  }

  require(mode == "subset", ErrorCode::invalid_argument,
          "mode must be eq or subset");
  std::string group = p.str("group", "z11");
  std::vector<int> set = p.int_list("set", {0, 1});
  int trials = static_cast<int>(p.integer("trials", 2000));
  uint64_t seed = p.seed_value();
  p.finish();
  require(trials >= 1 && trials <= 1000000, ErrorCode::invalid_argument,
          "trials must lie in [1, 1000000]");

  FiniteGroup g = FiniteGroup::parse(group);
  FingerprintProtocol fp = subset_fingerprint(g, set);
  OneWayProblem f = subset_problem(g, set);

  bool yes_all_accept = true;
  int false_accepts = 0;
  int no_instances = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<uint64_t>(t));
    int y = static_cast<int>(rng.below(g.order()));
    int s_el = set[rng.below(set.size())];
    int x_yes = g.op(s_el, g.inverse(y));
    auto [prime, residue] = fp.sample_message(x_yes, rng);
    yes_all_accept = yes_all_accept && fp.decide(prime, residue, y);

    int x_no = static_cast<int>(rng.below(g.order()));
    if (f.f(x_no, y) == 0) {
      ++no_instances;
      auto [p2, r2] = fp.sample_message(x_no, rng);
      if (fp.decide(p2, r2, y)) ++false_accepts;
    }
  }

  std::string problem_id = "subset:" + g.name() + ":" + join_ints(set);
  r.seed = seed;
  r.params = {{"mode", mode},
              {"group", group},
              {"set", join_ints(set)},
              {"trials", trials},
              {"seed", seed}};
  r.results["mode"] = mode;
  r.results["group"] = g.name();
  r.results["set"] = join_ints(set);
  r.results["prime_lo"] = fp.prime_lo;
  r.results["prime_hi"] = fp.prime_hi;
  r.results["prime_count"] = static_cast<int64_t>(fp.primes.size());
  r.results["message_bits"] = fp.message_bits;
  r.results["bound"] = bound_report_json(fp.bound_report(problem_id));
  r.results["trials"] = trials;
  r.results["yes_always_accepted"] = yes_all_accept;
  r.results["no_instances"] = no_instances;
  r.results["false_accepts"] = false_accepts;
  r.verdict = yes_all_accept;
  return r;
}

using ExperimentFn = Report (*)(Params&);

struct RegistryEntry {
  const char* name;
  ExperimentFn fn;
};

constexpr RegistryEntry kRegistry[] = {
    {"goodasnew", goodasnew_exp},
    {"reconstruct", reconstruct_exp},
    {"coset-delta", coset_delta_exp},
    {"subset-delta", subset_delta_exp},
    {"randset", randset_exp},
    {"vardist-check", vardist_exp},
    {"membership", membership_exp},
    {"pqp", pqp_exp},
    {"diagnostics", diagnostics_exp},
    {"cheb", cheb_exp},
    {"markov", markov_exp},
    {"degree-bound", degree_bound_exp},
    {"direct-product", direct_product_exp},
    {"grover-all", grover_all_exp},
    {"fingerprint", fingerprint_exp},
};

}  // namespace

Report run_experiment(const std::string& name, const Json& params) {
  for (const auto& entry : kRegistry) {
    if (name == entry.name) {
      Params p(params);
      Report r = entry.fn(p);
      r.experiment = name;
      return r;
    }
  }
  fail(ErrorCode::invalid_argument, "unknown experiment '" + name + "'");
}

std::vector<std::string> experiment_names() {
  std::vector<std::string> names;
  for (const auto& entry : kRegistry) names.push_back(entry.name);
  return names;
}

}  // namespace qowlab
