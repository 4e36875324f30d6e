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

#include "qowlab/groups.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

namespace qowlab {

FiniteGroup::FiniteGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  require(!factors_.empty(), ErrorCode::invalid_argument,
          "group needs at least one cyclic factor");
  long order = 1;
  for (int f : factors_) {
    require(f >= 1, ErrorCode::invalid_argument, "cyclic factor must be >= 1");
    order *= f;
    require(order <= kMaxGroupOrder, ErrorCode::dimension_limit,
            "group order exceeds the supported maximum");
  }
  order_ = static_cast<int>(order);
  strides_.resize(factors_.size());
  long s = 1;
  for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
    strides_[i] = static_cast<int>(s);
    s *= factors_[i];
  }
}

FiniteGroup FiniteGroup::cyclic(int n) { return FiniteGroup({n}); }

FiniteGroup FiniteGroup::product(const std::vector<int>& factor_orders) {
  return FiniteGroup(factor_orders);
}

FiniteGroup FiniteGroup::parse(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  require(!s.empty(), ErrorCode::invalid_argument, "empty group spec");

  std::vector<int> factors;
  size_t i = 0;
  while (i < s.size()) {
    require(s[i] == 'z', ErrorCode::invalid_argument,
            "group spec: expected 'z' in \"" + spec + "\"");
    ++i;
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    require(j > i, ErrorCode::invalid_argument,
            "group spec: missing order in \"" + spec + "\"");
    int n = std::stoi(s.substr(i, j - i));
    i = j;
    int reps = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      require(j > i, ErrorCode::invalid_argument,
              "group spec: missing exponent in \"" + spec + "\"");
      reps = std::stoi(s.substr(i, j - i));
      require(reps >= 1 && reps <= 12, ErrorCode::invalid_argument,
              "group spec: bad exponent");
      i = j;
    }
    for (int r = 0; r < reps; ++r) factors.push_back(n);
    if (i < s.size()) {
      require(s[i] == 'x', ErrorCode::invalid_argument,
              "group spec: expected 'x' separator in \"" + spec + "\"");
      ++i;
    }
  }
  return FiniteGroup(std::move(factors));
}

int FiniteGroup::op(int a, int b) const {
  require(a >= 0 && a < order_ && b >= 0 && b < order_,
          ErrorCode::invalid_argument, "group op: element out of range");
  int out = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    int ai = (a / strides_[i]) % factors_[i];
    int bi = (b / strides_[i]) % factors_[i];
    out += ((ai + bi) % factors_[i]) * strides_[i];
  }
  return out;
}

int FiniteGroup::inverse(int a) const {
  require(a >= 0 && a < order_, ErrorCode::invalid_argument,
          "group inverse: element out of range");
  int out = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    int ai = (a / strides_[i]) % factors_[i];
    out += ((factors_[i] - ai) % factors_[i]) * strides_[i];
  }
  return out;
}

int FiniteGroup::element_order(int a) const {
  int x = a, ord = 1;
  while (x != 0) {
    x = op(x, a);
    ++ord;
  }
  return ord;
}

std::string FiniteGroup::name() const {
  std::string out;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "x";
    out += "z" + std::to_string(factors_[i]);
  }
  return out;
}

bool FiniteGroup::verify_axioms() const {
  int n = order_;
  std::vector<bool> seen(n);
  for (int a = 0; a < n; ++a) {
    if (op(a, 0) != a || op(0, a) != a) return false;
    int ia = inverse(a);
    if (op(a, ia) != 0 || op(ia, a) != 0) return false;
    std::fill(seen.begin(), seen.end(), false);
    for (int b = 0; b < n; ++b) {
      int c = op(a, b);
      if (c < 0 || c >= n || seen[c]) return false;  // closure + cancellation
      seen[c] = true;
      if (op(b, a) != c) return false;  // abelian by construction
    }
  }
  if (n <= 128) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (op(op(a, b), c) != op(a, op(b, c))) return false;
  } else {
    Rng rng = Rng::stream(0x617373u, n);
    for (int t = 0; t < 1000000; ++t) {
      int a = static_cast<int>(rng.below(n));
      int b = static_cast<int>(rng.below(n));
      int c = static_cast<int>(rng.below(n));
      if (op(op(a, b), c) != op(a, op(b, c))) return false;
    }
  }
  return true;
}

OrderStats order_stats(const FiniteGroup& g) {
  OrderStats st;
  st.orders.resize(g.order());
  for (int a = 0; a < g.order(); ++a) {
    int o = g.element_order(a);
    st.orders[a] = o;
    if (o == 2) ++st.order2_count;
    st.max_order = std::max(st.max_order, o);
  }
  return st;
}

Subgroup::Subgroup(const FiniteGroup& g, std::vector<int> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  require(!elements_.empty(), ErrorCode::invalid_argument,
          "subgroup must be nonempty");
  require(std::binary_search(elements_.begin(), elements_.end(), g.identity()),
          ErrorCode::invalid_argument, "subgroup must contain the identity");
  for (int a : elements_) {
    require(a >= 0 && a < g.order(), ErrorCode::invalid_argument,
            "subgroup element out of range");
    require(contains(g.inverse(a)), ErrorCode::invalid_argument,
            "subgroup not closed under inverses");
    for (int b : elements_)
      require(contains(g.op(a, b)), ErrorCode::invalid_argument,
              "subgroup not closed under the operation");
  }
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

Subgroup Subgroup::generated(const FiniteGroup& g,
                             const std::vector<int>& generators) {
  std::set<int> closure{g.identity()};
  std::vector<int> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int gen : generators) {
        int c = g.op(a, gen);
        if (closure.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return Subgroup(g, std::vector<int>(closure.begin(), closure.end()));
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g,
                                          const Subgroup& h) {
  std::vector<std::vector<int>> cosets;
  std::vector<bool> used(g.order(), false);
  for (int a = 0; a < g.order(); ++a) {
    if (used[a]) continue;
    std::vector<int> coset;
    for (int x : h.elements()) {
      int e = g.op(a, x);
      used[e] = true;
      coset.push_back(e);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

int periodicity(const FiniteGroup& g, const std::vector<int>& s) {
  require(!s.empty(), ErrorCode::invalid_argument,
          "periodicity of an empty set is undefined");
  std::set<std::vector<int>> translates;
  for (int a = 0; a < g.order(); ++a) {
    std::vector<int> t;
    t.reserve(s.size());
    for (int x : s) t.push_back(g.op(a, x));
    std::sort(t.begin(), t.end());
    translates.insert(std::move(t));
  }
  return static_cast<int>(translates.size());
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  require(g.order() <= 16, ErrorCode::dimension_limit,
          "subgroup enumeration supported up to order 16");
  // Closures of generator sets of size <= log2(order) reach every subgroup
  // of an abelian group of this size.
  int max_gens = 1;
  while ((1 << max_gens) < g.order()) ++max_gens;
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;

  std::vector<int> gens;
  auto emit = [&]() {
    Subgroup h = Subgroup::generated(g, gens);
    if (seen.insert(h.elements()).second) out.push_back(std::move(h));
  };
  std::function<void(int, int)> rec = [&](int start, int depth) {
    emit();
    if (depth == max_gens) return;
    for (int a = start; a < g.order(); ++a) {
      gens.push_back(a);
      rec(a + 1, depth + 1);
      gens.pop_back();
    }
  };
  rec(1, 0);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace qowlab
