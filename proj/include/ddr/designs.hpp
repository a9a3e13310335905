#pragma once

// Design strength, decided algebraically (distance moments, dual frequencies) and
// combinatorially (orthogonal arrays, block designs, t-transitive groups).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "ddr/empirics.hpp"
#include "ddr/error.hpp"
#include "ddr/numeric.hpp"
#include "ddr/orthopoly.hpp"
#include "ddr/spaces.hpp"

namespace ddr {

struct DualFrequencyVector {
  std::vector<Rational> numerators;  // sum_k p_i(k) f_k, exact
  std::vector<double> values;        // numerators[i] / sqrt(sqnorm_i)

  std::size_t size() const { return numerators.size(); }
};

inline DualFrequencyVector dual_frequencies(const FrequencyVector& f, const MonicOrthogonalSystem& sys) {
  DualFrequencyVector hat;
  for (int i = 0; i <= sys.degree(); ++i) {
    const auto& p = sys.polys[static_cast<std::size_t>(i)];
    Rational acc = 0;
    for (std::size_t k = 0; k < f.size(); ++k)
      if (sgn(f[k]) != 0) acc += p(Rational(static_cast<long>(k))) * f[k];
    hat.numerators.push_back(acc);
    hat.values.push_back(to_double(acc) / std::sqrt(to_double(sys.sqnorms[static_cast<std::size_t>(i)])));
  }
  return hat;
}

/// Largest t <= t_max whose first t moments agree exactly with the whole space.
inline int strength_by_moments(const FrequencyVector& f, const SpaceDescriptor& space, int t_max) {
  const auto fx = space_frequencies(space);
  int t = 0;
  while (t < t_max && moment(f, t + 1) == moment(fx, t + 1)) ++t;
  return t;
}

/// Largest t with hatf_1 = ... = hatf_t = 0, tested on exact numerators.
inline int strength_by_dual(const DualFrequencyVector& hat) {
  int t = 0;
  while (static_cast<std::size_t>(t + 1) < hat.size() && sgn(hat.numerators[static_cast<std::size_t>(t + 1)]) == 0) ++t;
  return t;
}

namespace detail {

/// Calls fn(indices) for every k-subset of [0, n) in lexicographic order; stops when fn returns false.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  if (k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(static_cast<const std::vector<int>&>(idx))) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline void require_family(const PointSet& set, Family family, const char* op) {
  if (set.space().family != family)
    throw Error(ErrorKind::wrong_family, std::string(op) + " needs a " + std::string(to_string(family)) + " point set, got " +
                                             set.space().name());
}

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

inline std::vector<int> inverse(const std::vector<int>& a) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

}  // namespace detail

/// Largest t such that every t columns show each of the q^t tuples equally often.
inline int oa_strength(const PointSet& set) {
  detail::require_family(set, Family::hamming, "oa_strength");
  const auto& space = set.space();
  const std::size_t rows = set.size();
  int t = 0;
  for (int s = 1; s <= space.n; ++s) {
    const Integer patterns = ipow(space.q, static_cast<unsigned long>(s));
    if (patterns > Integer(static_cast<unsigned long>(rows)) || Integer(static_cast<unsigned long>(rows)) % patterns != 0) break;
    const std::size_t cells = patterns.get_ui();
    const std::size_t each = rows / cells;
    std::vector<std::size_t> counts(cells);
    bool balanced = detail::for_each_subset(space.n, s, [&](const std::vector<int>& cols) {
      std::fill(counts.begin(), counts.end(), 0);
      for (const auto& row : set.elements()) {
        std::size_t code = 0;
        for (int c : cols) code = code * static_cast<std::size_t>(space.q) + static_cast<std::size_t>(row[static_cast<std::size_t>(c)]);
        ++counts[code];
      }
      return std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c == each; });
    });
    if (!balanced) break;
    t = s;
  }
  return t;
}

struct BlockDesignStrength {
  int t = 0;
  Integer eta;  // blocks through each t-subset
};

/// Largest t <= d such that every t-subset of the groundset lies in the same number of blocks.
inline BlockDesignStrength block_design_strength(const PointSet& set) {
  detail::require_family(set, Family::johnson, "block_design_strength");
  const auto& space = set.space();
  BlockDesignStrength result{0, Integer(static_cast<unsigned long>(set.size()))};
  for (int s = 1; s <= space.d; ++s) {
    // Ranks of t-subsets in the combinatorial number system.
    const Integer total = binomial(space.n, s);
    std::vector<std::uint64_t> counts(total.get_ui(), 0);
    for (const auto& block : set.elements()) {
      detail::for_each_subset(space.d, s, [&](const std::vector<int>& pos) {
        Integer rank = 0;
        for (int i = 0; i < s; ++i) rank += binomial(block[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])], i + 1);
        ++counts[rank.get_ui()];
        return true;
      });
    }
    if (!std::all_of(counts.begin(), counts.end(), [&](std::uint64_t c) { return c == counts.front(); })) break;
    result = {s, Integer(static_cast<unsigned long>(counts.front()))};
  }
  return result;
}

/// Closure under composition and inverses (a finite nonempty closed set is a group).
inline bool is_group(const PointSet& set) {
  detail::require_family(set, Family::symmetric, "is_group");
  std::set<std::vector<int>> members;
  for (const auto& p : set.elements()) members.insert(p.entries());
  for (const auto& a : members) {
    if (!members.contains(detail::inverse(a))) return false;
    for (const auto& b : members)
      if (!members.contains(detail::compose(a, b))) return false;
  }
  return true;
}

/// Largest t such that the group is transitive on ordered t-tuples of distinct letters.
inline int transitivity_degree(const PointSet& set) {
  if (!is_group(set)) throw Error(ErrorKind::not_a_group, "point set is not closed under composition and inverses");
  const int n = set.space().n;
  int t = 0;
  for (int s = 1; s <= n; ++s) {
    // Transitive on ordered s-tuples iff the orbit of (0,...,s-1) has n!/(n-s)! elements.
    std::set<std::vector<int>> orbit;
    for (const auto& g : set.elements()) orbit.emplace(g.entries().begin(), g.entries().begin() + s);
    Integer falling = factorial(static_cast<unsigned long>(n)) / factorial(static_cast<unsigned long>(n - s));
    if (Integer(static_cast<unsigned long>(orbit.size())) != falling) break;
    t = s;
  }
  return t;
}

/// E(F^i), i = 1..t, with F the fixed-point count, averaged over the set.
inline std::vector<Rational> fixed_point_moments(const PointSet& set, int t) {
  detail::require_family(set, Family::symmetric, "fixed_point_moments");
  std::vector<Rational> out;
  for (int i = 1; i <= t; ++i) {
    Rational acc = 0;
    for (const auto& g : set.elements()) {
      long fixed = 0;
      for (std::size_t k = 0; k < g.size(); ++k) fixed += g[k] == static_cast<int>(k);
      acc += rpow(Rational(fixed), static_cast<unsigned long>(i));
    }
    acc /= static_cast<unsigned long>(set.size());
    out.push_back(acc);
  }
  return out;
}

/// B_0..B_m, the moments of Poisson(1), via the Bell triangle.
inline std::vector<Integer> bell_numbers(int m) {
  std::vector<Integer> bell{1};
  std::vector<Integer> row{1};
  for (int i = 1; i <= m; ++i) {
    std::vector<Integer> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

struct DesignReport {
  int capacity = 0;  // N(X)
  int strength_moments = 0;
  int strength_dual = 0;
  bool capacity_reached = false;  // strength stopped at N(X), not at a mismatch
  std::optional<int> combinatorial_strength;
  std::optional<Integer> eta;  // johnson only
  bool agree = true;
  FrequencyVector frequencies;
  DualFrequencyVector dual;
};

/// Runs both algebraic routes and, when the family has one, the combinatorial oracle.
inline DesignReport design_report(const PointSet& set, const PairOptions& options = {}) {
  const auto& space = set.space();
  DesignReport r;
  r.frequencies = frequencies(set, options);
  const auto sys = gram_schmidt(space, build_measure(space).capacity());
  r.capacity = sys.degree();
  r.dual = dual_frequencies(r.frequencies, sys);
  r.strength_moments = strength_by_moments(r.frequencies, space, r.capacity);
  r.strength_dual = strength_by_dual(r.dual);
  r.capacity_reached = r.strength_moments == r.capacity;
  r.agree = r.strength_moments == r.strength_dual;
  switch (space.family) {
    case Family::hamming:
      r.combinatorial_strength = oa_strength(set);
      r.agree = r.agree && *r.combinatorial_strength == r.strength_moments;
      break;
    case Family::johnson: {
      auto b = block_design_strength(set);
      r.combinatorial_strength = b.t;
      r.eta = b.eta;
      r.agree = r.agree && b.t == r.strength_moments;
      break;
    }
    case Family::symmetric:
      if (is_group(set)) {
        r.combinatorial_strength = transitivity_degree(set);
        // Only t-transitive => t-design is claimed, and strength is capped at N(X).
        r.agree = r.agree && std::min(*r.combinatorial_strength, r.capacity) <= r.strength_moments;
      }
      break;
  }
  return r;
}

}  // namespace ddr
