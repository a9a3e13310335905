#pragma once

// The three distance-degree-regular spaces: Hamming H(n,q), Johnson J(nu,d) and the symmetric
// group S_n under d(s,t) = n - fix(s t^-1).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "ddr/error.hpp"
#include "ddr/numeric.hpp"

namespace ddr {

enum class Family { hamming, johnson, symmetric };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::hamming: return "hamming";
    case Family::johnson: return "johnson";
    case Family::symmetric: return "symmetric";
  }
  return "?";
}

/// D_0..D_m via D_m = (m-1)(D_{m-1} + D_{m-2}).
inline std::vector<Integer> derangement_table(int m) {
  std::vector<Integer> d(static_cast<std::size_t>(std::max(m, 1)) + 1);
  d[0] = 1;
  d[1] = 0;
  for (int i = 2; i <= m; ++i) d[static_cast<std::size_t>(i)] = (i - 1) * (d[static_cast<std::size_t>(i - 1)] + d[static_cast<std::size_t>(i - 2)]);
  d.resize(static_cast<std::size_t>(m) + 1);
  return d;
}

struct SpaceDescriptor {
  Family family = Family::hamming;
  int n = 0;  // hamming: length; johnson: groundset size nu; symmetric: letters
  int q = 0;  // hamming alphabet size, 0 otherwise
  int d = 0;  // johnson block size, 0 otherwise
  int diameter = 0;
  Integer cardinality;
  std::vector<Integer> valencies;

  /// Number of entries in a point's canonical representation.
  int point_size() const { return family == Family::johnson ? d : n; }

  std::string name() const {
    switch (family) {
      case Family::hamming: return "hamming(" + std::to_string(n) + "," + std::to_string(q) + ")";
      case Family::johnson: return "johnson(" + std::to_string(n) + "," + std::to_string(d) + ")";
      case Family::symmetric: return "symmetric(" + std::to_string(n) + ")";
    }
    return "?";
  }

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

inline SpaceDescriptor hamming_space(int n, int q) {
  if (n < 1) throw Error(ErrorKind::invalid_parameters, "hamming: n >= 1 required, got n=" + std::to_string(n));
  if (q < 2) throw Error(ErrorKind::invalid_parameters, "hamming: q >= 2 required, got q=" + std::to_string(q));
  SpaceDescriptor s{Family::hamming, n, q, 0, n, ipow(q, static_cast<unsigned long>(n)), {}};
  for (int i = 0; i <= n; ++i) s.valencies.push_back(binomial(n, i) * ipow(q - 1, static_cast<unsigned long>(i)));
  return s;
}

inline SpaceDescriptor johnson_space(int nu, int d) {
  if (d < 1) throw Error(ErrorKind::invalid_parameters, "johnson: d >= 1 required, got d=" + std::to_string(d));
  if (2 * d >= nu)
    throw Error(ErrorKind::invalid_parameters,
                "johnson: 2d < nu required, got nu=" + std::to_string(nu) + " d=" + std::to_string(d));
  SpaceDescriptor s{Family::johnson, nu, 0, d, d, binomial(nu, d), {}};
  for (int i = 0; i <= d; ++i) s.valencies.push_back(binomial(d, i) * binomial(nu - d, i));
  return s;
}

inline SpaceDescriptor symmetric_space(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_parameters, "symmetric: n >= 1 required, got n=" + std::to_string(n));
  SpaceDescriptor s{Family::symmetric, n, 0, 0, n, factorial(static_cast<unsigned long>(n)), {}};
  const auto der = derangement_table(n);
  for (int i = 0; i <= n; ++i) s.valencies.push_back(binomial(n, i) * der[static_cast<std::size_t>(i)]);
  return s;
}

/// params: hamming {n, q}; johnson {nu, d}; symmetric {n}.
inline SpaceDescriptor make_space(Family family, std::span<const int> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw Error(ErrorKind::invalid_parameters, std::string(to_string(family)) + ": expected " + std::to_string(k) +
                                                     " parameters, got " + std::to_string(params.size()));
  };
  switch (family) {
    case Family::hamming: need(2); return hamming_space(params[0], params[1]);
    case Family::johnson: need(2); return johnson_space(params[0], params[1]);
    case Family::symmetric: need(1); return symmetric_space(params[0]);
  }
  throw Error(ErrorKind::invalid_parameters, "unknown family");
}

/// A word, a sorted block, or a permutation in one-line notation, depending on `family`.
class Point {
 public:
  Point() = default;

  static Point word(std::vector<int> symbols) { return Point(Family::hamming, std::move(symbols)); }
  static Point block(std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    return Point(Family::johnson, std::move(elements));
  }
  static Point permutation(std::vector<int> images) { return Point(Family::symmetric, std::move(images)); }

  Family family() const { return family_; }
  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  Point(Family f, std::vector<int> e) : family_(f), entries_(std::move(e)) {}

  Family family_ = Family::hamming;
  std::vector<int> entries_;
};

/// Throws point-space-mismatch unless `p` is a canonical element of `space`.
inline void validate_point(const SpaceDescriptor& space, const Point& p) {
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::point_space_mismatch, space.name() + ": " + why); };
  if (p.family() != space.family) fail("point belongs to family " + std::string(to_string(p.family())));
  if (static_cast<int>(p.size()) != space.point_size())
    fail("expected " + std::to_string(space.point_size()) + " entries, got " + std::to_string(p.size()));
  const auto& e = p.entries();
  switch (space.family) {
    case Family::hamming:
      for (int s : e)
        if (s < 0 || s >= space.q) fail("symbol " + std::to_string(s) + " outside [0," + std::to_string(space.q - 1) + "]");
      break;
    case Family::johnson:
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] >= space.n) fail("element " + std::to_string(e[i]) + " outside the groundset");
        if (i > 0 && e[i] <= e[i - 1]) fail("block is not a set of distinct elements");
      }
      break;
    case Family::symmetric: {
      std::vector<char> seen(static_cast<std::size_t>(space.n), 0);
      for (int s : e) {
        if (s < 0 || s >= space.n || seen[static_cast<std::size_t>(s)]) fail("entries are not a bijection of [0,n-1]");
        seen[static_cast<std::size_t>(s)] = 1;
      }
      break;
    }
  }
}

namespace detail {

inline int distance_unchecked(Family family, int n, const Point& p, const Point& r) {
  const auto& a = p.entries();
  const auto& b = r.entries();
  switch (family) {
    case Family::hamming: {
      int diff = 0;
      for (std::size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i];
      return diff;
    }
    case Family::johnson: {
      // Both blocks are sorted; merge-count the intersection.
      std::size_t i = 0, j = 0;
      int common = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) ++common, ++i, ++j;
        else if (a[i] < b[j]) ++i;
        else ++j;
      }
      return static_cast<int>(a.size()) - common;
    }
    case Family::symmetric: {
      // p r^-1 fixes letter k iff p(r^-1(k)) = k, i.e. p and r agree at r^-1(k).
      int fixed = 0;
      for (std::size_t i = 0; i < a.size(); ++i) fixed += a[i] == b[i];
      return n - fixed;
    }
  }
  return 0;
}

}  // namespace detail

inline int distance(const SpaceDescriptor& space, const Point& p, const Point& r) {
  validate_point(space, p);
  validate_point(space, r);
  return detail::distance_unchecked(space.family, space.n, p, r);
}

/// Every element of the space in lexicographic order. Requires cardinality <= cap.
inline std::vector<Point> enumerate_points(const SpaceDescriptor& space, const Integer& cap = 1000000) {
  if (space.cardinality > cap)
    throw Error(ErrorKind::too_large, space.name() + " has " + space.cardinality.get_str() + " points, cap is " + cap.get_str());
  std::vector<Point> out;
  out.reserve(space.cardinality.get_ui());
  switch (space.family) {
    case Family::hamming: {
      std::vector<int> w(static_cast<std::size_t>(space.n), 0);
      while (true) {
        out.push_back(Point::word(w));
        int i = space.n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == space.q - 1) w[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
      }
      break;
    }
    case Family::johnson: {
      std::vector<int> b(static_cast<std::size_t>(space.d));
      std::iota(b.begin(), b.end(), 0);
      while (true) {
        out.push_back(Point::block(b));
        int i = space.d - 1;
        while (i >= 0 && b[static_cast<std::size_t>(i)] == space.n - space.d + i) --i;
        if (i < 0) break;
        ++b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < space.d; ++j) b[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j - 1)] + 1;
      }
      break;
    }
    case Family::symmetric: {
      std::vector<int> p(static_cast<std::size_t>(space.n));
      std::iota(p.begin(), p.end(), 0);
      do out.push_back(Point::permutation(p));
      while (std::next_permutation(p.begin(), p.end()));
      break;
    }
  }
  return out;
}

struct DdrReport {
  bool pass = true;
  std::vector<Integer> expected;  // valency sequence
  std::optional<Point> counterexample;
  std::vector<Integer> counterexample_degrees;
};

/// Exhaustively checks that every point's distance-degree sequence equals the valencies.
inline DdrReport verify_ddr(const SpaceDescriptor& space, const Integer& max_cardinality = 10000, unsigned workers = 1) {
  if (space.cardinality > max_cardinality)
    throw Error(ErrorKind::too_large,
                space.name() + " has " + space.cardinality.get_str() + " points, cap is " + max_cardinality.get_str());
  const auto points = enumerate_points(space, max_cardinality);
  const std::size_t m = points.size();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(m)));

  // First failing index per worker; merged by taking the smallest, so the result is order-independent.
  std::vector<std::size_t> first_bad(workers, m);
  std::vector<std::vector<std::uint64_t>> bad_degrees(workers);
  auto run = [&](unsigned w) {
    std::vector<std::uint64_t> deg(static_cast<std::size_t>(space.diameter) + 1);
    for (std::size_t i = w; i < m; i += workers) {
      std::fill(deg.begin(), deg.end(), 0);
      for (std::size_t j = 0; j < m; ++j)
        ++deg[static_cast<std::size_t>(detail::distance_unchecked(space.family, space.n, points[i], points[j]))];
      bool ok = true;
      for (std::size_t k = 0; k < deg.size(); ++k) ok = ok && space.valencies[k] == Integer(static_cast<unsigned long>(deg[k]));
      if (!ok) {
        first_bad[w] = i;
        bad_degrees[w] = deg;
        return;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  DdrReport report;
  report.expected = space.valencies;
  auto it = std::min_element(first_bad.begin(), first_bad.end());
  if (*it < m) {
    report.pass = false;
    report.counterexample = points[*it];
    for (auto v : bad_degrees[static_cast<std::size_t>(it - first_bad.begin())])
      report.counterexample_degrees.emplace_back(static_cast<unsigned long>(v));
  }
  return report;
}

}  // namespace ddr
