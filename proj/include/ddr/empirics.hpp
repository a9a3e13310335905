#pragma once

// Distance frequencies, moments and distribution functions of a point set and of the whole space.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <thread>
#include <vector>

#include "ddr/error.hpp"
#include "ddr/numeric.hpp"
#include "ddr/spaces.hpp"

namespace ddr {

/// A nonempty set of distinct points of one space.
class PointSet {
 public:
  PointSet(SpaceDescriptor space, std::vector<Point> elements) : space_(std::move(space)), elements_(std::move(elements)) {
    if (elements_.empty()) throw Error(ErrorKind::invalid_parameters, "point set must be nonempty");
    std::set<Point> seen;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      validate_point(space_, elements_[i]);
      if (!seen.insert(elements_[i]).second)
        throw Error(ErrorKind::duplicate_element, "element #" + std::to_string(i + 1) + " repeats an earlier element");
    }
  }

  const SpaceDescriptor& space() const { return space_; }
  const std::vector<Point>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  SpaceDescriptor space_;
  std::vector<Point> elements_;
};

/// f_0..f_diameter, exact.
struct FrequencyVector {
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  int max_index() const { return static_cast<int>(values.size()) - 1; }
  const Rational& operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;
};

struct PairOptions {
  unsigned workers = 1;
  std::uint64_t max_pairs = 10'000'000'000ULL;  // |D|^2 guard, i.e. 10^5 elements
};

/// Ordered pairs (diagonal included) per distance class, divided by |D|^2.
inline FrequencyVector frequencies(const PointSet& set, const PairOptions& options = {}) {
  const auto& pts = set.elements();
  const std::size_t m = pts.size();
  const auto pairs = static_cast<std::uint64_t>(m) * m;
  if (pairs > options.max_pairs)
    throw Error(ErrorKind::too_large,
                std::to_string(pairs) + " ordered pairs exceed the cap of " + std::to_string(options.max_pairs));
  const auto& space = set.space();
  const std::size_t classes = static_cast<std::size_t>(space.diameter) + 1;
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(m)));

  // Integer counts per worker; summation order cannot affect the result.
  std::vector<std::vector<std::uint64_t>> counts(workers, std::vector<std::uint64_t>(classes, 0));
  auto run = [&](unsigned w) {
    auto& c = counts[w];
    for (std::size_t i = w; i < m; i += workers) {
      ++c[0];
      for (std::size_t j = i + 1; j < m; ++j)
        c[static_cast<std::size_t>(detail::distance_unchecked(space.family, space.n, pts[i], pts[j]))] += 2;
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  FrequencyVector f;
  const Integer denom = Integer(static_cast<unsigned long>(m)) * static_cast<unsigned long>(m);
  for (std::size_t k = 0; k < classes; ++k) {
    std::uint64_t total = 0;
    for (const auto& c : counts) total += c[k];
    Rational v(Integer(static_cast<unsigned long>(total)), denom);
    v.canonicalize();
    f.values.push_back(v);
  }
  return f;
}

/// f_i = v_i / |X|.
inline FrequencyVector space_frequencies(const SpaceDescriptor& space) {
  FrequencyVector f;
  for (const auto& v : space.valencies) {
    Rational r(v, space.cardinality);
    r.canonicalize();
    f.values.push_back(r);
  }
  return f;
}

/// sum_j f_j j^i
inline Rational moment(const FrequencyVector& f, int i) {
  if (i < 0) throw Error(ErrorKind::invalid_parameters, "moment order must be >= 0");
  Rational acc = 0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (sgn(f[j]) == 0) continue;
    acc += f[j] * rpow(Rational(static_cast<long>(j)), static_cast<unsigned long>(i));
  }
  return acc;
}

/// F(x) = sum_{i <= x} f_i. Zero below 0, one at and above the diameter.
inline Rational cdf(const FrequencyVector& f, const Rational& x) {
  if (sgn(x) < 0) return 0;
  const Integer top = floor_of(x);
  Rational acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (Integer(static_cast<unsigned long>(i)) > top) break;
    acc += f[i];
  }
  return acc;
}

inline Rational cdf(const FrequencyVector& f, long x) { return cdf(f, Rational(x)); }

/// Threshold -> cumulative probability, for tabulation.
struct CdfTable {
  std::vector<Rational> xs;
  std::vector<Rational> values;
};

inline CdfTable cdf_table(const FrequencyVector& f, const std::vector<Rational>& xs) {
  CdfTable t{xs, {}};
  for (const auto& x : xs) t.values.push_back(cdf(f, x));
  return t;
}

}  // namespace ddr
