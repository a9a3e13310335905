#pragma once

// Christoffel-function bounds on |F_D - F_X|, Markov-Stieltjes envelopes, and the closed-form
// low-strength bounds for binary/q-ary arrays, 2-designs and 2-transitive groups.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddr/designs.hpp"
#include "ddr/empirics.hpp"
#include "ddr/error.hpp"
#include "ddr/numeric.hpp"
#include "ddr/orthopoly.hpp"
#include "ddr/polynomial.hpp"

namespace ddr {

/// Slack used when comparing an exact c.d.f. value against envelope sums built from bisected nodes.
inline constexpr double kEnvelopeSlack = 1e-9;

struct Envelope {
  int kappa = 0;
  Rational x;
  std::vector<RootBracket> nodes;  // quadrature nodes, x among them
  std::vector<double> weights;     // lambda at each node
  double lower = 0;                // sum of weights at nodes strictly below x
  Rational lambda;                 // lambda(x), exact
  double upper = 0;                // lower + lambda(x)

  bool contains(const Rational& value, double slack = kEnvelopeSlack) const {
    const double v = to_double(value);
    return lower <= v + slack && v <= upper + slack;
  }
  double weight_sum() const {
    double s = 0;
    for (double w : weights) s += w;
    return s;
  }
};

/// Two-sided bound on any distribution whose moments agree with the measure through order 2*kappa.
///
/// The nodes are the zeros of p_{kappa+1}(t) p_kappa(x) - p_kappa(t) p_{kappa+1}(x), a quadrature rule
/// through x with weights lambda(y) = 1/K_kappa(y). When x is itself a zero of p_kappa this reduces to
/// the Gauss rule on the zeros of p_kappa. If kappa = N(X) the support polynomial plays p_{kappa+1}.
inline Envelope markov_stieltjes_envelope(const MonicOrthogonalSystem& sys, int kappa, const Rational& x, double tol = 1e-12) {
  if (kappa < 1) throw Error(ErrorKind::invalid_parameters, "envelope needs kappa >= 1");
  if (kappa > sys.measure.capacity())
    throw Error(ErrorKind::degree_exceeds_capacity, "envelope kappa exceeds N(X)");
  if (kappa > sys.degree())
    throw Error(ErrorKind::degree_exceeds_capacity, "system degree too small for envelope kappa");

  const Polynomial& pk = sys.polys[static_cast<std::size_t>(kappa)];
  const Polynomial next = kappa + 1 <= sys.degree() ? sys.polys[static_cast<std::size_t>(kappa + 1)]
                                                    : sys.measure.support_polynomial();
  Envelope env;
  env.kappa = kappa;
  env.x = x;
  const Rational pk_x = pk(x);
  if (sgn(pk_x) == 0) {
    env.nodes = real_roots(pk, tol);
  } else {
    Polynomial node_poly = next * pk_x - pk * next(x);
    auto [quot, rem] = node_poly.divmod(Polynomial({Rational(-x), Rational(1)}));
    env.nodes = real_roots(quot, tol);
    env.nodes.push_back({x, x});
    std::sort(env.nodes.begin(), env.nodes.end(), [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });
  }
  for (const auto& node : env.nodes) {
    const double w = node.exact() ? to_double(kernel(sys, node.lo, kappa).lambda) : to_double(kernel(sys, node.midpoint(), kappa).lambda);
    env.weights.push_back(w);
    if (node.below(x)) env.lower += w;
  }
  env.lambda = kernel(sys, x, kappa).lambda;
  env.upper = env.lower + to_double(env.lambda);
  return env;
}

/// Gauss weights at the zeros of p_kappa; they sum to one.
inline double gauss_weight_sum(const MonicOrthogonalSystem& sys, int kappa, double tol = 1e-12) {
  double s = 0;
  for (const auto& z : zeros(sys, kappa, tol)) s += to_double(kernel(sys, z.exact() ? z.lo : z.midpoint(), kappa).lambda);
  return s;
}

enum class CorollaryKind { binary_uniform_strength5, qary_strength2, johnson_2design, symmetric_2transitive };

constexpr std::string_view to_string(CorollaryKind k) {
  switch (k) {
    case CorollaryKind::binary_uniform_strength5: return "binary-uniform-strength5";
    case CorollaryKind::qary_strength2: return "qary-strength2";
    case CorollaryKind::johnson_2design: return "johnson-2design";
    case CorollaryKind::symmetric_2transitive: return "symmetric-2transitive";
  }
  return "?";
}

inline CorollaryKind parse_corollary_kind(std::string_view s) {
  for (auto k : {CorollaryKind::binary_uniform_strength5, CorollaryKind::qary_strength2, CorollaryKind::johnson_2design,
                 CorollaryKind::symmetric_2transitive})
    if (to_string(k) == s) return k;
  throw Error(ErrorKind::unknown_kind, "unknown corollary kind '" + std::string(s) + "'");
}

struct CorollaryParams {
  int n = 0;   // length, block size, or letters
  int q = 2;   // alphabet (qary)
  int nu = 0;  // groundset (johnson)
};

inline Rational corollary_bound(CorollaryKind kind, const CorollaryParams& p, const Rational& x) {
  switch (kind) {
    case CorollaryKind::binary_uniform_strength5:
    {
      Rational r(2 * (p.n - 1), 3 * p.n - 2);
      r.canonicalize();
      return r;
    }
    case CorollaryKind::qary_strength2: {
      Rational y = Rational(p.n * (p.q - 1)) - Rational(p.q) * x;
      return Rational(p.n) / (Rational(p.n) + y * y);
    }
    case CorollaryKind::johnson_2design: {
      Integer c = ipow(p.nu - p.n, 3);
      Rational r(c, c + Integer(p.n) * (p.nu - 1) * (p.nu - 1));
      r.canonicalize();
      return r;
    }
    case CorollaryKind::symmetric_2transitive: {
      Rational y = 1 - x;
      return Rational(p.n) / (Rational(p.n) + y * y);
    }
  }
  throw Error(ErrorKind::unknown_kind, "unknown corollary kind");
}

struct BoundRow {
  Rational x;
  Rational fd;
  Rational fx;
  Rational gap;
  Rational lambda;
  bool satisfied = false;  // gap <= lambda
  std::optional<Rational> corollary;
  std::optional<bool> corollary_satisfied;
  std::optional<Envelope> envelope;
  bool envelope_contains_d = true;
  bool envelope_contains_x = true;
};

struct BoundReport {
  int t = 0;
  int kappa = 0;
  int strength = 0;
  std::optional<CorollaryKind> corollary;
  std::vector<BoundRow> rows;

  bool all_satisfied() const {
    for (const auto& r : rows) {
      if (!r.satisfied || !r.envelope_contains_d || !r.envelope_contains_x) return false;
      if (r.corollary_satisfied && !*r.corollary_satisfied) return false;
    }
    return true;
  }
};

/// 0, 1, ..., diameter, or 0, step, 2*step, ... up to the diameter.
inline std::vector<Rational> evaluation_grid(const SpaceDescriptor& space, const std::optional<Rational>& step = std::nullopt) {
  std::vector<Rational> xs;
  const Rational s = step.value_or(Rational(1));
  if (sgn(s) <= 0) throw Error(ErrorKind::invalid_parameters, "grid step must be positive");
  for (Rational x = 0; x <= space.diameter; x += s) xs.push_back(x);
  return xs;
}

/// Which closed-form bound a certified strength unlocks for this space, if any.
inline std::optional<CorollaryKind> applicable_corollary(const SpaceDescriptor& space, int strength) {
  switch (space.family) {
    case Family::hamming:
      if (space.q == 2 && strength >= 5) return CorollaryKind::binary_uniform_strength5;
      if (strength >= 2) return CorollaryKind::qary_strength2;
      return std::nullopt;
    case Family::johnson:
      if (strength >= 2) return CorollaryKind::johnson_2design;
      return std::nullopt;
    case Family::symmetric:
      return std::nullopt;  // applies to the fixed-point law, see fixed_point_cdf_bound
  }
  return std::nullopt;
}

inline CorollaryParams corollary_params(const SpaceDescriptor& space) {
  switch (space.family) {
    case Family::hamming: return {space.n, space.q, 0};
    case Family::johnson: return {space.d, 2, space.n};
    case Family::symmetric: return {space.n, 2, 0};
  }
  return {};
}

/// |F_D(x) - F_X(x)| <= lambda(x) with kappa = floor(t/2), for a set of certified strength >= t.
inline BoundReport theorem9_check(const PointSet& set, int t, const std::vector<Rational>& xs, const PairOptions& options = {},
                                  bool with_corollary = true) {
  const auto& space = set.space();
  const auto measure = build_measure(space);
  if (t < 0) throw Error(ErrorKind::invalid_parameters, "t must be >= 0");
  if (t > measure.capacity())
    throw Error(ErrorKind::t_exceeds_capacity, "t = " + std::to_string(t) + " exceeds N(X) = " + std::to_string(measure.capacity()));
  const auto f = frequencies(set, options);
  const int strength = strength_by_moments(f, space, measure.capacity());
  if (strength < t)
    throw Error(ErrorKind::strength_insufficient,
                "certified strength " + std::to_string(strength) + " is below t = " + std::to_string(t));

  BoundReport report;
  report.t = t;
  report.kappa = t / 2;
  report.strength = strength;
  const auto sys = gram_schmidt(measure, std::min(report.kappa + 1, measure.capacity()));
  const auto fx = space_frequencies(space);
  if (with_corollary) report.corollary = applicable_corollary(space, t);

  for (const auto& x : xs) {
    BoundRow row;
    row.x = x;
    row.fd = cdf(f, x);
    row.fx = cdf(fx, x);
    row.gap = abs(row.fd - row.fx);
    row.lambda = kernel(sys, x, report.kappa).lambda;
    row.satisfied = row.gap <= row.lambda;
    if (report.corollary) {
      row.corollary = corollary_bound(*report.corollary, corollary_params(space), x);
      row.corollary_satisfied = row.gap <= *row.corollary;
    }
    if (report.kappa >= 1) {
      row.envelope = markov_stieltjes_envelope(sys, report.kappa, x);
      row.envelope_contains_d = row.envelope->contains(row.fd);
      row.envelope_contains_x = row.envelope->contains(row.fx);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// sum_{0<=i<=x} e^-1 / i!
inline double poisson_cdf(const Rational& x) {
  if (sgn(x) < 0) return 0;
  const long top = floor_of(x).get_si();
  double term = std::exp(-1.0), acc = 0;
  for (long i = 0; i <= top; ++i) {
    if (i > 0) term /= static_cast<double>(i);
    acc += term;
    if (term < 1e-300) break;
  }
  return acc;
}

/// sum_{1<=i<=x} 1/i!, the reference law as it is sometimes printed; not a distribution function.
inline double printed_reference_law(const Rational& x) {
  const long top = sgn(x) < 0 ? 0 : floor_of(x).get_si();
  double term = 1, acc = 0;
  for (long i = 1; i <= top; ++i) {
    term /= static_cast<double>(i);
    acc += term;
  }
  return acc;
}

struct FixedPointBound {
  Rational x;
  Rational gd;           // Prob(fixed points <= x) over the group
  double poisson = 0;    // standard Poisson(1) c.d.f.
  double printed = 0;    // sum_{1<=i<=x} 1/i!
  double gap = 0;        // |gd - poisson|
  Rational bound;        // n / (n + (1-x)^2)
  bool satisfied = false;
};

inline FixedPointBound fixed_point_cdf_bound(const PointSet& group, const Rational& x) {
  if (group.space().family != Family::symmetric)
    throw Error(ErrorKind::wrong_family, "fixed_point_cdf_bound needs a symmetric point set");
  if (transitivity_degree(group) < 2) throw Error(ErrorKind::not_2_transitive, "group is not 2-transitive");
  const auto& space = group.space();
  FixedPointBound r;
  r.x = x;
  std::size_t below = 0;
  for (const auto& g : group.elements()) {
    long fixed = 0;
    for (std::size_t k = 0; k < g.size(); ++k) fixed += g[k] == static_cast<int>(k);
    if (Rational(fixed) <= x) ++below;
  }
  r.gd = Rational(static_cast<unsigned long>(below), static_cast<unsigned long>(group.size()));
  r.gd.canonicalize();
  r.poisson = poisson_cdf(x);
  r.printed = printed_reference_law(x);
  r.gap = std::abs(to_double(r.gd) - r.poisson);
  r.bound = corollary_bound(CorollaryKind::symmetric_2transitive, {space.n, 2, 0}, x);
  r.satisfied = r.gap <= to_double(r.bound);
  return r;
}

}  // namespace ddr
