#pragma once

// Orthogonal polynomials of the valency measure: exact Gram-Schmidt, closed-form
// Krawtchouk/Hahn/Charlier families, Christoffel-Darboux kernels and zeros.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ddr/error.hpp"
#include "ddr/numeric.hpp"
#include "ddr/polynomial.hpp"
#include "ddr/spaces.hpp"

namespace ddr {

/// Weights v_k/|X| on the distances that actually occur.
struct DiscreteMeasure {
  std::vector<long> support;
  std::vector<Rational> weights;

  /// Largest degree of an orthonormal system: support size minus one.
  int capacity() const { return static_cast<int>(support.size()) - 1; }

  Rational inner(const Polynomial& f, const Polynomial& g) const {
    Rational acc = 0;
    for (std::size_t k = 0; k < support.size(); ++k) {
      const Rational z(support[k]);
      acc += weights[k] * f(z) * g(z);
    }
    return acc;
  }

  /// prod_k (x - z_k); vanishes on the support.
  Polynomial support_polynomial() const {
    Polynomial p = Polynomial::constant(1);
    for (long z : support) p = p * Polynomial({Rational(-z), Rational(1)});
    return p;
  }
};

inline DiscreteMeasure build_measure(const SpaceDescriptor& space) {
  DiscreteMeasure m;
  for (std::size_t i = 0; i < space.valencies.size(); ++i) {
    if (sgn(space.valencies[i]) == 0) continue;
    Rational w(space.valencies[i], space.cardinality);
    w.canonicalize();
    m.support.push_back(static_cast<long>(i));
    m.weights.push_back(w);
  }
  return m;
}

/// Monic p_0..p_N with squared norms; Phi_i = p_i / sqrt(sqnorms[i]).
struct MonicOrthogonalSystem {
  DiscreteMeasure measure;
  std::vector<Polynomial> polys;
  std::vector<Rational> sqnorms;

  int degree() const { return static_cast<int>(polys.size()) - 1; }

  /// Phi_i(x)^2, exact.
  Rational phi_squared(int i, const Rational& x) const {
    const Rational v = polys[static_cast<std::size_t>(i)](x);
    return v * v / sqnorms[static_cast<std::size_t>(i)];
  }

  double phi(int i, const Rational& x) const {
    return to_double(polys[static_cast<std::size_t>(i)](x)) / std::sqrt(to_double(sqnorms[static_cast<std::size_t>(i)]));
  }
};

/// Gram-Schmidt on 1, x, ..., x^N against the measure.
inline MonicOrthogonalSystem gram_schmidt(const DiscreteMeasure& measure, int N) {
  if (N < 0) throw Error(ErrorKind::invalid_parameters, "degree must be >= 0");
  if (N > measure.capacity())
    throw Error(ErrorKind::degree_exceeds_capacity,
                "degree " + std::to_string(N) + " exceeds N(X) = " + std::to_string(measure.capacity()) +
                    "; the form degenerates beyond the support size");
  MonicOrthogonalSystem sys{measure, {}, {}};
  for (int i = 0; i <= N; ++i) {
    Polynomial p = Polynomial::monomial(static_cast<std::size_t>(i));
    const Polynomial xi = p;
    for (int j = 0; j < i; ++j) {
      const auto& pj = sys.polys[static_cast<std::size_t>(j)];
      p -= pj * (measure.inner(xi, pj) / sys.sqnorms[static_cast<std::size_t>(j)]);
    }
    sys.sqnorms.push_back(measure.inner(p, p));
    sys.polys.push_back(std::move(p));
  }
  return sys;
}

inline MonicOrthogonalSystem gram_schmidt(const SpaceDescriptor& space, int N) { return gram_schmidt(build_measure(space), N); }

/// K_k(x) = sum_j (-1)^j (q-1)^{k-j} C(x,j) C(n-x,k-j), generalized binomials in x.
inline Rational krawtchouk(int k, const Rational& x, int n, int q) {
  if (k < 0 || k > n) throw Error(ErrorKind::invalid_parameters, "krawtchouk: need 0 <= k <= n");
  Rational acc = 0;
  for (int j = 0; j <= k; ++j) {
    Rational term = generalized_binomial(x, j) * generalized_binomial(Rational(n) - x, k - j) *
                    Rational(ipow(q - 1, static_cast<unsigned long>(k - j)));
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/// m_k = C(nu,k) - C(nu,k-1): multiplicity of the k-th eigenspace of J(nu,n).
inline Integer hahn_multiplicity(int k, int nu) { return binomial(nu, k) - binomial(nu, k - 1); }

/// H_k(z) = m_k sum_j (-1)^j C(k,j) C(nu+1-k,j) / (C(n,j) C(nu-n,j)) C(z,j).
inline Rational hahn(int k, const Rational& z, int nu, int n) {
  if (k < 0 || k > std::min(n, nu - n)) throw Error(ErrorKind::invalid_parameters, "hahn: need 0 <= k <= min(n, nu-n)");
  Rational acc = 0;
  for (int j = 0; j <= k; ++j) {
    Rational term(binomial(k, j) * binomial(nu + 1 - k, j), binomial(n, j) * binomial(nu - n, j));
    term.canonicalize();
    term *= generalized_binomial(z, j);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return Rational(hahn_multiplicity(k, nu)) * acc;
}

/// Charlier C_0 = 1, C_1(x) = 1 - x. Higher degrees are not provided.
inline Rational charlier(int k, const Rational& x) {
  if (k == 0) return 1;
  if (k == 1) return 1 - x;
  throw Error(ErrorKind::unsupported_degree, "charlier: only degrees 0 and 1 are available");
}

struct KernelValue {
  Rational x;
  int kappa = 0;
  Rational kernel;  // sum_{i<=kappa} Phi_i(x)^2
  Rational lambda;  // 1 / kernel
};

inline KernelValue kernel(const MonicOrthogonalSystem& sys, const Rational& x, int kappa) {
  if (kappa < 0 || kappa > sys.degree())
    throw Error(ErrorKind::degree_exceeds_capacity,
                "kernel degree " + std::to_string(kappa) + " exceeds system degree " + std::to_string(sys.degree()));
  Rational k = 0;
  for (int i = 0; i <= kappa; ++i) k += sys.phi_squared(i, x);
  return {x, kappa, k, 1 / k};
}

/// The kappa simple zeros of p_kappa, bracketed exactly and bisected to width <= tol.
inline std::vector<RootBracket> zeros(const MonicOrthogonalSystem& sys, int kappa, double tol = 1e-12) {
  if (kappa < 1 || kappa > sys.degree())
    throw Error(ErrorKind::degree_exceeds_capacity, "zeros: need 1 <= kappa <= " + std::to_string(sys.degree()));
  auto roots = real_roots(sys.polys[static_cast<std::size_t>(kappa)], tol);
  if (static_cast<int>(roots.size()) != kappa)
    throw Error(ErrorKind::tolerance_not_met, "expected " + std::to_string(kappa) + " real zeros, isolated " +
                                                  std::to_string(roots.size()));
  return roots;
}

}  // namespace ddr
