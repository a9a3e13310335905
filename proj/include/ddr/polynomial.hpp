#pragma once

// Dense univariate polynomials over exact rationals, plus Sturm-based real root isolation.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ddr/error.hpp"
#include "ddr/numeric.hpp"

namespace ddr {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(std::size_t degree, const Rational& c = 1) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i, lowest degree first.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double operator()(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(r));
  }

  /// Euclidean division; returns {quotient, remainder}.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorKind::invalid_parameters, "polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {Polynomial{}, *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
    const Rational lead = divisor.leading();
    for (int k = degree() - dd; k >= 0; --k) {
      Rational c = rem[static_cast<std::size_t>(k + dd)] / lead;
      quot[static_cast<std::size_t>(k)] = c;
      if (sgn(c) == 0) continue;
      for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = coeffs_[static_cast<std::size_t>(i)];
      if (sgn(c) == 0) continue;
      if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
      else if (sgn(c) < 0) out += "-";
      Rational a = abs(c);
      bool unit = a == 1 && i > 0;
      if (!unit) out += a.get_str();
      if (i > 0) out += (unit ? "" : "*") + std::string("x") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// An isolated real root: lo <= root <= hi, with lo == hi when the root was hit exactly.
struct RootBracket {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double value() const { return to_double(midpoint()); }
  /// True when the whole bracket lies strictly below x.
  bool below(const Rational& x) const { return hi < x; }
};

namespace detail {

inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto [q, r] = chain[chain.size() - 2].divmod(chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

inline int sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = sgn(q(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

inline Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(i))) / lead));
  return m + 1;
}

}  // namespace detail

/// Isolates every distinct real root of a square-free polynomial and refines each bracket
/// by exact-sign bisection until hi - lo <= tol. Brackets are returned in increasing order.
inline std::vector<RootBracket> real_roots(const Polynomial& p, double tol = 1e-12, int max_iterations = 400) {
  if (p.degree() < 1) return {};
  const auto chain = detail::sturm_chain(p);
  const Rational bound = detail::cauchy_bound(p);
  const Rational tolerance(tol);

  struct Interval {
    Rational lo, hi;
    int count;
  };
  std::vector<RootBracket> roots;
  // Half-open intervals (lo, hi]; Sturm counts distinct roots there.
  std::vector<Interval> work{{-bound, bound, detail::sign_changes(chain, -bound) - detail::sign_changes(chain, bound)}};
  int iterations = 0;
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    if (iv.count == 0) continue;
    if (iv.count == 1) {
      Rational lo = iv.lo, hi = iv.hi;
      if (sgn(p(hi)) == 0) {
        roots.push_back({hi, hi});
        continue;
      }
      int steps = 0;
      while (hi - lo > tolerance) {
        if (++steps > max_iterations) throw Error(ErrorKind::tolerance_not_met, "bisection iteration cap reached");
        // Rational zeros with small denominators are caught exactly.
        if (Rational s = simplest_rational(lo, hi); s > lo && sgn(p(s)) == 0) {
          lo = hi = s;
          break;
        }
        Rational mid = (lo + hi) / 2;
        int sm = sgn(p(mid));
        if (sm == 0) {
          lo = hi = mid;
          break;
        }
        // The root lies in (lo, hi]; p(lo) may itself be zero only if lo is excluded, so use hi's sign.
        if (sm == sgn(p(hi))) hi = mid;
        else lo = mid;
      }
      roots.push_back({lo, hi});
      continue;
    }
    if (++iterations > max_iterations * 64) throw Error(ErrorKind::tolerance_not_met, "root isolation did not converge");
    Rational mid = (iv.lo + iv.hi) / 2;
    int vlo = detail::sign_changes(chain, iv.lo);
    int vmid = detail::sign_changes(chain, mid);
    int vhi = detail::sign_changes(chain, iv.hi);
    work.push_back({mid, iv.hi, vmid - vhi});
    work.push_back({iv.lo, mid, vlo - vmid});
  }
  std::sort(roots.begin(), roots.end(), [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });
  return roots;
}

}  // namespace ddr
