// Dense univariate polynomials over the rationals.
#pragma once

#include "lhp/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lhp {

/// Dense polynomial with exact rational coefficients in ascending order,
/// coeffs()[k] multiplying x^k. The coefficient vector never carries
/// trailing zeros; the zero polynomial is the empty vector.
class Polynomial {
 public:
  /// Degree reported for the zero polynomial ("minus infinity").
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(const Rational& c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  long degree() const { return is_zero() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
  /// Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }

  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  bool has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0; });
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial operator-() const {
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) { return *this += -q; }

  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
    } else {
      for (auto& a : coeffs_) a *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> v(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < q.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  /// x^k · p
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  /// p(x^r)
  Polynomial inflated(std::size_t r) const {
    if (r == 0) throw std::invalid_argument("inflation factor must be positive");
    if (is_zero()) return {};
    std::vector<Rational> v((size() - 1) * r + 1);
    for (std::size_t k = 0; k < size(); ++k) v[k * r] = coeffs_[k];
    return Polynomial(std::move(v));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// p^n by repeated squaring; p^0 = 1, including 0^0.
inline Polynomial pow(Polynomial p, unsigned n) {
  Polynomial result{1};
  while (n > 0) {
    if (n & 1U) result *= p;
    n >>= 1U;
    if (n > 0) p *= p;
  }
  return result;
}

/// Horner evaluation.
inline Rational eval(const Polynomial& p, const Rational& t) {
  Rational acc = 0;
  auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

inline Polynomial derivative(const Polynomial& p) {
  if (p.size() <= 1) return {};
  std::vector<Rational> v(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) v[k - 1] = p[k] * static_cast<long>(k);
  return Polynomial(std::move(v));
}

inline Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Long division over Q: p = quotient·d + remainder with deg remainder < deg d.
inline DivisionResult divmod(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < d.degree()) return {{}, p};
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  const std::size_t dn = d.size() - 1;
  std::vector<Rational> quot(rem.size() - dn);
  const Rational inv_lead = Rational(1) / d.leading();
  for (std::size_t k = rem.size(); k-- > dn;) {
    if (rem[k] == 0) continue;
    Rational factor = rem[k] * inv_lead;
    quot[k - dn] = factor;
    for (std::size_t i = 0; i <= dn; ++i) rem[k - dn + i] -= factor * d[i];
  }
  rem.resize(dn);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

inline Polynomial remainder(const Polynomial& p, const Polynomial& d) { return divmod(p, d).remainder; }

/// Division that must be exact; throws std::domain_error otherwise.
inline Polynomial exact_quotient(const Polynomial& p, const Polynomial& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

/// Integer-coefficient primitive polynomial with positive leading
/// coefficient, a positive rational multiple of ±p.
inline Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(c));
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer scaled = numerator_of(c) * (den_lcm / denominator_of(c));
    content = boost::multiprecision::gcd(content, scaled);
  }
  Rational factor = make_rational(den_lcm, content);
  if (p.leading() < 0) factor = -factor;
  return p * factor;
}

/// lc(b)^k · a mod b for the smallest k that keeps the division integral.
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  Polynomial r = a;
  const Rational lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    Polynomial next = r * lb;
    next -= b.shifted(shift) * r.leading();
    r = std::move(next);
  }
  return r;
}

/// Monic gcd by the primitive pseudo-remainder sequence. gcd(p, 0) = monic(p).
inline Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  if (p.is_zero()) return monic(q);
  if (q.is_zero()) return monic(p);
  Polynomial a = primitive_part(p);
  Polynomial b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return monic(a);
}

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree, nonconstant
  unsigned multiplicity;

  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm. p = lc(p) · Π factor^multiplicity, factors pairwise
/// coprime, multiplicities strictly increasing. Constants yield an empty list.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  const Polynomial dp = derivative(p);
  const Polynomial a0 = gcd(p, dp);
  Polynomial b = monic(exact_quotient(p, a0));
  Polynomial c = exact_quotient(dp, a0) * (Rational(1) / p.leading());
  Polynomial d = c - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    Polynomial a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - derivative(b);
    if (a.degree() > 0) out.push_back({std::move(a), i});
  }
  return out;
}

/// Monic product of the distinct irreducible factors of p.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  if (p.degree() == 0) return Polynomial{1};
  return monic(exact_quotient(p, gcd(p, derivative(p))));
}

/// Human-readable form "c0 + c1x + c2x^2" with zero terms dropped and unit
/// coefficients elided.
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    Rational c = p[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string coeff = to_string(c);
    const bool fractional = coeff.find('/') != std::string::npos;
    if (k == 0) {
      out += coeff;
    } else {
      if (c != 1) out += fractional ? "(" + coeff + ")" : coeff;
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace lhp
