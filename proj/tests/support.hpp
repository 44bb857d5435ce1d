// Test-only oracles and generators. Nothing here calls the code path it is
// used to check: closed forms are compared against brute-force enumeration,
// and interlacing decisions against per-polynomial root isolation.
#pragma once

#include "lhp/edgewise.hpp"
#include "lhp/interlacing.hpp"
#include "lhp/real_roots.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace lhp::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int num_lo, int num_hi, int den_hi) {
  std::uniform_int_distribution<int> num(num_lo, num_hi), den(1, den_hi);
  return Rational(num(rng), den(rng));
}

inline Rational random_positive_rational(Rng& rng, int hi = 20, int den_hi = 9) {
  return random_rational(rng, 1, hi, den_hi);
}

/// Π (x - root) over the given roots.
inline Polynomial from_roots(const std::vector<Rational>& roots, const Rational& lead = 1) {
  Polynomial p = Polynomial::constant(lead);
  for (const auto& a : roots) p *= Polynomial{-a, 1};
  return p;
}

/// Visits every tuple in [lo, hi]^n.
inline void for_each_tuple(unsigned n, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> t(n, lo);
  while (true) {
    visit(t);
    unsigned k = 0;
    while (k < n && t[k] == hi) t[k++] = lo;
    if (k == n) return;
    ++t[k];
  }
}

/// Coefficients of E_r (x + … + x^{r-1})^n by counting tuples in
/// [1, r-1]^n whose sum is divisible by r.
inline Polynomial brute_force_local_h(unsigned n, unsigned r) {
  if (r == 1) return n == 0 ? Polynomial{1} : Polynomial{};
  std::vector<Rational> c(n + 1);
  for_each_tuple(n, 1, static_cast<int>(r) - 1, [&](const std::vector<int>& t) {
    int s = 0;
    for (int v : t) s += v;
    if (s % static_cast<int>(r) == 0) c[static_cast<std::size_t>(s) / r] += 1;
  });
  return Polynomial(std::move(c));
}

/// Sections of (1 + … + x^{r-2})^n by counting tuples in [0, r-2]^n.
inline std::vector<Polynomial> brute_force_sections(unsigned n, unsigned r) {
  std::vector<std::vector<Rational>> c(r, std::vector<Rational>(n * (r - 2) / r + 2));
  for_each_tuple(n, 0, static_cast<int>(r) - 2, [&](const std::vector<int>& t) {
    int s = 0;
    for (int v : t) s += v;
    c[static_cast<std::size_t>(s) % r][static_cast<std::size_t>(s) / r] += 1;
  });
  std::vector<Polynomial> out;
  for (auto& v : c) out.emplace_back(std::move(v));
  return out;
}

/// Real roots with multiplicity, largest first, each isolated separately
/// and refined below `width`.
inline std::vector<Interval> refined_roots_descending(const Polynomial& p, const Rational& width) {
  RootIsolation iso = isolate_roots(p);
  for (std::size_t i = 0; i < iso.roots.size(); ++i) iso = refine(std::move(iso), i, width);
  std::vector<Interval> out;
  for (auto it = iso.roots.rbegin(); it != iso.roots.rend(); ++it) out.insert(out.end(), it->multiplicity, it->interval);
  return out;
}

/// Independent g ⪯ f decision: roots of f and g are isolated separately to
/// width 2^-120 and the chain is checked interval-wise (a ≤ b is accepted
/// when a.lo < b.hi). Distinct roots closer than the width would be
/// misjudged; the generators never produce them.
inline bool interlaces_oracle(const Polynomial& g, const Polynomial& f) {
  if (g.is_zero() || f.is_zero()) return true;
  if (!is_real_rooted(g) || !is_real_rooted(f)) throw std::domain_error("oracle needs real-rooted inputs");
  const long gap = f.degree() - g.degree();
  if (gap != 0 && gap != 1) return false;
  const Rational width(Integer(1), Integer(1) << 120);
  const auto u = refined_roots_descending(f, width);
  const auto v = refined_roots_descending(g, width);
  auto le = [](const Interval& a, const Interval& b) { return a.lo < b.hi; };
  for (std::size_t i = 0; i < v.size(); ++i) {
    // u_{i+2} ≤ v_{i+1} ≤ u_{i+1} in 1-based terms, or v_{i+1} ≤ u_{i+1} ≤ v_i.
    if (gap == 1) {
      if (!le(u[i + 1], v[i]) || !le(v[i], u[i])) return false;
    } else {
      if (!le(v[i], u[i])) return false;
      if (i + 1 < u.size() && !le(u[i + 1], v[i])) return false;
    }
  }
  return true;
}

inline bool sequence_oracle(const PolySequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (!interlaces_oracle(seq[i], seq[j])) return false;
  return true;
}

/// Random NX matrix satisfying condition 1 by construction (the multiples
/// of x in each row form a prefix whose length is nondecreasing downward),
/// resampled until nx_check passes.
inline NXMatrix random_passing_nx_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> constant(0, 3), linear(1, 3), coin(0, 3);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    NXMatrix m(rows, cols);
    std::size_t prefix = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (coin(rng) == 0 && prefix < cols) prefix += std::uniform_int_distribution<std::size_t>(1, cols - prefix)(rng);
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = j < prefix ? NXEntry::linear(linear(rng)) : NXEntry::constant(constant(rng));
    }
    if (nx_check(m)) return m;
  }
  throw std::runtime_error("no passing NX matrix found");
}

/// Interlacing sequence with nonnegative coefficients: positive constants
/// pushed through random passing NX matrices, with occasional common linear
/// factors (x + a), a > 0. Every result is re-verified with the oracle.
inline PolySequence random_interlacing_sequence(Rng& rng, std::size_t length) {
  std::uniform_int_distribution<int> small(1, 5), rounds(1, 3), coin(0, 2);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PolySequence seq;
    for (std::size_t i = 0; i < length; ++i) seq.push_back(Polynomial{small(rng)});
    const int k = rounds(rng);
    for (int round = 0; round < k; ++round) {
      seq = apply_matrix(random_passing_nx_matrix(rng, length, length), seq);
      if (coin(rng) == 0) {
        const Polynomial common{random_positive_rational(rng), 1};
        for (auto& p : seq) p *= common;
      }
    }
    const bool trivial = std::all_of(seq.begin(), seq.end(), [](const Polynomial& p) { return p.is_zero(); });
    if (!trivial && sequence_oracle(seq)) return seq;
  }
  throw std::runtime_error("could not generate an interlacing sequence");
}

}  // namespace lhp::testing
