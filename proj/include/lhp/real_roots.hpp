// Certified real-root counting and isolation with Sturm sequences.
//
// Every quantity is exact: sign variations are taken at rational points and
// isolating intervals are bisected at rational midpoints, so a returned
// isolation is a proof, not an approximation.
#pragma once

#include "lhp/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lhp {

/// Half-open interval (lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& t) const { return lo < t && t <= hi; }
  Rational width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IsolatedRoot {
  Interval interval;
  unsigned multiplicity;
  friend bool operator==(const IsolatedRoot&, const IsolatedRoot&) = default;
};

/// All distinct real roots of `poly`, ascending, one per pairwise disjoint
/// interval, each tagged with its multiplicity.
struct RootIsolation {
  Polynomial poly;
  std::vector<IsolatedRoot> roots;

  /// Real roots counted with multiplicity.
  unsigned real_root_count() const {
    unsigned total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    return total;
  }
  friend bool operator==(const RootIsolation&, const RootIsolation&) = default;
};

/// Sturm chain p, p', -rem(p, p'), ... ending at a nonzero constant.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(p);
    if (p.degree() == 0) return;
    chain_.push_back(derivative(p));
    while (chain_.back().degree() > 0) {
      Polynomial r = -remainder(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) throw std::invalid_argument("Sturm chain requires a squarefree polynomial");
      chain_.push_back(std::move(r));
    }
  }

  const std::vector<Polynomial>& polys() const { return chain_; }

  /// Sign variations at t, zeros skipped. At a root t of p this equals the
  /// variation count just right of t, so variations(a) - variations(b)
  /// counts the roots in (a, b] even when an endpoint is a root.
  unsigned variations(const Rational& t) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sign(eval(q, t)));
    return count_changes(signs);
  }

  unsigned variations_at_plus_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain_) signs.push_back(sign(q.leading()));
    return count_changes(signs);
  }

  unsigned variations_at_minus_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
      int s = sign(q.leading());
      signs.push_back(q.degree() % 2 == 0 ? s : -s);
    }
    return count_changes(signs);
  }

  /// Distinct roots in (lo, hi].
  unsigned count(const Interval& iv) const { return variations(iv.lo) - variations(iv.hi); }
  unsigned count_all() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }

 private:
  static unsigned count_changes(const std::vector<int>& signs) {
    unsigned changes = 0;
    int last = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  std::vector<Polynomial> chain_;
};

inline std::vector<Polynomial> sturm_chain(const Polynomial& p) { return SturmChain(p).polys(); }

/// Distinct real roots of squarefree p in iv, or on the whole line.
inline unsigned count_real_roots(const Polynomial& p, const std::optional<Interval>& iv = std::nullopt) {
  SturmChain chain(p);
  return iv ? chain.count(*iv) : chain.count_all();
}

/// Cauchy bound: every root satisfies |root| < 1 + max |a_k / a_n|.
inline Rational cauchy_bound(const Polynomial& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  const Rational lead = p.leading();
  for (std::size_t k = 0; k + 1 < p.size(); ++k) m = std::max(m, Rational(abs(p[k] / lead)));
  return m + 1;
}

namespace detail {

inline void bisect_until_isolated(const SturmChain& chain, std::vector<Interval>& out) {
  const Rational bound = cauchy_bound(chain.polys().front());
  std::vector<std::pair<Interval, unsigned>> pending{{{-bound, bound}, chain.count({-bound, bound})}};
  while (!pending.empty()) {
    auto [iv, n] = pending.back();
    pending.pop_back();
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    Interval left{iv.lo, mid}, right{mid, iv.hi};
    unsigned nl = chain.count(left);
    // Push right first so that left halves are handled first.
    pending.push_back({right, n - nl});
    pending.push_back({left, nl});
  }
}

}  // namespace detail

/// Isolates every distinct real root of p and attaches multiplicities from
/// the squarefree decomposition.
inline RootIsolation isolate_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  RootIsolation iso{p, {}};
  if (p.degree() == 0) return iso;

  const auto factors = squarefree_decomposition(p);
  Polynomial radical{1};
  std::vector<SturmChain> factor_chains;
  for (const auto& f : factors) {
    radical *= f.factor;
    factor_chains.emplace_back(f.factor);
  }

  std::vector<Interval> intervals;
  detail::bisect_until_isolated(SturmChain(radical), intervals);
  for (const auto& iv : intervals) {
    unsigned mult = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factor_chains[i].count(iv) == 1) {
        mult = factors[i].multiplicity;
        break;
      }
    }
    if (mult == 0) throw std::logic_error("isolated root not attributed to any squarefree factor");
    iso.roots.push_back({iv, mult});
  }
  return iso;
}

/// Bisects roots[index] until its width is below `width`.
inline RootIsolation refine(RootIsolation iso, std::size_t index, const Rational& width) {
  if (index >= iso.roots.size()) throw std::out_of_range("root index out of range");
  if (width <= 0) throw std::invalid_argument("refinement width must be positive");
  SturmChain chain(squarefree_part(iso.poly));
  Interval& iv = iso.roots[index].interval;
  while (iv.width() >= width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (chain.count({iv.lo, mid}) == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return iso;
}

/// True iff every root of p is real. Constants are real-rooted; the zero
/// polynomial is rejected and callers decide how to treat it.
inline bool is_real_rooted(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("real-rootedness of the zero polynomial is a caller convention");
  if (p.degree() == 0) return true;
  const Polynomial radical = squarefree_part(p);
  return count_real_roots(radical) == static_cast<unsigned>(radical.degree());
}

}  // namespace lhp
