// Interlacing of real-rooted polynomials, interlacing sequences, and
// interlacing-preserving matrices.
#pragma once

#include "lhp/polynomial.hpp"
#include "lhp/real_roots.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lhp {

/// A polynomial that was required to be real-rooted is not.
class NotRealRootedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class RootLabel { f, g, shared };

inline const char* to_string(RootLabel label) {
  switch (label) {
    case RootLabel::f: return "f";
    case RootLabel::g: return "g";
    case RootLabel::shared: return "shared";
  }
  return "?";
}

/// One distinct real root of f·g with its multiplicity in each factor.
struct MergedRoot {
  Interval location;
  unsigned multiplicity_f = 0;
  unsigned multiplicity_g = 0;

  RootLabel label() const {
    if (multiplicity_f > 0 && multiplicity_g > 0) return RootLabel::shared;
    return multiplicity_f > 0 ? RootLabel::f : RootLabel::g;
  }
  friend bool operator==(const MergedRoot&, const MergedRoot&) = default;
};

/// Why g does not interlace f. For a chain failure, `lower` must not exceed
/// `upper` in the required chain but does; the symbols name the roots as
/// u_i (roots of f) and v_i (roots of g), indexed from the largest.
struct InterlacingViolation {
  enum class Kind { degree, chain };
  Kind kind = Kind::degree;
  std::string lower_symbol;
  std::string upper_symbol;
  std::optional<Interval> lower_root;
  std::optional<Interval> upper_root;
  std::string detail;

  friend bool operator==(const InterlacingViolation&, const InterlacingViolation&) = default;
};

struct InterlacingCertificate {
  bool holds = false;
  /// Distinct roots of f·g from largest to smallest.
  std::vector<MergedRoot> merged_order;
  std::optional<InterlacingViolation> violation;

  explicit operator bool() const { return holds; }
  friend bool operator==(const InterlacingCertificate&, const InterlacingCertificate&) = default;
};

namespace detail {

/// Squarefree factors of p with their Sturm chains.
struct FactoredPoly {
  std::vector<SquarefreeFactor> factors;
  std::vector<SturmChain> chains;
  Polynomial radical{1};

  explicit FactoredPoly(const Polynomial& p) : factors(squarefree_decomposition(p)) {
    chains.reserve(factors.size());
    for (const auto& f : factors) {
      chains.emplace_back(f.factor);
      radical *= f.factor;
    }
  }

  bool real_rooted() const {
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (chains[i].count_all() != static_cast<unsigned>(factors[i].factor.degree())) return false;
    return true;
  }

  unsigned multiplicity_in(const Interval& iv) const {
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (chains[i].count(iv) == 1) return factors[i].multiplicity;
    return 0;
  }
};

inline FactoredPoly factor_interlacing_input(const Polynomial& p, const char* name) {
  if (p.leading() < 0) throw std::invalid_argument(std::string(name) + " has a negative leading coefficient");
  FactoredPoly fp(p);
  if (!fp.real_rooted()) throw NotRealRootedError(std::string(name) + " = " + to_string(p) + " is not real-rooted");
  return fp;
}

}  // namespace detail

/// Decides g ⪯ f ("g interlaces f"): with roots u_1 ≥ … ≥ u_n of f and
/// v_1 ≥ v_2 ≥ … of g,
///   deg f = deg g = n:     v_n ≤ u_n ≤ v_{n-1} ≤ … ≤ v_1 ≤ u_1
///   deg f = deg g + 1 = n: u_n ≤ v_{n-1} ≤ u_{n-1} ≤ … ≤ v_1 ≤ u_1
/// Root comparisons are exact: the distinct roots of f·g are isolated once
/// and each root of f or g is identified with its rank among them, so equal
/// roots compare equal. The zero polynomial interlaces and is interlaced by
/// everything.
///
/// Throws NotRealRootedError for a non-real-rooted argument and
/// std::invalid_argument for a negative leading coefficient. A degree gap
/// outside {0, 1} is reported as a failed certificate.
inline InterlacingCertificate interlaces(const Polynomial& g, const Polynomial& f) {
  InterlacingCertificate cert;
  if (f.is_zero() || g.is_zero()) {
    cert.holds = true;
    return cert;
  }
  const auto ff = detail::factor_interlacing_input(f, "f");
  const auto gf = detail::factor_interlacing_input(g, "g");

  const long gap = f.degree() - g.degree();

  // Merged root order, descending.
  if (f.degree() + g.degree() > 0) {
    const Polynomial joint = ff.radical * exact_quotient(gf.radical, gcd(ff.radical, gf.radical));
    std::vector<Interval> distinct;
    detail::bisect_until_isolated(SturmChain(joint), distinct);
    for (auto it = distinct.rbegin(); it != distinct.rend(); ++it)
      cert.merged_order.push_back({*it, ff.multiplicity_in(*it), gf.multiplicity_in(*it)});
  }

  if (gap != 0 && gap != 1) {
    InterlacingViolation v;
    v.kind = InterlacingViolation::Kind::degree;
    v.detail = "deg f = " + std::to_string(f.degree()) + ", deg g = " + std::to_string(g.degree()) +
               "; interlacing needs deg f - deg g in {0, 1}";
    cert.violation = std::move(v);
    return cert;
  }

  // Ranks of roots with multiplicity, largest first; rank 0 is the largest
  // distinct root.
  std::vector<std::size_t> u, v;
  for (std::size_t rank = 0; rank < cert.merged_order.size(); ++rank) {
    u.insert(u.end(), cert.merged_order[rank].multiplicity_f, rank);
    v.insert(v.end(), cert.merged_order[rank].multiplicity_g, rank);
  }

  struct Link {
    std::string symbol;
    std::size_t rank;
  };
  // The required chain, written from the smallest element upward.
  std::vector<Link> chain;
  for (std::size_t i = u.size(); i >= 1; --i) {
    if (gap == 0) chain.push_back({"v_" + std::to_string(i), v[i - 1]});
    chain.push_back({"u_" + std::to_string(i), u[i - 1]});
    if (gap == 1 && i >= 2) chain.push_back({"v_" + std::to_string(i - 1), v[i - 2]});
  }

  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    // A larger rank is a smaller root, so the chain needs nonincreasing ranks.
    if (chain[k].rank < chain[k + 1].rank) {
      InterlacingViolation viol;
      viol.kind = InterlacingViolation::Kind::chain;
      viol.lower_symbol = chain[k].symbol;
      viol.upper_symbol = chain[k + 1].symbol;
      viol.lower_root = cert.merged_order[chain[k].rank].location;
      viol.upper_root = cert.merged_order[chain[k + 1].rank].location;
      viol.detail = viol.lower_symbol + " <= " + viol.upper_symbol + " fails";
      cert.violation = std::move(viol);
      return cert;
    }
  }
  cert.holds = true;
  return cert;
}

using PolySequence = std::vector<Polynomial>;

struct SequenceCheck {
  bool holds = true;
  /// First (i, j), i < j, in lexicographic order with f_i not interlacing f_j.
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
  std::optional<InterlacingCertificate> certificate;
  /// First entry with a negative coefficient, when nonnegativity is required.
  std::optional<std::size_t> negative_entry;

  explicit operator bool() const { return holds; }
};

/// Checks f_i ⪯ f_j for all i < j; with `require_nonneg`, also that every
/// coefficient of every entry is nonnegative.
inline SequenceCheck is_interlacing_sequence(const PolySequence& seq, bool require_nonneg) {
  SequenceCheck out;
  if (require_nonneg) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (!seq[i].has_nonnegative_coefficients()) {
        out.holds = false;
        out.negative_entry = i;
        return out;
      }
    }
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      auto cert = interlaces(seq[i], seq[j]);
      if (!cert.holds) {
        out.holds = false;
        out.violating_pair = {i, j};
        out.certificate = std::move(cert);
        return out;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// NX matrices

/// Entry of an NX matrix: a nonnegative constant, or a positive multiple of x.
class NXEntry {
 public:
  enum class Kind { constant, linear };

  NXEntry() = default;

  static NXEntry constant(const Rational& value) {
    if (value < 0) throw std::invalid_argument("NX constant entry must be nonnegative, got " + to_string(value));
    return NXEntry(Kind::constant, value);
  }
  static NXEntry linear(const Rational& value) {
    if (value <= 0) throw std::invalid_argument("NX x-entry must have a positive coefficient, got " + to_string(value));
    return NXEntry(Kind::linear, value);
  }

  Kind kind() const { return kind_; }
  bool is_linear() const { return kind_ == Kind::linear; }
  const Rational& value() const { return value_; }
  Polynomial as_polynomial() const {
    return is_linear() ? Polynomial::monomial(value_, 1) : Polynomial::constant(value_);
  }

  friend bool operator==(const NXEntry&, const NXEntry&) = default;

 private:
  NXEntry(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_ = Kind::constant;
  Rational value_ = 0;
};

class NXMatrix {
 public:
  NXMatrix() = default;
  NXMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  explicit NXMatrix(const std::vector<std::vector<NXEntry>>& grid) {
    rows_ = grid.size();
    cols_ = rows_ == 0 ? 0 : grid.front().size();
    for (const auto& row : grid) {
      if (row.size() != cols_) throw std::invalid_argument("NX matrix rows have unequal lengths");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const NXEntry& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  NXEntry& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  friend bool operator==(const NXMatrix&, const NXMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<NXEntry> entries_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline PolyMatrix to_poly_matrix(const NXMatrix& m) {
  PolyMatrix out(m.rows(), std::vector<Polynomial>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).as_polynomial();
  return out;
}

/// Result of nx_check. On failure, `rows` and `cols` locate the witness
/// (0-based). For condition 1 the cells are (rows[0], cols[0]), the multiple
/// of x, and (rows[1], cols[1]), the constant lying southwest of it. For
/// conditions 2 and 3 they are the rows and columns of the offending 2×2
/// submatrix and `determinant` is its ad − bc.
struct NXCheckResult {
  bool pass = true;
  int condition = 0;
  std::pair<std::size_t, std::size_t> rows{};
  std::pair<std::size_t, std::size_t> cols{};
  std::optional<Rational> determinant;

  explicit operator bool() const { return pass; }
  friend bool operator==(const NXCheckResult&, const NXCheckResult&) = default;
};

/// Sufficient conditions for an NX matrix to preserve interlacing sequences
/// with nonnegative coefficients:
///   (1) every entry weakly southwest of a multiple of x is a multiple of x;
///   (2) ad − bc ≥ 0 on submatrices (a b; c d) and (ax bx; cx dx);
///   (3) ad − bc ≤ 0 on submatrices (a b; cx dx) and (ax b; cx d).
/// Entries are classified by their tag, so a constant 0 counts as a constant.
/// The remaining shapes permitted by (1), (a b; cx d) and (ax b; cx dx),
/// impose no condition.
inline NXCheckResult nx_check(const NXMatrix& m) {
  NXCheckResult res;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_linear()) continue;
      for (std::size_t k = i; k < m.rows(); ++k) {
        for (std::size_t l = 0; l <= j; ++l) {
          if (!m(k, l).is_linear()) {
            res.pass = false;
            res.condition = 1;
            res.rows = {i, k};
            res.cols = {j, l};
            return res;
          }
        }
      }
    }
  }
  for (std::size_t k = 0; k < m.rows(); ++k) {
    for (std::size_t l = k + 1; l < m.rows(); ++l) {
      for (std::size_t i = 0; i < m.cols(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
          const NXEntry &a = m(k, i), &b = m(k, j), &c = m(l, i), &d = m(l, j);
          const Rational det = a.value() * d.value() - b.value() * c.value();
          const bool top_x = a.is_linear() || b.is_linear();
          const bool all_const = !a.is_linear() && !b.is_linear() && !c.is_linear() && !d.is_linear();
          const bool all_x = a.is_linear() && b.is_linear() && c.is_linear() && d.is_linear();
          int condition = 0;
          bool ok = true;
          if (all_const || all_x) {
            condition = 2;
            ok = det >= 0;
          } else if (!top_x && c.is_linear() && d.is_linear()) {
            condition = 3;  // (a b; cx dx)
            ok = det <= 0;
          } else if (a.is_linear() && !b.is_linear() && c.is_linear() && !d.is_linear()) {
            condition = 3;  // (ax b; cx d)
            ok = det <= 0;
          }
          if (!ok) {
            res.pass = false;
            res.condition = condition;
            res.rows = {k, l};
            res.cols = {i, j};
            res.determinant = det;
            return res;
          }
        }
      }
    }
  }
  return res;
}

/// Matrix–vector product over Q[x].
inline PolySequence apply_matrix(const PolyMatrix& g, const PolySequence& fs) {
  PolySequence out;
  out.reserve(g.size());
  for (const auto& row : g) {
    if (row.size() != fs.size())
      throw std::invalid_argument("matrix has " + std::to_string(row.size()) + " columns but sequence has " +
                                  std::to_string(fs.size()) + " entries");
    Polynomial acc;
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * fs[j];
    out.push_back(std::move(acc));
  }
  return out;
}

inline PolySequence apply_matrix(const NXMatrix& m, const PolySequence& fs) { return apply_matrix(to_poly_matrix(m), fs); }

// ---------------------------------------------------------------------------
// Sampled refutation of the interlacing-preservation criterion for
// matrices of polynomials with nonnegative coefficients.

struct LambdaMu {
  Rational lambda;
  Rational mu;
};

/// A refutation found by branden_falsify. condition 1 means a negative
/// coefficient at entry (row_k, col_i); condition 2 means that at the given
/// sample (λx+μ)G_kj + G_lj ⪯ (λx+μ)G_ki + G_li fails (0-based indices).
struct FalsifierCounterexample {
  int condition = 2;
  std::size_t row_k = 0, row_l = 0, col_i = 0, col_j = 0;
  std::optional<LambdaMu> sample;
  Polynomial g, f;
  std::optional<InterlacingCertificate> certificate;
  std::string detail;
};

/// {1/4, 1/2, 1, 2, 4}² followed by ten seeded pseudo-random positive
/// rational pairs.
inline std::vector<LambdaMu> default_sample_grid(std::uint64_t seed = 20240601) {
  const std::vector<Rational> base{Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(4)};
  std::vector<LambdaMu> out;
  for (const auto& l : base)
    for (const auto& m : base) out.push_back({l, m});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, 97);
  for (int k = 0; k < 10; ++k) {
    Rational l(pick(rng), pick(rng));
    Rational m(pick(rng), pick(rng));
    out.push_back({l, m});
  }
  return out;
}

/// Searches the samples for a violation of
///   (λx + μ) G_kj + G_lj ⪯ (λx + μ) G_ki + G_li,  i < j, k < l.
/// Returns nullopt if none is found, which only means no refutation was
/// found on the given samples.
inline std::optional<FalsifierCounterexample> branden_falsify(const PolyMatrix& g, const std::vector<LambdaMu>& samples) {
  const std::size_t rows = g.size();
  const std::size_t cols = rows == 0 ? 0 : g.front().size();
  for (std::size_t k = 0; k < rows; ++k) {
    if (g[k].size() != cols) throw std::invalid_argument("polynomial matrix rows have unequal lengths");
    for (std::size_t i = 0; i < cols; ++i) {
      if (!g[k][i].has_nonnegative_coefficients()) {
        FalsifierCounterexample cx;
        cx.condition = 1;
        cx.row_k = k;
        cx.col_i = i;
        cx.detail = "entry has a negative coefficient";
        return cx;
      }
    }
  }
  // Matrices with few distinct entries repeat the same pair many times.
  auto poly_less = [](const Polynomial& a, const Polynomial& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
  };
  auto pair_less = [&](const std::pair<Polynomial, Polynomial>& a, const std::pair<Polynomial, Polynomial>& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return poly_less(a.second, b.second);
  };
  std::set<std::pair<Polynomial, Polynomial>, decltype(pair_less)> known_good(pair_less);

  for (const auto& s : samples) {
    const Polynomial lin{s.mu, s.lambda};
    for (std::size_t i = 0; i < cols; ++i) {
      for (std::size_t j = i + 1; j < cols; ++j) {
        for (std::size_t k = 0; k < rows; ++k) {
          for (std::size_t l = k + 1; l < rows; ++l) {
            Polynomial lhs = lin * g[k][j] + g[l][j];
            Polynomial rhs = lin * g[k][i] + g[l][i];
            auto key = std::make_pair(lhs, rhs);
            if (known_good.contains(key)) continue;
            FalsifierCounterexample cx{2, k, l, i, j, s, lhs, rhs, std::nullopt, {}};
            try {
              auto cert = interlaces(lhs, rhs);
              if (cert.holds) {
                known_good.insert(std::move(key));
                continue;
              }
              cx.certificate = std::move(cert);
              cx.detail = "interlacing fails";
            } catch (const NotRealRootedError& e) {
              cx.detail = e.what();
            }
            return cx;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace lhp
