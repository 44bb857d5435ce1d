// Local h-polynomials of edgewise subdivisions of a simplex and the
// r-section sequences that interlace.
#pragma once

#include "lhp/interlacing.hpp"
#include "lhp/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhp {

/// r-section decomposition p(x) = Σ_j x^j · sections[j](x^r), 0 ≤ j < r.
struct SectionSequence {
  unsigned r = 1;
  std::vector<Polynomial> sections;

  friend bool operator==(const SectionSequence&, const SectionSequence&) = default;
};

struct EdgewiseParams {
  unsigned n = 0;  ///< number of vertices of the simplex
  unsigned r = 1;  ///< subdivision parameter

  EdgewiseParams() = default;
  EdgewiseParams(unsigned n_, unsigned r_) : n(n_), r(r_) {
    if (r < 1) throw std::invalid_argument("edgewise subdivision parameter r must be at least 1");
  }
};

inline SectionSequence sections(const Polynomial& p, unsigned r) {
  if (r < 1) throw std::invalid_argument("section count r must be at least 1");
  std::vector<std::vector<Rational>> buckets(r);
  for (std::size_t k = 0; k < p.size(); ++k) {
    auto& b = buckets[k % r];
    b.resize(k / r + 1);
    b[k / r] = p[k];
  }
  SectionSequence out{r, {}};
  for (auto& b : buckets) out.sections.emplace_back(std::move(b));
  return out;
}

inline Polynomial reconstruct(const SectionSequence& s) {
  Polynomial out;
  for (std::size_t j = 0; j < s.sections.size(); ++j) out += s.sections[j].inflated(s.r).shifted(j);
  return out;
}

/// E_r: x^m ↦ x^{m/r} when r | m, otherwise 0.
inline Polynomial e_r(const Polynomial& p, unsigned r) { return sections(p, r).sections.front(); }

/// x^from + … + x^to, zero when the range is empty.
inline Polynomial geometric_block(unsigned from, unsigned to) {
  std::vector<Rational> v;
  if (from <= to) {
    v.resize(to + 1);
    std::fill(v.begin() + from, v.end(), Rational(1));
  }
  return Polynomial(std::move(v));
}

/// E_r (x + x^2 + … + x^{r-1})^n. For r = 1 the inner sum is empty, so the
/// result is 1 for n = 0 and 0 otherwise.
inline Polynomial local_h_edgewise(const EdgewiseParams& params) {
  if (params.r == 1) return params.n == 0 ? Polynomial{1} : Polynomial{};
  return e_r(pow(geometric_block(1, params.r - 1), params.n), params.r);
}

/// The r×r NX matrix sending (f_{r-1}, …, f_0)^T to (g_{r-1}, …, g_0)^T
/// where (1 + x + … + x^{r-2}) Σ_j x^j f_j(x^r) = Σ_j x^j g_j(x^r):
///   g_k     = f_0 + … + f_k + x (f_{k+2} + … + f_{r-1}),  0 ≤ k ≤ r-2
///   g_{r-1} = f_1 + … + f_{r-1}
/// Row i holds g_{r-1-i}, column c multiplies f_{r-1-c}.
inline NXMatrix lemma_matrix(unsigned r) {
  if (r < 2) throw std::invalid_argument("lemma matrix needs r >= 2");
  NXMatrix m(r, r);
  for (unsigned i = 0; i < r; ++i) {
    const unsigned k = r - 1 - i;
    for (unsigned c = 0; c < r; ++c) {
      const unsigned j = r - 1 - c;
      if (k == r - 1) {
        m(i, c) = NXEntry::constant(j >= 1 ? 1 : 0);
      } else if (j <= k) {
        m(i, c) = NXEntry::constant(1);
      } else if (j >= k + 2) {
        m(i, c) = NXEntry::linear(1);
      } else {
        m(i, c) = NXEntry::constant(0);
      }
    }
  }
  return m;
}

/// g-sections through the lemma matrix.
inline SectionSequence lemma_apply_matrix(const SectionSequence& fs) {
  if (fs.r < 2 || fs.sections.size() != fs.r) throw std::invalid_argument("lemma_apply needs r >= 2 sections");
  PolySequence column(fs.sections.rbegin(), fs.sections.rend());
  PolySequence image = apply_matrix(lemma_matrix(fs.r), column);
  return {fs.r, PolySequence(image.rbegin(), image.rend())};
}

/// g-sections by multiplying out and re-sectioning.
inline SectionSequence lemma_apply_direct(const SectionSequence& fs) {
  if (fs.r < 2 || fs.sections.size() != fs.r) throw std::invalid_argument("lemma_apply needs r >= 2 sections");
  return sections(geometric_block(0, fs.r - 2) * reconstruct(fs), fs.r);
}

/// (1 + x + … + x^{r-2}) Σ_j x^j f_j(x^r) = Σ_j x^j g_j(x^r), returning the
/// g_j. Both routes are computed; a disagreement throws std::logic_error.
inline SectionSequence lemma_apply(const SectionSequence& fs) {
  SectionSequence via_matrix = lemma_apply_matrix(fs);
  if (via_matrix != lemma_apply_direct(fs))
    throw std::logic_error("lemma matrix and direct sectioning disagree for r = " + std::to_string(fs.r));
  return via_matrix;
}

inline SectionSequence unit_sections(unsigned r) { return sections(Polynomial{1}, r); }

/// Sections of (1 + x + … + x^{r-2})^n, built by n applications of
/// lemma_apply to the sections of 1 and checked against direct expansion.
inline SectionSequence h_sections(const EdgewiseParams& params) {
  if (params.r < 2) throw std::invalid_argument("h_sections needs r >= 2");
  SectionSequence iterated = unit_sections(params.r);
  for (unsigned step = 0; step < params.n; ++step) iterated = lemma_apply(iterated);
  if (iterated != sections(pow(geometric_block(0, params.r - 2), params.n), params.r))
    throw std::logic_error("iterated lemma construction disagrees with direct expansion");
  return iterated;
}

/// Index j of the section that carries the local h-polynomial, (-n) mod r.
inline unsigned local_section_index(const EdgewiseParams& params) { return (params.r - params.n % params.r) % params.r; }

/// The local h-polynomial as a shifted section: since
/// (x + … + x^{r-1})^n = x^n (1 + … + x^{r-2})^n, E_r keeps exactly the
/// terms x^{n+j} h_j(x^r) with r | n + j, so ℓ = x^{⌈n/r⌉} h_j(x) for
/// j = (-n) mod r.
inline Polynomial local_from_sections(const EdgewiseParams& params) {
  if (params.r < 2 || params.n < 1) throw std::invalid_argument("local_from_sections needs r >= 2 and n >= 1");
  const SectionSequence hs = h_sections(params);
  const unsigned j = local_section_index(params);
  const unsigned shift = (params.n + params.r - 1) / params.r;
  return hs.sections[j].shifted(shift);
}

/// (h_{r-1}, …, h_1, h_0), the order in which the sections interlace.
inline PolySequence interlacing_order(const SectionSequence& s) { return {s.sections.rbegin(), s.sections.rend()}; }

}  // namespace lhp
