// Explicit subdivisions of a simplex and their local h-polynomials, used as
// an independent check of the closed forms in edgewise.hpp.
#pragma once

#include "lhp/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhp {

/// Finite abstract simplicial complex given by its facets. Vertices are kept
/// sorted and facets refer to them by index; every subset of a facet,
/// including the empty face, is a face.
template <typename Vertex>
class SimplicialComplex {
 public:
  using Face = std::vector<std::size_t>;

  SimplicialComplex() = default;

  /// Facets may be given redundantly; non-maximal ones are dropped.
  SimplicialComplex(std::vector<Vertex> vertices, const std::vector<std::vector<Vertex>>& faces)
      : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::vector<Face> indexed;
    for (const auto& f : faces) {
      Face idx;
      for (const auto& v : f) {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || !(*it == v)) throw std::invalid_argument("face uses an unknown vertex");
        idx.push_back(static_cast<std::size_t>(it - vertices_.begin()));
      }
      indexed.push_back(std::move(idx));
    }
    facets_ = maximal_faces(std::move(indexed));
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }
  const Vertex& vertex(std::size_t i) const { return vertices_[i]; }

  /// Faces on a facet of the largest size minus one; -1 for the complex {∅}.
  long dimension() const {
    std::size_t best = 0;
    for (const auto& f : facets_) best = std::max(best, f.size());
    return static_cast<long>(best) - 1;
  }

  /// f_{-1}, f_0, …, f_{dim}.
  std::vector<std::uint64_t> f_vector() const {
    std::set<Face> faces;
    for (const auto& facet : facets_) {
      const std::size_t k = facet.size();
      if (k >= 64) throw std::length_error("facet too large to enumerate");
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Face sub;
        for (std::size_t b = 0; b < k; ++b)
          if (mask >> b & 1U) sub.push_back(facet[b]);
        faces.insert(std::move(sub));
      }
    }
    std::vector<std::uint64_t> f(static_cast<std::size_t>(dimension() + 2), 0);
    f[0] = 1;  // the empty face, also for a complex without facets
    for (const auto& face : faces)
      if (!face.empty()) ++f[face.size()];
    return f;
  }

  /// Faces whose vertices all satisfy `keep`.
  SimplicialComplex induced(const std::function<bool(const Vertex&)>& keep) const {
    SimplicialComplex out;
    std::vector<std::size_t> remap(vertices_.size(), SIZE_MAX);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (keep(vertices_[i])) {
        remap[i] = out.vertices_.size();
        out.vertices_.push_back(vertices_[i]);
      }
    }
    std::vector<Face> pieces;
    for (const auto& facet : facets_) {
      Face piece;
      for (std::size_t v : facet)
        if (remap[v] != SIZE_MAX) piece.push_back(remap[v]);
      if (!piece.empty()) pieces.push_back(std::move(piece));
    }
    out.facets_ = maximal_faces(std::move(pieces));
    return out;
  }

  /// Number of faces with exactly d + 1 vertices.
  std::uint64_t face_count(long d) const {
    auto f = f_vector();
    const auto idx = static_cast<std::size_t>(d + 1);
    return d + 1 >= 0 && idx < f.size() ? f[idx] : 0;
  }

 private:
  static std::vector<Face> maximal_faces(std::vector<Face> faces) {
    for (auto& f : faces) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    std::vector<Face> kept;
    for (auto& f : faces) {
      if (f.empty()) continue;
      bool covered = std::any_of(kept.begin(), kept.end(), [&](const Face& big) {
        return std::includes(big.begin(), big.end(), f.begin(), f.end());
      });
      if (!covered) kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

  std::vector<Vertex> vertices_;
  std::vector<Face> facets_;
};

/// h(K, x) = Σ_{i=0}^{d} f_{i-1} x^i (1 - x)^{d-i} with d = dim K + 1.
template <typename Vertex>
Polynomial h_polynomial(const SimplicialComplex<Vertex>& k) {
  const auto f = k.f_vector();
  const auto d = static_cast<unsigned>(f.size() - 1);
  const Polynomial one_minus_x{1, -1};
  Polynomial h;
  for (unsigned i = 0; i <= d; ++i)
    h += Polynomial::monomial(Rational(f[i]), i) * pow(one_minus_x, d - i);
  return h;
}

/// Lattice point with nonnegative coordinates; the edgewise subdivision uses
/// the points with coordinate sum r.
using LatticePoint = std::vector<int>;
/// Vertex of the barycentric subdivision: a nonempty subset of {1, …, n}, sorted.
using VertexSubset = std::vector<int>;

using EdgewiseComplex = SimplicialComplex<LatticePoint>;
using BarycentricComplex = SimplicialComplex<VertexSubset>;
using IndexComplex = SimplicialComplex<int>;

/// The simplex on {1, …, n}; n = 0 gives the complex {∅}.
inline IndexComplex simplex(unsigned n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  if (n == 0) return IndexComplex(v, {});
  return IndexComplex(v, {v});
}

namespace detail {

inline void lattice_points(unsigned n, int remaining, LatticePoint& prefix, std::vector<LatticePoint>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    prefix.push_back(a);
    lattice_points(n, remaining - a, prefix, out);
    prefix.pop_back();
  }
}

/// ι(a) = (a_1, a_1 + a_2, …, a_1 + … + a_{n-1}).
inline std::vector<int> partial_sums(const LatticePoint& a) {
  std::vector<int> s;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) s.push_back(acc += a[i]);
  return s;
}

/// ι(b) - ι(a) ∈ {0,1}^{n-1} or ι(a) - ι(b) ∈ {0,1}^{n-1}.
inline bool unit_cube_comparable(const std::vector<int>& a, const std::vector<int>& b) {
  bool up = true, down = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int diff = b[i] - a[i];
    up = up && (diff == 0 || diff == 1);
    down = down && (diff == 0 || diff == -1);
  }
  return up || down;
}

}  // namespace detail

/// The r-th edgewise subdivision of the (n-1)-simplex. Vertices are the
/// lattice points of N^n with coordinate sum r, and a vertex set is a face
/// iff its images under ι are pairwise comparable within a unit cube, that
/// is, they form a chain u_1 < … < u_k with ι(u_k) − ι(u_1) ∈ {0,1}^{n-1}.
/// Faces are enumerated as cliques of the comparability graph.
inline EdgewiseComplex edgewise_subdivision(unsigned n, unsigned r) {
  if (n < 1 || r < 1) throw std::invalid_argument("edgewise_subdivision needs n >= 1 and r >= 1");
  std::vector<LatticePoint> points;
  LatticePoint prefix;
  detail::lattice_points(n, static_cast<int>(r), prefix, points);
  std::sort(points.begin(), points.end());

  const std::size_t m = points.size();
  std::vector<std::vector<int>> iota;
  for (const auto& p : points) iota.push_back(detail::partial_sums(p));
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) adj[i][j] = adj[j][i] = detail::unit_cube_comparable(iota[i], iota[j]);

  // Maximal cliques by extension in index order; non-maximal results are
  // pruned by the complex constructor.
  std::vector<std::vector<LatticePoint>> cliques;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    bool extended = false;
    for (std::size_t c = start; c < m; ++c) {
      if (std::all_of(current.begin(), current.end(), [&](std::size_t v) { return adj[v][c]; })) {
        current.push_back(c);
        extend(c + 1);
        current.pop_back();
        extended = true;
      }
    }
    if (!extended && !current.empty()) {
      std::vector<LatticePoint> face;
      for (auto v : current) face.push_back(points[v]);
      cliques.push_back(std::move(face));
    }
  };
  extend(0);
  return EdgewiseComplex(points, cliques);
}

/// Subset of {0, …, n-1} given as a bitmask.
using CoordinateMask = std::uint32_t;

namespace detail {

inline auto supported_in(CoordinateMask face) {
  return [face](const LatticePoint& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0 && !(face >> i & 1U)) return false;
    return true;
  };
}

}  // namespace detail

/// Restriction of the edgewise subdivision to the face of the simplex
/// spanned by the coordinates in `face`: the induced subcomplex on lattice
/// points supported inside it. The empty face gives the complex {∅}.
inline EdgewiseComplex restriction(unsigned n, unsigned r, CoordinateMask face) {
  if (n >= 32) throw std::invalid_argument("restriction supports at most 31 coordinates");
  if (face >> n) throw std::invalid_argument("face is not a subset of the vertex set");
  return edgewise_subdivision(n, r).induced(detail::supported_in(face));
}

/// Σ_{F ⊆ V} (−1)^{n−|F|} h(Γ_F, x) for a family of restrictions Γ_F.
template <typename Restrict>
Polynomial inclusion_exclusion_local_h(unsigned n, Restrict&& restrict_to) {
  Polynomial total;
  for (CoordinateMask face = 0; face < (CoordinateMask{1} << n); ++face) {
    Polynomial h = h_polynomial(restrict_to(face));
    const auto size = static_cast<unsigned>(std::popcount(face));
    total += (n - size) % 2 == 0 ? h : -h;
  }
  return total;
}

/// Local h-polynomial of the r-th edgewise subdivision of the simplex on n
/// vertices, by inclusion–exclusion over explicit restrictions.
inline Polynomial local_h(unsigned n, unsigned r) {
  if (n < 1 || r < 1) throw std::invalid_argument("local_h needs n >= 1 and r >= 1");
  if (n >= 32) throw std::invalid_argument("local_h supports at most 31 vertices");
  const EdgewiseComplex whole = edgewise_subdivision(n, r);
  return inclusion_exclusion_local_h(n, [&](CoordinateMask face) {
    return whole.induced(detail::supported_in(face));
  });
}

/// A face of the simplex whose restricted subdivision does not consist of
/// exactly r^d faces of dimension d.
struct FaceCountViolation {
  CoordinateMask face = 0;
  long dimension = 0;
  std::uint64_t expected = 0;
  std::uint64_t found = 0;
};

/// Checks that every d-face of the simplex on n vertices carries r^d
/// top-dimensional faces of its restricted edgewise subdivision.
inline std::optional<FaceCountViolation> check_face_count_law(unsigned n, unsigned r) {
  if (n < 1 || n >= 32 || r < 1) throw std::invalid_argument("face-count law needs 1 <= n <= 31 and r >= 1");
  const EdgewiseComplex whole = edgewise_subdivision(n, r);
  for (CoordinateMask face = 1; face < (CoordinateMask{1} << n); ++face) {
    const long d = std::popcount(face) - 1;
    const auto restricted = whole.induced(detail::supported_in(face));
    std::uint64_t expected = 1;
    for (long k = 0; k < d; ++k) expected *= r;
    const std::uint64_t found = restricted.dimension() == d ? restricted.face_count(d) : 0;
    if (found != expected) return FaceCountViolation{face, d, expected, found};
  }
  return std::nullopt;
}

/// Barycentric subdivision of the simplex on {1, …, n}: vertices are the
/// nonempty subsets, faces are chains under inclusion. The maximal chains
/// correspond to the n! orderings of the vertex set.
inline BarycentricComplex barycentric_subdivision(unsigned n) {
  if (n < 1) throw std::invalid_argument("barycentric_subdivision needs n >= 1");
  if (n > 10) throw std::invalid_argument("barycentric_subdivision is limited to n <= 10");
  std::vector<VertexSubset> vertices;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    VertexSubset s;
    for (unsigned i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(static_cast<int>(i + 1));
    vertices.push_back(std::move(s));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<std::vector<VertexSubset>> chains;
  do {
    std::vector<VertexSubset> chain;
    VertexSubset prefix;
    for (int v : order) {
      prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
      chain.push_back(prefix);
    }
    chains.push_back(std::move(chain));
  } while (std::next_permutation(order.begin(), order.end()));
  return BarycentricComplex(std::move(vertices), chains);
}

/// Σ over derangements σ of [n] of x^{#{i : σ(i) > i}}, by enumeration.
inline Polynomial derangement_excedance(unsigned n) {
  if (n > 9) throw std::invalid_argument("derangement enumeration is limited to n <= 9");
  std::vector<Rational> counts(n + 1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    unsigned exc = 0;
    bool fixed = false;
    for (unsigned i = 0; i < n; ++i) {
      fixed = fixed || perm[i] == static_cast<int>(i);
      if (perm[i] > static_cast<int>(i)) ++exc;
    }
    if (!fixed) counts[exc] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial(std::move(counts));
}

/// Local h-polynomial of the barycentric subdivision by inclusion–exclusion
/// over the restrictions sd(2^F).
inline Polynomial local_h_barycentric(unsigned n) {
  if (n < 1 || n > 7) throw std::invalid_argument("local_h_barycentric needs 1 <= n <= 7");
  const BarycentricComplex whole = barycentric_subdivision(n);
  return inclusion_exclusion_local_h(n, [&](CoordinateMask face) {
    return whole.induced([face](const VertexSubset& s) {
      return std::all_of(s.begin(), s.end(), [face](int v) { return (face >> (v - 1) & 1U) != 0; });
    });
  });
}

}  // namespace lhp
