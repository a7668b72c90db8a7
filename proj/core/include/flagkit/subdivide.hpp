#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "flagkit/cell_poset.hpp"

namespace flagkit {

/// A vertex (u, v) of a Tchebyshev triangulation: `v == kTop` marks the
/// original vertex u, otherwise it is the midpoint of u and v with u before v
/// in the chosen order.
struct TchebVertex {
  static constexpr Vertex kTop = -1;
  Vertex u = 0;
  Vertex v = kTop;

  bool is_original() const { return v == kTop; }
  friend bool operator==(const TchebVertex&, const TchebVertex&) = default;
};

/// Faces are sorted index lists into `vertices`; the empty face is implicit.
struct TchebComplex {
  std::vector<TchebVertex> vertices;
  std::vector<std::vector<int>> faces;

  FVector f_vector() const;
  int dimension() const { return f_vector().dimension(); }
  /// Raises NotAComplex when the face list is not closed under subsets.
  SimplicialComplex as_simplicial() const;
  bool is_subset_closed() const;
};

/// Predicate on a candidate midpoint (u, v); return false to drop it.
using PairFilter = std::function<bool(Vertex, Vertex)>;

/// The Tchebyshev triangulation of `p` with respect to `order`, which must
/// list every vertex of p.ground() exactly once (BadOrder otherwise). A face
/// is admitted when the vertices of its members make up the support of one
/// cell of p.
TchebComplex tcheb_triangulate(const CellPoset& p, const std::vector<Vertex>& order,
                               const PairFilter& keep_pair = {});

/// f_{k-1}(T) = sum_{j=k}^{2k} s_{j-1} (C(k,2k-j) + C(k-1,2k-j)) 2^{2k-j-1}.
FVector tcheb_fvector_formula(const FVector& f);

/// Vertices of p in increasing label order.
std::vector<Vertex> ascending_order(const CellPoset& p);
/// A uniformly shuffled copy of `vertices`, reproducible from `seed`.
std::vector<Vertex> random_order(std::vector<Vertex> vertices, std::uint64_t seed);

struct TchebCompatReport {
  FVector input;                 ///< support counts of p
  FVector formula;
  std::vector<FVector> direct;   ///< one per tried order
  bool counts_match = false;
  bool F_identity = false;
  bool ok() const { return counts_match && F_identity; }
};

/// Checks T(F_A) = F_{T(A)} and compares the closed form to direct
/// triangulations for the ascending order plus `random_orders` shuffles.
TchebCompatReport tcheb_F_compat(const CellPoset& p, int random_orders = 3, std::uint64_t seed = 0);
bool verify_tcheb_F_compat(const CellPoset& p);

}  // namespace flagkit
