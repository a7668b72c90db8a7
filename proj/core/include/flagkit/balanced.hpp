#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagkit/cell_poset.hpp"
#include "flagkit/subdivide.hpp"

namespace flagkit {

/// Colors are 1..D; a color set is a bitmask with bit c for color c.
using ColorSet = std::uint32_t;

/// A simplicial complex with a proper coloring of its 1-skeleton by colors
/// 1..D, where D >= dim + 1. `color[v]` is 0 for labels not used by the complex.
class ColoredComplex {
 public:
  /// Raises NotBalanced when the coloring is not proper, uses a color
  /// outside 1..D, or D < dim + 1.
  ColoredComplex(SimplicialComplex complex, std::vector<int> color, int D);

  const SimplicialComplex& complex() const { return complex_; }
  int D() const { return D_; }
  int color(Vertex v) const { return color_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& colors() const { return color_; }
  ColorSet all_colors() const { return ((ColorSet{1} << D_) - 1) << 1; }

 private:
  SimplicialComplex complex_;
  std::vector<int> color_;
  int D_;
};

/// Backtracking search for a proper coloring with D colors (default dim + 1).
std::optional<ColoredComplex> find_balanced_coloring(const SimplicialComplex& c, std::optional<int> D = std::nullopt);

/// [D] minus the colors used by F. Raises FaceNotPresent.
ColorSet unused_colors(const ColoredComplex& g, VertexSet F);

std::vector<int> color_list(ColorSet s);

/// A face B ⊆ Q ⊆ C_F of the signed unused color complex, Q nonempty.
struct TripleFace {
  VertexSet F;
  ColorSet Q = 0;
  ColorSet B = 0;
  friend bool operator==(const TripleFace&, const TripleFace&) = default;
};

/// The vertex (F, {q}, {q}) has sign +1, the vertex (F, {q}, ∅) sign -1.
struct SignedVertex {
  VertexSet F;
  int color = 0;
  int sign = 1;
  friend bool operator==(const SignedVertex&, const SignedVertex&) = default;
};

/// (F1, Q1, B1) <= (F2, Q2, B2) iff F1 ⊇ F2, B1 ⊆ B2 and Q1 - B1 ⊆ Q2 - B2.
bool triple_leq(const TripleFace& a, const TripleFace& b);

class SignedCellComplex {
 public:
  explicit SignedCellComplex(ColoredComplex gamma);

  const ColoredComplex& gamma() const { return gamma_; }
  const std::vector<TripleFace>& triples() const { return triples_; }
  const std::vector<SignedVertex>& vertices() const { return vertices_; }
  /// Sorted vertex indices spanned by triple i: (F, q, +) for q in B and
  /// (F, q, -) for q in Q - B.
  const std::vector<int>& vertex_set(int i) const { return spans_[static_cast<std::size_t>(i)]; }
  int vertex_index(const SignedVertex& v) const;

  /// Counted by |Q|, the empty face adjoined.
  FVector f_vector() const;
  /// Number of distinct vertex sets among the triples.
  Count distinct_vertex_sets() const;

  /// Only available with at most 64 vertices (GroundSetTooLarge otherwise).
  CellPoset as_cell_poset() const;
  SimplicialComplex as_simplicial() const;

 private:
  ColoredComplex gamma_;
  std::vector<TripleFace> triples_;
  std::vector<SignedVertex> vertices_;
  std::vector<std::vector<int>> spans_;
};

SignedCellComplex signed_unused_color_complex(const ColoredComplex& g);

/// f_{k-1} = 2^k sum_{j=k}^{D} f_{D-j-1}(Γ) C(j, k).
FVector dgamma_fvector_formula(const FVector& f, int D);

/// Intersection/union criterion: F_1 ∩ ... ∩ F_k nonempty, or empty with
/// C_{F_1} ∪ ... ∪ C_{F_k} = [D]. `vs` are vertex indices of `d`.
bool vertices_form_face(const SignedCellComplex& d, const std::vector<int>& vs);

/// Some triple spans all of `vs`.
bool triple_face_exists(const SignedCellComplex& d, const std::vector<int>& vs);
/// Some triple lies above every vertex of `vs` under triple_leq.
bool incidence_face_exists(const SignedCellComplex& d, const std::vector<int>& vs);

struct FaceCriterionComparison {
  Count subsets = 0;                ///< nonempty vertex subsets of size <= D examined
  Count agree = 0;                  ///< criterion == triple_face_exists
  Count single_fiber = 0;           ///< subsets over one F, distinct colors
  Count single_fiber_agree = 0;
  Count incidence_agree = 0;        ///< criterion == incidence_face_exists
  std::vector<std::vector<int>> disagreements;  ///< first few, for reporting
};
FaceCriterionComparison compare_face_criteria(const SignedCellComplex& d, std::size_t keep_examples = 3);

/// Tchebyshev-style triangulation of D(Γ) keeping only midpoints between
/// vertices of equal sign; ascending vertex order.
TchebComplex one_sided_interval_complex(const SignedCellComplex& d);

}  // namespace flagkit
