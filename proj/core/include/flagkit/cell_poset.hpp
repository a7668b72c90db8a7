#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagkit/complex.hpp"
#include "flagkit/poly.hpp"

namespace flagkit {

/// Which empty-face convention the f~-polynomial uses: simplicial posets
/// adjoin ∅ at rank 0, cubical and general ones do not.
enum class PosetKind { simplicial, cubical, general };

std::string to_string(PosetKind kind);
PosetKind parse_poset_kind(const std::string& text);

struct CellElement {
  int id = 0;
  int dim = 0;
  VertexSet support;
};

/// Graded face poset of a cell complex. The empty face is never stored.
///
/// Elements are addressed by their position (index) in `elements()`; the
/// caller-facing `id` is only carried through serialization. Covers are
/// index pairs (lower, upper) and must raise dim by exactly one and be
/// monotone in support.
class CellPoset {
 public:
  /// `covers` are given by element id.
  CellPoset(PosetKind kind, std::vector<CellElement> elements, const std::vector<std::pair<int, int>>& covers);

  PosetKind kind() const { return kind_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<CellElement>& elements() const { return elements_; }
  const CellElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& up(int i) const { return up_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& down(int i) const { return down_[static_cast<std::size_t>(i)]; }

  /// Reflexive order relation on indices.
  bool leq(int i, int j) const { return below_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]; }

  int max_dim() const;
  std::vector<int> minimal() const;
  std::vector<int> maximal() const;
  /// All maximal elements share one dimension.
  bool is_pure() const;
  /// Pure, and all minimal elements share one dimension.
  bool is_graded() const;
  /// Union of all supports.
  VertexSet ground() const;
  /// True iff every element of dimension j has exactly j + 1 support vertices.
  bool cells_have_k_vertices() const;

 private:
  PosetKind kind_;
  std::vector<CellElement> elements_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<std::vector<bool>> below_;
};

/// One element per nonempty face; kind simplicial.
CellPoset from_simplicial(const SimplicialComplex& c);

/// Elements are the given nonempty vertex sets with dim = |set| - 1; covers
/// are inclusions between sets of consecutive sizes. Kind general.
CellPoset from_face_list(const std::vector<VertexSet>& faces);

/// Abstract posets used by the interval suite. Supports are principal
/// down-sets (as sets of element indices).
CellPoset chain_poset(int length);
CellPoset antichain_poset(int size);
/// The Boolean lattice of a k-set, bottom included as an ordinary element.
CellPoset boolean_poset(int k);

/// A single polygon with `n` vertices as a cubical-style cell poset:
/// n vertices, n edges and one 2-cell whose support has n vertices.
CellPoset polygon_cell_poset(int n);

/// Dual complex: an element of dim j per (D-j-1)-dim element; its support is
/// the set of facets containing the primal element. Needs a pure poset.
CellPoset dual(const CellPoset& p);

/// Counts by dim, index = dim.
std::vector<Count> rank_counts(const CellPoset& p);

/// Face numbers with ∅ adjoined: (1, #dim 0, #dim 1, ...).
FVector fvector_with_empty(const CellPoset& p);

/// (s~_0, s~_1, ...) where s~_i counts faces with i support vertices, s~_0 = 1 for ∅.
FVector support_counts(const CellPoset& p);

/// Rank-generating polynomial with the kind's empty-face convention.
RatPoly ftilde_poly(const CellPoset& p);
/// sum_F x^{|support F|}, ∅ contributing 1.
RatPoly stilde_poly(const CellPoset& p);

/// Nonempty intervals [u, v] ordered by inclusion (kind general). An interval's
/// dim is dim v - dim u and its support is the set of element indices in it.
/// With include_empty a bottom element (the empty interval) is adjoined and
/// all other dims shift up by one; that requires a graded input.
CellPoset interval_poset(const CellPoset& p, bool include_empty);

/// Vertices are element indices, faces are chains.
SimplicialComplex order_complex(const CellPoset& p);

/// Every interval [u, v] is a Boolean lattice of rank dim v - dim u.
bool has_boolean_intervals(const CellPoset& p);

/// Poset of order relations u <= v, (u<=v) <= (x<=y) iff x <= u and v <= y.
/// Raises NonBooleanIntervals unless has_boolean_intervals(p). Kind cubical.
CellPoset barycentric_cover(const CellPoset& p);

/// f^□_k = sum_{j>=k} C(j+1, k) f_j for k = 0..D-1.
std::vector<Count> cubical_barycentric_fvector(const FVector& f);

/// f(order complex of I(P)) equals the Tchebyshev f-vector formula applied to
/// f(order complex of P).
bool verify_interval_tcheb(const CellPoset& p);

}  // namespace flagkit
