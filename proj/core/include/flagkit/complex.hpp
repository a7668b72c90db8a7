#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "flagkit/vertex_set.hpp"

namespace flagkit {

/// Face numbers (f_{-1}, f_0, ..., f_{D-1}) of a complex, including the empty face.
class FVector {
 public:
  FVector() : entries_{1} {}
  /// `entries[0]` is f_{-1} and must equal 1.
  explicit FVector(std::vector<Count> entries);

  /// f_i for i >= -1; zero past the top dimension.
  Count at(int i) const {
    const auto idx = static_cast<std::size_t>(i + 1);
    return idx < entries_.size() ? entries_[idx] : 0;
  }
  /// Number of stored entries, dimension + 2.
  int size() const { return static_cast<int>(entries_.size()); }
  int dimension() const { return size() - 2; }
  const std::vector<Count>& entries() const& { return entries_; }
  std::vector<Count> entries() && { return std::move(entries_); }

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<Count> entries_;
};

/// h_k = sum_i (-1)^{k-i} C(d-i, k-i) f_{i-1}, with d = dimension + 1.
std::vector<Count> h_vector(const FVector& f);
/// Inverse of h_vector: f_{k-1} = sum_{i<=k} C(d-i, k-i) h_i.
FVector f_from_h(const std::vector<Count>& h);

/// Abstract simplicial complex stored by its facets.
///
/// The complex always contains the empty face; `{∅}` is the complex whose only
/// facet is the empty set. Facets are kept in canonical (lexicographic) order so
/// that equality is structural. The face closure is computed on first use and
/// shared between copies.
class SimplicialComplex {
 public:
  /// Builds the complex generated by `generators` (any faces; non-maximal ones
  /// are dropped). Labels must be < n_vertices. An empty generator list is
  /// rejected: the void complex is not representable.
  SimplicialComplex(int n_vertices, const std::vector<VertexSet>& generators);

  /// The complex {∅} on a ground set of size n.
  static SimplicialComplex empty_face(int n_vertices = 0);

  int n_vertices() const { return n_; }
  const std::vector<VertexSet>& facets() const& { return facets_; }
  std::vector<VertexSet> facets() && { return std::move(facets_); }
  int dimension() const;
  bool is_pure() const;
  /// Union of all facets.
  VertexSet vertices() const;
  bool contains(VertexSet face) const;

  /// Every face including ∅, ordered by cardinality then colex.
  const std::vector<VertexSet>& faces() const&;
  std::vector<VertexSet> faces() && { return faces(); }
  /// Faces grouped by dimension; key -1 holds {∅}.
  std::map<int, std::vector<VertexSet>> faces_by_dim() const;
  FVector f_vector() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  int n_;
  std::vector<VertexSet> facets_;
  mutable std::shared_ptr<const std::vector<VertexSet>> closure_;
};

/// A complex together with the map from its (new) labels back to the labels
/// of the complex it was derived from: `labels[new] = old`.
struct Relabeled {
  SimplicialComplex complex;
  std::vector<Vertex> labels;
};

/// Restricts `c` to the vertices it actually uses and relabels them 0..m-1.
Relabeled compact(const SimplicialComplex& c);

/// lk(face) = {G : G ∪ face ∈ c, G ∩ face = ∅}, relabeled contiguously.
Relabeled link(const SimplicialComplex& c, VertexSet face);

/// All faces of `c` avoiding v, on the same ground set.
SimplicialComplex antistar(const SimplicialComplex& c, Vertex v);

/// Join on the disjoint union of ground sets; b's labels are shifted by a.n_vertices().
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Stellar subdivision at the edge e. The new vertex is labelled c.n_vertices().
SimplicialComplex edge_subdivision(const SimplicialComplex& c, VertexSet e);

/// True iff every clique of the 1-skeleton is a face.
bool is_flag(const SimplicialComplex& c);

/// Recursive shedding-vertex test. Non-pure input raises NotPure.
bool is_vertex_decomposable(const SimplicialComplex& c);

/// Alternating sum sum_{i>=0} (-1)^i f_i (reduced by nothing; ∅ excluded).
Count euler_characteristic(const FVector& f);

}  // namespace flagkit
