#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagkit/complex.hpp"

namespace flagkit {

/// Γ = {F ∪ G : F ∈ S, G ⊆ [d - 2|F|]}.
struct BooleanDecomposition {
  SimplicialComplex S;
  int d = 0;
};

/// Where the two kinds of vertices sit in Γ: `core[i]` is the label of
/// vertex i of S, `boolean[j]` the label of Boolean element j + 1.
struct VertexPartition {
  std::vector<Vertex> core;
  std::vector<Vertex> boolean;
  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

/// Core labels first (0..|V(S)|-1), then 1..d as |V(S)|..|V(S)|+d-1.
VertexPartition canonical_partition(const SimplicialComplex& S, int d);

/// Raises BadParameter for odd or negative d, DimensionTooLarge when
/// d < 2|F| for some F ∈ S, NotAComplex if the face set is not closed.
SimplicialComplex build_boolean(const SimplicialComplex& S, int d);

/// Face set of build_boolean(S, d) relabeled through `partition` equals Γ.
/// Raises BadPartition when the partition is malformed.
bool verify_boolean(const SimplicialComplex& gamma, const SimplicialComplex& S, int d, const VertexPartition& partition);
bool verify_boolean(const SimplicialComplex& gamma, const SimplicialComplex& S, int d);

struct FoundDecomposition {
  SimplicialComplex S;
  VertexPartition partition;
};
/// Exhaustive search over ordered choices of d Boolean vertices; S is then
/// forced to be the induced subcomplex on the rest. Limited to 10 vertices.
std::optional<FoundDecomposition> search_boolean_decomposition(const SimplicialComplex& gamma, int d);

/// Kruskal–Katona test through cascade shadows. `f` starts with f_{-1}.
bool is_f_vector(const std::vector<Count>& f);

/// Levels are colex-initial segments of subsets of {0, ..., f_0 - 1}.
/// Raises NotAnFVector.
SimplicialComplex compressed_complex(const FVector& f);

struct GlueResult {
  SimplicialComplex gamma;
  BooleanDecomposition decomposition;
  Vertex u = 0;  ///< label of the cone vertex inside S
};

/// Glues Γ2 * u onto Γ1 at the level of decompositions. Γ1 carries
/// (S1, d) and Γ2 carries (S2, d - 2); S1 and S2 are replaced by compressed
/// complexes so that S2 ⊆ S1, and S = S1 ∪ (S2 * u). The result satisfies
/// f(Γ) = f(Γ1) + t f(Γ2). Raises IncompatibleDecompositions when an input
/// decomposition fails to verify, the degrees are not d and d - 2, f(S2)
/// exceeds f(S1) somewhere, or the face-count law fails.
GlueResult glue_boolean(const SimplicialComplex& gamma1, const BooleanDecomposition& dec1,
                        const SimplicialComplex& gamma2, const BooleanDecomposition& dec2);

/// One stratum {F ∪ G} of a generalized Boolean decomposition.
struct GenBoolPiece {
  enum class Core { all, open_star, antistar, contains_edge, avoids_edge };
  enum class Replace { none, drop_a, drop_b, drop_both };

  Core core = Core::all;
  /// Bounds on |F|; max_size < 0 means unbounded.
  int min_size = 0;
  int max_size = -1;
  /// Boolean elements (1-based) that G must contain.
  std::vector<int> required;
  /// Boolean elements G must not contain all of at once.
  std::vector<int> not_all_of;
  /// Applied after forming F ∪ G: remove a, b or both and add the new vertex.
  Replace replace = Replace::none;

  std::string describe() const;
};

struct GenBoolDecomposition {
  int proof_case = 0;  ///< 1: both ends Boolean, 2: mixed, 3: both in the core
  Vertex a = 0;        ///< edge ends as labels of Γ, core end first in case 2
  Vertex b = 0;
  Vertex v = 0;        ///< the subdividing vertex, labelled Γ.n_vertices()
  std::vector<GenBoolPiece> pieces;
};

/// Pieces for edge_subdivision(Γ, e), where Γ has decomposition (S, d) under
/// `partition`. Raises IncompatibleDecompositions if that does not verify.
GenBoolDecomposition edge_subdiv_genbool(const SimplicialComplex& gamma, const BooleanDecomposition& dec,
                                         const VertexPartition& partition, VertexSet e);

/// Faces produced by one piece, as labels of the subdivided complex.
std::vector<VertexSet> genbool_faces(const GenBoolPiece& piece, const GenBoolDecomposition& g,
                                     const BooleanDecomposition& dec, const VertexPartition& partition);

/// The pieces are pairwise disjoint and their union is the face set of
/// edge_subdivision(Γ, {a, b}).
bool verify_genbool_partition(const SimplicialComplex& gamma, const GenBoolDecomposition& g,
                              const BooleanDecomposition& dec, const VertexPartition& partition);

}  // namespace flagkit
