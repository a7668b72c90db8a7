#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flagkit/cell_poset.hpp"

namespace flagkit {

/// A vector in {0, +1, -1}^n. Coordinate i is 0 when bit i of `zeros` is set,
/// -1 when bit i of `negative` is set, and +1 otherwise.
struct SignedFace {
  int n = 0;
  std::uint64_t zeros = 0;
  std::uint64_t negative = 0;

  static SignedFace from_coords(const std::vector<int>& coords);
  std::vector<int> coords() const;
  int coord(int i) const;
  /// Number of zero coordinates, the dimension of the cube face it names.
  int cube_dim() const;

  friend bool operator==(const SignedFace&, const SignedFace&) = default;
  friend auto operator<=>(const SignedFace&, const SignedFace&) = default;
};

/// a <= b coordinatewise under 0 > +1, 0 > -1.
bool signed_leq(const SignedFace& a, const SignedFace& b);

/// The common refinement of the given faces, or nothing when two nonzero
/// coordinates disagree. Its zeros are the common zeros. Raises
/// MixedComplexes when the lengths differ.
std::optional<SignedFace> faces_intersect(const std::vector<SignedFace>& faces);

class MirrorComplex {
 public:
  /// All sign completions of the faces of `p`, the empty face included.
  /// The ground set must be {0, ..., n-1} with n <= 20.
  explicit MirrorComplex(const CellPoset& p);

  int n() const { return n_; }
  const CellPoset& base() const { return base_; }
  const std::vector<SignedFace>& faces() const { return faces_; }
  /// Base element index behind face i, -1 for the empty face.
  int base_of(int i) const { return base_of_[static_cast<std::size_t>(i)]; }
  bool contains(const SignedFace& f) const;

  /// Face counts by cube dimension; the empty face is not a face here.
  std::vector<Count> ftilde() const;
  RatPoly ftilde_poly() const;
  /// 1 + t * ftilde, the f-polynomial with the empty face adjoined.
  RatPoly f_poly() const;

  std::vector<int> vertices() const;
  /// Indices of faces above the vertex at index `v`.
  std::vector<int> star(int v) const;
  /// The star of `v`, read through zero patterns, is order-isomorphic to
  /// the base poset with a bottom adjoined.
  bool star_matches_base(int v) const;

 private:
  int n_ = 0;
  CellPoset base_;
  std::vector<SignedFace> faces_;
  std::vector<int> base_of_;
};

MirrorComplex mirror(const CellPoset& p);

/// Both sides of the mirror face-count identity.
struct MirrorIdentity {
  bool k_vertex_branch = false;  ///< every (k-1)-cell has k vertices
  RatPoly lhs;                   ///< ftilde of the mirror, counted directly
  RatPoly rhs;                   ///< 2^n ftilde(T, t/2) or 2^n S~(T, t/2)
  bool holds() const { return lhs == rhs; }
};
MirrorIdentity posetfdanzer_sides(const CellPoset& p);
bool verify_posetfdanzer(const CellPoset& p);

struct FpolyMirrorIdentity {
  RatPoly ftilde;     ///< ftilde(MA, x)
  RatPoly scaled_F;   ///< 2^n F_A(x + 1)
  RatPoly f_poly;     ///< f(MA, x)
  RatPoly coned;      ///< 2^n x F_A(x + 1) + 1
  bool holds() const { return ftilde == scaled_F && f_poly == coned; }
};
/// Raises CellVertexMismatch unless every (k-1)-cell has k vertices.
FpolyMirrorIdentity Fpolytodanz_sides(const CellPoset& p);
bool verify_Fpolytodanz(const CellPoset& p);

}  // namespace flagkit
