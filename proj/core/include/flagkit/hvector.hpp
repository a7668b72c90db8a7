#pragma once

#include <vector>

#include "flagkit/complex.hpp"
#include "flagkit/poly.hpp"

namespace flagkit {

/// A palindromic h-vector h_0..h_d with d even.
///
/// d = 0 (the single entry h_0) is accepted; it is the h-vector of {∅}, which
/// shows up as the link of a facet-codimension-one face in 1-spheres.
class SymmetricHVector {
 public:
  /// Raises OddDegree when the length is even, NotSymmetric when h_k != h_{d-k}.
  explicit SymmetricHVector(std::vector<Count> entries);

  int d() const { return static_cast<int>(entries_.size()) - 1; }
  int half() const { return d() / 2; }
  Count at(int k) const { return entries_[static_cast<std::size_t>(k)]; }
  const std::vector<Count>& entries() const { return entries_; }

 private:
  std::vector<Count> entries_;
};

/// sum_i f_{i-1} t^i
RatPoly f_polynomial(const FVector& f);
/// F(x) = sum_j f_{j-1} ((x - 1)/2)^j
RatPoly F_poly(const FVector& f);
/// Coefficients taken verbatim: sum_i v_i t^i.
RatPoly poly_from_counts(const std::vector<Count>& v);

/// The unique gamma_0..gamma_{d/2} with h(t) = sum_i gamma_i t^i (1+t)^{d-2i}.
std::vector<Count> gamma_vector(const SymmetricHVector& h);
RatPoly gamma_poly(const SymmetricHVector& h);

/// g(u) = h_{d/2} + 2 sum_{j=1}^{d/2} h_{d/2-j} T_j(u/2)
RatPoly g_poly(const SymmetricHVector& h);

/// P(u) = h_{d/2} + 2 sum_{j=1}^{d/2} h_{d/2-j} u^j, so that T(P)(u) = g(2u).
RatPoly p_poly(const SymmetricHVector& h);

/// Both sides of the inverted Chebyshev identities, for reporting.
struct GammaChebSides {
  RatPoly gamma;             ///< gamma(u) from the basis expansion
  RatPoly inverted;          ///< u^{d/2} g(1/u - 2), denominators cleared
  RatPoly g;                 ///< g(u)
  RatPoly shifted_gamma;     ///< (u + 2)^{d/2} gamma(1/(u + 2))
};
GammaChebSides gamcheb_sides(const SymmetricHVector& h);

/// gamma(u) == u^{d/2} g(1/u - 2) and (u + 2)^{d/2} gamma(1/(u+2)) == g(u).
bool verify_gamchebinv(const SymmetricHVector& h);

/// T(P(u)) == g(2u).
bool verify_tcheb_p(const SymmetricHVector& h);

/// Convenience: the h-vector of a complex as a SymmetricHVector (may throw).
SymmetricHVector symmetric_h(const SimplicialComplex& c);

/// gamma of the edge subdivision equals gamma(c) + t gamma(lk(e)).
bool gamma_recursion_check(const SimplicialComplex& c, VertexSet e);

/// h_i(lk(e)) <= h_i(c) for all i, shorter vector zero-padded.
bool link_h_inequality(const SimplicialComplex& c, VertexSet e);

}  // namespace flagkit
