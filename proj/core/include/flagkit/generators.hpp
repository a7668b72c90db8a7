#pragma once

#include "flagkit/complex.hpp"

namespace flagkit::gen {

/// The n-cycle C_n, n >= 3.
SimplicialComplex cycle(int n);
/// Boundary of the n-dimensional cross-polytope. Vertex 2i is +e_i, 2i+1 is -e_i.
SimplicialComplex cross_polytope_boundary(int n);
/// The full simplex on n vertices (dimension n-1).
SimplicialComplex simplex(int n);
/// Boundary of the simplex on n vertices, n >= 2.
SimplicialComplex simplex_boundary(int n);
/// Join with two disjoint points.
SimplicialComplex suspension(const SimplicialComplex& c);
/// n isolated points.
SimplicialComplex points(int n);
/// Path with n edges.
SimplicialComplex path(int n_edges);

}  // namespace flagkit::gen
