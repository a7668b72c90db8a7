#include "flagkit/generators.hpp"

namespace flagkit::gen {

SimplicialComplex cycle(int n) {
  if (n < 3) throw Error(Errc::BadParameter, "cycle needs n >= 3");
  std::vector<VertexSet> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimplicialComplex(n, edges);
}

SimplicialComplex cross_polytope_boundary(int n) {
  if (n < 1) throw Error(Errc::BadParameter, "cross-polytope needs n >= 1");
  if (2 * n > VertexSet::kMaxVertices) throw Error(Errc::GroundSetTooLarge, "cross-polytope too large");
  std::vector<VertexSet> facets;
  for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
    VertexSet f;
    for (int i = 0; i < n; ++i) f.insert(2 * i + static_cast<int>((signs >> i) & 1U));
    facets.push_back(f);
  }
  return SimplicialComplex(2 * n, facets);
}

SimplicialComplex simplex(int n) {
  if (n < 1) throw Error(Errc::BadParameter, "simplex needs n >= 1");
  return SimplicialComplex(n, {VertexSet::range(n)});
}

SimplicialComplex simplex_boundary(int n) {
  if (n < 2) throw Error(Errc::BadParameter, "simplex boundary needs n >= 2");
  std::vector<VertexSet> facets;
  for (int i = 0; i < n; ++i) facets.push_back(VertexSet::range(n).without(i));
  return SimplicialComplex(n, facets);
}

SimplicialComplex points(int n) {
  if (n < 1) throw Error(Errc::BadParameter, "points needs n >= 1");
  std::vector<VertexSet> facets;
  for (int i = 0; i < n; ++i) facets.push_back(VertexSet::singleton(i));
  return SimplicialComplex(n, facets);
}

SimplicialComplex path(int n_edges) {
  if (n_edges < 1) throw Error(Errc::BadParameter, "path needs at least one edge");
  std::vector<VertexSet> edges;
  for (int i = 0; i < n_edges; ++i) edges.push_back({i, i + 1});
  return SimplicialComplex(n_edges + 1, edges);
}

SimplicialComplex suspension(const SimplicialComplex& c) { return join(c, points(2)); }

}  // namespace flagkit::gen
