#include <doctest.h>

#include "flagkit/generators.hpp"
#include "flagkit/hvector.hpp"
#include "flagkit/subdivide.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace flagkit;

namespace {

oracle::Counts brute(const SimplicialComplex& c, const std::vector<Vertex>& order) {
  std::vector<oracle::Mask> facets;
  for (VertexSet f : c.facets()) facets.push_back(f.bits());
  return oracle::tcheb_fvector_brute(c.n_vertices(), facets, order);
}

}  // namespace

TEST_CASE("edge and triangle spot values") {
  const CellPoset edge = from_simplicial(gen::simplex(2));
  CHECK(tcheb_triangulate(edge, {0, 1}).f_vector().entries() == std::vector<Count>{1, 3, 2});
  CHECK(tcheb_fvector_formula(FVector({1, 2, 1})).entries() == std::vector<Count>{1, 3, 2});
  const CellPoset tri = from_simplicial(gen::simplex(3));
  CHECK(tcheb_triangulate(tri, {0, 1, 2}).f_vector().entries() == std::vector<Count>{1, 6, 9, 4});
  CHECK(tcheb_fvector_formula(FVector({1, 3, 3, 1})).entries() == std::vector<Count>{1, 6, 9, 4});
}

TEST_CASE("direct triangulation matches subset enumeration for every order of small inputs") {
  for (const auto& c : {gen::simplex(3), gen::cycle(4), gen::path(3), gen::simplex(4)}) {
    std::vector<Vertex> order = c.vertices().members();
    std::sort(order.begin(), order.end());
    do {
      CHECK(tcheb_triangulate(from_simplicial(c), order).f_vector().entries() == brute(c, order));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("triangulations of simplicial complexes are complexes") {
  const TchebComplex t = tcheb_triangulate(from_simplicial(gen::cycle(5)), {4, 2, 0, 1, 3});
  CHECK(t.is_subset_closed());
  CHECK(t.as_simplicial().f_vector() == t.f_vector());
  CHECK(euler_characteristic(t.f_vector()) == 0);
}

TEST_CASE("bad orders are rejected") {
  const CellPoset tri = from_simplicial(gen::simplex(3));
  CHECK(error_code([&] { tcheb_triangulate(tri, {0, 1}); }) == Errc::BadOrder);
  CHECK(error_code([&] { tcheb_triangulate(tri, {0, 1, 1}); }) == Errc::BadOrder);
  CHECK(error_code([&] { tcheb_triangulate(tri, {0, 1, 2, 7}); }) == Errc::BadOrder);
}

TEST_CASE("random orders are reproducible permutations") {
  const std::vector<Vertex> base{0, 1, 2, 3, 4, 5};
  const auto a = random_order(base, 11);
  CHECK(a == random_order(base, 11));
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == base);
}

TEST_CASE("square cell uses support counts") {
  const CellPoset sq = polygon_cell_poset(4);
  const TchebCompatReport r = tcheb_F_compat(sq, 5, 0);
  CHECK(r.input.entries() == std::vector<Count>{1, 4, 4, 0, 1});
  CHECK(r.counts_match);
  CHECK(r.F_identity);
  CHECK(r.direct.size() == 6);
}

TEST_CASE("F polynomial compatibility") {
  for (const auto& c : {gen::simplex(1), gen::simplex(2), gen::simplex(3), gen::cycle(5), gen::cycle(6), gen::simplex(4)}) {
    const FVector f = c.f_vector();
    CHECK(tcheb_transform(F_poly(f)) == F_poly(tcheb_fvector_formula(f)));
    CHECK(verify_tcheb_F_compat(from_simplicial(c)));
  }
}

TEST_CASE("a pair filter drops midpoints") {
  const CellPoset tri = from_simplicial(gen::simplex(3));
  const TchebComplex none = tcheb_triangulate(tri, {0, 1, 2}, [](Vertex, Vertex) { return false; });
  CHECK(none.f_vector().entries() == std::vector<Count>{1, 3});
}
