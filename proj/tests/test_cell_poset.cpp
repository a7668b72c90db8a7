#include <doctest.h>

#include "flagkit/cell_poset.hpp"
#include "flagkit/generators.hpp"
#include "support.hpp"

using namespace flagkit;

TEST_CASE("face poset of a simplicial complex") {
  const CellPoset p = from_simplicial(gen::simplex(3));
  CHECK(p.size() == 7);
  CHECK(p.kind() == PosetKind::simplicial);
  CHECK(rank_counts(p) == std::vector<Count>{3, 3, 1});
  CHECK(fvector_with_empty(p).entries() == std::vector<Count>{1, 3, 3, 1});
  CHECK(ftilde_poly(p) == RatPoly{1, 3, 3, 1});
  CHECK(p.is_graded());
  CHECK(p.cells_have_k_vertices());
  CHECK(p.maximal().size() == 1);
}

TEST_CASE("constructor validation") {
  const std::vector<CellElement> elems{{0, 0, VertexSet{0}}, {1, 1, VertexSet{0, 1}}};
  CHECK(error_code([&] { CellPoset(PosetKind::general, elems, {{0, 5}}); }) == Errc::BadParameter);
  CHECK(error_code([&] { CellPoset(PosetKind::general, {{0, 0, VertexSet{0}}, {1, 2, VertexSet{0, 1}}}, {{0, 1}}); }) ==
        Errc::BadParameter);
  CHECK(error_code([&] { CellPoset(PosetKind::general, {{0, 0, VertexSet{0}}, {1, 1, VertexSet{1, 2}}}, {{0, 1}}); }) ==
        Errc::BadParameter);
}

TEST_CASE("square cell poset") {
  const CellPoset sq = polygon_cell_poset(4);
  CHECK(sq.kind() == PosetKind::cubical);
  CHECK(rank_counts(sq) == std::vector<Count>{4, 4, 1});
  CHECK_FALSE(sq.cells_have_k_vertices());
  CHECK(support_counts(sq).entries() == std::vector<Count>{1, 4, 4, 0, 1});
  CHECK(stilde_poly(sq) == RatPoly{1, 4, 4, 0, 1});
  CHECK(polygon_cell_poset(3).kind() != PosetKind::cubical);
}

TEST_CASE("dual of the boundary of a triangle is a triangle boundary") {
  const CellPoset d = dual(from_simplicial(gen::simplex_boundary(3)));
  CHECK(rank_counts(d) == std::vector<Count>{3, 3});
  CHECK(d.cells_have_k_vertices());
}

TEST_CASE("chains, antichains and Boolean lattices") {
  CHECK(chain_poset(4).size() == 4);
  CHECK(antichain_poset(3).maximal().size() == 3);
  const CellPoset b2 = boolean_poset(2);
  CHECK(b2.size() == 4);
  CHECK(has_boolean_intervals(b2));
  CHECK_FALSE(has_boolean_intervals(chain_poset(3)));
}

TEST_CASE("interval posets count order relations") {
  CHECK(interval_poset(chain_poset(3), false).size() == 6);
  CHECK(interval_poset(boolean_poset(2), false).size() == 9);
  const CellPoset with_empty = interval_poset(chain_poset(2), true);
  CHECK(with_empty.size() == 4);
  CHECK(rank_counts(with_empty) == std::vector<Count>{1, 2, 1});
}

TEST_CASE("order complexes") {
  CHECK(order_complex(chain_poset(3)).f_vector().entries() == std::vector<Count>{1, 3, 3, 1});
  CHECK(order_complex(boolean_poset(2)).f_vector().entries() == std::vector<Count>{1, 4, 5, 2});
  CHECK(order_complex(from_simplicial(gen::cycle(4))).f_vector().entries() == std::vector<Count>{1, 8, 8});
}

TEST_CASE("barycentric cover against the cubical formula") {
  const CellPoset edge = from_simplicial(gen::simplex(2));
  CHECK(rank_counts(barycentric_cover(edge)) == std::vector<Count>{3, 2});
  CHECK(cubical_barycentric_fvector(gen::simplex(2).f_vector()) == std::vector<Count>{3, 2});
  CHECK(rank_counts(barycentric_cover(from_simplicial(gen::simplex(3)))) == std::vector<Count>{7, 9, 3});
  CHECK(cubical_barycentric_fvector(gen::simplex(3).f_vector()) == std::vector<Count>{7, 9, 3});
  CHECK(error_code([] { barycentric_cover(chain_poset(3)); }) == Errc::NonBooleanIntervals);
}

TEST_CASE("interval order complexes follow the Tchebyshev formula") {
  for (int len = 1; len <= 4; ++len) CHECK(verify_interval_tcheb(chain_poset(len)));
  CHECK(verify_interval_tcheb(boolean_poset(2)));
  CHECK(verify_interval_tcheb(from_simplicial(gen::simplex(3))));
  CHECK(verify_interval_tcheb(from_simplicial(gen::cycle(4))));
  CHECK(verify_interval_tcheb(antichain_poset(3)));
}

TEST_CASE("poset kinds round-trip through text") {
  for (PosetKind k : {PosetKind::simplicial, PosetKind::cubical, PosetKind::general}) {
    CHECK(parse_poset_kind(to_string(k)) == k);
  }
  CHECK(error_code([] { parse_poset_kind("spherical"); }) == Errc::ParseError);
}
