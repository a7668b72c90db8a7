#include <doctest.h>

#include "flagkit/danzer.hpp"
#include "flagkit/generators.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace flagkit;

namespace {

std::vector<Count> brute(const CellPoset& p, int n) {
  std::vector<oracle::Mask> supports;
  for (const auto& e : p.elements()) supports.push_back(e.support.bits());
  return oracle::mirror_counts(n, supports);
}

}  // namespace

TEST_CASE("signed faces") {
  const SignedFace f = SignedFace::from_coords({0, 1, -1});
  CHECK(f.coords() == std::vector<int>{0, 1, -1});
  CHECK(f.cube_dim() == 1);
  CHECK(f.coord(2) == -1);
  CHECK(error_code([] { SignedFace::from_coords({0, 2}); }) == Errc::ParseError);
  CHECK(signed_leq(SignedFace::from_coords({1, 1}), SignedFace::from_coords({0, 1})));
  CHECK_FALSE(signed_leq(SignedFace::from_coords({-1, 1}), SignedFace::from_coords({1, 0})));
}

TEST_CASE("intersections of signed faces") {
  const auto a = SignedFace::from_coords({0, 0, 1});
  const auto b = SignedFace::from_coords({0, 1, 0});
  const auto meet = faces_intersect({a, b});
  REQUIRE(meet.has_value());
  CHECK(meet->coords() == std::vector<int>{0, 1, 1});
  CHECK_FALSE(faces_intersect({SignedFace::from_coords({1, 0}), SignedFace::from_coords({-1, 0})}).has_value());
  CHECK(error_code([&] { faces_intersect({a, SignedFace::from_coords({0})}); }) == Errc::MixedComplexes);
}

TEST_CASE("mirror face counts against enumeration of {0,±1}^n") {
  for (const auto& c : {gen::simplex(1), gen::simplex(2), gen::cycle(4), gen::cycle(5), gen::cross_polytope_boundary(3)}) {
    const CellPoset p = from_simplicial(c);
    CHECK(mirror(p).ftilde() == brute(p, c.n_vertices()));
  }
  const CellPoset sq = polygon_cell_poset(4);
  CHECK(mirror(sq).ftilde() == brute(sq, 4));
}

TEST_CASE("M(C4) is a torus") {
  const MirrorComplex m = mirror(from_simplicial(gen::cycle(4)));
  CHECK(m.ftilde() == std::vector<Count>{16, 32, 16});
}

TEST_CASE("mirror identities") {
  for (const auto& c : {gen::simplex(1), gen::simplex(2), gen::cycle(4), gen::cycle(5), gen::cross_polytope_boundary(3)}) {
    const CellPoset p = from_simplicial(c);
    CHECK(verify_posetfdanzer(p));
    CHECK(verify_Fpolytodanz(p));
    CHECK(posetfdanzer_sides(p).k_vertex_branch);
  }
  const CellPoset sq = polygon_cell_poset(4);
  const MirrorIdentity id = posetfdanzer_sides(sq);
  CHECK_FALSE(id.k_vertex_branch);
  CHECK(id.holds());
  CHECK(id.rhs == RatPoly{16, 32, 16, 0, 1});
  CHECK(error_code([&] { Fpolytodanz_sides(sq); }) == Errc::CellVertexMismatch);
}

TEST_CASE("vertex stars match the base poset") {
  for (const auto& p : {from_simplicial(gen::cycle(5)), polygon_cell_poset(4), from_simplicial(gen::simplex(3))}) {
    const MirrorComplex m(p);
    for (int v : m.vertices()) CHECK(m.star_matches_base(v));
  }
}

TEST_CASE("mirror ground-set guards") {
  CHECK(error_code([] { MirrorComplex(from_simplicial(gen::cycle(21))); }) == Errc::GroundSetTooLarge);
  const CellPoset gap = from_simplicial(SimplicialComplex(3, {VertexSet{0, 2}}));
  CHECK(error_code([&] { MirrorComplex{gap}; }) == Errc::BadParameter);
}

TEST_CASE("mirror contains exactly its faces") {
  const MirrorComplex m = mirror(from_simplicial(gen::simplex(2)));
  CHECK(m.contains(SignedFace::from_coords({0, 0})));
  CHECK(m.contains(SignedFace::from_coords({-1, 1})));
  CHECK(m.f_poly() == RatPoly{1, 4, 4, 1});
}
