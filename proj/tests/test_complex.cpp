#include <doctest.h>

#include "flagkit/binomial.hpp"
#include "flagkit/complex.hpp"
#include "flagkit/generators.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace flagkit;

namespace {

std::vector<oracle::Mask> masks(const SimplicialComplex& c) {
  std::vector<oracle::Mask> out;
  for (VertexSet f : c.facets()) out.push_back(f.bits());
  return out;
}

}  // namespace

TEST_CASE("vertex sets iterate in increasing order") {
  const VertexSet s{5, 1, 63, 0};
  CHECK(s.members() == std::vector<Vertex>{0, 1, 5, 63});
  CHECK(s.size() == 4);
  CHECK(s.min() == 0);
  CHECK(s.max() == 63);
  CHECK(VertexSet{1, 2}.is_subset_of(s | VertexSet{2}));
  CHECK(error_code([] { VertexSet{64}; }) == Errc::GroundSetTooLarge);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(40, 20) == 137846528820);
}

TEST_CASE("the void complex is rejected and {∅} is representable") {
  CHECK(error_code([] { SimplicialComplex(3, {}); }) == Errc::BadParameter);
  const SimplicialComplex e = SimplicialComplex::empty_face(2);
  CHECK(e.f_vector().entries() == std::vector<Count>{1});
  CHECK(e.dimension() == -1);
}

TEST_CASE("generators agree with subset enumeration") {
  for (const auto& c : {gen::cycle(5), gen::cycle(7), gen::cross_polytope_boundary(3), gen::simplex(4),
                        gen::simplex_boundary(5), gen::path(3), gen::points(4), gen::suspension(gen::cycle(4)),
                        join(gen::cycle(5), gen::cycle(5))}) {
    CHECK(c.f_vector().entries() == oracle::fvector_by_subsets(c.n_vertices(), masks(c)));
  }
  CHECK(gen::cycle(5).f_vector().entries() == std::vector<Count>{1, 5, 5});
  CHECK(gen::cross_polytope_boundary(3).f_vector().entries() == std::vector<Count>{1, 6, 12, 8});
  CHECK(error_code([] { gen::cycle(2); }) == Errc::BadParameter);
}

TEST_CASE("h-vectors match the polynomial expansion and invert") {
  for (const auto& c : {gen::cycle(6), gen::cross_polytope_boundary(4), gen::simplex(3), gen::path(2),
                        join(gen::cycle(5), gen::cycle(7))}) {
    const FVector f = c.f_vector();
    CHECK(h_vector(f) == oracle::h_by_expansion(f.entries()));
    CHECK(f_from_h(h_vector(f)) == f);
  }
  CHECK(h_vector(join(gen::cycle(5), gen::cycle(5)).f_vector()) == std::vector<Count>{1, 6, 11, 6, 1});
}

TEST_CASE("links, antistars and edge subdivision") {
  const SimplicialComplex c5 = gen::cycle(5);
  const Relabeled lk = link(c5, VertexSet{0});
  CHECK(lk.complex.f_vector().entries() == std::vector<Count>{1, 2});
  CHECK(lk.labels.size() == 2);
  CHECK(link(c5, VertexSet{0, 1}).complex.f_vector().entries() == std::vector<Count>{1});
  CHECK(antistar(c5, 0).f_vector().entries() == std::vector<Count>{1, 4, 3});
  const SimplicialComplex c6 = edge_subdivision(c5, VertexSet{0, 1});
  CHECK(c6.f_vector().entries() == std::vector<Count>{1, 6, 6});
  CHECK(c6.contains(VertexSet{0, 5}));
  CHECK_FALSE(c6.contains(VertexSet{0, 1}));
  CHECK(error_code([&] { edge_subdivision(c5, VertexSet{0, 2}); }) == Errc::FaceNotPresent);
  CHECK(error_code([&] { edge_subdivision(c5, VertexSet{0, 1, 2}); }) == Errc::NotAnEdge);
  CHECK(error_code([&] { link(c5, VertexSet{0, 2}); }) == Errc::FaceNotPresent);
}

TEST_CASE("flagness and vertex decomposability") {
  CHECK(is_flag(gen::cycle(4)));
  CHECK_FALSE(is_flag(gen::simplex_boundary(3)));
  CHECK(is_flag(gen::cross_polytope_boundary(3)));
  CHECK(is_vertex_decomposable(gen::cycle(6)));
  CHECK(is_vertex_decomposable(gen::cross_polytope_boundary(3)));
  CHECK_FALSE(is_vertex_decomposable(SimplicialComplex(4, {VertexSet{0, 1}, VertexSet{2, 3}})));
  CHECK(error_code([] { is_vertex_decomposable(SimplicialComplex(3, {VertexSet{0, 1}, VertexSet{2}})); }) == Errc::NotPure);
}

TEST_CASE("Euler characteristic of spheres") {
  CHECK(euler_characteristic(gen::cycle(9).f_vector()) == 0);
  CHECK(euler_characteristic(gen::cross_polytope_boundary(3).f_vector()) == 2);
  CHECK(euler_characteristic(gen::simplex(4).f_vector()) == 1);
}
