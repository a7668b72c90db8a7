#include <doctest.h>

#include <numeric>

#include "flagkit/booldecomp.hpp"
#include "flagkit/generators.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace flagkit;

namespace {

std::set<oracle::Mask> face_masks(const SimplicialComplex& c) {
  std::set<oracle::Mask> out;
  for (VertexSet f : c.faces()) out.insert(f.bits());
  return out;
}

}  // namespace

TEST_CASE("Boolean construction matches h of C5 and C5*C5") {
  CHECK(build_boolean(gen::simplex(1), 2).f_vector().entries() == std::vector<Count>{1, 3, 1});
  CHECK(build_boolean(gen::simplex(2), 4).f_vector().entries() == std::vector<Count>{1, 6, 11, 6, 1});
  CHECK(build_boolean(SimplicialComplex::empty_face(0), 0).f_vector().entries() == std::vector<Count>{1});
}

TEST_CASE("Boolean construction against the subset oracle") {
  for (const auto& [S, d] : std::vector<std::pair<SimplicialComplex, int>>{
           {gen::simplex(1), 2}, {gen::simplex(2), 4}, {gen::points(3), 2}, {gen::path(2), 4}, {gen::simplex(2), 6}}) {
    const int m = S.n_vertices();
    CHECK(face_masks(build_boolean(S, d)) == oracle::boolean_faces(m, face_masks(S), d));
  }
}

TEST_CASE("Boolean construction guards") {
  CHECK(error_code([] { build_boolean(gen::simplex(1), 3); }) == Errc::BadParameter);
  CHECK(error_code([] { build_boolean(gen::simplex(1), -2); }) == Errc::BadParameter);
  CHECK(error_code([] { build_boolean(gen::simplex(2), 2); }) == Errc::DimensionTooLarge);
}

TEST_CASE("verification and search") {
  const SimplicialComplex g = build_boolean(gen::simplex(2), 4);
  CHECK(verify_boolean(g, gen::simplex(2), 4));
  CHECK_FALSE(verify_boolean(g, gen::points(2), 4));
  CHECK(error_code([&] { verify_boolean(g, gen::simplex(2), 4, VertexPartition{{0}, {1, 2, 3, 4}}); }) ==
        Errc::BadPartition);
  const auto found = search_boolean_decomposition(SimplicialComplex(3, {VertexSet{0, 1}, VertexSet{2}}), 2);
  REQUIRE(found.has_value());
  CHECK(found->S.f_vector().entries() == std::vector<Count>{1, 1});
  CHECK_FALSE(search_boolean_decomposition(gen::cycle(5), 2).has_value());
  CHECK_FALSE(search_boolean_decomposition(gen::cycle(4), 2).has_value());
  CHECK_FALSE(search_boolean_decomposition(gen::path(2), 2).has_value());
}

TEST_CASE("Kruskal–Katona test") {
  CHECK(is_f_vector({1, 3, 3, 1}));
  CHECK(is_f_vector({1, 4, 6}));
  CHECK_FALSE(is_f_vector({1, 4, 7}));
  CHECK_FALSE(is_f_vector({1, 3, 3, 2}));
  CHECK_FALSE(is_f_vector({2, 1}));
  CHECK(is_f_vector({1}));
}

TEST_CASE("compressed complexes") {
  const SimplicialComplex c = compressed_complex(FVector({1, 5, 8, 3}));
  CHECK(c.f_vector().entries() == std::vector<Count>{1, 5, 8, 3});
  CHECK(compressed_complex(c.f_vector()) == c);
  CHECK(c.contains(VertexSet{0, 1, 2}));
  CHECK(error_code([] { compressed_complex(FVector({1, 2, 3})); }) == Errc::NotAnFVector);
}

TEST_CASE("gluing") {
  const BooleanDecomposition d1{gen::simplex(2), 4};
  const BooleanDecomposition d2{gen::simplex(1), 2};
  const SimplicialComplex g1 = build_boolean(d1.S, 4);
  const SimplicialComplex g2 = build_boolean(d2.S, 2);
  const GlueResult r = glue_boolean(g1, d1, g2, d2);
  CHECK(r.gamma.f_vector().entries() == std::vector<Count>{1, 7, 14, 7, 1});
  CHECK(verify_boolean(r.gamma, r.decomposition.S, 4));
  CHECK(r.decomposition.S.contains(VertexSet{0, r.u}));
  CHECK(error_code([&] { glue_boolean(g1, d1, g1, d1); }) == Errc::IncompatibleDecompositions);
}

TEST_CASE("edge subdivision pieces cover all three cases") {
  const SimplicialComplex S = gen::simplex(2);
  const SimplicialComplex g = build_boolean(S, 4);
  const BooleanDecomposition dec{S, 4};
  const VertexPartition part = canonical_partition(S, 4);
  CHECK(part.core == std::vector<Vertex>{0, 1});
  CHECK(part.boolean == std::vector<Vertex>{2, 3, 4, 5});
  std::set<int> cases;
  for (VertexSet e : g.faces()) {
    if (e.size() != 2) continue;
    const GenBoolDecomposition gb = edge_subdiv_genbool(g, dec, part, e);
    cases.insert(gb.proof_case);
    CHECK(verify_genbool_partition(g, gb, dec, part));
    std::size_t total = 0;
    for (const auto& piece : gb.pieces) total += genbool_faces(piece, gb, dec, part).size();
    const FVector sub = edge_subdivision(g, e).f_vector();
    CHECK(static_cast<Count>(total) == std::accumulate(sub.entries().begin(), sub.entries().end(), Count{0}));
  }
  CHECK(cases == std::set<int>{1, 2, 3});
}
