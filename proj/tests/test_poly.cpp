#include <doctest.h>

#include "flagkit/generators.hpp"
#include "flagkit/hvector.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace flagkit;

TEST_CASE("fractions print with a slash and parse back") {
  CHECK(to_fraction_string(Rational(3, 6)) == "1/2");
  CHECK(to_fraction_string(Rational(-4)) == "-4/1");
  CHECK(parse_fraction("7") == Rational(7));
  CHECK(parse_fraction("-2/4") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_fraction("1/0"), Error);
  CHECK_THROWS_AS(parse_fraction("x"), Error);
}

TEST_CASE("polynomial arithmetic") {
  const RatPoly p{1, 2, 1};
  CHECK(p == RatPoly{1, 1} * RatPoly{1, 1});
  CHECK(p.shift(-1) == RatPoly{0, 0, 1});
  CHECK(p.scale_argument(2) == RatPoly{1, 4, 4});
  CHECK(p.compose(RatPoly{0, 0, 1}) == RatPoly{1, 0, 2, 0, 1});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p(Rational(2)) == Rational(9));
  CHECK(RatPoly{0, 1}.pow(3) == RatPoly{0, 0, 0, 1});
}

TEST_CASE("Chebyshev polynomials agree with cos(nθ)") {
  for (int n = 0; n <= 12; ++n) {
    const RatPoly T = chebyshev_T(n);
    for (int k : {-900, -300, 0, 250, 800}) {
      const double value = static_cast<double>(T(Rational(k, 1000)));
      CHECK(value == doctest::Approx(oracle::chebyshev_numeric(n, k / 1000.0)));
    }
  }
  CHECK(chebyshev_T(3) == RatPoly{0, -3, 0, 4});
}

TEST_CASE("the Chebyshev transform and its inverse") {
  const RatPoly p{5, -1, 0, 3, 2};
  CHECK(inverse_tcheb_transform(tcheb_transform(p)) == p);
  CHECK(tcheb_transform(RatPoly{0, 0, 1}) == RatPoly{-1, 0, 2});
  CHECK(tcheb_transform(RatPoly{}).is_zero());
}

TEST_CASE("symmetric h-vectors reject odd degree and asymmetry") {
  CHECK(error_code([] { SymmetricHVector({1, 2}); }) == Errc::OddDegree);
  CHECK(error_code([] { SymmetricHVector({1, 2, 3}); }) == Errc::NotSymmetric);
  CHECK(error_code([] { SymmetricHVector({1, 3, 3, 1}); }) == Errc::OddDegree);
  CHECK(SymmetricHVector({1}).d() == 0);
}

TEST_CASE("gamma vectors match peeling, with spot values") {
  for (int n = 4; n <= 12; ++n) {
    const SymmetricHVector h = symmetric_h(gen::cycle(n));
    CHECK(gamma_vector(h) == oracle::gamma_by_peeling(h.entries()));
    CHECK(gamma_vector(h) == std::vector<Count>{1, n - 4});
  }
  const SymmetricHVector c55 = symmetric_h(join(gen::cycle(5), gen::cycle(5)));
  CHECK(gamma_vector(c55) == std::vector<Count>{1, 2, 1});
  CHECK(g_poly(c55) == RatPoly{9, 6, 1});
  CHECK(g_poly(symmetric_h(gen::cycle(5))) == RatPoly{3, 1});
  CHECK(gamma_vector(symmetric_h(gen::cross_polytope_boundary(4))) == std::vector<Count>{1, 0, 0});
}

TEST_CASE("g agrees with its trigonometric form") {
  for (const auto& c : {gen::cycle(7), join(gen::cycle(5), gen::cycle(7)), gen::cross_polytope_boundary(6)}) {
    const SymmetricHVector h = symmetric_h(c);
    const RatPoly g = g_poly(h);
    for (double theta : {0.1, 0.7, 1.3, 2.9}) {
      const double u = 2 * std::cos(theta);
      double value = 0;
      for (int k = g.degree(); k >= 0; --k) value = value * u + static_cast<double>(g.coeff(k));
      CHECK(value == doctest::Approx(oracle::g_at_two_cos(h.entries(), theta)));
    }
  }
}

TEST_CASE("inverted Chebyshev identities and T(P) = g(2u)") {
  for (const auto& c : {gen::cycle(4), gen::cycle(11), join(gen::cycle(5), gen::cycle(5)), gen::cross_polytope_boundary(2),
                        gen::suspension(gen::suspension(gen::cycle(6)))}) {
    const SymmetricHVector h = symmetric_h(c);
    CHECK(verify_gamchebinv(h));
    CHECK(verify_tcheb_p(h));
  }
  CHECK(p_poly(symmetric_h(gen::cycle(5))) == RatPoly{3, 2});
}

TEST_CASE("F polynomial substitutes (x - 1)/2") {
  const FVector f({1, 2, 1});
  CHECK(F_poly(f) == RatPoly{1, 1} * RatPoly{1, 1} * Rational(1, 4));
  CHECK(f_polynomial(f) == RatPoly{1, 2, 1});
}

TEST_CASE("gamma recursion along edge subdivisions") {
  for (int n = 5; n <= 9; ++n) {
    CHECK(gamma_recursion_check(gen::cycle(n), VertexSet{0, 1}));
    CHECK(link_h_inequality(gen::cycle(n), VertexSet{0, 1}));
  }
  const SimplicialComplex c55 = join(gen::cycle(5), gen::cycle(5));
  CHECK(gamma_recursion_check(c55, VertexSet{0, 5}));
  CHECK(gamma_recursion_check(c55, VertexSet{0, 1}));
}
