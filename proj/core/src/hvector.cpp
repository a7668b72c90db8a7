#include "flagkit/hvector.hpp"

#include <algorithm>

#include "flagkit/binomial.hpp"

namespace flagkit {

SymmetricHVector::SymmetricHVector(std::vector<Count> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.size() % 2 == 0) {
    throw Error(Errc::OddDegree, "gamma vectors need an even degree d");
  }
  const int d = this->d();
  for (int k = 0; k <= d / 2; ++k) {
    if (at(k) != at(d - k)) throw Error(Errc::NotSymmetric, "h_k != h_{d-k} at k = " + std::to_string(k));
  }
}

RatPoly poly_from_counts(const std::vector<Count>& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (Count x : v) c.emplace_back(x);
  return RatPoly(std::move(c));
}

RatPoly f_polynomial(const FVector& f) { return poly_from_counts(f.entries()); }

RatPoly F_poly(const FVector& f) {
  const RatPoly half_shift(std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  return f_polynomial(f).compose(half_shift);
}

std::vector<Count> gamma_vector(const SymmetricHVector& h) {
  const int d = h.d();
  const int m = h.half();
  std::vector<Count> gamma(static_cast<std::size_t>(m + 1), 0);
  // Top-down: the coefficient of t^{d-k} involves only gamma_0..gamma_k.
  for (int k = 0; k <= m; ++k) {
    Count rest = h.at(d - k);
    for (int i = 0; i < k; ++i) rest -= gamma[static_cast<std::size_t>(i)] * binomial(d - 2 * i, k - i);
    gamma[static_cast<std::size_t>(k)] = rest;
  }
  return gamma;
}

RatPoly gamma_poly(const SymmetricHVector& h) { return poly_from_counts(gamma_vector(h)); }

RatPoly g_poly(const SymmetricHVector& h) {
  const int m = h.half();
  const RatPoly half_u = RatPoly::monomial(Rational(1, 2), 1);
  RatPoly g = RatPoly::constant(h.at(m));
  for (int j = 1; j <= m; ++j) g += chebyshev_T(j).compose(half_u) * Rational(2 * h.at(m - j));
  return g;
}

RatPoly p_poly(const SymmetricHVector& h) {
  const int m = h.half();
  std::vector<Rational> c(static_cast<std::size_t>(m + 1));
  c[0] = h.at(m);
  for (int j = 1; j <= m; ++j) c[static_cast<std::size_t>(j)] = 2 * h.at(m - j);
  return RatPoly(std::move(c));
}

GammaChebSides gamcheb_sides(const SymmetricHVector& h) {
  const int m = h.half();
  GammaChebSides s;
  s.gamma = gamma_poly(h);
  s.g = g_poly(h);
  // u^m g((1 - 2u)/u) = sum_k g_k (1 - 2u)^k u^{m-k}; deg g <= m.
  const RatPoly one_minus_2u{1, -2};
  for (int k = 0; k <= s.g.degree(); ++k) {
    s.inverted += one_minus_2u.pow(k) * RatPoly::monomial(s.g.coeff(k), m - k);
  }
  const RatPoly u_plus_2{2, 1};
  for (int i = 0; i <= s.gamma.degree(); ++i) {
    s.shifted_gamma += u_plus_2.pow(m - i) * s.gamma.coeff(i);
  }
  return s;
}

bool verify_gamchebinv(const SymmetricHVector& h) {
  const GammaChebSides s = gamcheb_sides(h);
  return s.gamma == s.inverted && s.shifted_gamma == s.g;
}

bool verify_tcheb_p(const SymmetricHVector& h) {
  return tcheb_transform(p_poly(h)) == g_poly(h).scale_argument(2);
}

SymmetricHVector symmetric_h(const SimplicialComplex& c) { return SymmetricHVector(h_vector(c.f_vector())); }

bool gamma_recursion_check(const SimplicialComplex& c, VertexSet e) {
  const RatPoly before = gamma_poly(symmetric_h(c));
  const RatPoly after = gamma_poly(symmetric_h(edge_subdivision(c, e)));
  const RatPoly lk = gamma_poly(symmetric_h(link(c, e).complex));
  return after == before + RatPoly::x() * lk;
}

bool link_h_inequality(const SimplicialComplex& c, VertexSet e) {
  const std::vector<Count> hc = h_vector(c.f_vector());
  const std::vector<Count> hl = h_vector(link(c, e).complex.f_vector());
  const std::size_t n = std::max(hc.size(), hl.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Count a = i < hl.size() ? hl[i] : 0;
    const Count b = i < hc.size() ? hc[i] : 0;
    if (a > b) return false;
  }
  return true;
}

}  // namespace flagkit
