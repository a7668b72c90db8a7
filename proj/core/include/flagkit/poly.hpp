#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" with den > 0, always written with the slash.
std::string to_fraction_string(const Rational& q);
/// Accepts "num/den" or a bare integer; raises ParseError otherwise.
Rational parse_fraction(const std::string& text);

/// Dense univariate polynomial over exact rationals; coeffs()[i] multiplies x^i.
/// The zero polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<long long> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);
  /// The polynomial x.
  static RatPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero outside the stored range.
  Rational coeff(int i) const;

  Rational operator()(const Rational& at) const;
  /// p(inner(x)).
  RatPoly compose(const RatPoly& inner) const;
  /// p(c x).
  RatPoly scale_argument(const Rational& c) const;
  /// p(x + a).
  RatPoly shift(const Rational& a) const;
  RatPoly pow(int e) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  RatPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in the variable `var`, e.g. "2x^2 - 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x, T_n = 2x T_{n-1} - T_{n-2}.
RatPoly chebyshev_T(int n);

/// The linear map x^n -> T_n(x).
RatPoly tcheb_transform(const RatPoly& p);

/// Inverse of tcheb_transform (T_n(x) -> x^n), computed by peeling leading terms.
RatPoly inverse_tcheb_transform(const RatPoly& p);

}  // namespace flagkit
