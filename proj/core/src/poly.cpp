#include "flagkit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "flagkit/error.hpp"

namespace flagkit {

std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  const auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos) {
      throw Error(Errc::ParseError, "bad rational '" + text + "'");
    }
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RatPoly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

RatPoly RatPoly::scale_argument(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  Rational power = 1;
  for (auto& a : out) {
    a *= power;
    power *= c;
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::shift(const Rational& a) const { return compose(RatPoly(std::vector<Rational>{a, 1})); }

RatPoly RatPoly::pow(int e) const {
  RatPoly acc = constant(1);
  for (int i = 0; i < e; ++i) acc *= *this;
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == 1;
    if (!unit || i == 0) {
      if (denominator(c) == 1) {
        out << numerator(c);
      } else {
        out << "(" << numerator(c) << "/" << denominator(c) << ")";
      }
    }
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

RatPoly chebyshev_T(int n) {
  if (n < 0) throw Error(Errc::BadParameter, "Chebyshev index must be nonnegative");
  RatPoly prev = RatPoly::constant(1);
  if (n == 0) return prev;
  RatPoly cur = RatPoly::x();
  const RatPoly two_x = RatPoly::monomial(2, 1);
  for (int k = 2; k <= n; ++k) {
    RatPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly tcheb_transform(const RatPoly& p) {
  RatPoly out;
  RatPoly prev = RatPoly::constant(1);
  RatPoly cur = RatPoly::x();
  const RatPoly two_x = RatPoly::monomial(2, 1);
  for (int k = 0; k <= p.degree(); ++k) {
    const RatPoly& tk = (k == 0) ? prev : cur;
    out += tk * p.coeff(k);
    if (k >= 1) {
      RatPoly next = two_x * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return out;
}

RatPoly inverse_tcheb_transform(const RatPoly& p) {
  // T_n has leading coefficient 2^{n-1} for n >= 1.
  RatPoly rest = p;
  RatPoly out;
  while (!rest.is_zero()) {
    const int n = rest.degree();
    const RatPoly tn = chebyshev_T(n);
    const Rational c = rest.coeff(n) / tn.coeff(n);
    out += RatPoly::monomial(c, n);
    rest -= tn * c;
  }
  return out;
}

}  // namespace flagkit
