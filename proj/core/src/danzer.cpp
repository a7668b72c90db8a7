#include "flagkit/danzer.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "flagkit/hvector.hpp"

namespace flagkit {

SignedFace SignedFace::from_coords(const std::vector<int>& coords) {
  if (coords.size() > 64) throw Error(Errc::GroundSetTooLarge, "signed faces have at most 64 coordinates");
  SignedFace f;
  f.n = static_cast<int>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    switch (coords[i]) {
      case 0: f.zeros |= std::uint64_t{1} << i; break;
      case -1: f.negative |= std::uint64_t{1} << i; break;
      case 1: break;
      default: throw Error(Errc::ParseError, "signed face coordinates are -1, 0 or 1");
    }
  }
  return f;
}

int SignedFace::coord(int i) const {
  if ((zeros >> i) & 1U) return 0;
  return ((negative >> i) & 1U) ? -1 : 1;
}

std::vector<int> SignedFace::coords() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) out.push_back(coord(i));
  return out;
}

int SignedFace::cube_dim() const { return std::popcount(zeros); }

bool signed_leq(const SignedFace& a, const SignedFace& b) {
  if (a.n != b.n) return false;
  // Wherever b is nonzero, a must carry the same sign.
  const std::uint64_t live = ~b.zeros & (a.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a.n) - 1);
  return (a.zeros & live) == 0 && ((a.negative ^ b.negative) & live) == 0;
}

std::optional<SignedFace> faces_intersect(const std::vector<SignedFace>& faces) {
  if (faces.empty()) return std::nullopt;
  SignedFace acc = faces.front();
  for (const auto& f : faces) {
    if (f.n != acc.n) throw Error(Errc::MixedComplexes, "faces come from mirrors of different sizes");
    const std::uint64_t both = ~acc.zeros & ~f.zeros;
    if ((acc.negative ^ f.negative) & both) return std::nullopt;
    acc.negative = (acc.negative & ~acc.zeros) | (f.negative & ~f.zeros);
    acc.zeros &= f.zeros;
  }
  acc.negative &= ~acc.zeros;
  return acc;
}

MirrorComplex::MirrorComplex(const CellPoset& p) : base_(p) {
  const VertexSet ground = p.ground();
  n_ = ground.empty() ? 0 : ground.max() + 1;
  if (n_ > 20) throw Error(Errc::GroundSetTooLarge, "mirror complexes are limited to 20 vertices");
  if (ground != VertexSet::range(n_)) throw Error(Errc::BadParameter, "mirror needs the ground set {0, ..., n-1}");
  std::set<std::uint64_t> seen{0};
  for (const auto& e : p.elements()) {
    if (!seen.insert(e.support.bits()).second) {
      throw Error(Errc::BadParameter, "mirror needs nonempty, pairwise distinct cell supports");
    }
  }
  const std::uint64_t all = VertexSet::range(n_).bits();
  auto add_completions = [&](std::uint64_t zero_bits, int base) {
    const std::uint64_t free = all & ~zero_bits;
    for_each_subset(VertexSet::from_bits(free), [&](VertexSet neg) {
      faces_.push_back({n_, zero_bits, neg.bits()});
      base_of_.push_back(base);
    });
  };
  add_completions(0, -1);
  for (int i = 0; i < p.size(); ++i) add_completions(p.element(i).support.bits(), i);
}

bool MirrorComplex::contains(const SignedFace& f) const {
  return std::find(faces_.begin(), faces_.end(), f) != faces_.end();
}

std::vector<Count> MirrorComplex::ftilde() const {
  std::vector<Count> out;
  for (const auto& f : faces_) {
    const auto k = static_cast<std::size_t>(f.cube_dim());
    if (out.size() <= k) out.resize(k + 1, 0);
    ++out[k];
  }
  return out;
}

RatPoly MirrorComplex::ftilde_poly() const { return poly_from_counts(ftilde()); }

RatPoly MirrorComplex::f_poly() const { return RatPoly::x() * ftilde_poly() + RatPoly::constant(1); }

std::vector<int> MirrorComplex::vertices() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(faces_.size()); ++i) {
    if (faces_[static_cast<std::size_t>(i)].zeros == 0) out.push_back(i);
  }
  return out;
}

std::vector<int> MirrorComplex::star(int v) const {
  const SignedFace& g = faces_.at(static_cast<std::size_t>(v));
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(faces_.size()); ++i) {
    if (signed_leq(g, faces_[static_cast<std::size_t>(i)])) out.push_back(i);
  }
  return out;
}

bool MirrorComplex::star_matches_base(int v) const {
  const std::vector<int> st = star(v);
  if (st.size() != static_cast<std::size_t>(base_.size()) + 1) return false;
  std::set<int> hit;
  for (int i : st) {
    if (!hit.insert(base_of(i)).second) return false;
  }
  auto below = [&](int a, int b) {
    if (a == -1) return true;
    if (b == -1) return false;
    return base_.leq(a, b);
  };
  for (int i : st) {
    for (int j : st) {
      const bool mirror_le = signed_leq(faces_[static_cast<std::size_t>(i)], faces_[static_cast<std::size_t>(j)]);
      if (mirror_le != below(base_of(i), base_of(j))) return false;
    }
  }
  return true;
}

MirrorComplex mirror(const CellPoset& p) { return MirrorComplex(p); }

MirrorIdentity posetfdanzer_sides(const CellPoset& p) {
  const MirrorComplex m(p);
  MirrorIdentity id;
  id.k_vertex_branch = p.cells_have_k_vertices();
  id.lhs = m.ftilde_poly();
  const RatPoly base = id.k_vertex_branch ? f_polynomial(fvector_with_empty(p)) : stilde_poly(p);
  id.rhs = base.scale_argument(Rational(1, 2)) * Rational(BigInt(1) << m.n());
  return id;
}

bool verify_posetfdanzer(const CellPoset& p) { return posetfdanzer_sides(p).holds(); }

FpolyMirrorIdentity Fpolytodanz_sides(const CellPoset& p) {
  if (!p.cells_have_k_vertices()) {
    throw Error(Errc::CellVertexMismatch, "every (k-1)-dimensional cell must have k vertices");
  }
  const MirrorComplex m(p);
  const Rational scale(BigInt(1) << m.n());
  const RatPoly F_shift = F_poly(fvector_with_empty(p)).shift(1);
  FpolyMirrorIdentity id;
  id.ftilde = m.ftilde_poly();
  id.scaled_F = F_shift * scale;
  id.f_poly = m.f_poly();
  id.coned = RatPoly::x() * F_shift * scale + RatPoly::constant(1);
  return id;
}

bool verify_Fpolytodanz(const CellPoset& p) { return Fpolytodanz_sides(p).holds(); }

}  // namespace flagkit
