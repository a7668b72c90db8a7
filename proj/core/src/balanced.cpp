#include "flagkit/balanced.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <tuple>

#include "flagkit/binomial.hpp"

namespace flagkit {

namespace {

std::vector<std::pair<Vertex, Vertex>> edges_of(const SimplicialComplex& c) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (VertexSet f : c.faces()) {
    if (f.size() == 2) out.emplace_back(f.min(), f.max());
  }
  return out;
}

}  // namespace

ColoredComplex::ColoredComplex(SimplicialComplex complex, std::vector<int> colors, int D)
    : complex_(std::move(complex)), color_(std::move(colors)), D_(D) {
  if (D_ < 0 || D_ > 30) throw Error(Errc::BadParameter, "color count must lie in [0, 30]");
  if (D_ < complex_.dimension() + 1) throw Error(Errc::NotBalanced, "fewer colors than dim + 1");
  color_.resize(static_cast<std::size_t>(complex_.n_vertices()), 0);
  for (Vertex v : complex_.vertices()) {
    if (color(v) < 1 || color(v) > D_) throw Error(Errc::NotBalanced, "vertex " + std::to_string(v) + " has no color in 1..D");
  }
  for (auto [a, b] : edges_of(complex_)) {
    if (color(a) == color(b)) throw Error(Errc::NotBalanced, "edge with both ends the same color");
  }
}

std::optional<ColoredComplex> find_balanced_coloring(const SimplicialComplex& c, std::optional<int> D) {
  const int colors = D.value_or(c.dimension() + 1);
  const std::vector<Vertex> order = c.vertices().members();
  std::vector<std::vector<Vertex>> adjacent(static_cast<std::size_t>(c.n_vertices()));
  for (auto [a, b] : edges_of(c)) {
    adjacent[static_cast<std::size_t>(a)].push_back(b);
    adjacent[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> color(static_cast<std::size_t>(c.n_vertices()), 0);
  auto assign = [&](auto&& self, std::size_t at) -> bool {
    if (at == order.size()) return true;
    const Vertex v = order[at];
    for (int k = 1; k <= colors; ++k) {
      const auto& nbrs = adjacent[static_cast<std::size_t>(v)];
      if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return color[static_cast<std::size_t>(w)] == k; })) continue;
      color[static_cast<std::size_t>(v)] = k;
      if (self(self, at + 1)) return true;
    }
    color[static_cast<std::size_t>(v)] = 0;
    return false;
  };
  if (colors < c.dimension() + 1 || !assign(assign, 0)) return std::nullopt;
  return ColoredComplex(c, std::move(color), colors);
}

ColorSet unused_colors(const ColoredComplex& g, VertexSet F) {
  if (!g.complex().contains(F)) throw Error(Errc::FaceNotPresent, "unused colors asked for a non-face");
  ColorSet used = 0;
  for (Vertex v : F) used |= ColorSet{1} << g.color(v);
  return g.all_colors() & ~used;
}

std::vector<int> color_list(ColorSet s) {
  std::vector<int> out;
  for (int c = 0; c < 32; ++c) {
    if ((s >> c) & 1U) out.push_back(c);
  }
  return out;
}

bool triple_leq(const TripleFace& a, const TripleFace& b) {
  const auto sub = [](ColorSet x, ColorSet y) { return (x & ~y) == 0; };
  return b.F.is_subset_of(a.F) && sub(a.B, b.B) && sub(a.Q & ~a.B, b.Q & ~b.B);
}

SignedCellComplex::SignedCellComplex(ColoredComplex gamma) : gamma_(std::move(gamma)) {
  std::map<std::tuple<std::uint64_t, int, int>, int> index;
  for (VertexSet F : gamma_.complex().faces()) {
    const ColorSet C = unused_colors(gamma_, F);
    for (int q : color_list(C)) {
      for (int sign : {1, -1}) {
        index.emplace(std::make_tuple(F.bits(), q, sign), static_cast<int>(vertices_.size()));
        vertices_.push_back({F, q, sign});
      }
    }
    for (ColorSet Q = 1; Q <= C; ++Q) {
      if ((Q & ~C) != 0) continue;
      for (ColorSet B = Q;; B = (B - 1) & Q) {
        triples_.push_back({F, Q, B});
        std::vector<int> span;
        for (int q : color_list(Q)) span.push_back(index.at({F.bits(), q, ((B >> q) & 1U) ? 1 : -1}));
        std::sort(span.begin(), span.end());
        spans_.push_back(std::move(span));
        if (B == 0) break;
      }
    }
  }
}

int SignedCellComplex::vertex_index(const SignedVertex& v) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw Error(Errc::FaceNotPresent, "no such signed vertex");
  return static_cast<int>(it - vertices_.begin());
}

FVector SignedCellComplex::f_vector() const {
  std::vector<Count> f{1};
  for (const auto& t : triples_) {
    const auto k = static_cast<std::size_t>(std::popcount(t.Q));
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return FVector(std::move(f));
}

Count SignedCellComplex::distinct_vertex_sets() const {
  return static_cast<Count>(std::set<std::vector<int>>(spans_.begin(), spans_.end()).size());
}

CellPoset SignedCellComplex::as_cell_poset() const {
  if (vertices_.size() > static_cast<std::size_t>(VertexSet::kMaxVertices)) {
    throw Error(Errc::GroundSetTooLarge, "signed complex has more than 64 vertices");
  }
  std::map<std::tuple<std::uint64_t, ColorSet, ColorSet>, int> id_of;
  std::vector<CellElement> elems;
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    const TripleFace& t = triples_[i];
    id_of.emplace(std::make_tuple(t.F.bits(), t.Q, t.B), static_cast<int>(i));
    elems.push_back({static_cast<int>(i), std::popcount(t.Q) - 1, VertexSet(spans_[i])});
  }
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    const TripleFace& t = triples_[i];
    if (std::popcount(t.Q) < 2) continue;
    for (int q : color_list(t.Q)) {
      const ColorSet bit = ColorSet{1} << q;
      covers.emplace_back(id_of.at({t.F.bits(), t.Q & ~bit, t.B & ~bit}), static_cast<int>(i));
    }
  }
  return CellPoset(PosetKind::simplicial, std::move(elems), covers);
}

SimplicialComplex SignedCellComplex::as_simplicial() const {
  if (vertices_.size() > static_cast<std::size_t>(VertexSet::kMaxVertices)) {
    throw Error(Errc::GroundSetTooLarge, "signed complex has more than 64 vertices");
  }
  std::vector<VertexSet> gens{VertexSet{}};
  for (const auto& s : spans_) gens.emplace_back(s);
  return SimplicialComplex(static_cast<int>(vertices_.size()), gens);
}

SignedCellComplex signed_unused_color_complex(const ColoredComplex& g) { return SignedCellComplex(g); }

FVector dgamma_fvector_formula(const FVector& f, int D) {
  std::vector<Count> out{1};
  for (int k = 1; k <= D; ++k) {
    Count sum = 0;
    for (int j = k; j <= D; ++j) sum += f.at(D - j - 1) * binomial(j, k);
    out.push_back(sum << k);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return FVector(std::move(out));
}

bool vertices_form_face(const SignedCellComplex& d, const std::vector<int>& vs) {
  if (vs.empty()) return true;
  VertexSet common = d.vertices().at(static_cast<std::size_t>(vs.front())).F;
  ColorSet unused = 0;
  for (int i : vs) {
    const VertexSet F = d.vertices().at(static_cast<std::size_t>(i)).F;
    common &= F;
    unused |= unused_colors(d.gamma(), F);
  }
  return !common.empty() || unused == d.gamma().all_colors();
}

bool triple_face_exists(const SignedCellComplex& d, const std::vector<int>& vs) {
  if (vs.empty()) return true;
  const VertexSet F = d.vertices().at(static_cast<std::size_t>(vs.front())).F;
  ColorSet seen = 0;
  for (int i : vs) {
    const SignedVertex& v = d.vertices().at(static_cast<std::size_t>(i));
    const ColorSet bit = ColorSet{1} << v.color;
    if (v.F != F || (seen & bit)) return false;
    seen |= bit;
  }
  return true;
}

bool incidence_face_exists(const SignedCellComplex& d, const std::vector<int>& vs) {
  std::vector<TripleFace> lows;
  for (int i : vs) {
    const SignedVertex& v = d.vertices().at(static_cast<std::size_t>(i));
    const ColorSet bit = ColorSet{1} << v.color;
    lows.push_back({v.F, bit, v.sign > 0 ? bit : ColorSet{0}});
  }
  return std::any_of(d.triples().begin(), d.triples().end(), [&](const TripleFace& t) {
    return std::all_of(lows.begin(), lows.end(), [&](const TripleFace& low) { return triple_leq(low, t); });
  });
}

FaceCriterionComparison compare_face_criteria(const SignedCellComplex& d, std::size_t keep_examples) {
  FaceCriterionComparison out;
  const int nv = static_cast<int>(d.vertices().size());
  const int max_size = d.gamma().D();
  std::vector<int> pick;
  auto visit = [&]() {
    ++out.subsets;
    const bool crit = vertices_form_face(d, pick);
    const bool exists = triple_face_exists(d, pick);
    if (crit == exists) {
      ++out.agree;
    } else if (out.disagreements.size() < keep_examples) {
      out.disagreements.push_back(pick);
    }
    if (incidence_face_exists(d, pick) == crit) ++out.incidence_agree;
    bool one_fiber = true;
    ColorSet seen = 0;
    for (int i : pick) {
      const SignedVertex& v = d.vertices()[static_cast<std::size_t>(i)];
      if (v.F != d.vertices()[static_cast<std::size_t>(pick.front())].F || ((seen >> v.color) & 1U)) one_fiber = false;
      seen |= ColorSet{1} << v.color;
    }
    if (one_fiber) {
      ++out.single_fiber;
      if (crit == exists) ++out.single_fiber_agree;
    }
  };
  auto grow = [&](auto&& self, int from) -> void {
    for (int i = from; i < nv; ++i) {
      pick.push_back(i);
      visit();
      if (static_cast<int>(pick.size()) < max_size) self(self, i + 1);
      pick.pop_back();
    }
  };
  grow(grow, 0);
  return out;
}

TchebComplex one_sided_interval_complex(const SignedCellComplex& d) {
  const CellPoset p = d.as_cell_poset();
  const auto& vs = d.vertices();
  return tcheb_triangulate(p, ascending_order(p), [&vs](Vertex u, Vertex v) {
    return vs[static_cast<std::size_t>(u)].sign == vs[static_cast<std::size_t>(v)].sign;
  });
}

}  // namespace flagkit
