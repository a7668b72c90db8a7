#include "flagkit/subdivide.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "flagkit/binomial.hpp"
#include "flagkit/hvector.hpp"

namespace flagkit {

FVector TchebComplex::f_vector() const {
  std::vector<Count> f{1};
  for (const auto& face : faces) {
    const auto k = face.size();
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return FVector(std::move(f));
}

bool TchebComplex::is_subset_closed() const {
  std::set<std::vector<int>> all(faces.begin(), faces.end());
  for (const auto& face : faces) {
    if (face.size() < 2) continue;
    for (std::size_t drop = 0; drop < face.size(); ++drop) {
      std::vector<int> smaller;
      for (std::size_t i = 0; i < face.size(); ++i) {
        if (i != drop) smaller.push_back(face[i]);
      }
      if (!all.contains(smaller)) return false;
    }
  }
  return true;
}

SimplicialComplex TchebComplex::as_simplicial() const {
  if (!is_subset_closed()) throw Error(Errc::NotAComplex, "Tchebyshev face list is not closed under subsets");
  if (vertices.size() > static_cast<std::size_t>(VertexSet::kMaxVertices)) {
    throw Error(Errc::GroundSetTooLarge, "triangulation has more than 64 vertices");
  }
  std::vector<VertexSet> gens;
  for (const auto& face : faces) gens.emplace_back(face);
  if (gens.empty()) gens.emplace_back();
  return SimplicialComplex(static_cast<int>(vertices.size()), gens);
}

std::vector<Vertex> ascending_order(const CellPoset& p) { return p.ground().members(); }

std::vector<Vertex> random_order(std::vector<Vertex> vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = vertices.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(vertices[i - 1], vertices[j]);
  }
  return vertices;
}

TchebComplex tcheb_triangulate(const CellPoset& p, const std::vector<Vertex>& order, const PairFilter& keep_pair) {
  const VertexSet ground = p.ground();
  if (order.size() != static_cast<std::size_t>(ground.size()) || VertexSet(order) != ground) {
    throw Error(Errc::BadOrder, "the order must list each vertex of the complex once");
  }
  const int top = static_cast<int>(order.size());
  std::vector<int> pos(VertexSet::kMaxVertices, -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  auto rank = [&](Vertex x) { return x == TchebVertex::kTop ? top : pos[static_cast<std::size_t>(x)]; };

  std::unordered_set<std::uint64_t> support_bits;
  std::vector<VertexSet> supports;
  for (const auto& e : p.elements()) {
    if (support_bits.insert(e.support.bits()).second) supports.push_back(e.support);
  }
  auto inside_some_cell = [&](VertexSet s) {
    return std::any_of(supports.begin(), supports.end(), [s](VertexSet c) { return s.is_subset_of(c); });
  };

  TchebComplex out;
  for (Vertex u : order) out.vertices.push_back({u, TchebVertex::kTop});
  for (Vertex u : order) {
    for (Vertex v : order) {
      if (rank(u) >= rank(v) || !inside_some_cell({u, v})) continue;
      if (keep_pair && !keep_pair(u, v)) continue;
      out.vertices.push_back({u, v});
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end(), [&](const TchebVertex& a, const TchebVertex& b) {
    return rank(a.v) != rank(b.v) ? rank(a.v) < rank(b.v) : rank(a.u) < rank(b.u);
  });
  const auto span = [](const TchebVertex& x) {
    return x.is_original() ? VertexSet::singleton(x.u) : VertexSet{x.u, x.v};
  };

  std::vector<int> face;
  auto extend = [&](auto&& self, VertexSet covered) -> void {
    if (support_bits.contains(covered.bits())) out.faces.push_back(face);
    const TchebVertex& last = out.vertices[static_cast<std::size_t>(face.back())];
    for (int c = face.back() + 1; c < static_cast<int>(out.vertices.size()); ++c) {
      const TchebVertex& next = out.vertices[static_cast<std::size_t>(c)];
      if (rank(next.v) <= rank(last.v)) continue;
      if (next.u != last.u && rank(last.v) > rank(next.u)) continue;
      const VertexSet grown = covered | span(next);
      if (!inside_some_cell(grown)) continue;
      face.push_back(c);
      self(self, grown);
      face.pop_back();
    }
  };
  for (int start = 0; start < static_cast<int>(out.vertices.size()); ++start) {
    face.assign(1, start);
    extend(extend, span(out.vertices[static_cast<std::size_t>(start)]));
  }
  std::sort(out.faces.begin(), out.faces.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

FVector tcheb_fvector_formula(const FVector& f) {
  const int top = f.size() - 1;
  std::vector<Count> out{1};
  for (int k = 1; k <= top; ++k) {
    Count sum = 0;
    for (int j = k; j <= std::min(2 * k, top); ++j) {
      const Count weight = (binomial(k, 2 * k - j) + binomial(k - 1, 2 * k - j)) * (Count{1} << (2 * k - j));
      sum += f.at(j - 1) * weight / 2;
    }
    out.push_back(sum);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return FVector(std::move(out));
}

TchebCompatReport tcheb_F_compat(const CellPoset& p, int random_orders, std::uint64_t seed) {
  TchebCompatReport r;
  r.input = support_counts(p);
  r.formula = tcheb_fvector_formula(r.input);
  r.F_identity = tcheb_transform(F_poly(r.input)) == F_poly(r.formula);
  std::vector<std::vector<Vertex>> orders{ascending_order(p)};
  for (int i = 0; i < random_orders; ++i) orders.push_back(random_order(orders.front(), seed + static_cast<std::uint64_t>(i)));
  r.counts_match = true;
  for (const auto& order : orders) {
    r.direct.push_back(tcheb_triangulate(p, order).f_vector());
    if (!(r.direct.back() == r.formula)) r.counts_match = false;
  }
  return r;
}

bool verify_tcheb_F_compat(const CellPoset& p) { return tcheb_F_compat(p).ok(); }

}  // namespace flagkit
