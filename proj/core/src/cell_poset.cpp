#include "flagkit/cell_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "flagkit/binomial.hpp"
#include "flagkit/subdivide.hpp"

namespace flagkit {

std::string to_string(PosetKind kind) {
  switch (kind) {
    case PosetKind::simplicial: return "simplicial";
    case PosetKind::cubical: return "cubical";
    case PosetKind::general: return "general";
  }
  return "general";
}

PosetKind parse_poset_kind(const std::string& text) {
  if (text == "simplicial") return PosetKind::simplicial;
  if (text == "cubical") return PosetKind::cubical;
  if (text == "general") return PosetKind::general;
  throw Error(Errc::ParseError, "unknown poset kind '" + text + "'");
}

CellPoset::CellPoset(PosetKind kind, std::vector<CellElement> elements,
                     const std::vector<std::pair<int, int>>& covers)
    : kind_(kind), elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  std::unordered_map<int, int> index_of;
  for (std::size_t i = 0; i < n; ++i) {
    if (elements_[i].dim < 0) throw Error(Errc::BadParameter, "cell dims are nonnegative");
    if (!index_of.emplace(elements_[i].id, static_cast<int>(i)).second) {
      throw Error(Errc::BadParameter, "duplicate element id " + std::to_string(elements_[i].id));
    }
  }
  up_.resize(n);
  down_.resize(n);
  covers_.reserve(covers.size());
  for (auto [lo_id, hi_id] : covers) {
    const auto lo = index_of.find(lo_id);
    const auto hi = index_of.find(hi_id);
    if (lo == index_of.end() || hi == index_of.end()) throw Error(Errc::BadParameter, "cover names an unknown id");
    const CellElement& a = elements_[static_cast<std::size_t>(lo->second)];
    const CellElement& b = elements_[static_cast<std::size_t>(hi->second)];
    if (b.dim != a.dim + 1) throw Error(Errc::BadParameter, "cover pairs must differ by one in dim");
    if (!a.support.is_subset_of(b.support)) throw Error(Errc::BadParameter, "supports must grow along covers");
    covers_.emplace_back(lo->second, hi->second);
    up_[static_cast<std::size_t>(lo->second)].push_back(hi->second);
    down_[static_cast<std::size_t>(hi->second)].push_back(lo->second);
  }
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
  for (auto& v : up_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  for (auto& v : down_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  std::vector<int> by_dim(n);
  std::iota(by_dim.begin(), by_dim.end(), 0);
  std::stable_sort(by_dim.begin(), by_dim.end(), [&](int a, int b) {
    return elements_[static_cast<std::size_t>(a)].dim < elements_[static_cast<std::size_t>(b)].dim;
  });
  below_.assign(n, std::vector<bool>(n, false));
  for (int i : by_dim) {
    auto& row = below_[static_cast<std::size_t>(i)];
    row[static_cast<std::size_t>(i)] = true;
    for (int lower : down_[static_cast<std::size_t>(i)]) {
      const auto& lrow = below_[static_cast<std::size_t>(lower)];
      for (std::size_t k = 0; k < n; ++k) {
        if (lrow[k]) row[k] = true;
      }
    }
  }
}

int CellPoset::max_dim() const {
  int m = -1;
  for (const auto& e : elements_) m = std::max(m, e.dim);
  return m;
}

std::vector<int> CellPoset::minimal() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (down(i).empty()) out.push_back(i);
  }
  return out;
}

std::vector<int> CellPoset::maximal() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (up(i).empty()) out.push_back(i);
  }
  return out;
}

bool CellPoset::is_pure() const {
  const auto tops = maximal();
  return std::all_of(tops.begin(), tops.end(), [&](int i) { return element(i).dim == element(tops.front()).dim; });
}

bool CellPoset::is_graded() const {
  if (!is_pure()) return false;
  const auto bottoms = minimal();
  return std::all_of(bottoms.begin(), bottoms.end(),
                     [&](int i) { return element(i).dim == element(bottoms.front()).dim; });
}

VertexSet CellPoset::ground() const {
  VertexSet g;
  for (const auto& e : elements_) g |= e.support;
  return g;
}

bool CellPoset::cells_have_k_vertices() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const CellElement& e) { return e.support.size() == e.dim + 1; });
}

CellPoset from_simplicial(const SimplicialComplex& c) {
  std::vector<CellElement> elems;
  std::map<std::uint64_t, int> id_of;
  for (VertexSet f : c.faces()) {
    if (f.empty()) continue;
    const int id = static_cast<int>(elems.size());
    id_of.emplace(f.bits(), id);
    elems.push_back({id, f.size() - 1, f});
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& e : elems) {
    if (e.support.size() < 2) continue;
    for (Vertex v : e.support) covers.emplace_back(id_of.at(e.support.without(v).bits()), e.id);
  }
  return CellPoset(PosetKind::simplicial, std::move(elems), covers);
}

CellPoset from_face_list(const std::vector<VertexSet>& faces) {
  std::vector<CellElement> elems;
  std::map<std::uint64_t, int> id_of;
  for (VertexSet f : faces) {
    if (f.empty()) throw Error(Errc::BadParameter, "face lists hold nonempty faces");
    if (!id_of.emplace(f.bits(), static_cast<int>(elems.size())).second) continue;
    elems.push_back({static_cast<int>(elems.size()), f.size() - 1, f});
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& e : elems) {
    for (Vertex v : e.support) {
      if (auto it = id_of.find(e.support.without(v).bits()); it != id_of.end()) covers.emplace_back(it->second, e.id);
    }
  }
  return CellPoset(PosetKind::general, std::move(elems), covers);
}

namespace {

/// Rebuilds `p` with each support replaced by the principal down-set.
CellPoset with_downset_supports(const CellPoset& p) {
  std::vector<CellElement> elems = p.elements();
  for (int j = 0; j < p.size(); ++j) {
    VertexSet s;
    for (int i = 0; i < p.size(); ++i) {
      if (p.leq(i, j)) s.insert(i);
    }
    elems[static_cast<std::size_t>(j)].support = s;
  }
  std::vector<std::pair<int, int>> covers;
  for (auto [lo, hi] : p.covers()) covers.emplace_back(p.element(lo).id, p.element(hi).id);
  return CellPoset(p.kind(), std::move(elems), covers);
}

}  // namespace

CellPoset chain_poset(int length) {
  if (length < 1) throw Error(Errc::BadParameter, "chain needs at least one element");
  std::vector<CellElement> elems;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < length; ++i) {
    elems.push_back({i, i, {}});
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return with_downset_supports(CellPoset(PosetKind::general, std::move(elems), covers));
}

CellPoset antichain_poset(int size) {
  if (size < 1) throw Error(Errc::BadParameter, "antichain needs at least one element");
  std::vector<CellElement> elems;
  for (int i = 0; i < size; ++i) elems.push_back({i, 0, VertexSet::singleton(i)});
  return CellPoset(PosetKind::general, std::move(elems), {});
}

CellPoset boolean_poset(int k) {
  if (k < 0 || k > 6) throw Error(Errc::BadParameter, "Boolean lattice rank must be in [0, 6]");
  std::vector<CellElement> elems;
  std::vector<std::pair<int, int>> covers;
  for (int s = 0; s < (1 << k); ++s) {
    elems.push_back({s, VertexSet::from_bits(static_cast<std::uint64_t>(s)).size(), {}});
    for (int i = 0; i < k; ++i) {
      if ((s >> i) & 1) covers.emplace_back(s & ~(1 << i), s);
    }
  }
  return with_downset_supports(CellPoset(PosetKind::general, std::move(elems), covers));
}

CellPoset polygon_cell_poset(int n) {
  if (n < 3) throw Error(Errc::BadParameter, "polygon needs n >= 3");
  std::vector<CellElement> elems;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) elems.push_back({i, 0, VertexSet::singleton(i)});
  for (int i = 0; i < n; ++i) {
    elems.push_back({n + i, 1, {i, (i + 1) % n}});
    covers.emplace_back(i, n + i);
    covers.emplace_back((i + 1) % n, n + i);
    covers.emplace_back(n + i, 2 * n);
  }
  elems.push_back({2 * n, 2, VertexSet::range(n)});
  return CellPoset(n == 4 ? PosetKind::cubical : PosetKind::general, std::move(elems), covers);
}

CellPoset dual(const CellPoset& p) {
  if (!p.is_pure()) throw Error(Errc::NotPure, "duals need a pure complex");
  const std::vector<int> facets = p.maximal();
  if (facets.size() > static_cast<std::size_t>(VertexSet::kMaxVertices)) {
    throw Error(Errc::GroundSetTooLarge, "dual has more than 64 vertices");
  }
  const int top = p.max_dim();
  std::vector<CellElement> elems;
  for (int i = 0; i < p.size(); ++i) {
    VertexSet s;
    for (std::size_t k = 0; k < facets.size(); ++k) {
      if (p.leq(i, facets[k])) s.insert(static_cast<int>(k));
    }
    elems.push_back({p.element(i).id, top - p.element(i).dim, s});
  }
  std::vector<std::pair<int, int>> covers;
  for (auto [lo, hi] : p.covers()) covers.emplace_back(p.element(hi).id, p.element(lo).id);
  return CellPoset(PosetKind::general, std::move(elems), covers);
}

std::vector<Count> rank_counts(const CellPoset& p) {
  std::vector<Count> out(static_cast<std::size_t>(p.max_dim() + 1), 0);
  for (const auto& e : p.elements()) ++out[static_cast<std::size_t>(e.dim)];
  return out;
}

FVector fvector_with_empty(const CellPoset& p) {
  std::vector<Count> f{1};
  for (Count c : rank_counts(p)) f.push_back(c);
  return FVector(std::move(f));
}

FVector support_counts(const CellPoset& p) {
  int m = 0;
  for (const auto& e : p.elements()) m = std::max(m, e.support.size());
  std::vector<Count> s(static_cast<std::size_t>(m + 1), 0);
  s[0] = 1;
  for (const auto& e : p.elements()) ++s[static_cast<std::size_t>(e.support.size())];
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return FVector(std::move(s));
}

RatPoly ftilde_poly(const CellPoset& p) {
  std::vector<Rational> c;
  if (p.kind() == PosetKind::simplicial) c.emplace_back(1);
  for (Count x : rank_counts(p)) c.emplace_back(x);
  return RatPoly(std::move(c));
}

RatPoly stilde_poly(const CellPoset& p) {
  const FVector s = support_counts(p);
  std::vector<Rational> c;
  for (Count x : s.entries()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

namespace {

std::vector<int> interval_members(const CellPoset& p, int u, int v) {
  std::vector<int> out;
  for (int w = 0; w < p.size(); ++w) {
    if (p.leq(u, w) && p.leq(w, v)) out.push_back(w);
  }
  return out;
}

CellPoset relation_poset(const CellPoset& p, PosetKind kind, bool include_empty) {
  if (p.size() > VertexSet::kMaxVertices) {
    throw Error(Errc::GroundSetTooLarge, "interval supports need at most 64 source elements");
  }
  const int shift = include_empty ? 1 : 0;
  std::vector<CellElement> elems;
  std::map<std::pair<int, int>, int> id_of;
  if (include_empty) elems.push_back({0, 0, {}});
  for (int u = 0; u < p.size(); ++u) {
    for (int v = 0; v < p.size(); ++v) {
      if (!p.leq(u, v)) continue;
      const int id = static_cast<int>(elems.size());
      id_of.emplace(std::make_pair(u, v), id);
      VertexSet s;
      for (int w : interval_members(p, u, v)) s.insert(w);
      elems.push_back({id, p.element(v).dim - p.element(u).dim + shift, s});
    }
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& [uv, id] : id_of) {
    const auto [u, v] = uv;
    if (include_empty && u == v) covers.emplace_back(0, id);
    for (int x : p.down(u)) covers.emplace_back(id, id_of.at({x, v}));
    for (int y : p.up(v)) covers.emplace_back(id, id_of.at({u, y}));
  }
  return CellPoset(kind, std::move(elems), covers);
}

}  // namespace

CellPoset interval_poset(const CellPoset& p, bool include_empty) {
  if (include_empty && !p.is_graded()) throw Error(Errc::NotGraded, "the empty interval needs a graded poset");
  return relation_poset(p, PosetKind::general, include_empty);
}

SimplicialComplex order_complex(const CellPoset& p) {
  if (p.size() > VertexSet::kMaxVertices) throw Error(Errc::GroundSetTooLarge, "order complex over 64 elements");
  std::vector<VertexSet> chains;
  // Maximal chains are saturated: walk covers from minimal to maximal elements.
  auto walk = [&](auto&& self, int at, VertexSet chain) -> void {
    chain.insert(at);
    if (p.up(at).empty()) {
      chains.push_back(chain);
      return;
    }
    for (int next : p.up(at)) self(self, next, chain);
  };
  for (int m : p.minimal()) walk(walk, m, {});
  if (chains.empty()) chains.push_back({});
  return SimplicialComplex(p.size(), chains);
}

bool has_boolean_intervals(const CellPoset& p) {
  for (int u = 0; u < p.size(); ++u) {
    for (int v = 0; v < p.size(); ++v) {
      if (!p.leq(u, v)) continue;
      const int rank = p.element(v).dim - p.element(u).dim;
      const std::vector<int> members = interval_members(p, u, v);
      if (rank >= 20 || members.size() != (std::size_t{1} << rank)) return false;
      std::vector<int> atoms;
      for (int a : p.up(u)) {
        if (p.leq(a, v)) atoms.push_back(a);
      }
      if (static_cast<int>(atoms.size()) != rank) return false;
      // w -> atoms below w must be an order isomorphism onto all subsets.
      std::map<int, std::uint64_t> code;
      std::vector<bool> hit(std::size_t{1} << rank, false);
      for (int w : members) {
        std::uint64_t c = 0;
        for (std::size_t k = 0; k < atoms.size(); ++k) {
          if (p.leq(atoms[k], w)) c |= std::uint64_t{1} << k;
        }
        if (hit[c]) return false;
        hit[c] = true;
        code[w] = c;
      }
      for (int w : members) {
        for (int w2 : members) {
          const bool sub = (code[w] & ~code[w2]) == 0;
          if (sub != p.leq(w, w2)) return false;
        }
      }
    }
  }
  return true;
}

CellPoset barycentric_cover(const CellPoset& p) {
  if (!has_boolean_intervals(p)) throw Error(Errc::NonBooleanIntervals, "barycentric cover needs Boolean intervals");
  return relation_poset(p, PosetKind::cubical, false);
}

std::vector<Count> cubical_barycentric_fvector(const FVector& f) {
  const int top = f.dimension();
  std::vector<Count> out;
  for (int k = 0; k <= top; ++k) {
    Count s = 0;
    for (int j = k; j <= top; ++j) s += binomial(j + 1, k) * f.at(j);
    out.push_back(s);
  }
  return out;
}

bool verify_interval_tcheb(const CellPoset& p) {
  const FVector lhs = order_complex(interval_poset(p, false)).f_vector();
  const FVector rhs = tcheb_fvector_formula(order_complex(p).f_vector());
  return lhs == rhs;
}

}  // namespace flagkit
