#include "flagkit/complex.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

#include "flagkit/binomial.hpp"

namespace flagkit {

FVector::FVector(std::vector<Count> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front() != 1) {
    throw Error(Errc::BadParameter, "an f-vector starts with f_{-1} = 1");
  }
  for (Count c : entries_) {
    if (c < 0) throw Error(Errc::BadParameter, "negative face count");
  }
}

std::vector<Count> h_vector(const FVector& f) {
  const int d = f.size() - 1;
  std::vector<Count> h(static_cast<std::size_t>(d + 1), 0);
  for (int k = 0; k <= d; ++k) {
    Count sum = 0;
    for (int i = 0; i <= k; ++i) {
      const Count term = binomial(d - i, k - i) * f.at(i - 1);
      sum += ((k - i) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = sum;
  }
  return h;
}

FVector f_from_h(const std::vector<Count>& h) {
  if (h.empty()) throw Error(Errc::BadParameter, "empty h-vector");
  const int d = static_cast<int>(h.size()) - 1;
  std::vector<Count> f(h.size(), 0);
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i <= k; ++i) {
      f[static_cast<std::size_t>(k)] += binomial(d - i, k - i) * h[static_cast<std::size_t>(i)];
    }
  }
  return FVector(std::move(f));
}

namespace {

std::vector<VertexSet> maximal_faces(std::vector<VertexSet> gens) {
  std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<VertexSet> out;
  for (VertexSet g : gens) {
    const bool covered = std::any_of(out.begin(), out.end(), [g](VertexSet f) { return g.is_subset_of(f); });
    if (!covered) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n_vertices, const std::vector<VertexSet>& generators)
    : n_(n_vertices) {
  if (n_ < 0 || n_ > VertexSet::kMaxVertices) {
    throw Error(Errc::GroundSetTooLarge, "ground set size " + std::to_string(n_) + " outside [0, 64]");
  }
  if (generators.empty()) throw Error(Errc::BadParameter, "the void complex is not representable");
  const VertexSet ground = VertexSet::range(n_);
  for (VertexSet g : generators) {
    if (!g.is_subset_of(ground)) throw Error(Errc::BadParameter, "facet uses a label outside the ground set");
  }
  facets_ = maximal_faces(generators);
}

SimplicialComplex SimplicialComplex::empty_face(int n_vertices) {
  return SimplicialComplex(n_vertices, {VertexSet{}});
}

int SimplicialComplex::dimension() const {
  int m = 0;
  for (VertexSet f : facets_) m = std::max(m, f.size());
  return m - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return f.size() == facets_.front().size(); });
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet all;
  for (VertexSet f : facets_) all |= f;
  return all;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.is_subset_of(f); });
}

const std::vector<VertexSet>& SimplicialComplex::faces() const& {
  auto cached = std::atomic_load(&closure_);
  if (cached) return *cached;
  std::unordered_set<std::uint64_t> seen;
  for (VertexSet f : facets_) {
    for_each_subset(f, [&](VertexSet s) { seen.insert(s.bits()); });
  }
  std::vector<VertexSet> all;
  all.reserve(seen.size());
  for (std::uint64_t b : seen) all.push_back(VertexSet::from_bits(b));
  std::sort(all.begin(), all.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  auto fresh = std::make_shared<const std::vector<VertexSet>>(std::move(all));
  // Concurrent fills compute identical vectors; whichever lands first wins.
  std::shared_ptr<const std::vector<VertexSet>> expected;
  if (!std::atomic_compare_exchange_strong(&closure_, &expected, fresh)) return *expected;
  return *fresh;
}

std::map<int, std::vector<VertexSet>> SimplicialComplex::faces_by_dim() const {
  std::map<int, std::vector<VertexSet>> out;
  for (VertexSet f : faces()) out[f.size() - 1].push_back(f);
  return out;
}

FVector SimplicialComplex::f_vector() const {
  std::vector<Count> f(static_cast<std::size_t>(dimension() + 2), 0);
  for (VertexSet s : faces()) ++f[static_cast<std::size_t>(s.size())];
  return FVector(std::move(f));
}

Relabeled compact(const SimplicialComplex& c) {
  std::vector<Vertex> labels = c.vertices().members();
  std::vector<int> to_new(static_cast<std::size_t>(c.n_vertices()), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) to_new[static_cast<std::size_t>(labels[i])] = static_cast<int>(i);
  std::vector<VertexSet> gens;
  gens.reserve(c.facets().size());
  for (VertexSet f : c.facets()) {
    VertexSet g;
    for (Vertex v : f) g.insert(to_new[static_cast<std::size_t>(v)]);
    gens.push_back(g);
  }
  return {SimplicialComplex(static_cast<int>(labels.size()), gens), std::move(labels)};
}

Relabeled link(const SimplicialComplex& c, VertexSet face) {
  if (!c.contains(face)) throw Error(Errc::FaceNotPresent, "link of a face not in the complex");
  std::vector<VertexSet> gens;
  for (VertexSet f : c.facets()) {
    if (face.is_subset_of(f)) gens.push_back(f - face);
  }
  return compact(SimplicialComplex(c.n_vertices(), gens));
}

SimplicialComplex antistar(const SimplicialComplex& c, Vertex v) {
  std::vector<VertexSet> gens;
  gens.reserve(c.facets().size());
  for (VertexSet f : c.facets()) gens.push_back(f.without(v));
  return SimplicialComplex(c.n_vertices(), gens);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int n = a.n_vertices() + b.n_vertices();
  if (n > VertexSet::kMaxVertices) throw Error(Errc::GroundSetTooLarge, "join exceeds 64 vertices");
  std::vector<VertexSet> gens;
  gens.reserve(a.facets().size() * b.facets().size());
  for (VertexSet fa : a.facets()) {
    for (VertexSet fb : b.facets()) {
      gens.push_back(fa | VertexSet::from_bits(fb.bits() << a.n_vertices()));
    }
  }
  return SimplicialComplex(n, gens);
}

SimplicialComplex edge_subdivision(const SimplicialComplex& c, VertexSet e) {
  if (e.size() != 2) throw Error(Errc::NotAnEdge, "edge subdivision needs a 2-element face");
  if (!c.contains(e)) throw Error(Errc::FaceNotPresent, "edge not in the complex");
  const Vertex a = e.min();
  const Vertex b = e.max();
  const Vertex v = c.n_vertices();
  std::vector<VertexSet> gens;
  for (VertexSet f : c.facets()) {
    if (e.is_subset_of(f)) {
      gens.push_back(f.without(a).with(v));
      gens.push_back(f.without(b).with(v));
    } else {
      gens.push_back(f);
    }
  }
  return SimplicialComplex(v + 1, gens);
}

namespace {

void maximal_cliques(const std::vector<VertexSet>& adj, VertexSet r, VertexSet p, VertexSet x,
                     std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  const Vertex pivot = (p | x).min();
  for (Vertex v : p - adj[static_cast<std::size_t>(pivot)]) {
    const VertexSet nv = adj[static_cast<std::size_t>(v)];
    maximal_cliques(adj, r.with(v), p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

bool is_flag(const SimplicialComplex& c) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(c.n_vertices()));
  for (VertexSet f : c.faces()) {
    if (f.size() != 2) continue;
    adj[static_cast<std::size_t>(f.min())].insert(f.max());
    adj[static_cast<std::size_t>(f.max())].insert(f.min());
  }
  std::vector<VertexSet> cliques;
  maximal_cliques(adj, {}, c.vertices(), {}, cliques);
  return std::all_of(cliques.begin(), cliques.end(), [&](VertexSet q) { return c.contains(q); });
}

namespace {

using VdMemo = std::map<std::vector<std::uint64_t>, bool>;

bool vertex_decomposable_rec(const SimplicialComplex& raw, VdMemo& memo) {
  const SimplicialComplex c = compact(raw).complex;
  if (c.facets().size() == 1) return true;
  if (!c.is_pure()) return false;
  std::vector<std::uint64_t> key;
  for (VertexSet f : c.facets()) key.push_back(f.bits());
  key.push_back(static_cast<std::uint64_t>(c.n_vertices()));
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  bool result = false;
  for (Vertex v : c.vertices()) {
    const SimplicialComplex del = antistar(c, v);
    // Shedding: removing v must not expose a non-facet.
    const bool shedding = std::all_of(del.facets().begin(), del.facets().end(), [&](VertexSet f) {
      return std::binary_search(c.facets().begin(), c.facets().end(), f, lex_less);
    });
    if (!shedding) continue;
    if (vertex_decomposable_rec(link(c, VertexSet::singleton(v)).complex, memo) &&
        vertex_decomposable_rec(del, memo)) {
      result = true;
      break;
    }
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

bool is_vertex_decomposable(const SimplicialComplex& c) {
  if (!c.is_pure()) throw Error(Errc::NotPure, "vertex decomposability is defined for pure complexes");
  VdMemo memo;
  return vertex_decomposable_rec(c, memo);
}

Count euler_characteristic(const FVector& f) {
  Count chi = 0;
  for (int i = 0; i <= f.dimension(); ++i) chi += (i % 2 == 0) ? f.at(i) : -f.at(i);
  return chi;
}

}  // namespace flagkit
