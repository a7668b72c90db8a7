#include "flagkit/booldecomp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "flagkit/binomial.hpp"

namespace flagkit {

namespace {

std::vector<std::uint64_t> sorted_bits(const std::vector<VertexSet>& faces) {
  std::vector<std::uint64_t> out;
  out.reserve(faces.size());
  for (VertexSet f : faces) out.push_back(f.bits());
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet map_set(VertexSet s, const std::vector<Vertex>& labels) {
  VertexSet out;
  for (Vertex v : s) out.insert(labels.at(static_cast<std::size_t>(v)));
  return out;
}

/// Labels of Boolean elements 1..k.
VertexSet boolean_prefix(const VertexPartition& p, int k) {
  VertexSet out;
  for (int i = 0; i < k; ++i) out.insert(p.boolean[static_cast<std::size_t>(i)]);
  return out;
}

void check_degree(int d) {
  if (d < 0 || d % 2 != 0) throw Error(Errc::BadParameter, "the Boolean degree d must be even and nonnegative");
}

}  // namespace

VertexPartition canonical_partition(const SimplicialComplex& S, int d) {
  VertexPartition p;
  for (int i = 0; i < S.n_vertices(); ++i) p.core.push_back(i);
  for (int j = 0; j < d; ++j) p.boolean.push_back(S.n_vertices() + j);
  return p;
}

SimplicialComplex build_boolean(const SimplicialComplex& S, int d) {
  check_degree(d);
  const VertexPartition p = canonical_partition(S, d);
  std::vector<VertexSet> gens;
  Count expected = 0;
  for (VertexSet F : S.faces()) {
    const int room = d - 2 * F.size();
    if (room < 0) throw Error(Errc::DimensionTooLarge, "S has a face with 2|F| > d");
    gens.push_back(F | boolean_prefix(p, room));
    expected += Count{1} << room;
  }
  SimplicialComplex gamma(S.n_vertices() + d, gens);
  const VertexSet core = VertexSet::range(S.n_vertices());
  for (VertexSet X : gamma.faces()) {
    const VertexSet F = X & core;
    if (!S.contains(F) || !(X - core).is_subset_of(boolean_prefix(p, d - 2 * F.size()))) {
      throw Error(Errc::NotAComplex, "F ∪ G faces are not closed under subsets");
    }
  }
  if (static_cast<Count>(gamma.faces().size()) != expected) {
    throw Error(Errc::NotAComplex, "F ∪ G faces are not closed under subsets");
  }
  return gamma;
}

bool verify_boolean(const SimplicialComplex& gamma, const SimplicialComplex& S, int d, const VertexPartition& partition) {
  check_degree(d);
  if (partition.core.size() != static_cast<std::size_t>(S.n_vertices()) ||
      partition.boolean.size() != static_cast<std::size_t>(d)) {
    throw Error(Errc::BadPartition, "partition sizes do not match S and d");
  }
  std::set<Vertex> seen;
  for (const auto* part : {&partition.core, &partition.boolean}) {
    for (Vertex v : *part) {
      if (v < 0 || v >= gamma.n_vertices() || !seen.insert(v).second) {
        throw Error(Errc::BadPartition, "partition labels must be distinct labels of Γ");
      }
    }
  }
  const SimplicialComplex built = build_boolean(S, d);
  std::vector<Vertex> labels = partition.core;
  labels.insert(labels.end(), partition.boolean.begin(), partition.boolean.end());
  std::vector<VertexSet> mapped;
  for (VertexSet f : built.faces()) mapped.push_back(map_set(f, labels));
  return sorted_bits(mapped) == sorted_bits(gamma.faces());
}

bool verify_boolean(const SimplicialComplex& gamma, const SimplicialComplex& S, int d) {
  return verify_boolean(gamma, S, d, canonical_partition(S, d));
}

std::optional<FoundDecomposition> search_boolean_decomposition(const SimplicialComplex& gamma, int d) {
  check_degree(d);
  const std::vector<Vertex> verts = gamma.vertices().members();
  if (verts.size() > 10) throw Error(Errc::BadParameter, "decomposition search is limited to 10 vertices");
  if (static_cast<int>(verts.size()) < d) return std::nullopt;
  std::vector<Vertex> chosen;
  std::optional<FoundDecomposition> found;
  auto attempt = [&]() {
    const VertexSet boolean_part(chosen);
    std::vector<Vertex> core;
    for (Vertex v : verts) {
      if (!boolean_part.contains(v)) core.push_back(v);
    }
    std::vector<Vertex> index_of(static_cast<std::size_t>(gamma.n_vertices()), -1);
    for (std::size_t i = 0; i < core.size(); ++i) index_of[static_cast<std::size_t>(core[i])] = static_cast<int>(i);
    std::vector<VertexSet> gens{VertexSet{}};
    for (VertexSet f : gamma.faces()) {
      if (f.intersects(boolean_part)) continue;
      VertexSet g;
      for (Vertex v : f) g.insert(index_of[static_cast<std::size_t>(v)]);
      gens.push_back(g);
    }
    SimplicialComplex S(static_cast<int>(core.size()), gens);
    if (S.dimension() + 1 > d / 2) return;
    VertexPartition p{core, chosen};
    if (verify_boolean(gamma, S, d, p)) found = FoundDecomposition{std::move(S), std::move(p)};
  };
  auto pick = [&](auto&& self) -> void {
    if (found) return;
    if (static_cast<int>(chosen.size()) == d) {
      attempt();
      return;
    }
    for (Vertex v : verts) {
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      chosen.push_back(v);
      self(self);
      chosen.pop_back();
    }
  };
  pick(pick);
  return found;
}

namespace {

/// Size of the lower shadow of the first m k-subsets in colex order.
Count colex_shadow(Count m, int k) {
  Count shadow = 0;
  for (int i = k; i >= 1 && m > 0; --i) {
    int a = i;
    while (binomial(a + 1, i) <= m) ++a;
    m -= binomial(a, i);
    shadow += binomial(a, i - 1);
  }
  return shadow;
}

}  // namespace

bool is_f_vector(const std::vector<Count>& f) {
  if (f.empty() || f.front() != 1) return false;
  if (std::any_of(f.begin(), f.end(), [](Count c) { return c < 0; })) return false;
  for (std::size_t k = 2; k < f.size(); ++k) {
    if (colex_shadow(f[k], static_cast<int>(k)) > f[k - 1]) return false;
  }
  return true;
}

SimplicialComplex compressed_complex(const FVector& f) {
  if (!is_f_vector(f.entries())) throw Error(Errc::NotAnFVector, "sequence violates the Kruskal–Katona bound");
  const Count n = f.at(0);
  if (n > VertexSet::kMaxVertices) throw Error(Errc::GroundSetTooLarge, "compressed complex needs more than 64 vertices");
  std::vector<VertexSet> gens{VertexSet{}};
  for (int k = 1; k <= f.dimension() + 1; ++k) {
    Count want = f.at(k - 1);
    if (want == 0 || k > n) continue;
    // Gosper's hack walks the k-subsets of [n] in increasing bitmask order.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (true) {
      gens.push_back(VertexSet::from_bits(s));
      if (--want == 0) break;
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return SimplicialComplex(static_cast<int>(n), gens);
}

GlueResult glue_boolean(const SimplicialComplex& gamma1, const BooleanDecomposition& dec1,
                        const SimplicialComplex& gamma2, const BooleanDecomposition& dec2) {
  const int d = dec1.d;
  if (dec2.d != d - 2) throw Error(Errc::IncompatibleDecompositions, "the glued piece must have degree d - 2");
  if (!verify_boolean(gamma1, dec1.S, d) || !verify_boolean(gamma2, dec2.S, dec2.d)) {
    throw Error(Errc::IncompatibleDecompositions, "an input decomposition does not describe its complex");
  }
  const FVector f1 = dec1.S.f_vector();
  const FVector f2 = dec2.S.f_vector();
  for (int i = 0; i <= f2.dimension(); ++i) {
    if (f2.at(i) > f1.at(i)) throw Error(Errc::IncompatibleDecompositions, "f(S2) exceeds f(S1)");
  }
  const SimplicialComplex s1 = compressed_complex(f1);
  const SimplicialComplex s2 = compressed_complex(f2);
  const Vertex u = s1.n_vertices();
  std::vector<VertexSet> gens = s1.facets();
  for (VertexSet F : s2.facets()) gens.push_back(F.with(u));
  SimplicialComplex S(u + 1, gens);
  SimplicialComplex gamma = build_boolean(S, d);

  const FVector fg = gamma.f_vector();
  const FVector fa = gamma1.f_vector();
  const FVector fb = gamma2.f_vector();
  const int top = std::max({fg.dimension(), fa.dimension(), fb.dimension() + 1});
  for (int i = -1; i <= top; ++i) {
    if (fg.at(i) != fa.at(i) + fb.at(i - 1)) {
      throw Error(Errc::IncompatibleDecompositions, "glued complex breaks f(Γ) = f(Γ1) + t f(Γ2)");
    }
  }
  return GlueResult{std::move(gamma), BooleanDecomposition{std::move(S), d}, u};
}

std::string GenBoolPiece::describe() const {
  std::ostringstream out;
  switch (core) {
    case Core::all: out << "F in S"; break;
    case Core::open_star: out << "F in open star of a"; break;
    case Core::antistar: out << "F in antistar of a"; break;
    case Core::contains_edge: out << "F contains {a,b}"; break;
    case Core::avoids_edge: out << "F does not contain {a,b}"; break;
  }
  if (min_size > 0) out << ", |F| >= " << min_size;
  if (max_size >= 0) out << ", |F| <= " << max_size;
  auto list = [&](const std::vector<int>& xs) {
    out << "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    out << "}";
  };
  out << "; G in 2^[d-2|F|]";
  if (!required.empty()) {
    out << " containing ";
    list(required);
  }
  if (!not_all_of.empty()) {
    out << " not containing all of ";
    list(not_all_of);
  }
  switch (replace) {
    case Replace::none: break;
    case Replace::drop_a: out << "; a replaced by v"; break;
    case Replace::drop_b: out << "; b replaced by v"; break;
    case Replace::drop_both: out << "; a and b replaced by v"; break;
  }
  return out.str();
}

namespace {

std::vector<GenBoolPiece> replaced(GenBoolPiece base) {
  std::vector<GenBoolPiece> out;
  for (auto mode : {GenBoolPiece::Replace::drop_a, GenBoolPiece::Replace::drop_b, GenBoolPiece::Replace::drop_both}) {
    base.replace = mode;
    out.push_back(base);
  }
  return out;
}

int position(const std::vector<Vertex>& xs, Vertex v) {
  const auto it = std::find(xs.begin(), xs.end(), v);
  return it == xs.end() ? -1 : static_cast<int>(it - xs.begin());
}

}  // namespace

GenBoolDecomposition edge_subdiv_genbool(const SimplicialComplex& gamma, const BooleanDecomposition& dec,
                                         const VertexPartition& partition, VertexSet e) {
  if (e.size() != 2) throw Error(Errc::NotAnEdge, "subdivision needs a 2-element face");
  if (!gamma.contains(e)) throw Error(Errc::FaceNotPresent, "edge is not a face of Γ");
  if (!verify_boolean(gamma, dec.S, dec.d, partition)) {
    throw Error(Errc::IncompatibleDecompositions, "decomposition does not describe Γ");
  }
  const int d = dec.d;
  GenBoolDecomposition g;
  g.v = gamma.n_vertices();
  Vertex x = e.min();
  Vertex y = e.max();
  const int bx = position(partition.boolean, x);
  const int by = position(partition.boolean, y);
  using Piece = GenBoolPiece;
  if (bx >= 0 && by >= 0) {
    g.proof_case = 1;
    int ia = bx + 1;
    int ib = by + 1;
    if (ia > ib) {
      std::swap(ia, ib);
      std::swap(x, y);
    }
    g.a = x;
    g.b = y;
    Piece keep;
    keep.not_all_of = {ia, ib};
    g.pieces.push_back(keep);
    Piece doubled;
    doubled.required = {ia, ib};
    doubled.max_size = (d - ib) / 2;
    for (auto& p : replaced(doubled)) g.pieces.push_back(p);
  } else if (bx >= 0 || by >= 0) {
    g.proof_case = 2;
    if (bx >= 0) std::swap(x, y);
    g.a = x;
    g.b = y;
    const int ib = std::max(bx, by) + 1;
    Piece away;
    away.core = Piece::Core::antistar;
    g.pieces.push_back(away);
    Piece star_keep;
    star_keep.core = Piece::Core::open_star;
    star_keep.not_all_of = {ib};
    g.pieces.push_back(star_keep);
    Piece doubled;
    doubled.core = Piece::Core::open_star;
    doubled.required = {ib};
    doubled.min_size = 1;
    doubled.max_size = (d - ib) / 2;
    for (auto& p : replaced(doubled)) g.pieces.push_back(p);
  } else {
    g.proof_case = 3;
    g.a = x;
    g.b = y;
    Piece keep;
    keep.core = Piece::Core::avoids_edge;
    g.pieces.push_back(keep);
    Piece doubled;
    doubled.core = Piece::Core::contains_edge;
    doubled.min_size = 2;
    for (auto& p : replaced(doubled)) g.pieces.push_back(p);
  }
  return g;
}

std::vector<VertexSet> genbool_faces(const GenBoolPiece& piece, const GenBoolDecomposition& g,
                                     const BooleanDecomposition& dec, const VertexPartition& partition) {
  const int ca = position(partition.core, g.a);
  const int cb = position(partition.core, g.b);
  std::vector<VertexSet> out;
  for (VertexSet F : dec.S.faces()) {
    bool ok = true;
    switch (piece.core) {
      case GenBoolPiece::Core::all: break;
      case GenBoolPiece::Core::open_star: ok = ca >= 0 && F.contains(ca); break;
      case GenBoolPiece::Core::antistar: ok = !(ca >= 0 && F.contains(ca)); break;
      case GenBoolPiece::Core::contains_edge: ok = ca >= 0 && cb >= 0 && F.contains(ca) && F.contains(cb); break;
      case GenBoolPiece::Core::avoids_edge: ok = !(ca >= 0 && cb >= 0 && F.contains(ca) && F.contains(cb)); break;
    }
    if (!ok || F.size() < piece.min_size || (piece.max_size >= 0 && F.size() > piece.max_size)) continue;
    const int room = dec.d - 2 * F.size();
    VertexSet required;
    VertexSet together;
    for (int i : piece.required) required.insert(i - 1);
    for (int i : piece.not_all_of) together.insert(i - 1);
    for_each_subset(VertexSet::range(room), [&](VertexSet G) {
      if (!required.is_subset_of(G)) return;
      if (!together.empty() && together.is_subset_of(G)) return;
      VertexSet X = map_set(F, partition.core) | map_set(G, partition.boolean);
      switch (piece.replace) {
        case GenBoolPiece::Replace::none: break;
        case GenBoolPiece::Replace::drop_a: X = X.without(g.a).with(g.v); break;
        case GenBoolPiece::Replace::drop_b: X = X.without(g.b).with(g.v); break;
        case GenBoolPiece::Replace::drop_both: X = X.without(g.a).without(g.b).with(g.v); break;
      }
      out.push_back(X);
    });
  }
  return out;
}

bool verify_genbool_partition(const SimplicialComplex& gamma, const GenBoolDecomposition& g,
                              const BooleanDecomposition& dec, const VertexPartition& partition) {
  std::vector<VertexSet> all;
  for (const auto& piece : g.pieces) {
    const auto faces = genbool_faces(piece, g, dec, partition);
    all.insert(all.end(), faces.begin(), faces.end());
  }
  const std::vector<std::uint64_t> got = sorted_bits(all);
  if (std::adjacent_find(got.begin(), got.end()) != got.end()) return false;
  return got == sorted_bits(edge_subdivision(gamma, VertexSet{g.a, g.b}).faces());
}

}  // namespace flagkit
