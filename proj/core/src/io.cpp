#include "flagkit/io.hpp"

#include <algorithm>
#include <sstream>

#include "flagkit/hvector.hpp"

namespace flagkit::io {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

Json vertex_list(VertexSet s) { return Json(s.members()); }

VertexSet vertex_set(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "vertex lists are arrays");
  VertexSet s;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw Error(Errc::ParseError, "vertex labels are nonnegative integers");
    if (v.get<long long>() >= VertexSet::kMaxVertices) throw Error(Errc::GroundSetTooLarge, "vertex label above 63");
    s.insert(v.get<int>());
  }
  return s;
}

Json color_list_json(ColorSet s) { return Json(color_list(s)); }

ColorSet color_set(const Json& j) {
  ColorSet s = 0;
  for (int c : j.get<std::vector<int>>()) {
    if (c < 1 || c > 30) throw Error(Errc::ParseError, "colors lie in 1..30");
    s |= ColorSet{1} << c;
  }
  return s;
}

template <typename Range>
std::string joined(const Range& xs) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : xs) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  return out.str();
}

std::string coeff_text(const Rational& q) {
  return denominator(q) == 1 ? numerator(q).str() : to_fraction_string(q);
}

std::string poly_cell(const RatPoly& p) {
  std::vector<std::string> cs;
  for (const auto& c : p.coeffs()) cs.push_back(coeff_text(c));
  return joined(cs);
}

}  // namespace

Json to_json(const SimplicialComplex& c) {
  Json facets = Json::array();
  for (VertexSet f : c.facets()) facets.push_back(vertex_list(f));
  return Json{{"n", c.n_vertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  const Json& facets = j.at("facets");
  if (!facets.is_array()) throw Error(Errc::ParseError, "'facets' must be an array");
  std::vector<VertexSet> gens;
  for (const auto& f : facets) gens.push_back(vertex_set(f));
  return SimplicialComplex(n, gens);
}

Json to_json(const CellPoset& p) {
  Json elements = Json::array();
  for (const auto& e : p.elements()) {
    elements.push_back(Json{{"id", e.id}, {"dim", e.dim}, {"support", vertex_list(e.support)}});
  }
  Json covers = Json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back(Json::array({p.element(lo).id, p.element(hi).id}));
  return Json{{"kind", to_string(p.kind())}, {"elements", elements}, {"covers", covers}};
}

CellPoset poset_from_json(const Json& j) {
  const PosetKind kind = parse_poset_kind(field<std::string>(j, "kind"));
  std::vector<CellElement> elems;
  for (const auto& e : j.at("elements")) {
    elems.push_back({field<int>(e, "id"), field<int>(e, "dim"), vertex_set(e.at("support"))});
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw Error(Errc::ParseError, "covers are [lo, hi] pairs");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return CellPoset(kind, std::move(elems), covers);
}

Json to_json(const RatPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_fraction_string(c));
  return out;
}

RatPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "polynomials are arrays of coefficient strings");
  std::vector<Rational> cs;
  for (const auto& c : j) {
    if (!c.is_string()) throw Error(Errc::ParseError, "coefficients are strings \"num/den\"");
    cs.push_back(parse_fraction(c.get<std::string>()));
  }
  return RatPoly(std::move(cs));
}

Json to_json(const FVector& f) { return Json(f.entries()); }

Json to_json(const SignedFace& f) { return Json(f.coords()); }

SignedFace signed_face_from_json(const Json& j) {
  try {
    return SignedFace::from_coords(j.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Json to_json(const TripleFace& t) {
  return Json{{"F", vertex_list(t.F)}, {"Q", color_list_json(t.Q)}, {"B", color_list_json(t.B)}};
}

TripleFace triple_from_json(const Json& j) {
  try {
    TripleFace t{vertex_set(j.at("F")), color_set(j.at("Q")), color_set(j.at("B"))};
    if (t.Q == 0 || (t.B & ~t.Q) != 0) throw Error(Errc::ParseError, "a triple needs B ⊆ Q with Q nonempty");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Json to_json(const BooleanDecomposition& dec, const VertexPartition& partition) {
  return Json{{"S", to_json(dec.S)},
              {"d", dec.d},
              {"vertex_partition", Json{{"core", partition.core}, {"boolean", partition.boolean}}}};
}

std::pair<BooleanDecomposition, VertexPartition> decomposition_from_json(const Json& j) {
  BooleanDecomposition dec{complex_from_json(j.at("S")), field<int>(j, "d")};
  const Json& p = j.at("vertex_partition");
  VertexPartition partition{field<std::vector<Vertex>>(p, "core"), field<std::vector<Vertex>>(p, "boolean")};
  return {std::move(dec), std::move(partition)};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string dump(const Json& j) { return j.dump(); }

std::string csv_header() { return "name,d,f,h,gamma,g,P"; }

std::string csv_row(const std::string& name, const SimplicialComplex& c) {
  const FVector f = c.f_vector();
  const std::vector<Count> h = h_vector(f);
  std::string gamma, g, P;
  try {
    const SymmetricHVector sh(h);
    gamma = joined(gamma_vector(sh));
    g = poly_cell(g_poly(sh));
    P = poly_cell(p_poly(sh));
  } catch (const Error&) {
    // Odd or non-palindromic h-vectors leave the last three columns empty.
  }
  auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
  std::ostringstream out;
  out << name << "," << (f.size() - 1) << "," << quoted(joined(f.entries())) << "," << quoted(joined(h)) << ","
      << quoted(gamma) << "," << quoted(g) << "," << quoted(P);
  return out.str();
}

}  // namespace flagkit::io
