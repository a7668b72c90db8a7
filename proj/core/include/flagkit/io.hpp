#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagkit/balanced.hpp"
#include "flagkit/booldecomp.hpp"
#include "flagkit/cell_poset.hpp"
#include "flagkit/danzer.hpp"
#include "flagkit/poly.hpp"

namespace flagkit::io {

using Json = nlohmann::ordered_json;

/// {"n": ..., "facets": [[...], ...]}, facets in lexicographic order.
Json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

/// {"kind": ..., "elements": [{"id","dim","support"}], "covers": [[lo, hi], ...]} by id.
Json to_json(const CellPoset& p);
CellPoset poset_from_json(const Json& j);

/// Coefficient strings "num/den" in degree order.
Json to_json(const RatPoly& p);
RatPoly poly_from_json(const Json& j);

Json to_json(const FVector& f);
Json to_json(const SignedFace& f);
SignedFace signed_face_from_json(const Json& j);
Json to_json(const TripleFace& t);
TripleFace triple_from_json(const Json& j);

/// {"S": <complex>, "d": ..., "vertex_partition": {"core": [...], "boolean": [...]}}.
Json to_json(const BooleanDecomposition& dec, const VertexPartition& partition);
std::pair<BooleanDecomposition, VertexPartition> decomposition_from_json(const Json& j);

/// Parses text, mapping library and syntax failures to ParseError.
Json parse(const std::string& text);
/// Compact single-line form used for byte comparisons.
std::string dump(const Json& j);

/// Header and one row of the per-input statistics table.
std::string csv_header();
std::string csv_row(const std::string& name, const SimplicialComplex& c);

}  // namespace flagkit::io
