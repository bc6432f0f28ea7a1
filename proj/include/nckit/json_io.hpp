#pragma once

#include <json.hpp>

#include "nckit/complex.hpp"
#include "nckit/presentation.hpp"

namespace nckit {

using Json = nlohmann::ordered_json;

Json to_json(const VertexId& v);
VertexId vertex_from_json(const Json& j);

/// {"vertices": [...], "maximal": [[...], ...]}
Json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

Json to_json(const RealizationPoint& p);
RealizationPoint realization_point_from_json(const Json& j);

/// {"complex": {...}, "variant": "full"|"flag"|"abelian"}
Json to_json(const AlgebraPresentation& p);
PresentationPtr presentation_from_json(const Json& j);

/// {"source": {...}, "target": {...}, "images": {gen: [{"coeff": c, "word":
/// [...]}, ...]}} where a coefficient is a number, a rational string "p/q",
/// or an array of those (coefficients of powers of t).
Json to_json(const GeneratorAssignment& a);
GeneratorAssignment assignment_from_json(const Json& j);

Json load_json_file(const std::string& path_or_dash);  // "-" reads stdin

}  // namespace nckit
