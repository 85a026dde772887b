#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wildauto/classify.hpp"
#include "wildauto/normal_forms.hpp"
#include "wildauto/unipotency.hpp"

namespace wildauto {

// Machine-readable documents. Structural counts (ranks, multiplicities,
// conductors) are JSON numbers; unbounded integer values (matrix entries,
// coordinates, torsion invariants, coefficients, j, GK numbers) are decimal
// strings so nothing is lost in transit. Parsers accept either form.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json int_to_json(const Int& v);
Int json_to_int(const Json& j);  // accepts decimal string or JSON integer

Json matrix_to_json(const IntMatrix& m);
IntMatrix json_to_matrix(const Json& j);

Json poly_to_json(const IntPoly& p);
IntPoly json_to_poly(const Json& j);

Json smith_to_json(const SmithDecomposition& s);
Json quasi_unipotency_to_json(const QuasiUnipotencyVerdict& v);

Json group_to_json(const FGAbelianGroup& g);
FGAbelianGroup json_to_group(const Json& j);

Json group_element_to_json(const GroupElement& e);
GroupElement json_to_group_element(const Json& j, const FGAbelianGroup& group);

Json variety_to_json(const VarietyModel& m);
VarietyModel json_to_variety(const Json& j);

Json point_to_json(const Point& p);
Point json_to_point(const Json& j, const VarietyModel& model);

Json endo_to_json(const BlockEndomorphism& phi);
BlockEndomorphism json_to_endo(const Json& j);

Json automorphism_to_json(const Automorphism& sigma);
Automorphism json_to_automorphism(const Json& j, const VarietyModel& model);

Json wildness_to_json(const WildnessVerdict& v);
Json num_action_to_json(const NumAction& a);
Json gk_to_json(const GkResult& g);
Json generation_to_json(const GenerationResult& r);
Json report_to_json(const AnalysisReport& r);

/// Parse a full analysis input document {"schema_version", "variety",
/// "automorphism"}; throws ParseError on malformed input and ModelError on
/// valid JSON describing an invalid model.
struct AnalysisInput {
  VarietyModel model;
  Automorphism sigma;
};
AnalysisInput parse_analysis_input(const Json& doc);

/// Parse {"variety", "point"} or {"variety", "points"} documents.
struct GeneratesInput {
  VarietyModel model;
  std::vector<Point> points;
  bool set_mode = false;
};
GeneratesInput parse_generates_input(const Json& doc);

Json parse_json_text(const std::string& text);  // ParseError on bad syntax

}  // namespace wildauto
