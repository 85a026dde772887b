#include "wildauto/json_io.hpp"

#include "wildauto/error.hpp"

namespace wildauto {

namespace {

const Json& require_field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t json_to_count(const Json& j, const char* what) {
  Int v = json_to_int(j);
  if (v < 0 || !v.fits_ulong_p()) throw ParseError(std::string(what) + " out of range");
  return static_cast<std::size_t>(v.get_ui());
}

void check_schema_version(const Json& doc) {
  if (!doc.is_object()) throw ParseError("input document must be a JSON object");
  if (doc.contains("schema_version")) {
    const Json& v = doc.at("schema_version");
    if (!v.is_string() || v.get<std::string>() != kSchemaVersion)
      throw ParseError("unsupported schema_version (expected \"1\")");
  }
}

}  // namespace

Json int_to_json(const Int& v) { return Json(to_decimal(v)); }

Int json_to_int(const Json& j) {
  if (j.is_string()) {
    auto v = parse_decimal(j.get<std::string>());
    if (!v) throw ParseError("not a decimal integer string: \"" + j.get<std::string>() + "\"");
    return *v;
  }
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  throw ParseError("expected an integer (decimal string or JSON number)");
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix json_to_matrix(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of arrays");
  std::vector<std::vector<Int>> rows;
  rows.reserve(j.size());
  for (const Json& row : j) {
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    std::vector<Int> r;
    r.reserve(row.size());
    for (const Json& e : row) r.push_back(json_to_int(e));
    rows.push_back(std::move(r));
  }
  if (!rows.empty()) {
    for (const auto& r : rows)
      if (r.size() != rows.front().size()) throw ParseError("matrix rows have unequal lengths");
  }
  return IntMatrix::from_rows(rows);
}

Json poly_to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(int_to_json(c));
  return Json{{"coefficients", std::move(coeffs)}, {"text", p.to_string()}};
}

IntPoly json_to_poly(const Json& j) {
  const Json& coeffs = require_field(j, "coefficients");
  if (!coeffs.is_array()) throw ParseError("polynomial coefficients must be an array");
  std::vector<Int> c;
  c.reserve(coeffs.size());
  for (const Json& e : coeffs) c.push_back(json_to_int(e));
  return IntPoly(std::move(c));
}

Json smith_to_json(const SmithDecomposition& s) {
  return Json{{"U", matrix_to_json(s.U)},
              {"D", matrix_to_json(s.D)},
              {"V", matrix_to_json(s.V)},
              {"rank", s.rank}};
}

Json quasi_unipotency_to_json(const QuasiUnipotencyVerdict& v) {
  Json out;
  switch (v.status) {
    case QuasiUnipotencyVerdict::Status::Unipotent:
      out["status"] = "Unipotent";
      break;
    case QuasiUnipotencyVerdict::Status::QuasiUnipotent:
      out["status"] = "QuasiUnipotent";
      break;
    case QuasiUnipotencyVerdict::Status::No:
      out["status"] = "No";
      break;
  }
  if (v.quasi_unipotent())
    out["order"] = v.order;
  else
    out["order"] = nullptr;
  Json factors = Json::array();
  for (const auto& [d, mult] : v.cyclotomic_factors)
    factors.push_back(Json{{"d", d}, {"multiplicity", mult}});
  out["cyclotomic_factors"] = std::move(factors);
  out["witness"] = v.witness ? poly_to_json(*v.witness) : Json(nullptr);
  return out;
}

Json group_to_json(const FGAbelianGroup& g) {
  Json torsion = Json::array();
  for (const Int& m : g.torsion) torsion.push_back(int_to_json(m));
  return Json{{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

FGAbelianGroup json_to_group(const Json& j) {
  FGAbelianGroup g;
  g.free_rank = json_to_count(require_field(j, "free_rank"), "free_rank");
  const Json& torsion = require_field(j, "torsion");
  if (!torsion.is_array()) throw ParseError("torsion must be an array");
  for (const Json& e : torsion) g.torsion.push_back(json_to_int(e));
  return g;
}

Json group_element_to_json(const GroupElement& e) {
  Json freej = Json::array();
  for (const Int& v : e.free_coords()) freej.push_back(int_to_json(v));
  Json torj = Json::array();
  for (const Int& v : e.torsion_coords()) torj.push_back(int_to_json(v));
  return Json{{"free", std::move(freej)}, {"torsion", std::move(torj)}};
}

GroupElement json_to_group_element(const Json& j, const FGAbelianGroup& group) {
  const Json& freej = require_field(j, "free");
  const Json& torj = require_field(j, "torsion");
  if (!freej.is_array() || !torj.is_array())
    throw ParseError("group element coordinates must be arrays");
  std::vector<Int> f, t;
  for (const Json& e : freej) f.push_back(json_to_int(e));
  for (const Json& e : torj) t.push_back(json_to_int(e));
  if (f.size() != group.free_rank || t.size() != group.torsion.size())
    throw ParseError("group element coordinate count does not match the point group");
  return GroupElement(group, std::move(f), std::move(t));
}

Json variety_to_json(const VarietyModel& m) {
  Json blocks = Json::array();
  for (const auto& b : m.blocks) {
    blocks.push_back(Json{{"factor", b.factor_id},
                          {"factor_dim", b.factor_dim},
                          {"multiplicity", b.multiplicity},
                          {"point_group", group_to_json(b.point_group)}});
  }
  return Json{{"blocks", std::move(blocks)}};
}

VarietyModel json_to_variety(const Json& j) {
  VarietyModel m;
  const Json& blocks = require_field(j, "blocks");
  if (!blocks.is_array()) throw ParseError("variety blocks must be an array");
  for (const Json& bj : blocks) {
    VarietyBlock b;
    const Json& factor = require_field(bj, "factor");
    if (!factor.is_string()) throw ParseError("factor id must be a string");
    b.factor_id = factor.get<std::string>();
    if (bj.contains("cm") && bj.at("cm").is_boolean() && bj.at("cm").get<bool>())
      throw ModelError("CM factors are not modeled (End must be Z); rejected");
    b.factor_dim = bj.contains("factor_dim") ? json_to_count(bj.at("factor_dim"), "factor_dim") : 1;
    b.multiplicity = json_to_count(require_field(bj, "multiplicity"), "multiplicity");
    b.point_group = json_to_group(require_field(bj, "point_group"));
    m.blocks.push_back(std::move(b));
  }
  m.validate();
  return m;
}

Json point_to_json(const Point& p) {
  Json blocks = Json::array();
  for (const auto& block : p.entries) {
    Json entries = Json::array();
    for (const auto& e : block) entries.push_back(group_element_to_json(e));
    blocks.push_back(std::move(entries));
  }
  return blocks;
}

Point json_to_point(const Json& j, const VarietyModel& model) {
  if (!j.is_array() || j.size() != model.blocks.size())
    throw ParseError("point must be an array with one entry list per block");
  Point p;
  for (std::size_t b = 0; b < model.blocks.size(); ++b) {
    const Json& entries = j.at(b);
    if (!entries.is_array() || entries.size() != model.blocks[b].multiplicity)
      throw ParseError("point block entry count must equal the block multiplicity");
    std::vector<GroupElement> row;
    row.reserve(entries.size());
    for (const Json& e : entries)
      row.push_back(json_to_group_element(e, model.blocks[b].point_group));
    p.entries.push_back(std::move(row));
  }
  return p;
}

Json endo_to_json(const BlockEndomorphism& phi) {
  Json blocks = Json::array();
  for (const auto& m : phi.blocks) blocks.push_back(matrix_to_json(m));
  return blocks;
}

BlockEndomorphism json_to_endo(const Json& j) {
  if (!j.is_array()) throw ParseError("endomorphism must be an array of block matrices");
  BlockEndomorphism phi;
  for (const Json& mj : j) phi.blocks.push_back(json_to_matrix(mj));
  return phi;
}

Json automorphism_to_json(const Automorphism& sigma) {
  return Json{{"alpha", endo_to_json(sigma.alpha)}, {"b", point_to_json(sigma.b)}};
}

Automorphism json_to_automorphism(const Json& j, const VarietyModel& model) {
  Automorphism sigma;
  sigma.alpha = json_to_endo(require_field(j, "alpha"));
  sigma.b = json_to_point(require_field(j, "b"), model);
  return sigma;
}

Json wildness_to_json(const WildnessVerdict& v) {
  Json out{{"wild", v.wild},
           {"alpha_unipotent", v.alpha_unipotent},
           {"route", v.route == WildRoute::Quotient ? "Quotient" : "SetGeneration"}};
  if (!v.certificate) {
    out["certificate"] = nullptr;
  } else if (const auto* nu = std::get_if<NonUnipotentFactor>(&*v.certificate)) {
    out["certificate"] = Json{{"kind", "NonUnipotentFactor"},
                              {"block", nu->block_index},
                              {"factor", poly_to_json(nu->factor)}};
  } else {
    const auto& rel = std::get<GenerationCertificate>(*v.certificate);
    Json theta = Json::array();
    for (const Int& t : rel.theta) theta.push_back(int_to_json(t));
    out["certificate"] =
        Json{{"kind", "RelationVector"}, {"block", rel.block_index}, {"theta", std::move(theta)}};
  }
  return out;
}

Json num_action_to_json(const NumAction& a) {
  switch (a.kind) {
    case NumAction::Kind::IdentityOnNum:
      return Json{{"kind", "IdentityOnNum"}};
    case NumAction::Kind::ExplicitMatrix:
      return Json{{"kind", "ExplicitMatrix"}, {"matrix", matrix_to_json(a.matrix)}};
    case NumAction::Kind::Unavailable:
      return Json{{"kind", "Unavailable"}, {"reason", a.reason}};
  }
  throw ConsistencyError("unreachable NumAction kind");
}

Json gk_to_json(const GkResult& g) {
  auto opt = [](const std::optional<long>& v) {
    return v ? Json(std::to_string(*v)) : Json(nullptr);
  };
  Json out{{"exact", opt(g.exact)},
           {"lower", opt(g.lower)},
           {"upper", opt(g.upper)},
           {"j", opt(g.j)}};
  if (g.unavailable_reason) out["reason"] = *g.unavailable_reason;
  return out;
}

Json generation_to_json(const GenerationResult& r) {
  Json out{{"generates", r.generates}};
  if (r.certificate) {
    Json theta = Json::array();
    for (const Int& t : r.certificate->theta) theta.push_back(int_to_json(t));
    out["certificate"] =
        Json{{"block", r.certificate->block_index}, {"theta", std::move(theta)}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

Json report_to_json(const AnalysisReport& r) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["model"] = Json{{"variety", variety_to_json(r.model)},
                      {"automorphism", automorphism_to_json(r.sigma)}};
  out["alpha_unipotent"] = r.alpha_unipotent;
  out["wild"] = wildness_to_json(r.wild);
  out["num_action"] = num_action_to_json(r.num_action);
  out["j"] = r.j ? Json(std::to_string(*r.j)) : Json(nullptr);
  out["gk"] = gk_to_json(r.gk);
  out["sigma_ample_verdict"] = to_string(r.sigma_ample_verdict);
  switch (r.projectively_simple.status) {
    case ProjectiveSimplicity::Status::Yes:
      out["projectively_simple"] = Json{{"status", "Yes"}};
      break;
    case ProjectiveSimplicity::Status::No:
      out["projectively_simple"] = Json{{"status", "No"}};
      break;
    case ProjectiveSimplicity::Status::NotApplicable:
      out["projectively_simple"] =
          Json{{"status", "NotApplicable"}, {"reason", r.projectively_simple.reason}};
      break;
  }
  out["classification_label"] =
      r.classification_label ? Json(*r.classification_label) : Json(nullptr);
  return out;
}

AnalysisInput parse_analysis_input(const Json& doc) {
  check_schema_version(doc);
  AnalysisInput input;
  input.model = json_to_variety(require_field(doc, "variety"));
  input.sigma = json_to_automorphism(require_field(doc, "automorphism"), input.model);
  return input;
}

GeneratesInput parse_generates_input(const Json& doc) {
  check_schema_version(doc);
  GeneratesInput input;
  input.model = json_to_variety(require_field(doc, "variety"));
  if (doc.contains("points")) {
    const Json& pts = doc.at("points");
    if (!pts.is_array()) throw ParseError("points must be an array of points");
    for (const Json& p : pts) input.points.push_back(json_to_point(p, input.model));
    input.set_mode = true;
  } else {
    input.points.push_back(json_to_point(require_field(doc, "point"), input.model));
    input.set_mode = false;
  }
  return input;
}

Json parse_json_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON input");
  return doc;
}

}  // namespace wildauto
