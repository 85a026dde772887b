#include "wildauto/schema_check.hpp"

#include <regex>

namespace wildauto {

namespace {

struct Context {
  const Json* root;
  std::vector<std::string> errors;
};

bool type_matches(const std::string& type, const Json& doc) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "integer") return doc.is_number_integer() || doc.is_number_unsigned();
  if (type == "number") return doc.is_number();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  return false;
}

const Json* resolve_ref(const Context& ctx, const std::string& ref) {
  const std::string prefix = "#/$defs/";
  if (ref.rfind(prefix, 0) != 0) return nullptr;
  const std::string name = ref.substr(prefix.size());
  if (!ctx.root->contains("$defs")) return nullptr;
  const Json& defs = ctx.root->at("$defs");
  if (!defs.contains(name)) return nullptr;
  return &defs.at(name);
}

void validate_node(Context& ctx, const Json& schema, const Json& doc, const std::string& path);

bool validates_quietly(Context& ctx, const Json& schema, const Json& doc) {
  Context probe{ctx.root, {}};
  validate_node(probe, schema, doc, "");
  return probe.errors.empty();
}

void validate_node(Context& ctx, const Json& schema, const Json& doc, const std::string& path) {
  if (schema.contains("$ref")) {
    const Json* target = resolve_ref(ctx, schema.at("$ref").get<std::string>());
    if (!target) {
      ctx.errors.push_back(path + ": unresolvable $ref " + schema.at("$ref").get<std::string>());
      return;
    }
    validate_node(ctx, *target, doc, path);
    return;
  }

  if (schema.contains("oneOf")) {
    std::size_t matches = 0;
    for (const Json& option : schema.at("oneOf"))
      if (validates_quietly(ctx, option, doc)) ++matches;
    if (matches != 1) {
      ctx.errors.push_back(path + ": matched " + std::to_string(matches) +
                           " oneOf branches (need exactly 1)");
      return;
    }
  }

  if (schema.contains("type")) {
    const Json& t = schema.at("type");
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), doc);
    } else if (t.is_array()) {
      for (const Json& opt : t)
        if (type_matches(opt.get<std::string>(), doc)) ok = true;
    }
    if (!ok) {
      ctx.errors.push_back(path + ": type mismatch (got " + std::string(doc.type_name()) + ")");
      return;
    }
  }

  if (schema.contains("enum")) {
    bool found = false;
    for (const Json& v : schema.at("enum"))
      if (v == doc) found = true;
    if (!found) ctx.errors.push_back(path + ": value not in enum");
  }

  if (schema.contains("pattern") && doc.is_string()) {
    std::regex re(schema.at("pattern").get<std::string>());
    if (!std::regex_search(doc.get<std::string>(), re))
      ctx.errors.push_back(path + ": string does not match pattern " +
                           schema.at("pattern").get<std::string>());
  }

  if (doc.is_number() && schema.contains("minimum")) {
    if (doc.get<double>() < schema.at("minimum").get<double>())
      ctx.errors.push_back(path + ": number below minimum");
  }

  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const Json& name : schema.at("required"))
        if (!doc.contains(name.get<std::string>()))
          ctx.errors.push_back(path + ": missing required property \"" +
                               name.get<std::string>() + "\"");
    }
    const Json* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
    for (const auto& [key, value] : doc.items()) {
      if (props && props->contains(key)) {
        validate_node(ctx, props->at(key), value, path + "/" + key);
      } else if (schema.contains("additionalProperties") &&
                 schema.at("additionalProperties").is_boolean() &&
                 !schema.at("additionalProperties").get<bool>()) {
        ctx.errors.push_back(path + ": unexpected property \"" + key + "\"");
      }
    }
  }

  if (doc.is_array()) {
    if (schema.contains("minItems") && doc.size() < schema.at("minItems").get<std::size_t>())
      ctx.errors.push_back(path + ": array shorter than minItems");
    if (schema.contains("items")) {
      std::size_t idx = 0;
      for (const Json& item : doc) {
        validate_node(ctx, schema.at("items"), item, path + "/" + std::to_string(idx));
        ++idx;
      }
    }
  }
}

}  // namespace

std::vector<std::string> schema_violations(const Json& schema, const Json& doc) {
  Context ctx{&schema, {}};
  validate_node(ctx, schema, doc, "$");
  return ctx.errors;
}

}  // namespace wildauto
