// Just enough JSON Schema (type, const, enum, required, properties, items,
// allOf, if/then, not) to check reports against schema/report.schema.json.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace testsupport {

inline bool type_matches(const nlohmann::json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

/// Appends one message per violation, prefixed with the JSON pointer.
inline void schema_errors(const nlohmann::json& schema, const nlohmann::json& v, const std::string& where,
                          std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || type_matches(v, t.get<std::string>());
    } else {
      ok = type_matches(v, schema["type"].get<std::string>());
    }
    if (!ok) errors.push_back(where + ": expected type " + schema["type"].dump());
  }
  if (schema.contains("const") && v != schema["const"]) errors.push_back(where + ": expected " + schema["const"].dump());
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || v == e;
    if (!found) errors.push_back(where + ": not one of " + schema["enum"].dump());
  }
  if (v.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!v.contains(key.get<std::string>())) errors.push_back(where + ": missing " + key.get<std::string>());
      }
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema["properties"].items()) {
        if (v.contains(key)) schema_errors(sub, v[key], where + "/" + key, errors);
      }
    }
  }
  if (v.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i) schema_errors(schema["items"], v[i], where + "/" + std::to_string(i), errors);
  }
  if (schema.contains("not")) {
    std::vector<std::string> inner;
    schema_errors(schema["not"], v, where, inner);
    if (inner.empty()) errors.push_back(where + ": matches a forbidden schema");
  }
  if (schema.contains("allOf")) {
    for (const auto& sub : schema["allOf"]) schema_errors(sub, v, where, errors);
  }
  if (schema.contains("if") && schema.contains("then")) {
    std::vector<std::string> cond;
    schema_errors(schema["if"], v, where, cond);
    if (cond.empty()) schema_errors(schema["then"], v, where, errors);
  }
}

}  // namespace testsupport
