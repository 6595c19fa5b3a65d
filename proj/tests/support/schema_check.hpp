#pragma once

// Validates JSON against the subset of JSON Schema used by the report
// schema: type, required, properties, additionalProperties=false, items,
// enum, minimum. Returns the first violation, empty when valid.

#include <fstream>
#include <string>

#include <json.hpp>

namespace hermitex::testing {

inline bool matches_type(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  return false;
}

inline std::string schema_violation(const nlohmann::json& value, const nlohmann::json& schema,
                                    const std::string& path = "$") {
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || matches_type(value, t.get<std::string>());
    } else {
      ok = matches_type(value, schema["type"].get<std::string>());
    }
    if (!ok) return path + ": expected type " + schema["type"].dump();
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& option : schema["enum"]) found = found || option == value;
    if (!found) return path + ": value " + value.dump() + " not in enum";
  }
  if (schema.contains("minimum") && value.is_number() && value.get<double>() < schema["minimum"].get<double>()) {
    return path + ": below minimum";
  }
  if (value.is_object()) {
    for (const auto& key : schema.value("required", nlohmann::json::array())) {
      if (!value.contains(key.get<std::string>())) return path + ": missing " + key.get<std::string>();
    }
    const auto properties = schema.value("properties", nlohmann::json::object());
    for (const auto& [key, item] : value.items()) {
      if (properties.contains(key)) {
        if (auto v = schema_violation(item, properties[key], path + "." + key); !v.empty()) return v;
      } else if (schema.contains("additionalProperties") && schema["additionalProperties"] == false) {
        return path + ": unexpected property " + key;
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (auto v = schema_violation(value[i], schema["items"], path + "[" + std::to_string(i) + "]"); !v.empty()) {
        return v;
      }
    }
  }
  return {};
}

inline nlohmann::json load_report_schema() {
  std::ifstream in(HERMITEX_SCHEMA_PATH);
  return nlohmann::json::parse(in);
}

}  // namespace hermitex::testing
