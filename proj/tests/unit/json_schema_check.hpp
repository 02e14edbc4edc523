#pragma once

// Validator for the JSON Schema subset used by docs/report.schema.json:
// type, required, properties, additionalProperties, items, minItems, maxItems,
// enum, minimum, anyOf and local $ref.

#include <string>
#include <vector>

#include "json.hpp"

namespace testing_support {

class SchemaCheck {
 public:
  explicit SchemaCheck(nlohmann::json root) : root_(std::move(root)) {}

  std::vector<std::string> validate(const nlohmann::json& doc) const {
    std::vector<std::string> errs;
    check(root_, doc, "$", errs);
    return errs;
  }

 private:
  nlohmann::json root_;

  const nlohmann::json& resolve(const nlohmann::json& s) const {
    if (!s.contains("$ref")) return s;
    std::string ref = s["$ref"];
    return root_.at(nlohmann::json::json_pointer(ref.substr(1)));
  }

  static bool type_ok(const std::string& t, const nlohmann::json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  void check(const nlohmann::json& schema_in, const nlohmann::json& v, const std::string& at,
             std::vector<std::string>& errs) const {
    const auto& s = resolve(schema_in);
    if (s.contains("anyOf")) {
      bool any = false;
      for (const auto& alt : s["anyOf"]) {
        std::vector<std::string> sub;
        check(alt, v, at, sub);
        if (sub.empty()) any = true;
      }
      if (!any) errs.push_back(at + ": matches no alternative");
    }
    if (s.contains("type") && !type_ok(s["type"], v)) {
      errs.push_back(at + ": expected " + s["type"].get<std::string>());
      return;
    }
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || e == v;
      if (!found) errs.push_back(at + ": not in enum");
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
      errs.push_back(at + ": below minimum");
    if (v.is_object()) {
      for (const auto& r : s.value("required", nlohmann::json::array()))
        if (!v.contains(r.get<std::string>())) errs.push_back(at + ": missing " + r.get<std::string>());
      for (const auto& [k, sub] : v.items()) {
        if (s.contains("properties") && s["properties"].contains(k)) check(s["properties"][k], sub, at + "." + k, errs);
        else if (s.contains("additionalProperties") && s["additionalProperties"].is_object())
          check(s["additionalProperties"], sub, at + "." + k, errs);
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) errs.push_back(at + ": too few items");
      if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) errs.push_back(at + ": too many items");
      if (s.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], at + "[" + std::to_string(i) + "]", errs);
    }
  }
};

}  // namespace testing_support
