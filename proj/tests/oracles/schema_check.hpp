#pragma once

// Minimal JSON Schema checker for the keywords used by schema/*.json:
// type, enum, required, properties, patternProperties, additionalProperties,
// items, minItems, minimum, maximum, exclusiveMinimum, exclusiveMaximum and
// $ref (local "#/$defs/..." or a sibling file name). Not a general validator.

#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hullselect::testing {

class SchemaChecker {
 public:
  explicit SchemaChecker(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Returns one message per violation; empty when `doc` conforms.
  std::vector<std::string> check(const nlohmann::json& doc, const std::string& schema_file) {
    errors_.clear();
    const nlohmann::json& root = load(schema_file);
    visit(doc, root, root, "$");
    return errors_;
  }

 private:
  const nlohmann::json& load(const std::string& name) {
    auto it = cache_.find(name);
    if (it == cache_.end()) {
      std::ifstream in(dir_ / name);
      if (!in) throw std::runtime_error("cannot open schema " + name);
      it = cache_.emplace(name, nlohmann::json::parse(in)).first;
    }
    return it->second;
  }

  static bool has_type(const nlohmann::json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    return false;
  }

  void fail(const std::string& where, const std::string& what) {
    errors_.push_back(where + ": " + what);
  }

  void visit(const nlohmann::json& v, const nlohmann::json& s, const nlohmann::json& root,
             const std::string& where) {
    if (s.contains("$ref")) {
      const std::string ref = s["$ref"];
      if (ref.rfind("#/$defs/", 0) == 0) {
        visit(v, root["$defs"][ref.substr(8)], root, where);
      } else {
        const nlohmann::json& other = load(ref);
        visit(v, other, other, where);
      }
      return;
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, s["type"].get<std::string>());
      }
      if (!ok) return fail(where, "expected type " + s["type"].dump() + ", got " + v.dump());
    }
    if (s.contains("enum")) {
      bool ok = false;
      for (const auto& e : s["enum"]) ok = ok || e == v;
      if (!ok) fail(where, "value " + v.dump() + " not in enum");
    }
    if (v.is_number()) {
      const double x = v.get<double>();
      if (s.contains("minimum") && x < s["minimum"].get<double>()) fail(where, "below minimum");
      if (s.contains("maximum") && x > s["maximum"].get<double>()) fail(where, "above maximum");
      if (s.contains("exclusiveMinimum") && x <= s["exclusiveMinimum"].get<double>()) {
        fail(where, "not above exclusiveMinimum");
      }
      if (s.contains("exclusiveMaximum") && x >= s["exclusiveMaximum"].get<double>()) {
        fail(where, "not below exclusiveMaximum");
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) {
        fail(where, "too few items");
      }
      if (s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          visit(v[i], s["items"], root, where + "[" + std::to_string(i) + "]");
        }
      }
    }
    if (v.is_object()) {
      if (s.contains("required")) {
        for (const auto& key : s["required"]) {
          if (!v.contains(key.get<std::string>())) fail(where, "missing " + key.dump());
        }
      }
      for (const auto& [key, value] : v.items()) {
        const std::string at = where + "." + key;
        bool matched = false;
        if (s.contains("properties") && s["properties"].contains(key)) {
          matched = true;
          visit(value, s["properties"][key], root, at);
        }
        if (s.contains("patternProperties")) {
          for (const auto& [pattern, sub] : s["patternProperties"].items()) {
            if (std::regex_search(key, std::regex(pattern))) {
              matched = true;
              visit(value, sub, root, at);
            }
          }
        }
        if (!matched && s.contains("additionalProperties")) {
          const auto& extra = s["additionalProperties"];
          if (extra.is_boolean()) {
            if (!extra.get<bool>()) fail(at, "unexpected property");
          } else {
            visit(value, extra, root, at);
          }
        }
      }
    }
  }

  std::filesystem::path dir_;
  std::map<std::string, nlohmann::json> cache_;
  std::vector<std::string> errors_;
};

}  // namespace hullselect::testing
