#pragma once

// Minimal JSON Schema checker covering the subset the shipped schema uses:
// type, const, enum, required, properties, additionalProperties,
// patternProperties, items, minItems/maxItems, minimum/maximum, oneOf, $ref
// into #/definitions. Test-only code.

#include <json.hpp>
#include <regex>
#include <string>
#include <vector>

namespace schema_check {

using Json = nlohmann::json;

class Validator {
 public:
  explicit Validator(const Json& root) : root_(root) {}

  bool validate(const Json& value, const Json& schema, std::string* why = nullptr) const {
    std::string local;
    std::string& err = why != nullptr ? *why : local;
    return check(value, schema, "$", err);
  }

 private:
  static bool type_matches(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  const Json& resolve(const Json& schema) const {
    if (schema.contains("$ref")) {
      const std::string ref = schema.at("$ref").get<std::string>();
      const std::string prefix = "#/definitions/";
      if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref: " + ref);
      return root_.at("definitions").at(ref.substr(prefix.size()));
    }
    return schema;
  }

  bool check(const Json& v, const Json& raw_schema, const std::string& path,
             std::string& err) const {
    const Json& schema = resolve(raw_schema);

    if (schema.contains("oneOf")) {
      int hits = 0;
      for (const Json& candidate : schema.at("oneOf")) {
        std::string ignored;
        if (check(v, candidate, path, ignored)) ++hits;
      }
      if (hits != 1) {
        err = path + ": matched " + std::to_string(hits) + " of the oneOf alternatives";
        return false;
      }
      return true;
    }
    if (schema.contains("const")) {
      if (v != schema.at("const")) {
        err = path + ": value does not equal the required constant";
        return false;
      }
      return true;
    }
    if (schema.contains("enum")) {
      for (const Json& option : schema.at("enum"))
        if (v == option) return true;
      err = path + ": value not in enum";
      return false;
    }
    if (schema.contains("type") && !type_matches(v, schema.at("type").get<std::string>())) {
      err = path + ": expected type " + schema.at("type").get<std::string>();
      return false;
    }
    if (v.is_number()) {
      if (schema.contains("minimum") && v.get<double>() < schema.at("minimum").get<double>()) {
        err = path + ": below minimum";
        return false;
      }
      if (schema.contains("maximum") && v.get<double>() > schema.at("maximum").get<double>()) {
        err = path + ": above maximum";
        return false;
      }
    }
    if (v.is_array()) {
      if (schema.contains("minItems") && v.size() < schema.at("minItems").get<std::size_t>()) {
        err = path + ": too few items";
        return false;
      }
      if (schema.contains("maxItems") && v.size() > schema.at("maxItems").get<std::size_t>()) {
        err = path + ": too many items";
        return false;
      }
      if (schema.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i)
          if (!check(v[i], schema.at("items"), path + "[" + std::to_string(i) + "]", err))
            return false;
      }
    }
    if (v.is_object()) {
      if (schema.contains("required")) {
        for (const Json& key : schema.at("required")) {
          if (!v.contains(key.get<std::string>())) {
            err = path + ": missing required key " + key.get<std::string>();
            return false;
          }
        }
      }
      for (auto it = v.begin(); it != v.end(); ++it) {
        bool handled = false;
        if (schema.contains("properties") && schema.at("properties").contains(it.key())) {
          handled = true;
          if (!check(it.value(), schema.at("properties").at(it.key()),
                     path + "." + it.key(), err))
            return false;
        }
        if (!handled && schema.contains("patternProperties")) {
          for (auto ps = schema.at("patternProperties").begin();
               ps != schema.at("patternProperties").end(); ++ps) {
            if (std::regex_match(it.key(), std::regex(ps.key()))) {
              handled = true;
              if (!check(it.value(), ps.value(), path + "." + it.key(), err)) return false;
              break;
            }
          }
        }
        if (!handled && schema.contains("additionalProperties")) {
          const Json& ap = schema.at("additionalProperties");
          if (ap.is_boolean()) {
            if (!ap.get<bool>()) {
              err = path + ": unexpected key " + it.key();
              return false;
            }
          } else if (!check(it.value(), ap, path + "." + it.key(), err)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  const Json& root_;
};

}  // namespace schema_check
