#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "helly/constructions.hpp"
#include "helly/fractional.hpp"
#include "helly/hsystem.hpp"
#include "helly/properties.hpp"
#include "helly/selection.hpp"

namespace helly::cli {

using json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

/// Parsed instance file. `raw` is kept for hashing.
struct Instance {
  json raw;
  Family family;
  std::optional<ColorClasses> classes;
  MonotoneProperty property;
};

json rational_to_json(const Rational& value);
Rational rational_from_json(const json& value);
json vector_to_json(const Vector& values);
Vector vector_from_json(const json& values);

json property_to_json(const MonotoneProperty& property);
MonotoneProperty property_from_json(const json& value);
/// "nonempty", "volume>=V", "contains>=N:x,y;x,y", or a JSON object.
MonotoneProperty property_from_text(const std::string& text);

json genspec_to_json(const GenSpec& spec);
GenSpec genspec_from_json(const json& value);

json instance_to_json(const Family& family, const std::optional<ColorClasses>& classes,
                      const MonotoneProperty& property, const json& meta);
Instance instance_from_json(const json& value);

/// SHA-256 of the compact, key-sorted serialization.
std::string instance_hash(const json& instance);

/// Canonical file text: two-space indent, sorted keys, trailing newline.
std::string canonical_text(const json& value);

json to_json(const StrongHellyWitness& w);
json to_json(const SelectionWitness& w);
json to_json(const WeakColorfulResult& r);
json to_json(const ChainWitness& w);
json to_json(const FractionalWitness& w);
json to_json(const KPlusOneWitness& w);
json to_json(const PairsWitness& w);
json to_json(const PiercingFamily& pins, const Family& family);
json to_json(const HypothesisFailed& failure);

StrongHellyWitness strong_from_json(const json& j);
SelectionWitness selection_from_json(const json& j);
WeakColorfulResult weak_from_json(const json& j, const Family& members);
ChainWitness chain_from_json(const json& j);
FractionalWitness fractional_from_json(const json& j);
KPlusOneWitness kplus1_from_json(const json& j, const Family& family);
PairsWitness pairs_from_json(const json& j);
PiercingFamily pierce_from_json(const json& j, const Family& family);
HypothesisFailed failure_from_json(const json& j);

}  // namespace helly::cli
