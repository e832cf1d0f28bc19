#include "io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <sstream>

#include "helly/error.hpp"

namespace helly::cli {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t as_uint(const json& v, const char* what) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
  throw Error(std::string(what) + " must be a nonnegative integer");
}

std::uint64_t get_uint(const json& j, const char* key) { return as_uint(field(j, key), key); }

bool get_bool(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_boolean()) throw Error(std::string(key) + " must be a boolean");
  return v.get<bool>();
}

std::string as_string(const json& v, const char* what) {
  if (!v.is_string()) throw Error(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> as_strings(const json& v, const char* what) {
  if (!v.is_array()) throw Error(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(as_string(x, what));
  return out;
}

std::vector<std::string> get_strings(const json& j, const char* key) { return as_strings(field(j, key), key); }

json mpz_to_json(const mpz_class& value) { return value.get_str(); }

mpz_class mpz_from_json(const json& v, const char* what) {
  const std::string text = as_string(v, what);
  const std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
  if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos) {
    throw Error(std::string(what) + " must be an integer string");
  }
  return mpz_class(text, 10);
}

const char* direction_name(ChainDirection d) { return d == ChainDirection::Ascending ? "ascending" : "descending"; }

ChainDirection direction_from(const json& v) {
  const std::string s = as_string(v, "direction");
  if (s == "ascending") return ChainDirection::Ascending;
  if (s == "descending") return ChainDirection::Descending;
  throw Error("unknown chain direction \"" + s + "\"");
}

const char* kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::TightColorful:
      return "tight_colorful";
    case GenKind::TightFractional:
      return "tight_fractional";
    case GenKind::Random:
      return "random";
    case GenKind::Dense:
      return "dense";
  }
  return "random";
}

}  // namespace

json rational_to_json(const Rational& value) { return value.str(); }

Rational rational_from_json(const json& value) {
  if (!value.is_string()) throw Error("rationals must be \"p/q\" strings");
  return Rational::parse(value.get<std::string>());
}

json vector_to_json(const Vector& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

Vector vector_from_json(const json& values) {
  if (!values.is_array()) throw Error("expected an array of rationals");
  Vector out;
  for (const auto& v : values) out.push_back(rational_from_json(v));
  return out;
}

json property_to_json(const MonotoneProperty& property) {
  switch (property.kind()) {
    case MonotoneProperty::Kind::NonEmpty:
      return json{{"kind", "non_empty"}};
    case MonotoneProperty::Kind::VolumeAtLeast:
      return json{{"kind", "volume_at_least"}, {"volume", rational_to_json(property.volume())}};
    case MonotoneProperty::Kind::ContainsAtLeast: {
      json points = json::array();
      for (const auto& p : property.points()) points.push_back(vector_to_json(p));
      return json{{"kind", "contains_at_least"}, {"count", property.count()}, {"points", points}};
    }
    case MonotoneProperty::Kind::AllOf:
    case MonotoneProperty::Kind::AnyOf: {
      json parts = json::array();
      for (const auto& p : property.parts()) parts.push_back(property_to_json(p));
      return json{{"kind", property.kind() == MonotoneProperty::Kind::AllOf ? "all_of" : "any_of"},
                  {"parts", parts}};
    }
  }
  throw Error("unknown property kind");
}

MonotoneProperty property_from_json(const json& value) {
  const std::string kind = as_string(field(value, "kind"), "property kind");
  if (kind == "non_empty") return MonotoneProperty::non_empty();
  if (kind == "volume_at_least") return MonotoneProperty::volume_at_least(rational_from_json(field(value, "volume")));
  if (kind == "contains_at_least") {
    std::vector<Vector> points;
    for (const auto& p : field(value, "points")) points.push_back(vector_from_json(p));
    return MonotoneProperty::contains_at_least(get_uint(value, "count"), std::move(points));
  }
  if (kind == "all_of" || kind == "any_of") {
    std::vector<MonotoneProperty> parts;
    for (const auto& p : field(value, "parts")) parts.push_back(property_from_json(p));
    return kind == "all_of" ? MonotoneProperty::all_of(std::move(parts))
                            : MonotoneProperty::any_of(std::move(parts));
  }
  throw Error("unknown property kind \"" + kind + "\"");
}

MonotoneProperty property_from_text(const std::string& text) {
  if (!text.empty() && text.front() == '{') return property_from_json(json::parse(text));
  if (text == "nonempty" || text == "non_empty") return MonotoneProperty::non_empty();
  if (text.rfind("volume>=", 0) == 0) return MonotoneProperty::volume_at_least(Rational::parse(text.substr(8)));
  if (text.rfind("contains>=", 0) == 0) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw Error("contains>=N needs a point list after ':'");
    const std::size_t count = std::stoul(text.substr(10, colon - 10));
    std::vector<Vector> points;
    std::stringstream all(text.substr(colon + 1));
    std::string point;
    while (std::getline(all, point, ';')) {
      Vector p;
      std::stringstream coords(point);
      std::string c;
      while (std::getline(coords, c, ',')) p.push_back(Rational::parse(c));
      points.push_back(std::move(p));
    }
    return MonotoneProperty::contains_at_least(count, std::move(points));
  }
  throw Error("unrecognized property \"" + text + "\"");
}

json genspec_to_json(const GenSpec& spec) {
  json j{{"kind", kind_name(spec.kind)},
         {"dim", spec.dim},
         {"n", spec.n},
         {"halfspaces", spec.halfspaces},
         {"classes", spec.classes},
         {"class_size", spec.class_size},
         {"epsilon", rational_to_json(spec.epsilon)},
         {"thickness", rational_to_json(spec.thickness)},
         {"seed", spec.seed},
         {"alpha_target", rational_to_json(spec.alpha_target)},
         {"r", spec.r},
         {"property", property_to_json(spec.property)},
         {"lattice", spec.lattice},
         {"denominator", spec.denominator}};
  j["clip"] = spec.clip ? rational_to_json(*spec.clip) : json(nullptr);
  return j;
}

GenSpec genspec_from_json(const json& value) {
  GenSpec spec;
  const std::string kind = as_string(field(value, "kind"), "kind");
  if (kind == "tight_colorful") {
    spec.kind = GenKind::TightColorful;
  } else if (kind == "tight_fractional") {
    spec.kind = GenKind::TightFractional;
  } else if (kind == "random") {
    spec.kind = GenKind::Random;
  } else if (kind == "dense") {
    spec.kind = GenKind::Dense;
  } else {
    throw Error("unknown generator kind \"" + kind + "\"");
  }
  auto opt_uint = [&](const char* key, auto& out) {
    if (value.contains(key)) out = static_cast<std::remove_reference_t<decltype(out)>>(get_uint(value, key));
  };
  auto opt_rational = [&](const char* key, Rational& out) {
    if (value.contains(key)) out = rational_from_json(value.at(key));
  };
  opt_uint("dim", spec.dim);
  opt_uint("n", spec.n);
  opt_uint("halfspaces", spec.halfspaces);
  opt_uint("classes", spec.classes);
  opt_uint("class_size", spec.class_size);
  opt_uint("seed", spec.seed);
  opt_uint("r", spec.r);
  opt_uint("lattice", spec.lattice);
  opt_uint("denominator", spec.denominator);
  opt_rational("epsilon", spec.epsilon);
  opt_rational("thickness", spec.thickness);
  opt_rational("alpha_target", spec.alpha_target);
  if (value.contains("clip") && !value.at("clip").is_null()) spec.clip = rational_from_json(value.at("clip"));
  if (value.contains("property")) spec.property = property_from_json(value.at("property"));
  return spec;
}

json instance_to_json(const Family& family, const std::optional<ColorClasses>& classes,
                      const MonotoneProperty& property, const json& meta) {
  const HSystem& system = *family.system();
  json j;
  j["dim"] = system.dim();
  if (system.is_box_system()) {
    j["box_system"] = system.dim();
  } else {
    json normals = json::array();
    for (const auto& a : system.normals()) normals.push_back(vector_to_json(a));
    j["normals"] = normals;
  }
  json sets = json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    sets.push_back(json{{"id", family.id(i)}, {"offsets", vector_to_json(family.member(i).offsets())}});
  }
  j["sets"] = sets;
  if (classes) {
    json cls = json::array();
    for (const Family& f : classes->classes()) cls.push_back(f.ids());
    j["classes"] = cls;
  }
  j["property"] = property_to_json(property);
  j["meta"] = meta;
  return j;
}

Instance instance_from_json(const json& value) {
  const std::size_t dim = get_uint(value, "dim");
  SystemPtr system;
  if (value.contains("box_system")) {
    if (get_uint(value, "box_system") != dim) throw Error("box_system must equal dim");
    system = canonical_box_system(dim);
  } else {
    std::vector<Vector> normals;
    for (const auto& a : field(value, "normals")) normals.push_back(vector_from_json(a));
    system = make_system(dim, std::move(normals));
  }
  Family family(system);
  for (const auto& s : field(value, "sets")) {
    family.add(as_string(field(s, "id"), "id"), vector_from_json(field(s, "offsets")));
  }
  std::optional<ColorClasses> classes;
  if (value.contains("classes") && !value.at("classes").is_null()) {
    std::vector<Family> fams;
    for (const auto& c : value.at("classes")) {
      auto ids = as_strings(c, "class");
      fams.push_back(family.subfamily_by_ids(ids));
    }
    classes.emplace(std::move(fams));
  }
  MonotoneProperty property =
      value.contains("property") ? property_from_json(value.at("property")) : MonotoneProperty::non_empty();
  return Instance{value, std::move(family), std::move(classes), std::move(property)};
}

std::string instance_hash(const json& instance) {
  const std::string text = instance.dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return "sha256:" + hex;
}

std::string canonical_text(const json& value) { return value.dump(2) + "\n"; }

json to_json(const StrongHellyWitness& w) {
  return json{{"ids", w.ids}, {"attained_by", w.attained_by}, {"intersection", vector_to_json(w.intersection)}};
}

json to_json(const SelectionWitness& w) {
  json cert = json::array();
  for (const auto& entry : w.certificate) {
    json bounds = json::array();
    for (const auto& b : entry.bounds) {
      bounds.push_back(json{{"ordering", b.ordering},
                            {"bounding_class", b.bounding_class},
                            {"bound", rational_to_json(b.bound)},
                            {"member_offset", rational_to_json(b.member_offset)}});
    }
    cert.push_back(json{{"member_id", entry.member_id}, {"bounds", bounds}});
  }
  return json{{"chosen", w.chosen},
              {"pivot_class", w.pivot_class},
              {"permutation", w.permutation},
              {"certificate", cert}};
}

json to_json(const WeakColorfulResult& r) {
  return json{{"selection", to_json(r.witness)},
              {"pruned_class", r.pruned_class.ids()},
              {"original_size", r.original_size},
              {"exponent", r.exponent}};
}

json to_json(const ChainWitness& w) {
  json dirs = json::array();
  for (auto d : w.directions) dirs.push_back(direction_name(d));
  return json{{"ids", w.ids}, {"directions", dirs}};
}

json to_json(const FractionalWitness& w) {
  return json{{"alpha", rational_to_json(w.alpha)},
              {"uniformity", w.uniformity},
              {"prefix_bound", w.prefix_bound},
              {"prefix_size", w.prefix_size},
              {"gamma", rational_to_json(w.gamma)},
              {"prefixes", w.prefixes},
              {"witness_tuple", w.witness_tuple},
              {"witness_intersection", vector_to_json(w.witness_intersection)},
              {"survivors", w.survivors},
              {"beta_achieved", rational_to_json(w.beta_achieved)},
              {"beta_bound", w.beta_bound}};
}

json to_json(const KPlusOneWitness& w) {
  json copies = json::array();
  for (const auto& c : w.copies) copies.push_back(json{{"classes", c.classes}, {"weak", to_json(c.weak)}});
  return json{{"k", w.k},
              {"t_used", w.t_used},
              {"t_formula", mpz_to_json(w.t_formula)},
              {"hypergraph_edges", w.hypergraph_edges},
              {"tuples_total", w.tuples_total},
              {"measured_density", rational_to_json(w.measured_density)},
              {"copies", copies},
              {"accumulated_tuples", w.accumulated_tuples},
              {"alpha_prime", rational_to_json(w.alpha_prime)},
              {"fractional", to_json(w.fractional)}};
}

json to_json(const PairsWitness& w) {
  return json{{"alpha", rational_to_json(w.alpha)},
              {"chain_bound", mpz_to_json(w.chain_bound)},
              {"c_k", rational_to_json(w.c_k)},
              {"alpha_prime", rational_to_json(w.alpha_prime)},
              {"chain_tuples", w.chain_tuples},
              {"tuples_total", w.tuples_total},
              {"hypothesis_certified", w.hypothesis_certified},
              {"pair_density", rational_to_json(w.pair_density)},
              {"fractional", to_json(w.fractional)}};
}

json to_json(const PiercingFamily& pins, const Family& family) {
  json list = json::array();
  for (const auto& pin : pins.pins) {
    list.push_back(json{{"source", pin.source}, {"offsets", vector_to_json(pin.set.offsets())}});
  }
  json cover = json::object();
  for (std::size_t i = 0; i < pins.cover.size(); ++i) cover[family.id(i)] = pins.cover[i];
  return json{{"pins", list}, {"cover", cover}};
}

json to_json(const HypothesisFailed& failure) {
  return json{{"reason", failure.reason == HypothesisFailed::Reason::MemberFailsProperty ? "member_fails_property"
                                                                                       : "no_intersecting_q_subset"},
              {"violating", failure.violating}};
}

StrongHellyWitness strong_from_json(const json& j) {
  return StrongHellyWitness{get_strings(j, "ids"), get_strings(j, "attained_by"),
                            vector_from_json(field(j, "intersection"))};
}

SelectionWitness selection_from_json(const json& j) {
  SelectionWitness w;
  w.chosen = get_strings(j, "chosen");
  w.pivot_class = get_uint(j, "pivot_class");
  for (const auto& p : field(j, "permutation")) w.permutation.push_back(as_uint(p, "permutation"));
  for (const auto& e : field(j, "certificate")) {
    ContainmentEntry entry{as_string(field(e, "member_id"), "member_id"), {}};
    for (const auto& b : field(e, "bounds")) {
      entry.bounds.push_back(CoordinateBound{get_uint(b, "ordering"), get_uint(b, "bounding_class"),
                                             rational_from_json(field(b, "bound")),
                                             rational_from_json(field(b, "member_offset"))});
    }
    w.certificate.push_back(std::move(entry));
  }
  return w;
}

WeakColorfulResult weak_from_json(const json& j, const Family& members) {
  auto pruned_ids = get_strings(j, "pruned_class");
  return WeakColorfulResult{selection_from_json(field(j, "selection")), members.subfamily_by_ids(pruned_ids),
                            get_uint(j, "original_size"), get_uint(j, "exponent")};
}

ChainWitness chain_from_json(const json& j) {
  ChainWitness w;
  w.ids = get_strings(j, "ids");
  for (const auto& d : field(j, "directions")) w.directions.push_back(direction_from(d));
  return w;
}

FractionalWitness fractional_from_json(const json& j) {
  FractionalWitness w;
  w.alpha = rational_from_json(field(j, "alpha"));
  w.uniformity = get_uint(j, "uniformity");
  w.prefix_bound = get_uint(j, "prefix_bound");
  w.prefix_size = get_uint(j, "prefix_size");
  w.gamma = rational_from_json(field(j, "gamma"));
  for (const auto& p : field(j, "prefixes")) w.prefixes.push_back(as_strings(p, "prefix"));
  w.witness_tuple = get_strings(j, "witness_tuple");
  w.witness_intersection = vector_from_json(field(j, "witness_intersection"));
  w.survivors = get_strings(j, "survivors");
  w.beta_achieved = rational_from_json(field(j, "beta_achieved"));
  const json& bb = field(j, "beta_bound");
  if (!bb.is_number_integer()) throw Error("beta_bound must be an integer");
  w.beta_bound = bb.get<long long>();
  return w;
}

KPlusOneWitness kplus1_from_json(const json& j, const Family& family) {
  KPlusOneWitness w;
  w.k = get_uint(j, "k");
  w.t_used = get_uint(j, "t_used");
  w.t_formula = mpz_from_json(field(j, "t_formula"), "t_formula");
  w.hypergraph_edges = get_uint(j, "hypergraph_edges");
  w.tuples_total = get_uint(j, "tuples_total");
  w.measured_density = rational_from_json(field(j, "measured_density"));
  for (const auto& c : field(j, "copies")) {
    std::vector<std::vector<std::string>> classes;
    for (const auto& cls : field(c, "classes")) classes.push_back(as_strings(cls, "class"));
    w.copies.push_back(MultipartiteCopy{std::move(classes), weak_from_json(field(c, "weak"), family)});
  }
  w.accumulated_tuples = get_uint(j, "accumulated_tuples");
  w.alpha_prime = rational_from_json(field(j, "alpha_prime"));
  w.fractional = fractional_from_json(field(j, "fractional"));
  return w;
}

PairsWitness pairs_from_json(const json& j) {
  PairsWitness w;
  w.alpha = rational_from_json(field(j, "alpha"));
  w.chain_bound = mpz_from_json(field(j, "chain_bound"), "chain_bound");
  w.c_k = rational_from_json(field(j, "c_k"));
  w.alpha_prime = rational_from_json(field(j, "alpha_prime"));
  w.chain_tuples = get_uint(j, "chain_tuples");
  w.tuples_total = get_uint(j, "tuples_total");
  w.hypothesis_certified = get_bool(j, "hypothesis_certified");
  w.pair_density = rational_from_json(field(j, "pair_density"));
  w.fractional = fractional_from_json(field(j, "fractional"));
  return w;
}

PiercingFamily pierce_from_json(const json& j, const Family& family) {
  PiercingFamily out;
  for (const auto& p : field(j, "pins")) {
    out.pins.push_back(Pin{get_strings(p, "source"), HSet(family.system(), vector_from_json(field(p, "offsets")))});
  }
  const json& cover = field(j, "cover");
  if (!cover.is_object() || cover.size() != family.size()) throw Error("cover must map every member id");
  out.cover.resize(family.size());
  for (auto it = cover.begin(); it != cover.end(); ++it) {
    out.cover[family.index_of(it.key())] = as_uint(it.value(), "cover");
  }
  return out;
}

HypothesisFailed failure_from_json(const json& j) {
  const std::string reason = as_string(field(j, "reason"), "reason");
  HypothesisFailed out;
  if (reason == "member_fails_property") {
    out.reason = HypothesisFailed::Reason::MemberFailsProperty;
  } else if (reason == "no_intersecting_q_subset") {
    out.reason = HypothesisFailed::Reason::NoIntersectingQSubset;
  } else {
    throw Error("unknown failure reason \"" + reason + "\"");
  }
  out.violating = get_strings(j, "violating");
  return out;
}

}  // namespace helly::cli
