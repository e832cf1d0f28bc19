#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "helly/error.hpp"
#include "helly/oracle.hpp"

namespace helly::cli {
namespace {

const char* const kAlgorithms[] = {"strong-helly",     "colorful",        "weak-colorful", "fractional-k",
                                   "fractional-k1",    "fractional-pairs", "pq-pierce",     "chain"};

bool known_algorithm(const std::string& name) {
  for (const char* a : kAlgorithms) {
    if (name == a) return true;
  }
  return false;
}

/// Only the parameters an algorithm reads are recorded, so any recorded value matters.
json params_to_json(const std::string& algorithm, const RunParams& p) {
  json out = json::object();
  if (algorithm == "chain") out["target"] = p.target.value_or(3);
  if (algorithm == "pq-pierce") {
    out["p"] = p.p ? json(*p.p) : json(nullptr);
    out["q"] = p.q ? json(*p.q) : json(nullptr);
  }
  if (algorithm.rfind("fractional", 0) == 0) {
    out["alpha"] = p.alpha ? json(p.alpha->str()) : json(nullptr);
    out["sample"] = p.sample;
    if (p.sample) out["seed"] = p.seed;
    if (algorithm == "fractional-k1" && p.t_override) out["t_override"] = *p.t_override;
  }
  return out;
}

RunParams params_from_json(const json& j) {
  if (!j.is_object()) throw Error("params must be an object");
  RunParams p;
  auto opt = [&](const char* key, std::optional<std::size_t>& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<std::size_t>();
  };
  if (j.contains("alpha") && !j.at("alpha").is_null()) p.alpha = rational_from_json(j.at("alpha"));
  opt("t_override", p.t_override);
  opt("p", p.p);
  opt("q", p.q);
  opt("target", p.target);
  if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("sample")) p.sample = j.at("sample").get<bool>();
  return p;
}

const Rational& need_alpha(const RunParams& p) {
  if (!p.alpha) throw Error("--alpha is required for this algorithm");
  return *p.alpha;
}

const ColorClasses& need_classes(const Instance& inst) {
  if (!inst.classes) throw Error("this algorithm needs an instance with \"classes\"");
  return *inst.classes;
}

FractionalOptions fractional_options(const RunParams& p) {
  FractionalOptions o;
  o.sample = p.sample;
  o.seed = p.seed;
  return o;
}

json certificate(const std::string& algorithm, const Instance& inst, const RunParams& params, const char* outcome,
                 json witness, json report) {
  return json{{"algorithm", algorithm},
              {"instance_hash", instance_hash(inst.raw)},
              {"params", params_to_json(algorithm, params)},
              {"outcome", outcome},
              {"witness", std::move(witness)},
              {"report", std::move(report)}};
}

json survivors_report(const FractionalWitness& w) { return json{{"survivors", w.survivors.size()}}; }

json pierce_report(const Family& family, const RunParams& params, const PierceReport& r) {
  const mpz_class subsets = binomial(mpz_class(static_cast<unsigned long>(family.size())), *params.p);
  json report{{"candidate_pins", r.candidate_pins}, {"greedy_size", r.greedy_size}, {"p_subsets", subsets.get_str()}};
  if (const auto* pins = std::get_if<PiercingFamily>(&r.outcome)) report["pins"] = pins->pins.size();
  return report;
}

void write_output(const std::filesystem::path& out, const json& value, std::ostream& stdout_) {
  const std::string text = canonical_text(value);
  if (out.empty()) {
    stdout_ << text;
  } else {
    write_text_file(out, text);
  }
}

Instance load_instance(const std::filesystem::path& path) { return instance_from_json(read_json_file(path)); }

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

json generate_instance(const GenSpec& spec) {
  json meta{{"generator", genspec_to_json(spec)}, {"seed", spec.seed}, {"version", kFormatVersion}};
  if (spec.kind == GenKind::Random && spec.classes > 0) {
    ColorClasses classes = gen_random_classes(spec);
    Family all(classes.system());
    for (const Family& f : classes.classes()) {
      for (std::size_t i = 0; i < f.size(); ++i) all.add(f.id(i), f.member(i));
    }
    return instance_to_json(all, classes, spec.property, meta);
  }
  if (spec.kind == GenKind::Dense) {
    DenseInstance dense = gen_dense(spec);
    meta["measured_density"] = dense.density.str();
    meta["core"] = dense.core;
    return instance_to_json(dense.family, std::nullopt, spec.property, meta);
  }
  Family family = generate(spec);
  std::optional<ColorClasses> classes;
  if (spec.kind == GenKind::TightColorful) {
    std::vector<Family> singletons;
    for (std::size_t i = 0; i < family.size(); ++i) singletons.push_back(family.subfamily(std::vector{i}));
    classes.emplace(std::move(singletons));
  }
  return instance_to_json(family, classes, spec.property, meta);
}

RunOutcome run_algorithm(const std::string& algorithm, const Instance& inst, const RunParams& params) {
  if (!known_algorithm(algorithm)) throw Error("unknown algorithm \"" + algorithm + "\"");
  const Family& family = inst.family;
  const MonotoneProperty& property = inst.property;

  if (algorithm == "strong-helly") {
    auto w = strong_helly_witness(family);
    json report{{"size", w.ids.size()}, {"bound", family.system()->size()}};
    return {kSuccess, certificate(algorithm, inst, params, "success", to_json(w), report)};
  }
  if (algorithm == "colorful") {
    auto w = colorful_select(need_classes(inst));
    return {kSuccess, certificate(algorithm, inst, params, "success", to_json(w), json::object())};
  }
  if (algorithm == "weak-colorful") {
    auto r = weak_colorful_helly(need_classes(inst));
    json report{{"pruned_size", r.pruned_class.size()}};
    return {kSuccess, certificate(algorithm, inst, params, "success", to_json(r), report)};
  }
  if (algorithm == "chain") {
    const std::size_t target = params.target.value_or(3);
    auto w = consistent_chain(family, target);
    if (!w) return {kNotFound, certificate(algorithm, inst, params, "not_found", nullptr, json::object())};
    json witness = to_json(*w);
    witness["intersection"] = vector_to_json(chain_intersection(family, *w).offsets());
    json report{{"bound", chain_size_bound(family.system()->size(), target).get_str()}};
    return {kSuccess, certificate(algorithm, inst, params, "success", witness, report)};
  }
  if (algorithm == "fractional-k") {
    auto w = fractional_k(family, property, need_alpha(params), fractional_options(params));
    if (!w) return {kNotFound, certificate(algorithm, inst, params, "not_found", nullptr, json::object())};
    return {kSuccess, certificate(algorithm, inst, params, "success", to_json(*w), survivors_report(*w))};
  }
  if (algorithm == "fractional-k1") {
    KPlusOneOptions opts;
    opts.fractional = fractional_options(params);
    auto w = fractional_kplus1(family, property, need_alpha(params), params.t_override, opts);
    if (!w) return {kNotFound, certificate(algorithm, inst, params, "not_found", nullptr, json::object())};
    return {kSuccess, certificate(algorithm, inst, params, "success", to_json(*w), survivors_report(w->fractional))};
  }
  if (algorithm == "fractional-pairs") {
    auto w = fractional_pairs(family, property, need_alpha(params), fractional_options(params));
    if (!w) return {kNotFound, certificate(algorithm, inst, params, "not_found", nullptr, json::object())};
    return {kSuccess, certificate(algorithm, inst, params, "success", to_json(*w), survivors_report(w->fractional))};
  }
  // pq-pierce
  if (!params.p || !params.q) throw Error("--p and --q are required for pq-pierce");
  PierceReport r = pq_pierce(family, property, *params.p, *params.q);
  json report = pierce_report(family, params, r);
  if (const auto* failed = std::get_if<HypothesisFailed>(&r.outcome)) {
    return {kHypothesisFailed,
            certificate(algorithm, inst, params, "hypothesis_failed", to_json(*failed), report)};
  }
  const auto& pins = std::get<PiercingFamily>(r.outcome);
  return {kSuccess, certificate(algorithm, inst, params, "success", to_json(pins, family), report)};
}

int verify_certificate_json(const json& cert, const Instance& inst, std::string& why) {
  try {
    if (!cert.is_object()) throw Error("certificate must be a JSON object");
    if (cert.at("instance_hash").get<std::string>() != instance_hash(inst.raw)) {
      why = "certificate was issued for a different instance";
      return kInstanceMismatch;
    }
    const std::string algorithm = cert.at("algorithm").get<std::string>();
    if (!known_algorithm(algorithm)) throw Error("unknown algorithm \"" + algorithm + "\"");
    const RunParams params = params_from_json(cert.at("params"));
    if (params_to_json(algorithm, params) != cert.at("params")) {
      throw Error("params do not match the fields " + algorithm + " records");
    }
    const std::string outcome = cert.at("outcome").get<std::string>();
    const json& w = cert.at("witness");
    const json& report = cert.at("report");
    const Family& family = inst.family;
    const MonotoneProperty& property = inst.property;
    auto fail = [&](const char* reason) {
      why = reason;
      return kVerifyFailed;
    };

    if (outcome == "not_found") {
      // Nothing is asserted beyond reproducibility of the search.
      if (!w.is_null()) throw Error("not_found certificates carry no witness");
      RunOutcome again = run_algorithm(algorithm, inst, params);
      if (again.exit_code != kNotFound) return fail("the search finds a witness for these parameters");
      if (again.certificate.at("report") != report) return fail("report does not match the search");
      return kSuccess;
    }
    if (algorithm == "pq-pierce") {
      if (!params.p || !params.q) throw Error("pq-pierce certificates need p and q");
      // Search statistics are recomputed; the witness is checked on its own below.
      PierceReport again = pq_pierce(family, property, *params.p, *params.q);
      if (pierce_report(family, params, again) != report) return fail("report does not match the search");
      if (outcome == "hypothesis_failed") {
        if (!verify_certificate(family, property, *params.p, *params.q, failure_from_json(w))) {
          return fail("violating subset does not violate the hypothesis");
        }
        return kSuccess;
      }
      if (outcome != "success") throw Error("unknown outcome \"" + outcome + "\"");
      if (!brute_pq_hypothesis(family, property, *params.p, *params.q)) return fail("the (p,q) hypothesis fails");
      if (!verify_certificate(family, property, pierce_from_json(w, family))) return fail("certificate does not re-verify");
      return kSuccess;
    }
    if (outcome != "success") throw Error("unexpected outcome \"" + outcome + "\" for " + algorithm);

    bool ok = false;
    json expected;
    if (algorithm == "strong-helly") {
      StrongHellyWitness sw = strong_from_json(w);
      ok = verify_certificate(family, sw);
      expected = json{{"size", sw.ids.size()}, {"bound", family.system()->size()}};
    } else if (algorithm == "colorful") {
      ok = verify_certificate(need_classes(inst), selection_from_json(w));
      expected = json::object();
    } else if (algorithm == "weak-colorful") {
      WeakColorfulResult r = weak_from_json(w, family);
      ok = verify_certificate(need_classes(inst), r);
      expected = json{{"pruned_size", r.pruned_class.size()}};
    } else if (algorithm == "chain") {
      ChainWitness cw = chain_from_json(w);
      const std::size_t target = params.target.value_or(3);
      ok = verify_certificate(family, cw) && cw.ids.size() == target &&
           vector_from_json(w.at("intersection")) == intersect(family.subfamily_by_ids(cw.ids)).offsets();
      expected = json{{"bound", chain_size_bound(family.system()->size(), target).get_str()}};
    } else if (algorithm == "fractional-k") {
      FractionalWitness fw = fractional_from_json(w);
      ok = params.alpha && fw.alpha == *params.alpha && verify_certificate(family, property, fw);
      expected = survivors_report(fw);
    } else if (algorithm == "fractional-k1") {
      KPlusOneWitness kw = kplus1_from_json(w, family);
      // alpha only gates the run; the pipeline's own density alpha' is what it certifies.
      ok = params.alpha && params.alpha->sign() > 0 && *params.alpha <= Rational(1) &&
           verify_certificate(family, property, kw);
      if (ok && params.t_override) ok = kw.t_used == *params.t_override;
      if (ok && !params.t_override) ok = mpz_class(static_cast<unsigned long>(kw.t_used)) == kw.t_formula;
      expected = survivors_report(kw.fractional);
    } else {
      PairsWitness pw = pairs_from_json(w);
      ok = params.alpha && pw.alpha == *params.alpha && verify_certificate(family, property, pw);
      expected = survivors_report(pw.fractional);
    }
    if (!ok) return fail("certificate does not re-verify");
    if (expected != report) return fail("report does not match the witness");
    if (params.sample) {
      // Sampled witnesses must also be the ones the recorded seed produces.
      RunOutcome again = run_algorithm(algorithm, inst, params);
      if (again.certificate.at("witness") != w) return fail("the recorded seed does not reproduce the witness");
    }
    return kSuccess;
  } catch (const std::exception& e) {
    why = e.what();
    return kVerifyFailed;
  }
}

json density_report(const Instance& inst, std::size_t r, const MonotoneProperty& property) {
  if (r == 0 || r > inst.family.size()) throw Error("r must lie in [1, |F|]");
  TupleCount count = count_intersecting(inst.family, r, property);
  return json{{"instance_hash", instance_hash(inst.raw)},
              {"r", r},
              {"property", property_to_json(property)},
              {"intersecting", count.intersecting},
              {"total", count.total},
              {"density", count.density().str()}};
}

int cmd_gen(const GenSpec& spec, const std::filesystem::path& out, std::ostream& stdout_, std::ostream& stderr_) {
  try {
    write_output(out, generate_instance(spec), stdout_);
    return kSuccess;
  } catch (const std::exception& e) {
    stderr_ << e.what() << "\n";
    return kUsage;
  }
}

int cmd_run(const std::string& algorithm, const std::filesystem::path& instance, const RunParams& params,
            const std::filesystem::path& out, std::ostream& stdout_, std::ostream& stderr_) {
  try {
    RunOutcome result = run_algorithm(algorithm, load_instance(instance), params);
    write_output(out, result.certificate, stdout_);
    if (result.exit_code == kNotFound) stderr_ << "no witness found\n";
    if (result.exit_code == kHypothesisFailed) {
      stderr_ << "hypothesis failed: " << result.certificate["witness"]["violating"].dump() << "\n";
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    stderr_ << e.what() << "\n";
    return kUsage;
  }
}

int cmd_verify(const std::filesystem::path& certificate, const std::filesystem::path& instance,
               std::ostream& stdout_, std::ostream& stderr_) {
  std::optional<Instance> inst;
  json cert;
  try {
    inst.emplace(load_instance(instance));
  } catch (const std::exception& e) {
    stderr_ << e.what() << "\n";
    return kUsage;
  }
  try {
    cert = read_json_file(certificate);
  } catch (const std::exception& e) {
    stderr_ << e.what() << "\n";
    return kVerifyFailed;
  }
  std::string why;
  const int code = verify_certificate_json(cert, *inst, why);
  if (code == kSuccess) {
    stdout_ << "ok\n";
  } else {
    stderr_ << why << "\n";
  }
  return code;
}

int cmd_density(const std::filesystem::path& instance, std::size_t r, const std::optional<MonotoneProperty>& property,
                const std::filesystem::path& out, std::ostream& stdout_, std::ostream& stderr_) {
  try {
    Instance inst = load_instance(instance);
    write_output(out, density_report(inst, r, property.value_or(inst.property)), stdout_);
    return kSuccess;
  } catch (const std::exception& e) {
    stderr_ << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace helly::cli
