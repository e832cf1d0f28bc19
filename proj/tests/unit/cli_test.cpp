#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "helly/error.hpp"
#include "test_support.hpp"

namespace helly::cli {
namespace {

namespace fs = std::filesystem;

struct Case {
  std::string name;
  GenSpec spec;
  std::string algorithm;
  RunParams params;
  int exit_code = kSuccess;
};

GenSpec random_spec(std::size_t dim, std::size_t n, std::uint64_t seed) {
  GenSpec s;
  s.kind = GenKind::Random;
  s.dim = dim;
  s.n = n;
  s.seed = seed;
  return s;
}

GenSpec dense_spec(std::size_t dim, std::size_t halfspaces, std::size_t n, std::size_t r, Rational alpha) {
  GenSpec s;
  s.kind = GenKind::Dense;
  s.dim = dim;
  s.halfspaces = halfspaces;
  s.n = n;
  s.r = r;
  s.alpha_target = alpha;
  return s;
}

GenSpec class_spec(std::size_t dim, std::size_t halfspaces, std::size_t classes, std::size_t size) {
  GenSpec s;
  s.kind = GenKind::Random;
  s.dim = dim;
  s.halfspaces = halfspaces;
  s.classes = classes;
  s.class_size = size;
  s.seed = 4;
  return s;
}

RunParams alpha_params(const Rational& alpha) {
  RunParams p;
  p.alpha = alpha;
  return p;
}

Rational measured(const json& instance) { return Rational::parse(instance["meta"]["measured_density"].get<std::string>()); }

std::vector<Case> cases() {
  std::vector<Case> out;
  out.push_back({"strong", random_spec(2, 30, 1), "strong-helly", {}});
  out.push_back({"colorful", class_spec(2, 0, 4, 3), "colorful", {}});
  out.push_back({"weak", class_spec(2, 3, 2, 16), "weak-colorful", {}});
  out.push_back({"chain", random_spec(1, 12, 2), "chain", {}});
  {
    Case c{"fractional_k", dense_spec(2, 0, 24, 4, Rational(9, 10)), "fractional-k", {}};
    c.params = alpha_params(measured(generate_instance(c.spec)));
    out.push_back(c);
  }
  {
    Case c{"fractional_k1", dense_spec(2, 3, 40, 2, Rational(19, 20)), "fractional-k1", {}};
    c.params = alpha_params(measured(generate_instance(c.spec)));
    c.params.t_override = 16;
    out.push_back(c);
  }
  {
    Case c{"pairs", dense_spec(1, 0, 20, 2, Rational(9, 10)), "fractional-pairs", {}};
    c.params = alpha_params(measured(generate_instance(c.spec)));
    out.push_back(c);
  }
  {
    Case c{"pq", random_spec(1, 8, 11), "pq-pierce", {}};
    c.params.p = 4;
    c.params.q = 2;
    out.push_back(c);
  }
  {
    Case c{"pq_failed", random_spec(1, 8, 11), "pq-pierce", {}, kHypothesisFailed};
    c.params.p = 2;
    c.params.q = 2;
    out.push_back(c);
  }
  {
    Case c{"chain_not_found", random_spec(1, 4, 3), "chain", {}, kNotFound};
    c.params.target = 5;
    out.push_back(c);
  }
  return out;
}

class CertificateCase : public ::testing::TestWithParam<Case> {};

TEST_P(CertificateCase, FreshCertificateVerifies) {
  const Case& c = GetParam();
  Instance inst = instance_from_json(generate_instance(c.spec));
  RunOutcome run = run_algorithm(c.algorithm, inst, c.params);
  ASSERT_EQ(run.exit_code, c.exit_code) << run.certificate.dump();
  std::string why;
  EXPECT_EQ(verify_certificate_json(run.certificate, inst, why), kSuccess) << why;
  // Round trip through canonical text.
  json reread = json::parse(canonical_text(run.certificate));
  EXPECT_EQ(verify_certificate_json(reread, inst, why), kSuccess) << why;
}

TEST_P(CertificateCase, EveryMutationIsRejected) {
  const Case& c = GetParam();
  Instance inst = instance_from_json(generate_instance(c.spec));
  RunOutcome run = run_algorithm(c.algorithm, inst, c.params);
  std::vector<json::json_pointer> leaves;
  helly::testing::mutable_leaves(run.certificate, json::json_pointer(), leaves);
  ASSERT_FALSE(leaves.empty());
  const bool not_found = run.certificate["outcome"] == "not_found";
  for (const auto& at : leaves) {
    if (at == json::json_pointer("/instance_hash")) continue;
    // A not_found certificate only claims the search fails for its params; other
    // params can make the same claim true.
    if (not_found && at.parent_pointer() == json::json_pointer("/params")) continue;
    std::string why;
    EXPECT_EQ(verify_certificate_json(helly::testing::mutate(run.certificate, at), inst, why), kVerifyFailed)
        << c.name << " mutation at " << at.to_string();
  }
  std::string why;
  json wrong_hash = run.certificate;
  wrong_hash["instance_hash"] = "sha256:00";
  EXPECT_EQ(verify_certificate_json(wrong_hash, inst, why), kInstanceMismatch);
}

INSTANTIATE_TEST_SUITE_P(Algorithms, CertificateCase, ::testing::ValuesIn(cases()),
                         [](const ::testing::TestParamInfo<Case>& info) { return info.param.name; });

TEST(Certificate, DanglingIdIsAnError) {
  Instance inst = instance_from_json(generate_instance(random_spec(2, 10, 1)));
  json cert = run_algorithm("strong-helly", inst, {}).certificate;
  cert["witness"]["ids"][0] = "nobody";
  std::string why;
  EXPECT_EQ(verify_certificate_json(cert, inst, why), kVerifyFailed);
  EXPECT_NE(why.find("nobody"), std::string::npos);
}

TEST(Certificate, SampledRunRecordsItsSeed) {
  GenSpec spec = dense_spec(2, 0, 24, 4, Rational(9, 10));
  json raw = generate_instance(spec);
  Instance inst = instance_from_json(raw);
  RunParams params = alpha_params(measured(raw));
  params.sample = true;
  params.seed = 9;
  json cert = run_algorithm("fractional-k", inst, params).certificate;
  EXPECT_EQ(cert["params"]["seed"], 9);
  std::string why;
  EXPECT_EQ(verify_certificate_json(cert, inst, why), kSuccess) << why;
  cert["params"]["sample"] = false;
  EXPECT_EQ(verify_certificate_json(cert, inst, why), kVerifyFailed);
}

TEST(Instance, RoundTripsThroughJson) {
  for (const Case& c : cases()) {
    json raw = generate_instance(c.spec);
    Instance inst = instance_from_json(raw);
    EXPECT_EQ(instance_to_json(inst.family, inst.classes, inst.property, raw["meta"]), raw) << c.name;
    EXPECT_EQ(instance_hash(raw), instance_hash(json::parse(canonical_text(raw))));
  }
}

TEST(Instance, GeneralSystemsRoundTrip) {
  GenSpec s = random_spec(3, 6, 5);
  s.halfspaces = 7;
  s.property = MonotoneProperty::any_of(
      {MonotoneProperty::non_empty(), MonotoneProperty::contains_at_least(1, {Vector{Rational(1, 2), Rational(0), Rational(-3)}})});
  json raw = generate_instance(s);
  EXPECT_TRUE(raw.contains("normals"));
  Instance inst = instance_from_json(raw);
  EXPECT_EQ(inst.property, s.property);
  EXPECT_EQ(inst.family.system()->size(), 7u);
  EXPECT_EQ(genspec_from_json(genspec_to_json(s)).property, s.property);
}

TEST(Instance, PropertyText) {
  EXPECT_EQ(property_from_text("nonempty"), MonotoneProperty::non_empty());
  EXPECT_EQ(property_from_text("volume>=3/2"), MonotoneProperty::volume_at_least(Rational(3, 2)));
  EXPECT_EQ(property_from_text("contains>=2:0,0;1,1/2"),
            MonotoneProperty::contains_at_least(2, {{Rational(0), Rational(0)}, {Rational(1), Rational(1, 2)}}));
  EXPECT_THROW(property_from_text("bogus"), Error);
}

TEST(Instance, RejectsMalformedFiles) {
  json raw = generate_instance(random_spec(1, 3, 1));
  json bad = raw;
  bad["sets"][0]["offsets"][0] = "1/0";
  EXPECT_THROW(instance_from_json(bad), Error);
  bad = raw;
  bad["sets"][1]["id"] = raw["sets"][0]["id"];
  EXPECT_THROW(instance_from_json(bad), Error);
  bad = raw;
  bad["sets"][0]["offsets"][0] = 0.5;
  EXPECT_THROW(instance_from_json(bad), Error);
}

TEST(Density, Reports) {
  auto system = canonical_box_system(1);
  Family f(system);
  f.add("a", box_to_hset(Box{{Rational(0)}, {Rational(1)}}, system));
  f.add("b", box_to_hset(Box{{Rational(2)}, {Rational(3)}}, system));
  json raw = instance_to_json(f, std::nullopt, MonotoneProperty::non_empty(), json::object());
  Instance inst = instance_from_json(raw);
  EXPECT_EQ(density_report(inst, 2, inst.property)["density"], "0/1");
  EXPECT_THROW(density_report(inst, 3, inst.property), Error);
  const std::string full = density_report(inst, 1, inst.property)["density"];
  EXPECT_TRUE(full == "0/1" || full == "1/1");
}

// --- the binary ---

const fs::path kBinary = HELLY_CLI_PATH;

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("helly_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  fs::path operator/(const std::string& name) const { return dir / name; }
};

int run(const std::string& args, const fs::path& err = "/dev/null") {
  const std::string cmd = kBinary.string() + " " + args + " > /dev/null 2> " + err.string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Binary, GenIsByteIdentical) {
  Scratch tmp;
  ASSERT_EQ(run("gen --kind tight-colorful --dim 2 --epsilon 1/2 --out " + (tmp / "a.json").string()), 0);
  ASSERT_EQ(run("gen --kind tight-colorful --dim 2 --epsilon 1/2 --out " + (tmp / "b.json").string()), 0);
  EXPECT_EQ(slurp(tmp / "a.json"), slurp(tmp / "b.json"));
  EXPECT_EQ(json::parse(slurp(tmp / "a.json"))["sets"].size(), 4u);
  ASSERT_EQ(run("gen --kind random --dim 2 --n 10 --seed 7 --out " + (tmp / "c.json").string()), 0);
  ASSERT_EQ(run("gen --kind random --dim 2 --n 10 --seed 7 --out " + (tmp / "d.json").string()), 0);
  EXPECT_EQ(slurp(tmp / "c.json"), slurp(tmp / "d.json"));
  ASSERT_EQ(run("gen --kind random --dim 2 --n 10 --seed 8 --out " + (tmp / "e.json").string()), 0);
  EXPECT_NE(slurp(tmp / "c.json"), slurp(tmp / "e.json"));
}

TEST(Binary, UsageErrors) {
  Scratch tmp;
  EXPECT_EQ(run("gen --kind tight-colorful --dim 2 --epsilon 2", tmp / "err.txt"), kUsage);
  EXPECT_NE(slurp(tmp / "err.txt").find("epsilon must be in (0,1)"), std::string::npos);
  ASSERT_EQ(run("gen --kind random --dim 1 --n 2 --out " + (tmp / "i.json").string()), 0);
  EXPECT_EQ(run("run --algorithm bogus " + (tmp / "i.json").string()), kUsage);
  EXPECT_EQ(run("density " + (tmp / "i.json").string() + " --r 3"), kUsage);
  EXPECT_EQ(run("frobnicate"), kUsage);
  EXPECT_EQ(run("run --algorithm fractional-k " + (tmp / "i.json").string()), kUsage);
}

TEST(Binary, RunVerifyRoundTrip) {
  Scratch tmp;
  const std::string inst = (tmp / "i.json").string();
  const std::string other = (tmp / "o.json").string();
  const std::string cert = (tmp / "c.json").string();
  ASSERT_EQ(run("gen --kind random --dim 2 --n 30 --seed 3 --out " + inst), 0);
  ASSERT_EQ(run("gen --kind random --dim 2 --n 30 --seed 4 --out " + other), 0);
  ASSERT_EQ(run("run --algorithm strong-helly " + inst + " --out " + cert), 0);
  EXPECT_LE(json::parse(slurp(cert))["report"]["size"].get<std::size_t>(), 4u);
  EXPECT_EQ(run("verify " + cert + " " + inst), kSuccess);
  EXPECT_EQ(run("verify " + cert + " " + other), kInstanceMismatch);
  json tampered = json::parse(slurp(cert));
  tampered["witness"]["intersection"][0] = "1000/1";
  write_text_file(tmp / "t.json", canonical_text(tampered));
  EXPECT_EQ(run("verify " + (tmp / "t.json").string() + " " + inst), kVerifyFailed);

  const std::string dense = (tmp / "dense.json").string();
  ASSERT_EQ(run("gen --kind dense --dim 2 --n 30 --r 4 --alpha 1 --seed 2 --out " + dense), 0);
  ASSERT_EQ(run("run --algorithm fractional-k --alpha 1 " + dense + " --out " + cert), 0);
  json fk = json::parse(slurp(cert));
  EXPECT_GE(Rational::parse(fk["witness"]["beta_achieved"].get<std::string>()), Rational(26, 30));
  EXPECT_EQ(run("verify " + cert + " " + dense), kSuccess);
}

TEST(Binary, PqViolationExitsFour) {
  Scratch tmp;
  auto system = canonical_box_system(1);
  Family f(system);
  for (int i = 0; i < 4; ++i) f.add("d" + std::to_string(i), box_to_hset(Box{{Rational(3 * i)}, {Rational(3 * i + 1)}}, system));
  write_text_file(tmp / "i.json", canonical_text(instance_to_json(f, std::nullopt, MonotoneProperty::non_empty(), json::object())));
  const std::string inst = (tmp / "i.json").string();
  EXPECT_EQ(run("run --algorithm pq-pierce --p 3 --q 2 " + inst + " --out " + (tmp / "c.json").string()), kHypothesisFailed);
  json cert = json::parse(slurp(tmp / "c.json"));
  EXPECT_EQ(cert["outcome"], "hypothesis_failed");
  EXPECT_EQ(cert["witness"]["violating"].size(), 3u);
  EXPECT_EQ(run("verify " + (tmp / "c.json").string() + " " + inst), kSuccess);
}

TEST(Binary, DensityOfTightFractional) {
  Scratch tmp;
  const std::string inst = (tmp / "i.json").string();
  ASSERT_EQ(run("gen --kind tight-fractional --dim 2 --n 12 --out " + inst), 0);
  ASSERT_EQ(run("density " + inst + " --r 2 --out " + (tmp / "d.json").string()), 0);
  json report = json::parse(slurp(tmp / "d.json"));
  EXPECT_EQ(report["density"], "6/11");
  EXPECT_EQ(report["intersecting"], 36);
  EXPECT_EQ(report["total"], 66);
}

}  // namespace
}  // namespace helly::cli
