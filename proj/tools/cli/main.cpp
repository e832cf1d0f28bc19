#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "helly/error.hpp"

using helly::cli::Exit;

namespace {

helly::Rational parse_rational(const std::string& text) {
  try {
    return helly::Rational::parse(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError("not a rational number: " + text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Helly-type selections and certificates for boxes and H-convex sets"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  std::string gen_kind = "random", gen_spec_file, gen_epsilon = "1/2", gen_clip, gen_thickness = "1/4",
              gen_alpha = "1", gen_property = "nonempty", gen_out;
  helly::GenSpec spec;
  gen->add_option("--kind", gen_kind, "tight-colorful | tight-fractional | random | dense");
  gen->add_option("--spec", gen_spec_file, "Generator spec as JSON (overrides the other flags)");
  gen->add_option("--dim", spec.dim, "Ambient dimension");
  gen->add_option("--n", spec.n, "Family size");
  gen->add_option("--halfspaces", spec.halfspaces, "Random normal count (0 = boxes)");
  gen->add_option("--classes", spec.classes, "Color classes (random)");
  gen->add_option("--class-size", spec.class_size, "Members per class (random)");
  gen->add_option("--epsilon", gen_epsilon, "Volume of the tight colorful box");
  gen->add_option("--clip", gen_clip, "Bounding cube half-width M");
  gen->add_option("--thickness", gen_thickness, "Slab thickness (tight-fractional)");
  gen->add_option("--seed", spec.seed, "Seed");
  gen->add_option("--alpha", gen_alpha, "Target density (dense)");
  gen->add_option("--r", spec.r, "Tuple size (dense)");
  gen->add_option("--property", gen_property, "nonempty | volume>=V | contains>=N:x,y;... | JSON");
  gen->add_option("--lattice", spec.lattice, "Coordinate range (random, dense)");
  gen->add_option("--denominator", spec.denominator, "Coordinate denominator (random, dense)");
  gen->add_option("--out", gen_out, "Output file (stdout when omitted)");

  // run
  auto* run = app.add_subcommand("run", "Run an algorithm and write its certificate");
  std::string run_algorithm, run_instance, run_alpha, run_out;
  helly::cli::RunParams params;
  std::size_t t_override = 0, p = 0, q = 0, target = 0;
  run->add_option("--algorithm", run_algorithm,
                  "strong-helly | colorful | weak-colorful | fractional-k | fractional-k1 | fractional-pairs | "
                  "pq-pierce | chain")
      ->required();
  run->add_option("instance", run_instance, "Instance file")->required();
  run->add_option("--alpha", run_alpha, "Density hypothesis as a rational");
  auto* t_opt = run->add_option("--t-override", t_override, "Multipartite class size");
  auto* p_opt = run->add_option("--p", p, "p of the (p,q) condition");
  auto* q_opt = run->add_option("--q", q, "q of the (p,q) condition");
  auto* target_opt = run->add_option("--target", target, "Chain length");
  run->add_option("--seed", params.seed, "Seed for sampling modes");
  run->add_flag("--sample", params.sample, "Sample the prefix product instead of scanning it");
  run->add_option("--out", run_out, "Certificate file (stdout when omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "Re-check a certificate against an instance");
  std::string verify_cert, verify_instance;
  verify->add_option("certificate", verify_cert, "Certificate file")->required();
  verify->add_option("instance", verify_instance, "Instance file")->required();

  // density
  auto* density = app.add_subcommand("density", "Exact density of P-intersecting r-subsets");
  std::string density_instance, density_property, density_out;
  std::size_t density_r = 2;
  density->add_option("instance", density_instance, "Instance file")->required();
  density->add_option("--r", density_r, "Tuple size");
  density->add_option("--property", density_property, "Overrides the instance property");
  density->add_option("--out", density_out, "Report file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::kSuccess : Exit::kUsage;
  }

  try {
    if (gen->parsed()) {
      if (!gen_spec_file.empty()) {
        spec = helly::cli::genspec_from_json(helly::cli::read_json_file(gen_spec_file));
      } else {
        if (gen_kind == "tight-colorful") {
          spec.kind = helly::GenKind::TightColorful;
        } else if (gen_kind == "tight-fractional") {
          spec.kind = helly::GenKind::TightFractional;
        } else if (gen_kind == "random") {
          spec.kind = helly::GenKind::Random;
        } else if (gen_kind == "dense") {
          spec.kind = helly::GenKind::Dense;
        } else {
          std::cerr << "unknown generator kind " << gen_kind << "\n";
          return Exit::kUsage;
        }
        spec.epsilon = parse_rational(gen_epsilon);
        spec.thickness = parse_rational(gen_thickness);
        spec.alpha_target = parse_rational(gen_alpha);
        if (!gen_clip.empty()) spec.clip = parse_rational(gen_clip);
        spec.property = helly::cli::property_from_text(gen_property);
      }
      return helly::cli::cmd_gen(spec, gen_out, std::cout, std::cerr);
    }
    if (run->parsed()) {
      if (!run_alpha.empty()) params.alpha = parse_rational(run_alpha);
      if (t_opt->count() > 0) params.t_override = t_override;
      if (p_opt->count() > 0) params.p = p;
      if (q_opt->count() > 0) params.q = q;
      if (target_opt->count() > 0) params.target = target;
      return helly::cli::cmd_run(run_algorithm, run_instance, params, run_out, std::cout, std::cerr);
    }
    if (verify->parsed()) return helly::cli::cmd_verify(verify_cert, verify_instance, std::cout, std::cerr);
    std::optional<helly::MonotoneProperty> property;
    if (!density_property.empty()) property = helly::cli::property_from_text(density_property);
    return helly::cli::cmd_density(density_instance, density_r, property, density_out, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return Exit::kUsage;
  }
}
