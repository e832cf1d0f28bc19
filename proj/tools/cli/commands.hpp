#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "io.hpp"

namespace helly::cli {

enum Exit : int {
  kSuccess = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kNotFound = 3,
  kHypothesisFailed = 4,
  kInstanceMismatch = 5,
};

struct RunParams {
  std::optional<Rational> alpha;
  std::optional<std::size_t> t_override;
  std::optional<std::size_t> p;
  std::optional<std::size_t> q;
  std::optional<std::size_t> target;  // chain length
  std::uint64_t seed = 0;
  bool sample = false;                // fractional-k: random product sampling
};

struct RunOutcome {
  int exit_code = kSuccess;
  json certificate;
};

/// Builds the instance JSON for a generator spec (meta carries the spec).
json generate_instance(const GenSpec& spec);

/// Throws helly::Error on bad parameters or instances.
RunOutcome run_algorithm(const std::string& algorithm, const Instance& instance, const RunParams& params);

/// kSuccess, kVerifyFailed or kInstanceMismatch; `why` explains failures.
int verify_certificate_json(const json& certificate, const Instance& instance, std::string& why);

json density_report(const Instance& instance, std::size_t r, const MonotoneProperty& property);

int cmd_gen(const GenSpec& spec, const std::filesystem::path& out, std::ostream& stdout_, std::ostream& stderr_);
int cmd_run(const std::string& algorithm, const std::filesystem::path& instance, const RunParams& params,
            const std::filesystem::path& out, std::ostream& stdout_, std::ostream& stderr_);
int cmd_verify(const std::filesystem::path& certificate, const std::filesystem::path& instance,
               std::ostream& stdout_, std::ostream& stderr_);
int cmd_density(const std::filesystem::path& instance, std::size_t r, const std::optional<MonotoneProperty>& property,
                const std::filesystem::path& out, std::ostream& stdout_, std::ostream& stderr_);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace helly::cli
