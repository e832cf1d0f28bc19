#include "helly/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "helly/error.hpp"

namespace helly {

Limits Limits::from_env() {
  const char* env = std::getenv("HELLY_ORACLE_LIMITS");
  if (env == nullptr || *env == '\0') return Limits{};
  return parse(env);
}

Limits Limits::parse(std::string_view spec) { return parse(spec, Limits{}); }

Limits Limits::parse(std::string_view spec, Limits base) {
  while (!spec.empty()) {
    std::size_t comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error("malformed limit \"" + std::string(item) + "\"");
    std::string_view key = item.substr(0, eq);
    std::string_view text = item.substr(eq + 1);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw Error("malformed limit value \"" + std::string(text) + "\"");
    }
    if (key == "brute_family") {
      base.brute_family = value;
    } else if (key == "colorful_product") {
      base.colorful_product = value;
    } else if (key == "pierce_family") {
      base.pierce_family = value;
    } else if (key == "pierce_bound") {
      base.pierce_bound = value;
    } else if (key == "pq_family") {
      base.pq_family = value;
    } else if (key == "enumeration") {
      base.enumeration = value;
    } else {
      throw Error("unknown limit \"" + std::string(key) + "\"");
    }
  }
  return base;
}

}  // namespace helly
