#include "neumaier/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace neumaier {

std::uint64_t default_node_budget(std::uint64_t fallback) {
  const char* env = std::getenv("NEUMAIER_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  std::uint64_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return fallback;
  return value;
}

}  // namespace neumaier
