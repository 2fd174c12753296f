#include "krullkit/limits.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "krullkit/errors.hpp"

namespace krullkit {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* raw = std::getenv("KRULLKIT_MAX_SEARCH"); raw != nullptr && *raw != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(raw, &used);
      if (used != std::string(raw).size() || value == 0) {
        throw InvalidInput("");
      }
      limits.max_search = value;
    } catch (const std::exception&) {
      throw InvalidInput(std::string("KRULLKIT_MAX_SEARCH is not a positive integer: ") + raw);
    }
  }
  return limits;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > kMax / base) {
      return kMax;
    }
    result *= base;
  }
  return result;
}

}  // namespace krullkit
