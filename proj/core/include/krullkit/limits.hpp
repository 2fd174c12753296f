#pragma once

#include <cstddef>
#include <cstdint>

namespace krullkit {

/// Resource caps shared by the exhaustive procedures. Every cap fails loudly
/// with ResourceLimit instead of degrading silently.
struct Limits {
  std::size_t max_lattice_elements = 4096;
  std::size_t max_closure_generators = 12;
  std::size_t max_enumeration_generators = 4;
  /// Cap on |L|^l for Kr_l witness searches and on sequence enumeration.
  std::uint64_t max_search = std::uint64_t{1} << 26;
  std::size_t max_basis_size = 512;
  std::uint32_t max_degree = 40;

  /// Defaults, with max_search overridden by KRULLKIT_MAX_SEARCH when set.
  static Limits from_environment();
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

/// Saturating power, used to compare search spaces against caps.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent);

}  // namespace krullkit
