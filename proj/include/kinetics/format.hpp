#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace kinetics {

/// Shortest decimal representation that parses back to the same double
/// (std::to_chars general form). All numeric text output goes through this,
/// which is what makes repeated runs byte-identical.
std::string format_double(double value);

/// FNV-1a 64-bit content hash, reported in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace kinetics
