#pragma once

// Deterministic output plumbing shared by the CLI and the verification
// suite: fixed-precision number formatting (round-trip exact, locale
// independent), an FNV-1a hash of the canonical config dump, and the
// provenance header that opens every emitted file. Identical config and
// seed must produce byte-identical files.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "tpq/version.hpp"

namespace tpq::emit {

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

/// Shortest round-trip-exact decimal form, '.' decimal point always.
inline std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Header block for every output file: tool version, a hash of the
/// canonical configuration dump, and the seed in effect.
inline std::string provenance(std::string_view config_dump, std::uint64_t seed) {
  std::string out;
  out += "# tpq ";
  out += TPQ_VERSION;
  out += "\n# config_hash: ";
  out += hex64(fnv1a(config_dump));
  out += "\n# seed: ";
  out += std::to_string(seed);
  out += "\n";
  return out;
}

}  // namespace tpq::emit
