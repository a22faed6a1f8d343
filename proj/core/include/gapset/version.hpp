#pragma once

#include <cstdint>
#include <string_view>

namespace gapset {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kCountStrategy = "kunz-column-dfs/1";

constexpr std::uint64_t fnv1a64(std::string_view text,
                                std::uint64_t seed = 1469598103934665603ULL) {
  std::uint64_t h = seed;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

// Stamped into cache files; a mismatch discards the cache.
inline constexpr std::uint64_t kCodeHash = fnv1a64(kCountStrategy, fnv1a64(kVersion));

}  // namespace gapset
