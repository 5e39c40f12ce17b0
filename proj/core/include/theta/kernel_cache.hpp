#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "theta/polynomial.hpp"

namespace theta {

/// On-disk memo of kernel bases, enabled by the THETA_LAB_CACHE environment
/// variable (a directory). Entries are keyed by the shape, the degree and a
/// 64-bit FNV-1a hash of the canonical text of the operator family.
class KernelCache {
 public:
  /// Cache rooted at $THETA_LAB_CACHE, or nullopt when unset/empty.
  static std::optional<KernelCache> from_environment();
  explicit KernelCache(std::filesystem::path root);

  [[nodiscard]] std::filesystem::path entry_path(Shape shape, int d,
                                                 std::uint64_t family_hash) const;
  [[nodiscard]] std::optional<std::vector<Polynomial>> load(Shape shape, int d,
                                                            std::uint64_t family_hash) const;
  /// Best effort: I/O failures leave the cache untouched and are not fatal.
  void store(Shape shape, int d, std::uint64_t family_hash,
             const std::vector<Polynomial>& basis) const;

 private:
  std::filesystem::path root_;
};

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace theta
