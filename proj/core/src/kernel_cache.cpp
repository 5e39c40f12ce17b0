#include "theta/kernel_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "theta/errors.hpp"
#include "theta/text_format.hpp"

namespace theta {

namespace {
constexpr const char* kMagic = "theta-lab kernel v1";
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<KernelCache> KernelCache::from_environment() {
  const char* dir = std::getenv("THETA_LAB_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return KernelCache(dir);
}

KernelCache::KernelCache(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path KernelCache::entry_path(Shape shape, int d, std::uint64_t family_hash) const {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(family_hash));
  return root_ / ("kernel-n" + std::to_string(shape.n) + "-k" + std::to_string(shape.k) + "-d" +
                  std::to_string(d) + "-" + hex + ".txt");
}

std::optional<std::vector<Polynomial>> KernelCache::load(Shape shape, int d,
                                                         std::uint64_t family_hash) const {
  std::ifstream in(entry_path(shape, d, family_hash));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kMagic) return std::nullopt;
  if (!std::getline(in, line)) return std::nullopt;
  std::size_t count = 0;
  try {
    count = std::stoul(line);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::vector<Polynomial> basis;
  basis.reserve(count);
  try {
    while (basis.size() < count && std::getline(in, line))
      basis.push_back(parse_polynomial(shape, line));
  } catch (const ParseError&) {
    return std::nullopt;
  }
  if (basis.size() != count) return std::nullopt;
  return basis;
}

void KernelCache::store(Shape shape, int d, std::uint64_t family_hash,
                        const std::vector<Polynomial>& basis) const {
  std::error_code ec;
  std::filesystem::create_directories(root_, ec);
  if (ec) return;
  auto target = entry_path(shape, d, family_hash);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << kMagic << '\n' << basis.size() << '\n';
    for (const auto& p : basis) out << format_polynomial(p) << '\n';
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
}

}  // namespace theta
