#include "uimpact/digest.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace uimpact {

namespace {
constexpr std::uint64_t kOffsetBasis = 14695981039346656037ull;
constexpr std::uint64_t kPrime = 1099511628211ull;

std::uint64_t feed(std::uint64_t h, const char* data, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= kPrime;
  }
  return h;
}
}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  return feed(kOffsetBasis, bytes.data(), bytes.size());
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file for digest: " + path.string());
  }
  std::uint64_t h = kOffsetBasis;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    h = feed(h, buf, static_cast<std::size_t>(in.gcount()));
  }
  return h;
}

std::string fnv1a64_hex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

}  // namespace uimpact
