#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace uimpact {

// 64-bit FNV-1a. Not cryptographic; used to fingerprint input files so
// report numbers can be traced back to exact input bytes.
std::uint64_t fnv1a64(std::string_view bytes);

// Streams the file; throws std::runtime_error if it cannot be opened.
std::uint64_t fnv1a64_file(const std::filesystem::path& path);

// 16 lowercase hex digits.
std::string fnv1a64_hex(std::uint64_t digest);

}  // namespace uimpact
