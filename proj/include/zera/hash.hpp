#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace zera {

// SHA-256 of arbitrary bytes. Used for request hashes, the rubric checksum,
// config fingerprints, and backend fingerprints; must produce identical
// digests on every platform.
std::array<std::uint8_t, 32> sha256(std::string_view data);

// Lowercase hex of the full digest (64 chars).
std::string sha256_hex(std::string_view data);

std::string to_hex(const std::uint8_t* bytes, std::size_t n);

// splitmix64 step; used to derive per-iteration RNG seeds.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace zera
