#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace bhset {

/// Every set element and every sum is a 128-bit unsigned integer.
using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~u128{0};

/// Checked addition; throws OverflowError mentioning `context` on wraparound.
u128 checked_add(u128 a, u128 b, std::string_view context = "addition");

/// Checked multiplication; throws OverflowError mentioning `context` on wraparound.
u128 checked_mul(u128 a, u128 b, std::string_view context = "multiplication");

/// Exact decimal rendering.
std::string to_string(u128 value);

/// Parses a non-empty run of decimal digits. Rejects signs, whitespace and
/// anything above 2^128 - 1.
std::optional<u128> parse_u128(std::string_view text);

}  // namespace bhset
