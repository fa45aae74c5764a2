#include "bhset/arith.hpp"

#include <algorithm>

#include "bhset/errors.hpp"

namespace bhset {

u128 checked_add(u128 a, u128 b, std::string_view context) {
  u128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("128-bit overflow in " + std::string(context));
  }
  return out;
}

u128 checked_mul(u128 a, u128 b, std::string_view context) {
  u128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("128-bit overflow in " + std::string(context));
  }
  return out;
}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<u128> parse_u128(std::string_view text) {
  if (text.empty()) return std::nullopt;
  u128 value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return std::nullopt;
    if (__builtin_mul_overflow(value, u128{10}, &value)) return std::nullopt;
    if (__builtin_add_overflow(value, u128(ch - '0'), &value)) return std::nullopt;
  }
  return value;
}

}  // namespace bhset
