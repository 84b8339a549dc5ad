#include "palcomb/int128.hpp"

#include <cmath>
#include <stdexcept>

namespace palcomb {

u128 checked_add(u128 a, u128 b) {
  u128 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("128-bit addition overflow");
  }
  return r;
}

u128 checked_mul(u128 a, u128 b) {
  u128 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("128-bit multiplication overflow");
  }
  return r;
}

u128 checked_pow(u128 base, unsigned exp) {
  u128 result = 1;
  while (exp > 0) {
    if (exp & 1u) result = checked_mul(result, base);
    exp >>= 1;
    if (exp > 0) base = checked_mul(base, base);
  }
  return result;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {out.rbegin(), out.rend()};
}

u128 parse_u128(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad digit in integer literal");
    }
    v = checked_add(checked_mul(v, 10), static_cast<u128>(c - '0'));
  }
  return v;
}

double to_double(u128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  return std::ldexp(static_cast<double>(hi), 64) + static_cast<double>(lo);
}

}  // namespace palcomb
