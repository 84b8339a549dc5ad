#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace palcomb {

// 128-bit unsigned counters for exact combinatorial counts. The divisor
// recurrences reach (n/2)*k^(n/2+1), which overflows 64 bits near n=60, k=4.
// All arithmetic on counts goes through the checked helpers; overflow is a
// hard error, never wraparound.
using u128 = unsigned __int128;

u128 checked_add(u128 a, u128 b);
u128 checked_mul(u128 a, u128 b);
u128 checked_pow(u128 base, unsigned exp);

std::string to_string(u128 v);
u128 parse_u128(std::string_view s);
double to_double(u128 v);

}  // namespace palcomb
