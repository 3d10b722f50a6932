#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace permap {

using Int = std::int64_t;

// Inverse of a modulo n (n >= 1, gcd(a, n) = 1), as the least positive
// residue. Returns 0 when no inverse exists.
Int mod_inverse(Int a, Int n);

// Least positive residue of a modulo n.
inline Int pos_mod(Int a, Int n) {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

// All k in [1, n) with gcd(k, n) = 1, ascending. units_mod(1) = {} by
// convention (the unit group of Z_1 is trivial and the power action is the
// identity there).
std::vector<Int> units_mod(Int n);

// Divisors of n that are >= 2, ascending.
std::vector<Int> divisors_from_two(Int n);

// Exact rational comparisons by cross multiplication; b, d > 0.
inline bool rat_lt(Int a, Int b, Int c, Int d) { return a * d < c * b; }
inline bool rat_le(Int a, Int b, Int c, Int d) { return a * d <= c * b; }

} // namespace permap
