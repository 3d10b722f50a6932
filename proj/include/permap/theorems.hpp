#pragma once

#include <string>
#include <vector>

#include "permap/census.hpp"

namespace permap {

// Witnesses are concrete (g, n, class) triples: failures are
// counterexamples, confirmations are the classes a check promises to exist.
enum class WitnessKind { failure, confirmation };

struct Witness {
    Int genus = 0;
    Int order = 0;
    TotalValency tv;
    WitnessKind kind = WitnessKind::failure;
    std::string note;
};

struct CheckReport {
    std::string check_name;
    Int genus_lo = 0;
    Int genus_hi = 0;
    bool passed = false; // true iff no failure witnesses
    std::vector<Witness> witnesses;

    bool recompute_passed() const;
};

// Maximal order is exactly 4g + 2 at every genus in range: a class exists
// at 4g + 2 (the classical maximal family, confirmed as a witness) and no
// class exists for 4g + 2 < n <= 5g.
CheckReport check_wiman(Int g_lo, Int g_hi);

// Above order 8g/3 the class of a periodic map is unique up to conjugacy
// and power: every nonempty order n > 8g/3 has exactly one power class.
// Stated for g > 30; pass allow_small_genus to explore below (otherwise
// errc::hypothesis_violated).
CheckReport check_main_uniqueness(Int g_lo, Int g_hi, bool allow_small_genus = false);

// Every class with n > 8g/3 is irreducible: orbit genus 0 with exactly
// three branch points. Same g > 30 guard.
CheckReport check_irreducibility(Int g_lo, Int g_hi, bool allow_small_genus = false);

// For every class with orbit genus 0 and three branch points,
// 2n1/(n1-1) g <= n <= 2n1/(n1-1) g + n1 where n1 is the minimal branching
// index. Exact rational comparison; applies at any g >= 2.
CheckReport check_n1_bound(Int g_lo, Int g_hi);

// Window biconditional for a fixed minimal index N >= 3:
//   n1 = N  <=>  2N/(N-1) g <= n < 2(N-1)/(N-2) g,
// over classes with orbit genus 0 and three branch points. Requires
// g > (N-1)N(N+1)/2 throughout the range (errc::hypothesis_violated
// otherwise, unless allow_small_genus). Also verifies the companion bound
// n1 <= 3N - 1 for every class with n >= 2N/(N-1) g.
CheckReport check_n1_window(Int min_index, Int g_lo, Int g_hi, bool allow_small_genus = false);

// Structural identities for every class with orbit genus 0 and three branch
// points, writing k_i = n/n_i:
//   - the lcm condition (harvey_check);
//   - n(n1 - 1) = n1(2g + k2 + k3 - 2);
//   - k2 >= k3; k2 | n1; k3 | n1; gcd(k2, k3) = 1; k2 + k3 <= n1 + 1;
//   - n = 2g + (k1 + k2 + k3) - 2 (hence n >= 2g + 1);
//   - n1 <= 2g + 1.
CheckReport check_three_point_properties(Int g_lo, Int g_hi);

// The closed-form families covering all classes of order n > 8g/3: two
// rows for every genus (orders 4g+2 and 4g), two of order 3g or 3g+3
// selected by g mod 3, and one of order (8g+12)/3 or (8g+4)/3 when
// g = 0, 1 (mod 3), selected by g mod 6. Every entry validates.
std::vector<TotalValency> expected_large_order_classes(Int genus);

// Every census class with n > 8g/3 is power-conjugate to an expected
// family entry of the same order, and every applicable family entry occurs
// in the census. Same g > 30 guard.
CheckReport check_large_order_table(Int g_lo, Int g_hi, bool allow_small_genus = false);

} // namespace permap
