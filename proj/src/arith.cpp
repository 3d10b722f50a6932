#include "permap/arith.hpp"

namespace permap {

Int mod_inverse(Int a, Int n) {
    // Extended Euclid on (a mod n, n).
    Int r0 = n, r1 = pos_mod(a, n);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1)
        return 0;
    return pos_mod(t0, n);
}

std::vector<Int> units_mod(Int n) {
    std::vector<Int> out;
    for (Int k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1)
            out.push_back(k);
    return out;
}

std::vector<Int> divisors_from_two(Int n) {
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        if (d >= 2)
            small.push_back(d);
        Int e = n / d;
        if (e != d && e >= 2)
            large.push_back(e);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace permap
