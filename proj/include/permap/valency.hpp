#pragma once

#include <compare>
#include <string>
#include <vector>

#include "permap/arith.hpp"
#include "permap/error.hpp"

namespace permap {

// Rotation data of a periodic map at one branch point, stored as the reduced
// fraction num/den with 1 <= num < den, den >= 2, gcd(num, den) = 1. The
// denominator is the branching index of the point; the numerator is only
// well defined modulo den, and the least positive residue is used throughout.
struct Valency {
    Int num = 0;
    Int den = 0;

    friend bool operator==(const Valency&, const Valency&) = default;
    // Canonical order: by (den, num).
    friend std::strong_ordering operator<=>(const Valency& a, const Valency& b) {
        if (auto c = a.den <=> b.den; c != 0)
            return c;
        return a.num <=> b.num;
    }
};

// An order n >= 2 together with the multiset of valencies of all branch
// points, kept sorted ascending by (den, num). At a fixed ambient genus this
// data identifies a conjugacy class of order-n periodic maps, so its string
// form is used as the stable class identity in all output.
struct TotalValency {
    Int order = 0;
    std::vector<Valency> valencies; // canonically sorted

    Int branch_count() const { return static_cast<Int>(valencies.size()); }

    // Rotation residues theta_i = num_i * (order / den_i), in canonical order.
    std::vector<Int> thetas() const;

    // Branching indices (the denominators), in canonical order.
    std::vector<Int> indices() const;

    // Sum of the thetas vanishes modulo the order. Vacuously true when
    // there are no branch points.
    bool sum_condition_holds() const;

    friend bool operator==(const TotalValency&, const TotalValency&) = default;
    friend std::strong_ordering operator<=>(const TotalValency& a, const TotalValency& b);
};

// A full class label: ambient genus, class data, and the orbit genus forced
// by the Riemann-Hurwitz formula.
struct ClassLabel {
    Int genus = 0;
    TotalValency tv;
    Int orbit_genus = 0;

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
    friend std::strong_ordering operator<=>(const ClassLabel& a, const ClassLabel& b) {
        if (auto c = a.genus <=> b.genus; c != 0)
            return c;
        return a.tv <=> b.tv;
    }
};

// 2g - 2 = n(2g' - 2) + sum(n - n/den_i), exactly.
bool riemann_hurwitz_holds(const ClassLabel& label);

// Reduce a rotation residue theta (mod n) to its valency. The branching
// index is n / gcd(theta, n). Throws errc::not_a_branch_point when
// theta == 0 (mod n): a regular orbit carries no valency.
Valency reduce_valency(Int theta, Int order);

// Inverse of reduce_valency: theta = num * (order / den). Throws
// errc::incompatible_order when den does not divide order.
Int theta_of_valency(const Valency& v, Int order);

// Sort a multiset of valencies into canonical form. Each denominator must
// divide the order (errc::incompatible_order otherwise). Pure normalization:
// two multisets are equal iff their canonical forms are equal.
TotalValency canonicalize(Int order, std::vector<Valency> valencies);

// Class data of the k-th power of a periodic map, for k coprime to the
// order: each valency m/d becomes ((k~ * m) mod d) / d where k * k~ = 1
// (mod n), re-canonicalized. Throws errc::non_coprime_exponent when
// gcd(k, n) != 1 (such powers drop the order).
TotalValency power_class(const TotalValency& tv, Int k);

// "(n; m1/d1 + m2/d2 + ...)", e.g. "(10; 1/2 + 2/5 + 1/10)"; a free action
// renders as "(n; )".
std::string to_string(const TotalValency& tv);

// Parse the canonical string form back. Throws std::invalid_argument on
// malformed input; the result is re-canonicalized.
TotalValency parse_total_valency(const std::string& text);

// Parse a comma separated list "m1/d1,m2/d2,..." of reduced fractions.
std::vector<Valency> parse_valency_list(const std::string& text);

} // namespace permap
