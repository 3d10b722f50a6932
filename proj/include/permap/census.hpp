#pragma once

#include <vector>

#include "permap/admissibility.hpp"
#include "permap/valency.hpp"

namespace permap {

// An orbit of conjugacy classes under the coprime-power action. The
// representative is the lexicographically minimal member.
struct PowerClass {
    TotalValency representative;
    std::vector<TotalValency> members; // sorted, unique

    friend bool operator==(const PowerClass&, const PowerClass&) = default;
};

// All classes and power classes for one (genus, order) pair.
struct CensusRecord {
    Int genus = 0;
    Int order = 0;
    std::vector<ClassLabel> classes;      // sorted canonical forms
    std::vector<PowerClass> power_classes; // sorted by representative

    friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

// All (orbit genus, branching-index multiset) pairs solving Riemann-Hurwitz
// for the given genus and order. Complete and duplicate free; empty when no
// signature exists. Each branch point adds at least n/2 to the degree
// budget, which bounds the branch count and terminates the search.
std::vector<OrbitSignature> enumerate_signatures(Int genus, Int order);

// One canonical class label per conjugacy class of order-n periodic maps on
// genus g, sorted. Fills numerators over each admissible signature; the sum
// condition is solved for the final branch point rather than filtered.
std::vector<ClassLabel> enumerate_classes(Int genus, Int order);

// Partition classes (all sharing genus and order) into orbits of the power
// action, sorted by representative. Throws errc::incompatible_order on
// mixed (genus, order) input.
std::vector<PowerClass> power_orbits(const std::vector<ClassLabel>& classes);

// True iff some power of a is conjugate to b (same order, some exponent
// coprime to it).
bool are_power_conjugate(const TotalValency& a, const TotalValency& b);

// Index of the power class containing tv within record.power_classes,
// -1 when absent.
Int power_class_index(const CensusRecord& record, const TotalValency& tv);

// Census of genus g: one record per order n in [2, max_order] with a
// nonempty class list, ascending. max_order = 0 selects the default 4g + 2
// (nothing exists above it; the Wiman check re-verifies that emptiness by
// scanning to 5g). Deterministic: repeated runs serialize identically.
std::vector<CensusRecord> census(Int genus, Int max_order = 0);

// Independent brute-force oracle: enumerates every theta tuple in
// {1..n-1}^b for all b within the Riemann-Hurwitz budget, filters by
// validate, dedupes by canonical form. Must equal enumerate_classes.
// Guarded to small instances (order <= 60 and a bounded tuple count);
// throws errc::instance_too_large beyond the guard.
std::vector<ClassLabel> oracle_enumerate(Int genus, Int order);

} // namespace permap
