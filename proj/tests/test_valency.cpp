#include <doctest.h>

#include <algorithm>
#include <random>

#include "permap/census.hpp"
#include "permap/valency.hpp"

using namespace permap;

namespace {

// Independent oracle for the power map: act on the raw rotation residues
// theta_i -> k~ * theta_i (mod n) with a brute-force inverse, then reduce.
TotalValency power_by_thetas(const TotalValency& tv, Int k) {
    const Int n = tv.order;
    Int kinv = 0;
    for (Int j = 1; j < n; ++j)
        if (pos_mod(k * j, n) == 1) {
            kinv = j;
            break;
        }
    REQUIRE(kinv != 0);
    std::vector<Valency> vals;
    for (Int theta : tv.thetas())
        vals.push_back(reduce_valency(pos_mod(kinv * theta, n), n));
    return canonicalize(n, vals);
}

} // namespace

TEST_CASE("reduce_valency") {
    CHECK(reduce_valency(5, 10) == Valency{1, 2});
    CHECK(reduce_valency(4, 10) == Valency{2, 5});
    CHECK(reduce_valency(6, 10) == Valency{3, 5});
    CHECK(reduce_valency(1, 10) == Valency{1, 10});
    CHECK_THROWS_WITH_AS(reduce_valency(10, 10), doctest::Contains("no valency"), Error);
    CHECK_THROWS_AS(reduce_valency(0, 7), Error);
}

TEST_CASE("theta_of_valency") {
    CHECK(theta_of_valency(Valency{1, 2}, 10) == 5);
    CHECK(theta_of_valency(Valency{2, 5}, 10) == 4);
    CHECK(theta_of_valency(Valency{3, 10}, 10) == 3);
    CHECK_THROWS_AS(theta_of_valency(Valency{1, 3}, 10), Error);
}

TEST_CASE("reduce/theta round trip, exhaustive for small orders") {
    for (Int n = 2; n <= 40; ++n)
        for (Int d : divisors_from_two(n))
            for (Int m = 1; m < d; ++m) {
                if (std::gcd(m, d) != 1)
                    continue;
                Valency v{m, d};
                CHECK(reduce_valency(theta_of_valency(v, n), n) == v);
            }
    // ... and the other direction on raw residues.
    for (Int n = 2; n <= 40; ++n)
        for (Int theta = 1; theta < n; ++theta)
            CHECK(theta_of_valency(reduce_valency(theta, n), n) == theta);
}

TEST_CASE("canonicalize sorts by (den, num) and is permutation invariant") {
    TotalValency a = canonicalize(10, {{2, 5}, {1, 2}, {1, 10}});
    CHECK(to_string(a) == "(10; 1/2 + 2/5 + 1/10)");

    TotalValency b = canonicalize(24, {{17, 24}, {1, 4}, {1, 24}});
    CHECK(to_string(b) == "(24; 1/4 + 1/24 + 17/24)");

    CHECK(to_string(canonicalize(10, {})) == "(10; )");

    CHECK_THROWS_AS(canonicalize(10, {{1, 3}}), Error);

    std::mt19937 rng(20240811);
    std::vector<Valency> vals = {{1, 2}, {1, 2}, {2, 5}, {3, 5}, {1, 10}, {7, 10}};
    TotalValency canon = canonicalize(10, vals);
    for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(vals.begin(), vals.end(), rng);
        CHECK(canonicalize(10, vals) == canon);
    }
}

TEST_CASE("power_class examples") {
    TotalValency tv = canonicalize(10, {{1, 2}, {2, 5}, {1, 10}});
    CHECK(power_class(tv, 1) == tv);
    CHECK(to_string(power_class(tv, 3)) == "(10; 1/2 + 4/5 + 7/10)");
    CHECK(to_string(power_class(tv, 9)) == "(10; 1/2 + 3/5 + 9/10)");
    CHECK(power_class(tv, 3) == power_by_thetas(tv, 3));
    CHECK(power_class(tv, 9) == power_by_thetas(tv, 9));
    CHECK_THROWS_AS(power_class(tv, 5), Error);
    CHECK_THROWS_AS(power_class(tv, 0), Error);
    // Negative exponents reduce modulo the order.
    CHECK(power_class(tv, -1) == power_class(tv, 9));
}

TEST_CASE("power_class properties over census classes") {
    for (Int g = 2; g <= 6; ++g)
        for (const CensusRecord& rec : census(g))
            for (const ClassLabel& c : rec.classes)
                for (Int k : units_mod(rec.order)) {
                    TotalValency p = power_class(c.tv, k);
                    CHECK(p == power_by_thetas(c.tv, k));
                    CHECK(p.sum_condition_holds());
                    CHECK(p.indices() == c.tv.indices()); // branching data preserved
                    CHECK(power_class(p, mod_inverse(k, rec.order)) == c.tv);
                }
}

TEST_CASE("canonical string parses back") {
    for (const char* s : {"(10; 1/2 + 2/5 + 1/10)", "(24; 1/4 + 1/24 + 17/24)", "(7; )"})
        CHECK(to_string(parse_total_valency(s)) == s);
    CHECK_THROWS_AS(parse_total_valency("(10; 2/4)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_total_valency("10; 1/2"), std::invalid_argument);
}

TEST_CASE("valency list parsing") {
    auto vals = parse_valency_list("1/2,2/5,1/10");
    REQUIRE(vals.size() == 3);
    CHECK(vals[1] == Valency{2, 5});
    CHECK(parse_valency_list("").empty());
    CHECK_THROWS_AS(parse_valency_list("3/6"), std::invalid_argument);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(3, 10) == 7);
    CHECK(mod_inverse(9, 10) == 9);
    CHECK(mod_inverse(4, 10) == 0);
    for (Int n = 2; n <= 50; ++n)
        for (Int k : units_mod(n))
            CHECK(pos_mod(k * mod_inverse(k, n), n) == 1);
}
