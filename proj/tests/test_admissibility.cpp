#include <doctest.h>

#include <algorithm>
#include <random>

#include "permap/admissibility.hpp"
#include "permap/census.hpp"

using namespace permap;

TEST_CASE("validate accepts realizable data") {
    auto r = validate(2, 10, {5, 4, 1});
    REQUIRE(r.ok());
    CHECK(r.value().orbit_genus == 0);
    CHECK(to_string(r.value().tv) == "(10; 1/2 + 2/5 + 1/10)");
    CHECK(riemann_hurwitz_holds(r.value()));

    auto s = validate(12, 36, {27, 8, 1});
    REQUIRE(s.ok());
    CHECK(s.value().orbit_genus == 0);
    CHECK(to_string(s.value().tv) == "(36; 3/4 + 2/9 + 1/36)");
}

TEST_CASE("validate reports the first violated condition") {
    auto r = validate(2, 10, {5, 4, 2});
    REQUIRE(!r.ok());
    CHECK(r.error().kind == FailKind::sum_not_zero);
    CHECK(r.error().condition() == 1);

    // A free involution on genus 2 would need orbit genus 3/2.
    auto s = validate(2, 2, {});
    REQUIRE(!s.ok());
    CHECK(s.error().kind == FailKind::no_integer_orbit_genus);
    CHECK(s.error().condition() == 2);

    // theta sum 0 (mod 4), integral orbit genus, but the residues generate
    // a proper subgroup.
    auto t = validate(2, 4, {2, 2, 2, 2, 2});
    REQUIRE(!t.ok());
    CHECK(t.error().kind == FailKind::not_surjective);
    CHECK(t.error().condition() == 3);

    auto u = validate(2, 10, {5, 10, 5});
    REQUIRE(!u.ok());
    CHECK(u.error().kind == FailKind::not_a_branch_point);
    CHECK(u.error().condition() == 0);
}

TEST_CASE("orbit genus solving") {
    auto a = orbit_genus(2, 10, {2, 5, 10});
    REQUIRE(a.ok());
    CHECK(a.value() == 0);

    auto b = orbit_genus(11, 10, {});
    REQUIRE(b.ok());
    CHECK(b.value() == 2);

    auto c = orbit_genus(9, 24, {4, 24, 24});
    REQUIRE(c.ok());
    CHECK(c.value() == 0);

    CHECK(!orbit_genus(2, 2, {}).ok());
    // 2g-2 too small for the ramification: negative orbit genus.
    auto d = orbit_genus(2, 4, {4, 4, 4, 4, 4, 4});
    REQUIRE(!d.ok());
    CHECK(d.error().kind == FailKind::negative_orbit_genus);

    auto e = orbit_genus(2, 10, {3});
    REQUIRE(!e.ok());
    CHECK(e.error().kind == FailKind::incompatible_order);
}

TEST_CASE("harvey_check") {
    CHECK(harvey_check(10, {2, 5, 10}));
    CHECK(!harvey_check(12, {2, 4, 6}));
    CHECK(harvey_check(24, {4, 24, 24}));
}

TEST_CASE("k_values") {
    CHECK(k_values(10, {2, 5, 10}) == std::array<Int, 3>{5, 2, 1});
    CHECK(k_values(24, {4, 8, 24}) == std::array<Int, 3>{6, 3, 1});
    CHECK(k_values(36, {4, 9, 36}) == std::array<Int, 3>{9, 4, 1});
}

TEST_CASE("validate is permutation invariant") {
    std::mt19937 rng(987);
    std::vector<Int> thetas = {5, 4, 1};
    auto canon = validate(2, 10, thetas);
    REQUIRE(canon.ok());
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(thetas.begin(), thetas.end(), rng);
        auto r = validate(2, 10, thetas);
        REQUIRE(r.ok());
        CHECK(r.value() == canon.value());
    }
    // ... and for a rejected tuple the error is stable too.
    std::vector<Int> bad = {5, 4, 2};
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(bad.begin(), bad.end(), rng);
        auto r = validate(2, 10, bad);
        REQUIRE(!r.ok());
        CHECK(r.error().kind == FailKind::sum_not_zero);
    }
}

TEST_CASE("every accepted class satisfies Riemann-Hurwitz exactly") {
    for (Int g = 2; g <= 5; ++g)
        for (Int n = 2; n <= 4 * g + 2; ++n)
            for (const ClassLabel& c : enumerate_classes(g, n)) {
                CHECK(riemann_hurwitz_holds(c));
                CHECK(c.tv.sum_condition_holds());
                auto again = validate(g, n, c.tv.thetas());
                REQUIRE(again.ok());
                CHECK(again.value() == c);
            }
}

TEST_CASE("order 1 identity map") {
    auto r = validate(3, 1, {});
    REQUIRE(r.ok());
    CHECK(r.value().orbit_genus == 3);
}
