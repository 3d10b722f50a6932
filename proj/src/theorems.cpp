#include "permap/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permap {

namespace {

void add_witness(CheckReport& report, Int genus, Int order, TotalValency tv, WitnessKind kind,
                 std::string note) {
    report.witnesses.push_back(Witness{genus, order, std::move(tv), kind, std::move(note)});
    if (kind == WitnessKind::failure)
        report.passed = false;
}

CheckReport make_report(std::string name, Int g_lo, Int g_hi) {
    return CheckReport{std::move(name), g_lo, g_hi, true, {}};
}

void require_large_genus(const char* check, Int g_lo, bool allow_small_genus) {
    if (g_lo <= 30 && !allow_small_genus)
        throw Error(errc::hypothesis_violated,
                    std::string(check) + " is stated for genus > 30; pass allow_small_genus to explore below");
}

bool above_ratio(Int order, Int genus, Int num, Int den, bool inclusive = false) {
    // order > (num/den) * genus, exactly.
    return inclusive ? order * den >= num * genus : order * den > num * genus;
}

bool is_three_point_sphere(const ClassLabel& c) {
    return c.orbit_genus == 0 && c.tv.branch_count() == 3;
}

std::string note_order(const char* what, Int value) {
    std::ostringstream os;
    os << what << " " << value;
    return os.str();
}

} // namespace

bool CheckReport::recompute_passed() const {
    return std::none_of(witnesses.begin(), witnesses.end(),
                        [](const Witness& w) { return w.kind == WitnessKind::failure; });
}

CheckReport check_wiman(Int g_lo, Int g_hi) {
    CheckReport report = make_report("wiman", g_lo, g_hi);
    for (Int g = g_lo; g <= g_hi; ++g) {
        const Int bound = 4 * g + 2;

        // Lower bound: the classical order-(4g+2) family must exist.
        TotalValency expected =
            canonicalize(bound, {Valency{1, 2}, Valency{g, 2 * g + 1}, Valency{1, bound}});
        std::vector<ClassLabel> at_bound = enumerate_classes(g, bound);
        bool found = std::any_of(at_bound.begin(), at_bound.end(),
                                 [&](const ClassLabel& c) { return c.tv == expected; });
        auto check = validate(g, bound, expected.thetas());
        if (found && check.ok())
            add_witness(report, g, bound, expected, WitnessKind::confirmation, "maximal order 4g+2 attained");
        else
            add_witness(report, g, bound, expected, WitnessKind::failure, "expected class at order 4g+2 missing");

        // Upper bound: nothing between 4g+2 and 5g.
        for (Int n = bound + 1; n <= 5 * g; ++n)
            for (const ClassLabel& c : enumerate_classes(g, n))
                add_witness(report, g, n, c.tv, WitnessKind::failure, "class above the 4g+2 bound");
    }
    return report;
}

CheckReport check_main_uniqueness(Int g_lo, Int g_hi, bool allow_small_genus) {
    require_large_genus("main uniqueness", g_lo, allow_small_genus);
    CheckReport report = make_report("main", g_lo, g_hi);
    for (Int g = g_lo; g <= g_hi; ++g) {
        for (Int n = 2; n <= 4 * g + 2; ++n) {
            if (!above_ratio(n, g, 8, 3))
                continue;
            std::vector<ClassLabel> classes = enumerate_classes(g, n);
            if (classes.empty())
                continue;
            std::vector<PowerClass> orbits = power_orbits(classes);
            if (orbits.size() != 1)
                for (const PowerClass& pc : orbits)
                    add_witness(report, g, n, pc.representative, WitnessKind::failure,
                                note_order("power classes:", static_cast<Int>(orbits.size())));
        }
    }
    return report;
}

CheckReport check_irreducibility(Int g_lo, Int g_hi, bool allow_small_genus) {
    require_large_genus("irreducibility", g_lo, allow_small_genus);
    CheckReport report = make_report("irreducible", g_lo, g_hi);
    for (Int g = g_lo; g <= g_hi; ++g)
        for (Int n = 2; n <= 4 * g + 2; ++n) {
            if (!above_ratio(n, g, 8, 3))
                continue;
            for (const ClassLabel& c : enumerate_classes(g, n))
                if (!is_three_point_sphere(c))
                    add_witness(report, g, n, c.tv, WitnessKind::failure,
                                "not a three-point sphere quotient");
        }
    return report;
}

CheckReport check_n1_bound(Int g_lo, Int g_hi) {
    CheckReport report = make_report("n1bound", g_lo, g_hi);
    for (Int g = g_lo; g <= g_hi; ++g)
        for (const CensusRecord& rec : census(g))
            for (const ClassLabel& c : rec.classes) {
                if (!is_three_point_sphere(c))
                    continue;
                const Int n = rec.order;
                const Int n1 = c.tv.valencies.front().den;
                // 2 n1 / (n1 - 1) g <= n <= 2 n1 / (n1 - 1) g + n1
                bool lower = 2 * n1 * g <= n * (n1 - 1);
                bool upper = n * (n1 - 1) <= 2 * n1 * g + n1 * (n1 - 1);
                if (!lower || !upper)
                    add_witness(report, g, n, c.tv, WitnessKind::failure,
                                lower ? "order above the n1 window" : "order below the n1 window");
            }
    return report;
}

CheckReport check_n1_window(Int min_index, Int g_lo, Int g_hi, bool allow_small_genus) {
    if (min_index < 3)
        throw Error(errc::hypothesis_violated, "the window statement needs N >= 3");
    const Int threshold = (min_index - 1) * min_index * (min_index + 1) / 2;
    if (g_lo <= threshold && !allow_small_genus)
        throw Error(errc::hypothesis_violated,
                    "window for N = " + std::to_string(min_index) + " needs genus > " +
                        std::to_string(threshold));

    CheckReport report = make_report("n1window", g_lo, g_hi);
    const Int N = min_index;
    for (Int g = g_lo; g <= g_hi; ++g)
        for (const CensusRecord& rec : census(g))
            for (const ClassLabel& c : rec.classes) {
                if (!is_three_point_sphere(c))
                    continue;
                const Int n = rec.order;
                const Int n1 = c.tv.valencies.front().den;
                // 2N/(N-1) g <= n < 2(N-1)/(N-2) g
                bool in_window = 2 * N * g <= n * (N - 1) && n * (N - 2) < 2 * (N - 1) * g;
                if ((n1 == N) != in_window)
                    add_witness(report, g, n, c.tv, WitnessKind::failure,
                                in_window ? note_order("in window but n1 =", n1)
                                          : note_order("n1 = N outside window, n =", n));
                // Companion bound: n >= 2N/(N-1) g forces n1 <= 3N - 1.
                if (2 * N * g <= n * (N - 1) && n1 > 3 * N - 1)
                    add_witness(report, g, n, c.tv, WitnessKind::failure,
                                note_order("n1 exceeds 3N - 1:", n1));
            }
    return report;
}

CheckReport check_three_point_properties(Int g_lo, Int g_hi) {
    CheckReport report = make_report("threepoint", g_lo, g_hi);
    for (Int g = g_lo; g <= g_hi; ++g)
        for (const CensusRecord& rec : census(g))
            for (const ClassLabel& c : rec.classes) {
                if (!is_three_point_sphere(c))
                    continue;
                const Int n = rec.order;
                const std::array<Int, 3> idx = {c.tv.valencies[0].den, c.tv.valencies[1].den,
                                                c.tv.valencies[2].den};
                const auto [k1, k2, k3] = k_values(n, idx);
                const Int n1 = idx[0];
                auto fail = [&](const char* what) {
                    add_witness(report, g, n, c.tv, WitnessKind::failure, what);
                };
                if (!harvey_check(n, idx))
                    fail("lcm condition violated");
                if (n * (n1 - 1) != n1 * (2 * g + k2 + k3 - 2))
                    fail("n(n1-1) = n1(2g+k2+k3-2) violated");
                if (k2 < k3)
                    fail("k2 >= k3 violated");
                if (n1 % k2 != 0 || n1 % k3 != 0)
                    fail("k2 | n1, k3 | n1 violated");
                if (std::gcd(k2, k3) != 1)
                    fail("gcd(k2, k3) = 1 violated");
                if (k2 + k3 > n1 + 1)
                    fail("k2 + k3 <= n1 + 1 violated");
                if (n != 2 * g + (k1 + k2 + k3) - 2)
                    fail("n = 2g + (k1+k2+k3) - 2 violated");
                if (n < 2 * g + 1)
                    fail("n >= 2g + 1 violated");
                if (n1 > 2 * g + 1)
                    fail("n1 <= 2g + 1 violated");
            }
    return report;
}

std::vector<TotalValency> expected_large_order_classes(Int genus) {
    const Int g = genus;
    std::vector<TotalValency> rows;
    auto row = [&](Int order, Valency a, Valency b, Valency c) {
        rows.push_back(canonicalize(order, {a, b, c}));
    };

    // Orders 4g+2 and 4g exist for every genus.
    row(4 * g + 2, {1, 2}, {g, 2 * g + 1}, {1, 4 * g + 2});
    row(4 * g, {1, 2}, {2 * g - 1, 4 * g}, {1, 4 * g});

    // Orders 3g+3 and 3g, by g mod 3.
    switch (g % 3) {
    case 0: {
        Int k = g / 3;
        row(3 * g + 3, {2, 3}, {k, g + 1}, {1, 3 * g + 3});
        row(3 * g, {1, 3}, {2 * g - 1, 3 * g}, {1, 3 * g});
        break;
    }
    case 1: {
        Int k = (g - 1) / 3;
        row(3 * g + 3, {1, 3}, {2 * k + 1, g + 1}, {1, 3 * g + 3});
        row(3 * g, {1, 3}, {2 * g - 1, 3 * g}, {1, 3 * g});
        break;
    }
    default:
        row(3 * g, {2, 3}, {g - 1, 3 * g}, {1, 3 * g});
        break;
    }

    // The two families squeezing the 8g/3 threshold, by g mod 6.
    switch (g % 6) {
    case 0: {
        Int m = g / 6;
        row(16 * m + 4, {3, 4}, {m, 4 * m + 1}, {1, 16 * m + 4});
        break;
    }
    case 3: {
        Int m = (g - 3) / 6;
        row(16 * m + 12, {1, 4}, {3 * m + 2, 4 * m + 3}, {1, 16 * m + 12});
        break;
    }
    case 1: {
        Int m = (g - 1) / 6;
        row(16 * m + 4, {1, 4}, {6 * m + 1, 8 * m + 2}, {1, 16 * m + 4});
        break;
    }
    case 4: {
        Int m = (g - 4) / 6;
        row(16 * m + 12, {3, 4}, {2 * m + 1, 8 * m + 6}, {1, 16 * m + 12});
        break;
    }
    default:
        break; // g = 2, 5 (mod 6): no family at these orders
    }

    std::sort(rows.begin(), rows.end());
    return rows;
}

CheckReport check_large_order_table(Int g_lo, Int g_hi, bool allow_small_genus) {
    require_large_genus("large-order table", g_lo, allow_small_genus);
    CheckReport report = make_report("table1", g_lo, g_hi);
    for (Int g = g_lo; g <= g_hi; ++g) {
        std::vector<TotalValency> expected = expected_large_order_classes(g);

        // Every expected family member is a genuine census class.
        for (const TotalValency& tv : expected) {
            auto checked = validate(g, tv.order, tv.thetas());
            std::vector<ClassLabel> classes = enumerate_classes(g, tv.order);
            bool present = std::any_of(classes.begin(), classes.end(),
                                       [&](const ClassLabel& c) { return c.tv == tv; });
            if (!checked.ok() || !present)
                add_witness(report, g, tv.order, tv, WitnessKind::failure,
                            "expected family entry not realized");
        }

        // Every class above 8g/3 is a power of an expected entry.
        for (Int n = 2; n <= 4 * g + 2; ++n) {
            if (!above_ratio(n, g, 8, 3))
                continue;
            for (const ClassLabel& c : enumerate_classes(g, n)) {
                bool matched = std::any_of(expected.begin(), expected.end(), [&](const TotalValency& tv) {
                    return tv.order == n && are_power_conjugate(c.tv, tv);
                });
                if (!matched)
                    add_witness(report, g, n, c.tv, WitnessKind::failure,
                                "class not power-conjugate to any expected family entry");
            }
        }
    }
    return report;
}

} // namespace permap
