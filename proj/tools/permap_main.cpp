// permap: enumerate, validate and classify periodic maps on closed oriented
// surfaces via their valency data, entirely in exact integer arithmetic.
//
// Subcommands:
//   validate    decide whether (genus, order, thetas) is realizable
//   census      list all conjugacy classes per order for a genus
//   uniqueness  power-class counts for orders above a rational threshold
//   verify      run one of the built-in theorem checks over a genus range
//   power       canonical form of the k-th power of a map
//
// Exit codes: 0 success/pass, 1 domain-level negative (invalid data, failed
// check, multiple power classes), 2 usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permap/census.hpp"
#include "permap/io.hpp"
#include "permap/theorems.hpp"

namespace {

using permap::Int;

constexpr const char* kCacheEnvVar = "PERMAP_CACHE_DIR";

struct GenusRange {
    Int lo = 0;
    Int hi = 0;
};

bool parse_range(const std::string& text, GenusRange& out) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            out.lo = out.hi = std::stoll(text);
        } else {
            out.lo = std::stoll(text.substr(0, pos));
            out.hi = std::stoll(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return out.lo >= 2 && out.hi >= out.lo;
}

bool parse_ratio(const std::string& text, Int& num, Int& den) {
    auto pos = text.find('/');
    try {
        if (pos == std::string::npos) {
            num = std::stoll(text);
            den = 1;
        } else {
            num = std::stoll(text.substr(0, pos));
            den = std::stoll(text.substr(pos + 1));
        }
    } catch (const std::exception&) {
        return false;
    }
    return num >= 0 && den >= 1;
}

std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv(kCacheEnvVar); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "permap";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "permap";
    return std::filesystem::path(".permap-cache");
}

// Thetas from either --theta residues or --valency fractions; empty lists
// are legal (free actions).
std::optional<std::vector<Int>> gather_thetas(Int order, const std::vector<Int>& thetas,
                                              const std::string& valencies, bool theta_given,
                                              bool valency_given) {
    if (theta_given && valency_given) {
        std::cerr << "use either --theta or --valency, not both\n";
        return std::nullopt;
    }
    if (!valency_given)
        return thetas;
    try {
        std::vector<Int> out;
        for (const permap::Valency& v : permap::parse_valency_list(valencies))
            out.push_back(permap::theta_of_valency(v, order));
        return out;
    } catch (const std::exception& e) {
        std::cerr << "bad --valency list: " << e.what() << '\n';
        return std::nullopt;
    }
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(out_path, std::ios::trunc);
    if (!os) {
        std::cerr << "cannot write " << out_path << '\n';
        return 2;
    }
    os << text;
    return os ? 0 : 2;
}

int run_validate(Int genus, Int order, const std::vector<Int>& thetas) {
    auto result = permap::validate(genus, order, thetas);
    if (!result.ok()) {
        std::cout << "invalid: " << result.error().message() << '\n';
        return 1;
    }
    const permap::ClassLabel& label = result.value();
    std::cout << "valid, g'=" << label.orbit_genus << ", " << to_string(label.tv) << '\n';
    return 0;
}

int run_census(Int genus, Int order, const std::string& format, const std::string& out_path,
               const std::string& cache_flag, bool no_cache) {
    std::vector<permap::CensusRecord> records;
    std::filesystem::path dir = resolve_cache_dir(cache_flag);

    std::optional<std::vector<permap::CensusRecord>> cached;
    if (!no_cache)
        cached = permap::read_cache(dir, genus);
    if (cached) {
        records = std::move(*cached);
    } else if (order > 0) {
        // Single-order query: compute just that order, leave the cache alone.
        auto classes = permap::enumerate_classes(genus, order);
        if (!classes.empty()) {
            auto orbits = permap::power_orbits(classes);
            records.push_back(permap::CensusRecord{genus, order, std::move(classes), std::move(orbits)});
        }
    } else {
        records = permap::census(genus);
        if (!no_cache) {
            try {
                permap::write_cache(dir, genus, records);
            } catch (const std::exception& e) {
                std::cerr << "warning: cache not written: " << e.what() << '\n';
            }
        }
    }
    if (order > 0)
        std::erase_if(records, [order](const permap::CensusRecord& r) { return r.order != order; });

    std::string text;
    if (format == "csv")
        text = permap::census_to_csv(records);
    else if (format == "json")
        text = permap::census_to_jsonl(records);
    else
        text = permap::census_to_text(records);
    return emit(text, out_path);
}

int run_uniqueness(Int genus, const std::string& ratio, bool inclusive) {
    Int num = 0, den = 1;
    if (!parse_ratio(ratio, num, den)) {
        std::cerr << "bad --ratio (expected p/q): " << ratio << '\n';
        return 2;
    }
    std::cout << "g=" << genus << ", orders with n " << (inclusive ? ">=" : ">") << " " << num;
    if (den != 1)
        std::cout << "/" << den;
    std::cout << "*g\n";
    std::cout << "n,classes,power_classes\n";
    bool all_unique = true;
    for (Int n = 2; n <= 4 * genus + 2; ++n) {
        bool above = inclusive ? n * den >= num * genus : n * den > num * genus;
        if (!above)
            continue;
        auto classes = permap::enumerate_classes(genus, n);
        if (classes.empty())
            continue;
        auto orbits = permap::power_orbits(classes);
        std::cout << n << ',' << classes.size() << ',' << orbits.size() << '\n';
        if (orbits.size() != 1)
            all_unique = false;
    }
    return all_unique ? 0 : 1;
}

int run_verify(const std::string& suite, const GenusRange& range, Int window_index,
               bool allow_small, const std::string& format) {
    permap::CheckReport report;
    try {
        if (suite == "wiman")
            report = permap::check_wiman(range.lo, range.hi);
        else if (suite == "main")
            report = permap::check_main_uniqueness(range.lo, range.hi, allow_small);
        else if (suite == "irreducible")
            report = permap::check_irreducibility(range.lo, range.hi, allow_small);
        else if (suite == "n1bound")
            report = permap::check_n1_bound(range.lo, range.hi);
        else if (suite == "n1window")
            report = permap::check_n1_window(window_index, range.lo, range.hi, allow_small);
        else if (suite == "table1")
            report = permap::check_large_order_table(range.lo, range.hi, allow_small);
        else {
            std::cerr << "unknown suite: " << suite << '\n';
            return 2;
        }
    } catch (const permap::Error& e) {
        if (e.code() == permap::errc::hypothesis_violated) {
            std::cerr << "hypothesis violated: " << e.what() << '\n';
            return 2;
        }
        throw;
    }
    std::cout << (format == "json" ? permap::report_to_json(report) + "\n"
                                   : permap::report_to_text(report));
    return report.passed ? 0 : 1;
}

int run_power(Int genus, Int order, const std::vector<Int>& thetas, Int exponent) {
    auto result = permap::validate(genus, order, thetas);
    if (!result.ok()) {
        std::cout << "invalid: " << result.error().message() << '\n';
        return 1;
    }
    try {
        std::cout << to_string(permap::power_class(result.value().tv, exponent)) << '\n';
    } catch (const permap::Error& e) {
        if (e.code() == permap::errc::non_coprime_exponent) {
            std::cout << "error: gcd(" << exponent << "," << order << ") != 1\n";
            return 1;
        }
        throw;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic maps on surfaces: exact census and classification"};
    app.require_subcommand(1);

    Int genus = 0, order = 0, exponent = 1;
    std::vector<Int> thetas;
    std::string valencies, format = "text", out_path, cache_flag, ratio = "8/3",
                suite, genus_range_text;
    bool inclusive = false, allow_small = false, no_cache = false;
    Int window_index = 3;

    CLI::App* v = app.add_subcommand("validate", "check realizability of (genus, order, thetas)");
    v->add_option("--genus", genus, "ambient genus (>= 2)")->required();
    v->add_option("--order", order, "order of the map")->required();
    auto* v_theta = v->add_option("--theta", thetas, "rotation residues, e.g. 5,4,1")->delimiter(',');
    auto* v_val = v->add_option("--valency", valencies, "valencies, e.g. 1/2,2/5,1/10");

    CLI::App* c = app.add_subcommand("census", "enumerate all classes for a genus");
    c->add_option("--genus", genus, "ambient genus (>= 2)")->required();
    c->add_option("--order", order, "restrict to a single order");
    c->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    c->add_option("--out", out_path, "write output to a file");
    c->add_option("--cache", cache_flag, "cache directory (else $PERMAP_CACHE_DIR, else the user cache dir)");
    c->add_flag("--no-cache", no_cache, "neither read nor write the cache");

    CLI::App* u = app.add_subcommand("uniqueness", "power-class counts above a threshold order");
    u->add_option("--genus", genus, "ambient genus (>= 2)")->required();
    u->add_option("--ratio", ratio, "threshold ratio p/q: report orders n > (p/q) g");
    u->add_flag("--inclusive", inclusive, "use n >= (p/q) g instead");

    CLI::App* w = app.add_subcommand("verify", "run a named check over a genus range");
    w->add_option("--suite", suite, "wiman|main|irreducible|n1bound|n1window|table1")->required();
    w->add_option("--genus", genus_range_text, "genus range A..B (or a single A)")->required();
    w->add_option("--N", window_index, "minimal branching index for n1window (default 3)");
    w->add_flag("--allow-small", allow_small, "run below the stated genus hypothesis");
    w->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* p = app.add_subcommand("power", "canonical class of the k-th power");
    p->add_option("--genus", genus, "ambient genus (>= 2)")->required();
    p->add_option("--order", order, "order of the map")->required();
    auto* p_theta = p->add_option("--theta", thetas, "rotation residues")->delimiter(',');
    auto* p_val = p->add_option("--valency", valencies, "valencies as m/d list");
    p->add_option("--exponent", exponent, "exponent k, coprime to the order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (v->parsed()) {
            auto t = gather_thetas(order, thetas, valencies, v_theta->count() > 0, v_val->count() > 0);
            return t ? run_validate(genus, order, *t) : 2;
        }
        if (c->parsed())
            return run_census(genus, order, format, out_path, cache_flag, no_cache);
        if (u->parsed())
            return run_uniqueness(genus, ratio, inclusive);
        if (w->parsed()) {
            GenusRange range;
            if (!parse_range(genus_range_text, range)) {
                std::cerr << "bad --genus range (expected A..B with 2 <= A <= B): " << genus_range_text
                          << '\n';
                return 2;
            }
            return run_verify(suite, range, window_index, allow_small, format);
        }
        if (p->parsed()) {
            auto t = gather_thetas(order, thetas, valencies, p_theta->count() > 0, p_val->count() > 0);
            return t ? run_power(genus, order, *t, exponent) : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
