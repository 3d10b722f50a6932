#include "permap/valency.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace permap {

std::strong_ordering operator<=>(const TotalValency& a, const TotalValency& b) {
    if (auto c = a.order <=> b.order; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.valencies.begin(), a.valencies.end(),
                                                  b.valencies.begin(), b.valencies.end());
}

std::vector<Int> TotalValency::thetas() const {
    std::vector<Int> out;
    out.reserve(valencies.size());
    for (const Valency& v : valencies)
        out.push_back(v.num * (order / v.den));
    return out;
}

std::vector<Int> TotalValency::indices() const {
    std::vector<Int> out;
    out.reserve(valencies.size());
    for (const Valency& v : valencies)
        out.push_back(v.den);
    return out;
}

bool TotalValency::sum_condition_holds() const {
    Int sum = 0;
    for (const Valency& v : valencies)
        sum = (sum + v.num * (order / v.den)) % order;
    return sum == 0;
}

bool riemann_hurwitz_holds(const ClassLabel& label) {
    const Int n = label.tv.order;
    Int rhs = n * (2 * label.orbit_genus - 2);
    for (const Valency& v : label.tv.valencies)
        rhs += n - n / v.den;
    return 2 * label.genus - 2 == rhs;
}

Valency reduce_valency(Int theta, Int order) {
    if (order < 1)
        throw Error(errc::incompatible_order, "order must be positive");
    theta = pos_mod(theta, order);
    if (theta == 0)
        throw Error(errc::not_a_branch_point, "theta == 0 (mod n) carries no valency");
    Int g = std::gcd(theta, order);
    return Valency{theta / g, order / g};
}

Int theta_of_valency(const Valency& v, Int order) {
    if (v.den < 2 || order % v.den != 0)
        throw Error(errc::incompatible_order, "branching index does not divide the order");
    return v.num * (order / v.den);
}

TotalValency canonicalize(Int order, std::vector<Valency> valencies) {
    for (const Valency& v : valencies)
        if (v.den < 2 || order % v.den != 0)
            throw Error(errc::incompatible_order, "branching index does not divide the order");
    std::sort(valencies.begin(), valencies.end());
    return TotalValency{order, std::move(valencies)};
}

TotalValency power_class(const TotalValency& tv, Int k) {
    const Int n = tv.order;
    Int inv = mod_inverse(k, n);
    if (inv == 0)
        throw Error(errc::non_coprime_exponent, "exponent not coprime to the order");
    std::vector<Valency> mapped;
    mapped.reserve(tv.valencies.size());
    for (const Valency& v : tv.valencies) {
        // inv is a unit mod n, hence mod den too, so the product stays coprime.
        mapped.push_back(Valency{pos_mod(inv % v.den * v.num, v.den), v.den});
    }
    return canonicalize(n, std::move(mapped));
}

std::string to_string(const TotalValency& tv) {
    std::ostringstream os;
    os << '(' << tv.order << "; ";
    for (size_t i = 0; i < tv.valencies.size(); ++i) {
        if (i)
            os << " + ";
        os << tv.valencies[i].num << '/' << tv.valencies[i].den;
    }
    os << ')';
    return os.str();
}

namespace {

void skip_spaces(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
}

Int parse_int(const std::string& s, size_t& i) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (i == start)
        throw std::invalid_argument("expected integer in '" + s + "' at position " + std::to_string(start));
    return std::stoll(s.substr(start, i - start));
}

Valency parse_fraction(const std::string& s, size_t& i) {
    Int num = parse_int(s, i);
    skip_spaces(s, i);
    if (i >= s.size() || s[i] != '/')
        throw std::invalid_argument("expected '/' in valency: " + s);
    ++i;
    skip_spaces(s, i);
    Int den = parse_int(s, i);
    if (den < 2 || num < 1 || num >= den || std::gcd(num, den) != 1)
        throw std::invalid_argument("not a reduced valency: " + std::to_string(num) + "/" + std::to_string(den));
    return Valency{num, den};
}

} // namespace

TotalValency parse_total_valency(const std::string& text) {
    size_t i = 0;
    skip_spaces(text, i);
    if (i >= text.size() || text[i] != '(')
        throw std::invalid_argument("expected '(': " + text);
    ++i;
    skip_spaces(text, i);
    Int order = parse_int(text, i);
    skip_spaces(text, i);
    if (i >= text.size() || text[i] != ';')
        throw std::invalid_argument("expected ';': " + text);
    ++i;
    skip_spaces(text, i);
    std::vector<Valency> vals;
    while (i < text.size() && text[i] != ')') {
        if (!vals.empty()) {
            if (text[i] != '+')
                throw std::invalid_argument("expected '+': " + text);
            ++i;
            skip_spaces(text, i);
        }
        vals.push_back(parse_fraction(text, i));
        skip_spaces(text, i);
    }
    if (i >= text.size() || text[i] != ')')
        throw std::invalid_argument("expected ')': " + text);
    return canonicalize(order, std::move(vals));
}

std::vector<Valency> parse_valency_list(const std::string& text) {
    std::vector<Valency> out;
    size_t i = 0;
    skip_spaces(text, i);
    while (i < text.size()) {
        out.push_back(parse_fraction(text, i));
        skip_spaces(text, i);
        if (i < text.size()) {
            if (text[i] != ',')
                throw std::invalid_argument("expected ',': " + text);
            ++i;
            skip_spaces(text, i);
        }
    }
    return out;
}

} // namespace permap
