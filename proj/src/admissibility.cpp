#include "permap/admissibility.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permap {

int ValidationError::condition() const {
    switch (kind) {
    case FailKind::sum_not_zero:
        return 1;
    case FailKind::no_integer_orbit_genus:
    case FailKind::negative_orbit_genus:
        return 2;
    case FailKind::not_surjective:
        return 3;
    default:
        return 0;
    }
}

const char* ValidationError::name() const {
    switch (kind) {
    case FailKind::sum_not_zero:
        return "SumNotZero";
    case FailKind::no_integer_orbit_genus:
        return "NoIntegerOrbitGenus";
    case FailKind::negative_orbit_genus:
        return "NegativeOrbitGenus";
    case FailKind::not_surjective:
        return "NotSurjective";
    case FailKind::not_a_branch_point:
        return "NotABranchPoint";
    case FailKind::incompatible_order:
        return "IncompatibleOrder";
    }
    return "?";
}

std::string ValidationError::message() const {
    std::ostringstream os;
    if (condition() != 0)
        os << "condition (" << condition() << "): ";
    os << name();
    if (!detail.empty())
        os << ": " << detail;
    return os.str();
}

Expected<Int> orbit_genus(Int genus, Int order, const std::vector<Int>& indices) {
    // 2g - 2 = n(2g' - 2) + sum(n - n/n_i), solved over the integers.
    Int ramification = 0;
    for (Int d : indices) {
        if (d < 2 || order % d != 0)
            return ValidationError{FailKind::incompatible_order,
                                   "index " + std::to_string(d) + " does not divide " + std::to_string(order)};
        ramification += order - order / d;
    }
    Int numerator = 2 * genus - 2 + 2 * order - ramification;
    if (numerator % (2 * order) != 0)
        return ValidationError{FailKind::no_integer_orbit_genus, "no integer solves Riemann-Hurwitz"};
    Int gp = numerator / (2 * order);
    if (gp < 0)
        return ValidationError{FailKind::negative_orbit_genus, "Riemann-Hurwitz forces a negative orbit genus"};
    return gp;
}

Expected<ClassLabel> validate(Int genus, Int order, const std::vector<Int>& thetas) {
    if (order < 1)
        return ValidationError{FailKind::incompatible_order, "order must be >= 1"};
    std::vector<Valency> vals;
    vals.reserve(thetas.size());
    Int sum = 0;
    Int theta_gcd = 0;
    for (Int t : thetas) {
        Int r = pos_mod(t, order);
        if (r == 0)
            return ValidationError{FailKind::not_a_branch_point,
                                   "theta " + std::to_string(t) + " == 0 (mod " + std::to_string(order) + ")"};
        Int g = std::gcd(r, order);
        vals.push_back(Valency{r / g, order / g});
        sum = (sum + r) % order;
        theta_gcd = std::gcd(theta_gcd, r);
    }
    if (sum != 0)
        return ValidationError{FailKind::sum_not_zero, "theta sum is " + std::to_string(sum) + " (mod " +
                                                           std::to_string(order) + ")"};
    std::vector<Int> indices;
    indices.reserve(vals.size());
    for (const Valency& v : vals)
        indices.push_back(v.den);
    auto gp = orbit_genus(genus, order, indices);
    if (!gp.ok())
        return gp.error();
    if (gp.value() == 0 && std::gcd(theta_gcd, order) != 1)
        return ValidationError{FailKind::not_surjective,
                               "gcd(thetas, n) = " + std::to_string(std::gcd(theta_gcd, order))};
    return ClassLabel{genus, canonicalize(order, std::move(vals)), gp.value()};
}

bool harvey_check(Int order, const std::array<Int, 3>& indices) {
    return std::lcm(indices[0], indices[1]) == order && std::lcm(indices[1], indices[2]) == order &&
           std::lcm(indices[2], indices[0]) == order;
}

std::array<Int, 3> k_values(Int order, const std::array<Int, 3>& indices) {
    return {order / indices[0], order / indices[1], order / indices[2]};
}

} // namespace permap
