#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "permap/valency.hpp"

namespace permap {

// Quotient data: orbit genus plus the multiset of branching indices,
// sorted ascending. Each index divides the ambient order.
struct OrbitSignature {
    Int orbit_genus = 0;
    std::vector<Int> indices;

    friend bool operator==(const OrbitSignature&, const OrbitSignature&) = default;
    friend std::strong_ordering operator<=>(const OrbitSignature&, const OrbitSignature&) = default;
};

// One failed existence condition (or malformed input).
enum class FailKind {
    sum_not_zero,           // condition (1): sum of thetas != 0 (mod n)
    no_integer_orbit_genus, // condition (2): no integral solution
    negative_orbit_genus,   // condition (2): integral but negative
    not_surjective,         // condition (3): gcd(thetas, n) != 1 at orbit genus 0
    not_a_branch_point,     // malformed: theta == 0 (mod n)
    incompatible_order,     // malformed: index does not divide the order
};

struct ValidationError {
    FailKind kind;
    std::string detail;

    // Violated condition number (1, 2 or 3); 0 for malformed input.
    int condition() const;
    const char* name() const;
    std::string message() const;
};

// Value-or-error result for data validation.
template <typename T>
class Expected {
  public:
    Expected(T value) : storage_(std::in_place_index<0>, std::move(value)) {}
    Expected(ValidationError err) : storage_(std::in_place_index<1>, std::move(err)) {}

    bool ok() const { return storage_.index() == 0; }
    explicit operator bool() const { return ok(); }
    const T& value() const { return std::get<0>(storage_); }
    const ValidationError& error() const { return std::get<1>(storage_); }

  private:
    std::variant<T, ValidationError> storage_;
};

// Solve 2g - 2 = n(2g' - 2 + sum(1 - 1/n_i)) for g', exactly. The indices
// must each be >= 2 and divide n. Fails with no_integer_orbit_genus or
// negative_orbit_genus.
Expected<Int> orbit_genus(Int genus, Int order, const std::vector<Int>& indices);

// Decide whether [g, n; theta_1, ..., theta_b] is the data of an actual
// periodic map, checking in order:
//   (1) sum of thetas == 0 (mod n),
//   (2) the orbit genus solves Riemann-Hurwitz as a non-negative integer,
//   (3) when the orbit genus is 0, gcd(theta_1, ..., theta_b, n) = 1
//       (the cyclic group must be generated by the branch data).
// For orbit genus >= 1 no gcd condition applies: handle generators absorb
// surjectivity. Returns the ClassLabel with canonical total valency on
// success, the first violated condition otherwise.
Expected<ClassLabel> validate(Int genus, Int order, const std::vector<Int>& thetas);

// lcm condition for a genus-0 quotient with three branch points:
// lcm(n1, n2) = lcm(n2, n3) = lcm(n3, n1) = n. Each index must divide n.
bool harvey_check(Int order, const std::array<Int, 3>& indices);

// k_i = n / n_i for a three-point signature.
std::array<Int, 3> k_values(Int order, const std::array<Int, 3>& indices);

} // namespace permap
