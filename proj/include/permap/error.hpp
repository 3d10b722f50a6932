#pragma once

#include <stdexcept>
#include <string>

namespace permap {

// Hard precondition violations thrown by library entry points. Data-level
// validation failures (Prop-2 style rejections) are returned as values
// instead; see admissibility.hpp.
enum class errc {
    not_a_branch_point,   // theta == 0 (mod n) has no valency
    incompatible_order,   // a branching index does not divide the order
    non_coprime_exponent, // power exponent shares a factor with the order
    instance_too_large,   // brute-force oracle guard tripped
    hypothesis_violated,  // genus range breaks a theorem hypothesis
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

} // namespace permap
