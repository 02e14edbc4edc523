#pragma once

#include <cmath>
#include <cstdlib>
#include <string>

#include "koshliakov/error.hpp"

namespace koshliakov {

struct PrecisionProfile {
  int working_digits = 15;
  double target_abs_tol = 1e-13;
  double target_rel_tol = 1e-13;
  std::string name = "double";

  bool valid() const {
    double floor = std::pow(10.0, 2 - working_digits);
    return working_digits >= 15 && target_abs_tol > 0 && target_rel_tol > 0 &&
           target_abs_tol >= floor && target_rel_tol >= floor;
  }

  static PrecisionProfile double_profile() { return {}; }
  static PrecisionProfile extended_profile() { return {18, 1e-16, 1e-16, "extended"}; }

  // Reads KOSHLIAKOV_PROFILE; unset means double.
  static PrecisionProfile from_environment() {
    const char* v = std::getenv("KOSHLIAKOV_PROFILE");
    if (v == nullptr || *v == '\0') return double_profile();
    std::string s(v);
    if (s == "double") return double_profile();
    if (s == "extended") return extended_profile();
    fail(ErrorCode::domain, "KOSHLIAKOV_PROFILE must be 'double' or 'extended', got '" + s + "'");
  }
};

}  // namespace koshliakov
