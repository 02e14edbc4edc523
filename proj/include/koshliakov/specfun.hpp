#pragma once

// Scalar special functions, templated on the working real type
// (double, or long double for the extended profile).

#include "koshliakov/specfun/bessel.hpp"
#include "koshliakov/specfun/expint.hpp"
#include "koshliakov/specfun/gamma.hpp"
#include "koshliakov/specfun/zeta.hpp"
