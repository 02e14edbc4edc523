#pragma once

#include <cmath>
#include <limits>

#include "koshliakov/error.hpp"
#include "koshliakov/specfun/gamma.hpp"

namespace koshliakov {

namespace detail {

// Ei(y) for 0 < y <= 40 by the convergent series.
template <class Real>
Real ei_series(Real y) {
  using W = long double;
  W term = 1, sum = 0;
  const W eps = std::numeric_limits<W>::epsilon();
  for (int k = 1; k < 500; ++k) {
    term *= W(y) / k;
    W add = term / k;
    sum += add;
    if (add < eps * std::abs(sum)) break;
  }
  return Real(constants::euler_gamma<W> + std::log(W(y)) + sum);
}

// e^{-y} Ei(y) asymptotically, y > 40.
template <class Real>
Real ei_scaled_asymptotic(Real y) {
  Real term = 1, sum = 1, prev = 1;
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int k = 1; k < 200; ++k) {
    term *= Real(k) / y;
    if (term > prev) break;
    sum += term;
    if (term < eps * sum) break;
    prev = term;
  }
  return sum / y;
}

}  // namespace detail

// e^{u} E1(u), u > 0.
template <class Real>
Real e1_scaled(Real u) {
  if (!(u > 0)) fail(ErrorCode::domain, "E1 needs a positive argument");
  const Real eps = std::numeric_limits<Real>::epsilon();
  if (u <= 1) {
    using W = long double;
    W term = 1, sum = 0;
    for (int k = 1; k < 200; ++k) {
      term *= -W(u) / k;
      W add = term / k;
      sum += add;
      if (std::abs(add) < std::numeric_limits<W>::epsilon() * std::abs(sum)) break;
    }
    W e1 = -constants::euler_gamma<W> - std::log(W(u)) - sum;
    return Real(std::exp(W(u)) * e1);
  }
  // continued fraction, modified Lentz
  const Real tiny = std::numeric_limits<Real>::min() / eps;
  Real b = u + 1, c = 1 / tiny, d = 1 / b, h = d;
  for (int i = 1; i < 1000; ++i) {
    Real an = -Real(i) * Real(i);
    b += 2;
    d = 1 / (an * d + b);
    c = b + an / c;
    Real del = c * d;
    h *= del;
    if (std::abs(del - 1) <= eps) break;
  }
  return h;
}

// e^{-y} Ei(y), y > 0.
template <class Real>
Real ei_scaled(Real y) {
  if (!(y > 0)) fail(ErrorCode::domain, "ei_scaled needs a positive argument");
  if (y > 40) return detail::ei_scaled_asymptotic(y);
  return std::exp(-y) * detail::ei_series(y);
}

// Exponential integral Ei (principal value), y != 0.
template <class Real>
Real exp_integral_ei(Real y) {
  if (y == 0 || !std::isfinite(y)) fail(ErrorCode::domain, "Ei is singular at 0");
  if (y < 0) return -std::exp(y) * e1_scaled(-y);
  if (y > 40) return std::exp(y) * detail::ei_scaled_asymptotic(y);
  return detail::ei_series(y);
}

// Logarithmic integral li(x) = Ei(log x), principal value.
template <class Real>
Real exp_integral_li(Real x) {
  if (!(x > 0) || x == 1) fail(ErrorCode::domain, "li needs x > 0 and x != 1");
  return exp_integral_ei(std::log(x));
}

}  // namespace koshliakov
