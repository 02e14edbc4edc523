#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>
#include <vector>

#include "koshliakov/error.hpp"

namespace koshliakov {

template <class Real>
using cplx = std::complex<Real>;

namespace constants {
template <class Real>
inline constexpr Real pi = Real(3.141592653589793238462643383279502884L);
template <class Real>
inline constexpr Real euler_gamma = Real(0.577215664901532860606512090082402431L);
template <class Real>
inline constexpr Real half_log_two_pi = Real(0.918938533204672741780329736405617640L);
template <class Real>
inline constexpr Real log_pi = Real(1.144729885849400174143427351353058712L);
// Stieltjes constants gamma_1, gamma_2, gamma_3
template <class Real>
inline constexpr Real stieltjes1 = Real(-0.0728158454836767248605863758749547L);
template <class Real>
inline constexpr Real stieltjes2 = Real(-0.0096903631928723184845303860352125L);
template <class Real>
inline constexpr Real stieltjes3 = Real(0.0020538344203033458661600465427533L);
}  // namespace constants

namespace detail {

template <class Real>
bool is_finite(const cplx<Real>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// sin(pi x) and cos(pi x) with exact argument reduction, so zeros land on integers.
template <class Real>
Real sin_pi_real(Real x) {
  Real r = x - 2 * std::round(x / 2);  // r in [-1, 1]
  if (r > Real(0.5)) return std::sin(constants::pi<Real> * (1 - r));
  if (r < Real(-0.5)) return -std::sin(constants::pi<Real> * (1 + r));
  if (r == 0) return 0;
  return std::sin(constants::pi<Real> * r);
}

template <class Real>
Real cos_pi_real(Real x) {
  return sin_pi_real<Real>(x + Real(0.5));
}

template <class Real>
cplx<Real> sin_pi(const cplx<Real>& z) {
  Real py = constants::pi<Real> * z.imag();
  return {sin_pi_real(z.real()) * std::cosh(py), cos_pi_real(z.real()) * std::sinh(py)};
}

template <class Real>
cplx<Real> cos_pi(const cplx<Real>& z) {
  Real py = constants::pi<Real> * z.imag();
  return {cos_pi_real(z.real()) * std::cosh(py), -sin_pi_real(z.real()) * std::sinh(py)};
}

// B_{2k}/(2k)! for k = 0..kMax (entry 0 unused), via 2 zeta(2k)/(2 pi)^{2k}.
template <class Real>
const std::vector<Real>& bernoulli_scaled() {
  static const std::vector<Real> table = [] {
    constexpr int kMax = 60;
    using W = long double;
    std::vector<Real> t(kMax + 1, Real(0));
    const W pi = constants::pi<W>, two_pi = 2 * pi;
    for (int k = 1; k <= kMax; ++k) {
      W z;
      if (k == 1) z = pi * pi / 6;
      else if (k == 2) z = std::pow(pi, W(4)) / 90;
      else if (k == 3) z = std::pow(pi, W(6)) / 945;
      else {
        z = 0;
        for (int n = 400; n >= 1; --n) z += std::pow(W(n), W(-2 * k));
      }
      W v = 2 * z / std::pow(two_pi, W(2 * k));
      t[k] = Real(k % 2 == 1 ? v : -v);
    }
    return t;
  }();
  return table;
}

template <class Real>
void check_gamma_pole(const cplx<Real>& s, const char* what) {
  if (s.real() <= Real(0.5)) {
    Real n = std::round(s.real());
    if (n <= 0 && std::abs(s - cplx<Real>(n, 0)) < Real(1e-12))
      fail(ErrorCode::pole, std::string(what) + " has a pole at non-positive integers");
  }
}

// Lanczos approximation (g = 7, n = 9), Re z >= 1/2.
template <class Real>
cplx<Real> log_gamma_lanczos(cplx<Real> z) {
  static constexpr double p[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                  771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                  -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  z -= Real(1);
  cplx<Real> x = Real(p[0]);
  for (int i = 1; i < 9; ++i) x += Real(p[i]) / (z + Real(i));
  cplx<Real> t = z + Real(7.5);
  return constants::half_log_two_pi<Real> + (z + Real(0.5)) * std::log(t) - t + std::log(x);
}

// Stirling series with Bernoulli corrections after an upward shift, Re z >= 1/2.
template <class Real>
cplx<Real> log_gamma_stirling(cplx<Real> z) {
  const Real radius = 14;
  cplx<Real> shift_log{};
  while (std::abs(z) < radius || z.real() < radius / 2) {
    shift_log += std::log(z);
    z += Real(1);
  }
  const auto& b = bernoulli_scaled<Real>();
  cplx<Real> res = (z - Real(0.5)) * std::log(z) - z + constants::half_log_two_pi<Real>;
  cplx<Real> zinv = Real(1) / z, z2 = zinv * zinv, zp = zinv;
  Real fact = 1;  // (2k-2)!
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int k = 1; k < int(b.size()); ++k) {
    if (k > 1) fact *= Real((2 * k - 3) * (2 * k - 2));
    cplx<Real> term = b[k] * fact * zp;
    res += term;
    if (std::abs(term) < eps * std::abs(res) / 4) break;
    zp *= z2;
  }
  return res - shift_log;
}

}  // namespace detail

// log Gamma. On Re s >= 1/2 this is the analytic branch that is real on the
// positive axis; left of that it is only defined up to a multiple of 2 pi i.
template <class Real>
cplx<Real> log_gamma(cplx<Real> s) {
  detail::check_gamma_pole(s, "log_gamma");
  if (s.real() < Real(0.5)) {
    cplx<Real> one_minus = Real(1) - s;
    return constants::log_pi<Real> - std::log(detail::sin_pi(s)) - log_gamma(one_minus);
  }
  if constexpr (std::is_same_v<Real, double>) return detail::log_gamma_lanczos(s);
  else return detail::log_gamma_stirling(s);
}

template <class Real>
cplx<Real> gamma(cplx<Real> s) {
  detail::check_gamma_pole(s, "gamma");
  if (s.real() < Real(0.5)) return constants::pi<Real> / (detail::sin_pi(s) * gamma(cplx<Real>(Real(1) - s)));
  return std::exp(log_gamma(s));
}

// 1/Gamma, entire: zero at the poles instead of an error.
template <class Real>
cplx<Real> rgamma(cplx<Real> s) {
  if (s.real() < Real(0.5)) return detail::sin_pi(s) * gamma(cplx<Real>(Real(1) - s)) / constants::pi<Real>;
  return std::exp(-log_gamma(s));
}

template <class Real>
cplx<Real> digamma(cplx<Real> z) {
  detail::check_gamma_pole(z, "digamma");
  if (z.real() < Real(0.5)) {
    cplx<Real> w = Real(1) - z;
    return digamma(w) - constants::pi<Real> * detail::cos_pi(z) / detail::sin_pi(z);
  }
  cplx<Real> acc{};
  while (std::abs(z) < Real(12) || z.real() < Real(6)) {
    acc -= Real(1) / z;
    z += Real(1);
  }
  const auto& b = detail::bernoulli_scaled<Real>();
  cplx<Real> res = std::log(z) - Real(0.5) / z;
  cplx<Real> z2inv = Real(1) / (z * z), zp = z2inv;
  Real fact = 1;  // (2k-1)!
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int k = 1; k < 30; ++k) {
    if (k > 1) fact *= Real((2 * k - 2) * (2 * k - 1));
    cplx<Real> term = b[k] * fact * zp;  // B_2k / (2k) / z^2k
    res -= term;
    if (std::abs(term) < eps * std::abs(res) / 4) break;
    zp *= z2inv;
  }
  return res + acc;
}

}  // namespace koshliakov
