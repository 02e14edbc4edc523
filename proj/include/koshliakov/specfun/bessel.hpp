#pragma once

// Bessel J, Y of complex order and real positive argument; K of complex order
// and complex argument with positive real part.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "koshliakov/error.hpp"
#include "koshliakov/quad.hpp"
#include "koshliakov/specfun/gamma.hpp"

namespace koshliakov {

namespace bessel_config {
inline constexpr double series_switch = 20;  // ascending series below, Hankel expansion above
inline constexpr double k_asymptotic_switch = 30;
inline constexpr double near_integer_band = 1e-3;
inline constexpr double max_order = 5 + 1e-9;
}  // namespace bessel_config

namespace detail {

using wide = long double;

template <class Real>
void check_bessel_args(const cplx<Real>& nu, Real x, const char* name) {
  if (!(x > 0)) fail(ErrorCode::domain, std::string(name) + " needs x > 0");
  if (std::abs(nu) > Real(bessel_config::max_order)) fail(ErrorCode::domain, std::string(name) + " supports |order| <= 5");
}

// True (and sets m) when nu is exactly an integer.
template <class Real>
bool integer_order(const cplx<Real>& nu, int& m) {
  if (nu.imag() != 0 || nu.real() != std::round(nu.real())) return false;
  m = int(std::round(nu.real()));
  return true;
}

template <class Real>
Real distance_to_integer(const cplx<Real>& nu) {
  return std::abs(nu - cplx<Real>(std::round(nu.real()), 0));
}

// Ascending series, accumulated in long double.
template <class Real>
cplx<Real> j_series(const cplx<Real>& nu, Real x) {
  cplx<wide> nuw(nu.real(), nu.imag());
  wide q = -wide(x) * wide(x) / 4;
  cplx<Real> lead = std::exp(nu * std::log(x / Real(2))) * rgamma(cplx<Real>(nu + Real(1)));
  cplx<wide> term(lead.real(), lead.imag()), sum = term;
  const wide eps = std::numeric_limits<wide>::epsilon();
  for (int k = 1; k < 500; ++k) {
    term *= q / (wide(k) * (nuw + wide(k)));
    sum += term;
    if (std::abs(term) <= eps * std::abs(sum) && wide(k) > std::abs(nuw)) break;
  }
  return {Real(sum.real()), Real(sum.imag())};
}

// Hankel's P and Q, truncated at the smallest term.
template <class Real>
void hankel_pq(const cplx<Real>& nu, Real x, cplx<Real>& P, cplx<Real>& Q) {
  cplx<Real> mu = Real(4) * nu * nu;
  cplx<Real> term = Real(1);
  P = Real(1);
  Q = Real(0);
  Real prev = std::numeric_limits<Real>::infinity();
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int k = 1; k < 80; ++k) {
    Real odd = Real(2 * k - 1);
    term *= (mu - odd * odd) / (Real(8 * k) * x);
    Real mag = std::abs(term);
    if (mag == 0) break;
    if (mag > prev && Real(k) > std::abs(nu) + 2) break;
    if (k % 2 == 1) Q += ((k / 2) % 2 == 0 ? term : -term);
    else P += ((k / 2) % 2 == 1 ? -term : term);
    if (mag < eps * (std::abs(P) + std::abs(Q)) / 4) break;
    prev = mag;
  }
}

// J (want_y = false) or Y (want_y = true) from the large-argument expansion.
template <class Real>
cplx<Real> bessel_hankel(const cplx<Real>& nu, Real x, bool want_y) {
  cplx<Real> P, Q;
  hankel_pq(nu, x, P, Q);
  // chi = x - phi, phi = (nu/2 + 1/4) pi
  cplx<Real> phi = (nu / Real(2) + Real(0.25)) * constants::pi<Real>;
  Real cx = std::cos(x), sx = std::sin(x);
  cplx<Real> cphi = std::cos(phi), sphi = std::sin(phi);
  cplx<Real> cchi = cx * cphi + sx * sphi;
  cplx<Real> schi = sx * cphi - cx * sphi;
  Real amp = std::sqrt(Real(2) / (constants::pi<Real> * x));
  if (want_y) return amp * (P * schi + Q * cchi);
  return amp * (P * cchi - Q * schi);
}

// Integer order n >= 0, x small enough for the series (log series for Y_n).
template <class Real>
cplx<Real> y_integer_series(int n, Real x) {
  wide hx = wide(x) / 2, q = hx * hx;
  const wide pi = constants::pi<wide>, g = constants::euler_gamma<wide>;
  wide part1 = 0;
  if (n > 0) {
    // sum_{k<n} (n-k-1)!/k! q^k
    wide fk = 1, fnk = 1;
    for (int j = 2; j <= n - 1; ++j) fnk *= j;  // (n-1)!
    wide qk = 1;
    for (int k = 0; k < n; ++k) {
      part1 += fnk / fk * qk;
      qk *= q;
      fk *= (k + 1);
      if (n - k - 1 > 0) fnk /= (n - k - 1);
    }
    part1 *= -std::pow(hx, wide(-n)) / pi;
  }
  cplx<Real> jn = j_series(cplx<Real>(Real(n)), x);
  wide part2 = 2 / pi * std::log(hx) * wide(jn.real());
  // psi(k+1) + psi(n+k+1), with psi(m) = -gamma + H_{m-1}
  wide hk = 0, hnk = 0;
  for (int j = 1; j <= n; ++j) hnk += wide(1) / j;
  wide fact_n = 1;
  for (int j = 2; j <= n; ++j) fact_n *= j;
  wide term = 1 / fact_n;  // (-q)^k / (k! (n+k)!)
  wide sum = 0;
  const wide eps = std::numeric_limits<wide>::epsilon();
  for (int k = 0; k < 400; ++k) {
    wide c = (-g + hk) + (-g + hnk);
    wide add = c * term;
    sum += add;
    if (k > 2 && std::abs(add) <= eps * std::abs(sum) && std::abs(term) <= eps * std::abs(sum)) break;
    term *= -q / (wide(k + 1) * wide(n + k + 1));
    hk += wide(1) / (k + 1);
    hnk += wide(1) / (n + k + 1);
  }
  wide part3 = -std::pow(hx, wide(n)) / pi * sum;
  return cplx<Real>(Real(part1 + part2 + part3), 0);
}

// Schlafli's integral, uniform in the order; used close to integer orders.
template <class Real>
cplx<Real> y_schlafli(const cplx<Real>& nu, Real x) {
  const Real pi = constants::pi<Real>;
  quad::QuadratureSpec spec{1e-300, 8 * std::numeric_limits<double>::epsilon()};
  auto osc = [&](Real th) -> cplx<Real> { return std::sin(x * std::sin(th) - nu * th); };
  auto r1 = quad::integrate_adaptive<Real>(osc, std::vector<Real>{0, pi / 2, pi}, spec);
  cplx<Real> cnp = cos_pi(nu);
  auto expo = [&](Real t) -> cplx<Real> {
    return (std::exp(nu * t) + std::exp(-nu * t) * cnp) * std::exp(-x * std::sinh(t));
  };
  const Real depth = 45 * std::log(Real(10)), grow = std::abs(nu.real());
  Real T = 1;
  for (int i = 0; i < 60; ++i) T = std::asinh((depth + grow * T) / x);
  std::vector<Real> br{0};
  for (Real b = std::min(Real(1), T / 2); b < T; b *= 2) br.push_back(b);
  br.push_back(T);
  auto r2 = quad::integrate_adaptive<Real>(expo, br, spec);
  return (r1.value - r2.value) / pi;
}

}  // namespace detail

template <class Real>
cplx<Real> bessel_j(cplx<Real> nu, Real x) {
  detail::check_bessel_args(nu, x, "bessel_j");
  if (x > Real(bessel_config::series_switch)) return detail::bessel_hankel(nu, x, false);
  int m;
  if (detail::integer_order(nu, m) && m < 0) {
    cplx<Real> v = detail::j_series(cplx<Real>(Real(-m)), x);
    return (m % 2 == 0) ? v : -v;
  }
  return detail::j_series(nu, x);
}

template <class Real>
cplx<Real> bessel_y(cplx<Real> nu, Real x) {
  detail::check_bessel_args(nu, x, "bessel_y");
  if (x > Real(bessel_config::series_switch)) return detail::bessel_hankel(nu, x, true);
  int m;
  if (detail::integer_order(nu, m)) {
    cplx<Real> v = detail::y_integer_series<Real>(std::abs(m), x);
    return (m < 0 && (-m) % 2 == 1) ? -v : v;
  }
  if (detail::distance_to_integer(nu) < Real(bessel_config::near_integer_band)) return detail::y_schlafli(nu, x);
  cplx<Real> jp = detail::j_series(nu, x), jm = detail::j_series(cplx<Real>(-nu), x);
  return (jp * detail::cos_pi(nu) - jm) / detail::sin_pi(nu);
}

// e^{x} K_nu(x).
template <class Real>
cplx<Real> bessel_k_scaled(cplx<Real> nu, cplx<Real> x) {
  if (!(x.real() > 0)) fail(ErrorCode::domain, "bessel_k needs Re x > 0");
  if (std::abs(nu) > Real(bessel_config::max_order)) fail(ErrorCode::domain, "bessel_k supports |order| <= 5");
  const Real eps = std::numeric_limits<Real>::epsilon();
  if (std::abs(x) >= Real(bessel_config::k_asymptotic_switch)) {
    cplx<Real> mu = Real(4) * nu * nu, term = Real(1), sum = Real(1);
    Real prev = std::numeric_limits<Real>::infinity();
    for (int k = 1; k < 100; ++k) {
      Real odd = Real(2 * k - 1);
      term *= (mu - odd * odd) / (Real(8 * k) * x);
      Real mag = std::abs(term);
      if (mag == 0 || (mag > prev && Real(k) > std::abs(nu) + 2)) break;
      sum += term;
      if (mag < eps * std::abs(sum) / 4) break;
      prev = mag;
    }
    return std::sqrt(constants::pi<Real> / (Real(2) * x)) * sum;
  }
  // integral of exp(-x (cosh t - 1)) cosh(nu t) over [0, T]
  const Real depth = 40 * std::log(Real(10)), grow = std::abs(nu.real()), rx = x.real();
  Real T = 1;
  for (int i = 0; i < 80; ++i) T = std::acosh(1 + (depth + grow * T) / rx);
  auto f = [&](Real t) -> cplx<Real> {
    Real c1 = std::sinh(t / 2);
    c1 = 2 * c1 * c1;  // cosh t - 1 without cancellation
    return std::exp(-x * c1) * std::cosh(nu * t);
  };
  std::vector<Real> br{0};
  Real first = std::min(T / 4, Real(1) / std::sqrt(std::abs(x)));
  for (Real b = first; b < T; b *= 2) br.push_back(b);
  br.push_back(T);
  quad::QuadratureSpec spec{1e-300, 4 * std::numeric_limits<double>::epsilon(), 4000};
  return quad::integrate_adaptive<Real>(f, br, spec).value;
}

template <class Real>
cplx<Real> bessel_k(cplx<Real> nu, cplx<Real> x) {
  return std::exp(-x) * bessel_k_scaled(nu, x);
}

}  // namespace koshliakov
