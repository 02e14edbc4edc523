#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "koshliakov/error.hpp"
#include "koshliakov/quad.hpp"
#include "koshliakov/specfun/gamma.hpp"

namespace koshliakov {

namespace detail {

// Euler-Maclaurin for sum_{n>=0} (n+a)^{-w}: direct terms until |a+N| is large
// compared to |Im w|, then the integral, half-term and Bernoulli corrections.
// `wm1`, when given, is w - 1 known exactly; the pole term then avoids the
// rounding of w itself.
template <class Real>
cplx<Real> euler_maclaurin_hurwitz(const cplx<Real>& w, const cplx<Real>& a, const cplx<Real>* wm1 = nullptr) {
  const Real big = std::max({Real(20), std::ceil(Real(1.3) * std::abs(w.imag())), std::ceil(std::abs(w) / 2)});
  long n_direct = std::max(0L, long(std::ceil(big - a.real())));
  cplx<Real> sum{};
  for (long n = n_direct - 1; n >= 0; --n) sum += std::exp(-w * std::log(a + Real(n)));
  const cplx<Real> b = a + Real(n_direct);
  const cplx<Real> logb = std::log(b);
  const cplx<Real> b_mw = std::exp(-w * logb);  // b^{-w}
  if (wm1) sum += std::exp(-*wm1 * logb) / *wm1 + b_mw / Real(2);
  else sum += b * b_mw / (w - Real(1)) + b_mw / Real(2);
  const auto& bern = bernoulli_scaled<Real>();
  const cplx<Real> binv2 = Real(1) / (b * b);
  cplx<Real> poch = w, bpow = b_mw / b;
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real prev = std::numeric_limits<Real>::infinity();
  for (int k = 1; k < int(bern.size()); ++k) {
    cplx<Real> term = bern[k] * poch * bpow;
    Real mag = std::abs(term);
    if (mag > prev) break;  // asymptotic part started to grow
    sum += term;
    if (mag <= eps * std::abs(sum) / 8) break;
    prev = mag;
    poch *= (w + Real(2 * k - 1)) * (w + Real(2 * k));
    bpow *= binv2;
  }
  return sum;
}

// (s-1) zeta(s) near s = 1 from the Stieltjes expansion.
template <class Real>
cplx<Real> zeta_pole_removed(const cplx<Real>& s) {
  cplx<Real> e = s - Real(1);
  using namespace constants;
  return Real(1) + e * (euler_gamma<Real> + e * (-stieltjes1<Real> + e * (stieltjes2<Real> / Real(2) - e * stieltjes3<Real> / Real(6))));
}

}  // namespace detail

template <class Real>
cplx<Real> riemann_zeta(cplx<Real> s) {
  if (std::abs(s - Real(1)) < Real(1e-12)) fail(ErrorCode::pole, "zeta has a pole at s = 1");
  if (s.real() < Real(0.5)) {
    // functional equation
    cplx<Real> t = Real(1) - s;
    cplx<Real> f = std::exp(s * Real(std::log(Real(2))) + (s - Real(1)) * constants::log_pi<Real>);
    if (std::abs(s) < Real(1e-3)) {
      // zeta(1-s) has its pole here; pair it with the zero of sin(pi s/2)
      cplx<Real> ratio = s == cplx<Real>(0) ? cplx<Real>(-constants::pi<Real> / 2) : detail::sin_pi(s / Real(2)) / (-s);
      return f * ratio * gamma(t) * detail::zeta_pole_removed(t);
    }
    return f * detail::sin_pi(s / Real(2)) * gamma(t) * riemann_zeta(t);
  }
  return detail::euler_maclaurin_hurwitz(s, cplx<Real>(1));
}

// zeta(1 + e) with the offset e supplied exactly, for use close to the pole.
template <class Real>
cplx<Real> zeta_one_plus(cplx<Real> e) {
  if (std::abs(e) < Real(1e-12)) fail(ErrorCode::pole, "zeta has a pole at s = 1");
  if (std::abs(e) < Real(1e-3)) {
    using namespace constants;
    return Real(1) / e + euler_gamma<Real> + e * (-stieltjes1<Real> + e * (stieltjes2<Real> / Real(2) - e * stieltjes3<Real> / Real(6)));
  }
  cplx<Real> w = Real(1) + e;
  if (w.real() < Real(0.5)) return riemann_zeta(w);
  return detail::euler_maclaurin_hurwitz(w, cplx<Real>(1), &e);
}

template <class Real>
cplx<Real> hurwitz_zeta(cplx<Real> w, cplx<Real> a) {
  if (std::abs(w - Real(1)) < Real(1e-12)) fail(ErrorCode::pole, "Hurwitz zeta has a pole at w = 1");
  if (!(a.real() > 0)) fail(ErrorCode::domain, "Hurwitz zeta needs Re a > 0");
  return detail::euler_maclaurin_hurwitz(w, a);
}

// Hermite's integral representation, evaluated by quadrature. Used as an
// independent cross-check of hurwitz_zeta.
template <class Real>
cplx<Real> hurwitz_zeta_hermite(cplx<Real> w, cplx<Real> a, quad::QuadratureSpec spec = {1e-15, 1e-14}) {
  if (std::abs(w - Real(1)) < Real(1e-12)) fail(ErrorCode::pole, "Hurwitz zeta has a pole at w = 1");
  if (!(a.real() > 0)) fail(ErrorCode::domain, "Hurwitz zeta needs Re a > 0");
  const Real two_pi = 2 * constants::pi<Real>;
  const bool real_a = a.imag() == 0;
  auto f = [&](Real t) -> cplx<Real> {
    if (t == 0) return {};
    Real den = std::expm1(two_pi * t);
    if (!std::isfinite(den)) return {};
    if (real_a) {
      Real ar = a.real();
      Real theta = std::atan(t / ar);
      cplx<Real> mod = std::exp(-w / Real(2) * std::log(ar * ar + t * t));
      return std::sin(w * theta) * mod / den;
    }
    // same integrand written through (a -/+ it)^{-w}, principal branches
    cplx<Real> it(0, t);
    return (std::exp(-w * std::log(a - it)) - std::exp(-w * std::log(a + it))) / (cplx<Real>(0, 2) * den);
  };
  double c = 2 * std::exp(constants::pi<double> * std::abs(double(w.imag()))) *
             std::pow(1 + std::norm(std::complex<double>(a)), std::abs(double(w.real())) / 2) * 1.01;
  auto decay = quad::DecayModel::exponential(c, 2 * constants::pi<double>, 1, std::abs(double(w.real())));
  auto r = quad::integrate_semi_infinite<Real>(f, Real(0), decay, spec);
  cplx<Real> a_mw = std::exp(-w * std::log(a));
  return a_mw / Real(2) + a * a_mw / (w - Real(1)) + Real(2) * r.value;
}

template <class Real>
cplx<Real> xi(cplx<Real> s) {
  if (s.real() < Real(0.5)) s = Real(1) - s;
  cplx<Real> pre = Real(0.5) * s * std::exp(-s / Real(2) * constants::log_pi<Real>) * gamma(s / Real(2));
  if (std::abs(s - Real(1)) < Real(1e-3)) return pre * detail::zeta_pole_removed(s);
  return pre * (s - Real(1)) * riemann_zeta(s);
}

template <class Real>
cplx<Real> big_xi(cplx<Real> w) {
  return xi(cplx<Real>(Real(0.5) - w.imag(), w.real()));
}

}  // namespace koshliakov
