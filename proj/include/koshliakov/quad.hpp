#pragma once

// Numerical integration: adaptive Gauss-Kronrod (7/15) panels, tanh-sinh for
// endpoints the caller flags as singular, and decay-model cutoffs for
// semi-infinite ranges.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "koshliakov/error.hpp"

namespace koshliakov::quad {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_panels = 4000;
  // Explicit cutoff for semi-infinite ranges; 0 lets the decay model choose.
  double cutoff = 0;

  void validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0)) fail(ErrorCode::domain, "quadrature tolerances must be positive");
    if (max_panels < 8) fail(ErrorCode::domain, "max_panels must be at least 8");
    if (cutoff < 0) fail(ErrorCode::domain, "cutoff must be non-negative");
  }

  QuadratureSpec with_abs(double a) const {
    QuadratureSpec s = *this;
    s.abs_tol = a;
    return s;
  }
};

template <class Real = double>
struct QuadratureResult {
  std::complex<Real> value{};
  Real err_estimate = 0;
  long nodes_used = 0;
  Real truncation_bound = 0;

  Real total_error() const { return err_estimate + truncation_bound; }

  QuadratureResult& operator+=(const QuadratureResult& o) {
    value += o.value;
    err_estimate += o.err_estimate;
    nodes_used += o.nodes_used;
    truncation_bound += o.truncation_bound;
    return *this;
  }
};

enum class Singular { none, left, right, both };

// Envelope |f(t)| <= C t^c e^{-lambda t} or C t^{-p}, valid for t >= onset.
struct DecayModel {
  enum class Kind { exponential, power };
  Kind kind = Kind::exponential;
  double scale = 1;
  double rate = 1;
  double onset = 0;
  double poly = 0;

  static DecayModel exponential(double C, double lambda, double onset = 0, double poly = 0) {
    return {Kind::exponential, C, lambda, onset, poly};
  }
  static DecayModel algebraic(double C, double p, double onset = 1) { return {Kind::power, C, p, onset, 0}; }

  void validate() const {
    if (!(scale >= 0)) fail(ErrorCode::decay, "decay envelope constant must be non-negative");
    if (kind == Kind::power && !(rate > 1))
      fail(ErrorCode::decay, "power-law envelope needs exponent p > 1 for a finite tail");
    if (kind == Kind::exponential && !(rate > 0)) fail(ErrorCode::decay, "exponential envelope needs a positive rate");
  }

  double envelope(double t) const {
    if (kind == Kind::power) return scale * std::pow(t, -rate);
    return scale * std::pow(t, poly) * std::exp(-rate * t);
  }

  // Bound on the integral of |f| over [T, inf).
  double tail_bound(double T) const {
    validate();
    if (T < onset || T <= 0) return std::numeric_limits<double>::infinity();
    if (kind == Kind::power) return scale * std::pow(T, 1 - rate) / (rate - 1);
    double denom = rate - std::max(0.0, poly) / T;
    if (denom <= 0) return std::numeric_limits<double>::infinity();
    return envelope(T) / denom;
  }

  // Smallest T >= onset (up to bisection slack) with tail_bound(T) <= budget.
  double cutoff_for(double budget) const {
    validate();
    if (!(budget > 0)) fail(ErrorCode::domain, "tail budget must be positive");
    double lo = std::max(onset, 1e-300);
    if (kind == Kind::power) {
      double T = std::pow(scale / ((rate - 1) * budget), 1 / (rate - 1));
      return std::max(T, onset);
    }
    if (tail_bound(std::max(lo, onset)) <= budget) return std::max(lo, onset);
    double hi = std::max(1.0, 2 * lo);
    for (int i = 0; i < 200 && !(tail_bound(hi) <= budget); ++i) hi *= 2;
    if (!(tail_bound(hi) <= budget)) fail(ErrorCode::decay, "cannot meet tail budget with this decay model");
    for (int i = 0; i < 100; ++i) {
      double mid = 0.5 * (lo + hi);
      if (tail_bound(mid) <= budget) hi = mid; else lo = mid;
      if (hi - lo < 1e-9 * hi) break;
    }
    return hi;
  }
};

namespace detail {

inline constexpr long double kronrod_x[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
inline constexpr long double kronrod_w[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
inline constexpr long double gauss_w[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <class Real>
struct Panel {
  Real a, b;
  std::complex<Real> value;
  Real err;
  Real floor;
};

template <class Real, class F>
std::complex<Real> call(F& f, Real x) {
  return std::complex<Real>(f(x));
}

template <class Real, class F>
Panel<Real> gauss_kronrod(F& f, Real a, Real b) {
  const Real c = (a + b) / 2, h = (b - a) / 2;
  std::complex<Real> fv[15];
  fv[7] = call<Real>(f, c);
  for (int j = 0; j < 7; ++j) {
    Real dx = h * Real(kronrod_x[j]);
    fv[j] = call<Real>(f, c - dx);
    fv[14 - j] = call<Real>(f, c + dx);
  }
  std::complex<Real> rk = Real(kronrod_w[7]) * fv[7];
  std::complex<Real> rg = Real(gauss_w[3]) * fv[7];
  Real resabs = Real(kronrod_w[7]) * std::abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    std::complex<Real> pair = fv[j] + fv[14 - j];
    rk += Real(kronrod_w[j]) * pair;
    resabs += Real(kronrod_w[j]) * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) rg += Real(gauss_w[j / 2]) * pair;
  }
  std::complex<Real> mean = rk / Real(2);
  Real resasc = Real(kronrod_w[7]) * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j)
    resasc += Real(kronrod_w[j]) * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  const Real ah = std::abs(h);
  resabs *= ah;
  resasc *= ah;
  Real err = std::abs((rk - rg) * h);
  if (resasc != 0 && err != 0) err = resasc * std::min(Real(1), std::pow(Real(200) * err / resasc, Real(1.5)));
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real floor = Real(50) * eps * resabs;
  err = std::max(err, floor);
  for (auto& v : fv)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorCode::no_convergence, "integrand returned a non-finite value");
  return {a, b, rk * h, err, floor};
}

template <class Real>
Real target_for(const QuadratureSpec& spec, const std::complex<Real>& I) {
  return std::max(Real(spec.abs_tol), Real(spec.rel_tol) * std::abs(I));
}

}  // namespace detail

// Adaptive Gauss-Kronrod over consecutive breakpoints; bisects the worst panel
// until the summed error estimate meets max(abs_tol, rel_tol |I|).
template <class Real, class F>
QuadratureResult<Real> integrate_adaptive(F&& f, const std::vector<Real>& breaks, const QuadratureSpec& spec) {
  spec.validate();
  std::vector<detail::Panel<Real>> panels;
  long nodes = 0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i] < breaks[i + 1])) fail(ErrorCode::domain, "integration breakpoints must increase");
    panels.push_back(detail::gauss_kronrod<Real>(f, breaks[i], breaks[i + 1]));
    nodes += 15;
  }
  if (panels.empty()) fail(ErrorCode::domain, "empty integration range");
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (;;) {
    std::complex<Real> total{};
    Real err = 0;
    for (const auto& p : panels) {
      total += p.value;
      err += p.err;
    }
    if (err <= detail::target_for(spec, total)) return {total, err, nodes, 0};
    // Worst panel that can still be refined (not already at its roundoff floor).
    int worst = -1;
    for (size_t i = 0; i < panels.size(); ++i) {
      const auto& p = panels[i];
      bool splittable = p.err > Real(1.0001) * p.floor &&
                        (p.b - p.a) > Real(100) * eps * std::max(std::abs(p.a), std::abs(p.b));
      if (splittable && (worst < 0 || p.err > panels[worst].err)) worst = int(i);
    }
    if (worst < 0) return {total, err, nodes, 0};
    if (int(panels.size()) >= spec.max_panels) {
      std::ostringstream os;
      os << "adaptive quadrature did not converge within " << spec.max_panels << " panels (error estimate " << err
         << ", target " << detail::target_for(spec, total) << ")";
      fail(ErrorCode::no_convergence, os.str());
    }
    auto p = panels[worst];
    Real mid = (p.a + p.b) / 2;
    panels[worst] = detail::gauss_kronrod<Real>(f, p.a, mid);
    panels.push_back(detail::gauss_kronrod<Real>(f, mid, p.b));
    nodes += 30;
  }
}

// Double-exponential rule on [a, b]. Returns false in `converged` when the
// level limit is reached; the caller decides how to recover.
template <class Real, class F>
QuadratureResult<Real> tanh_sinh(F&& f, Real a, Real b, const QuadratureSpec& spec, bool& converged,
                                 int max_level = 8) {
  using std::cosh;
  using std::exp;
  using std::sinh;
  const Real half_pi = Real(1.5707963267948966192313216916397514L);
  const Real width = b - a, eps = std::numeric_limits<Real>::epsilon();
  // Past this t the node sits closer than ~1e-290 (relative) to the endpoint.
  const Real t_max = std::asinh(std::log(Real(1e290)) / (2 * half_pi));
  long nodes = 0;
  Real abs_sum = 0;

  auto contribution = [&](Real t) -> std::complex<Real> {
    Real u = half_pi * sinh(t) * 2;  // pi sinh t
    // distances to the endpoints, computed without cancellation
    Real el = exp(-std::abs(u));
    Real small = width * el / (1 + el), large = width / (1 + el);
    Real dl = u < 0 ? small : large;  // x - a
    Real dr = u < 0 ? large : small;  // b - x
    Real x = u < 0 ? a + dl : b - dr;
    if (!(x > a) || !(x < b)) return {};
    Real ch = cosh(half_pi * sinh(t));
    Real w = half_pi * cosh(t) / (ch * ch) * width / 2;
    if (!(w > 0)) return {};
    std::complex<Real> v = detail::call<Real>(f, x) * w;
    ++nodes;
    abs_sum += std::abs(v);
    return v;
  };

  auto level_sum = [&](Real h, bool odd_only) {
    std::complex<Real> s{};
    if (!odd_only) s += contribution(Real(0));
    int step = odd_only ? 2 : 1;
    for (int k = 1;; k += step) {
      Real t = k * h;
      if (t > t_max) break;
      std::complex<Real> c = contribution(t) + contribution(-t);
      s += c;
      if (t > 3 && std::abs(c) < eps / 100 * std::abs(s)) break;
    }
    return s;
  };

  Real h = 1;
  std::complex<Real> sum = level_sum(h, false);
  std::complex<Real> prev = sum * h, cur = prev;
  Real err = std::numeric_limits<Real>::infinity();
  converged = false;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    sum += level_sum(h, true);
    cur = sum * h;
    err = std::abs(cur - prev);
    Real floor = Real(10) * eps * abs_sum * h;
    if (!std::isfinite(cur.real()) || !std::isfinite(cur.imag()))
      fail(ErrorCode::no_convergence, "integrand returned a non-finite value");
    if (level >= 3 && err <= std::max(detail::target_for(spec, cur), floor)) {
      converged = true;
      err = std::max(err, floor);
      break;
    }
    prev = cur;
  }
  return {cur, err, nodes, 0};
}

// Finite interval. Flagged singular endpoints go through tanh-sinh, which is
// split in half (keeping the flags on the outer pieces) if it stalls.
// Nodes near a nonzero endpoint b are only resolved to eps*|b|, so strong
// singularities are best placed at 0 by the caller.
template <class Real, class F>
QuadratureResult<Real> integrate_finite(F&& f, Real a, Real b, const QuadratureSpec& spec,
                                        Singular sing = Singular::none, int depth = 0) {
  spec.validate();
  if (!(a < b)) fail(ErrorCode::domain, "integrate_finite needs a < b");
  if (sing == Singular::none) return integrate_adaptive<Real>(f, std::vector<Real>{a, b}, spec);
  bool ok = false;
  auto r = tanh_sinh<Real>(f, a, b, spec, ok);
  if (ok) return r;
  if (depth >= 6) fail(ErrorCode::no_convergence, "tanh-sinh did not converge near a singular endpoint");
  Real mid = a + (b - a) / 2;
  QuadratureSpec half = spec.with_abs(spec.abs_tol / 2);
  bool l = sing == Singular::left || sing == Singular::both;
  bool rr = sing == Singular::right || sing == Singular::both;
  auto out = integrate_finite<Real>(f, a, mid, half, l ? Singular::left : Singular::none, depth + 1);
  out += integrate_finite<Real>(f, mid, b, half, rr ? Singular::right : Singular::none, depth + 1);
  out.nodes_used += r.nodes_used;
  return out;
}

// Breakpoints a, a+w, a+2w, a+4w, ... ending at T.
template <class Real>
std::vector<Real> geometric_breaks(Real a, Real T, Real first_width) {
  std::vector<Real> br{a};
  Real w = first_width;
  while (a + w < T * (1 - 1e-12) && br.size() < 200) {
    br.push_back(a + w);
    w *= 2;
  }
  br.push_back(T);
  return br;
}

// Integral over [a, inf). The cutoff is chosen so the decay-model tail bound is
// below abs_tol/2 (or taken from spec.cutoff); the bound is reported.
template <class Real, class F>
QuadratureResult<Real> integrate_semi_infinite(F&& f, Real a, const DecayModel& decay, const QuadratureSpec& spec,
                                               Singular sing = Singular::none) {
  spec.validate();
  decay.validate();
  double T = spec.cutoff > 0 ? spec.cutoff : decay.cutoff_for(spec.abs_tol / 2);
  double tail = decay.tail_bound(std::max(T, decay.onset));
  if (spec.cutoff > 0 && T < decay.onset) tail = std::numeric_limits<double>::infinity();
  if (!(T > double(a))) {
    // already past the cutoff: the whole integral is inside the tail budget
    T = double(a) + 1;
    tail = decay.tail_bound(std::max(T, decay.onset));
  }
  QuadratureSpec inner = spec.with_abs(spec.abs_tol / 2);
  Real Tr = Real(T);
  Real first = std::min(Real(1), (Tr - a) / 2);
  QuadratureResult<Real> out{};
  Real start = a;
  if (sing == Singular::left) {
    out += integrate_finite<Real>(f, a, a + first, inner.with_abs(inner.abs_tol / 4), Singular::left);
    start = a + first;
  }
  out += integrate_adaptive<Real>(f, geometric_breaks<Real>(start, Tr, first), inner);
  out.truncation_bound = Real(tail);
  return out;
}

}  // namespace koshliakov::quad
