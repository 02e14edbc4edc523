#pragma once

// Koshliakov kernel and transform, reciprocal pairs, and the Omega / lambda
// function family. Everything here works in double precision.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "koshliakov/arith.hpp"
#include "koshliakov/error.hpp"
#include "koshliakov/quad.hpp"
#include "koshliakov/specfun.hpp"

namespace koshliakov {

using cd = std::complex<double>;
inline constexpr double pi = constants::pi<double>;

namespace detail {

inline cd expm1(cd w) {
  if (std::abs(w) < 1e-3) return w * (1.0 + w / 2.0 * (1.0 + w / 3.0 * (1.0 + w / 4.0 * (1.0 + w / 5.0))));
  return std::exp(w) - 1.0;
}

inline cd cpow(double x, cd e) { return std::exp(e * std::log(x)); }

}  // namespace detail

// M_z(x) = (2/pi) K_z(x) - Y_z(x)
inline cd kernel_m(cd z, double x) {
  return 2.0 / pi * bessel_k(z, cd(x)) - bessel_y(z, x);
}

inline cd koshliakov_kernel(cd z, double x) {
  if (!(x > 0)) fail(ErrorCode::domain, "koshliakov_kernel needs x > 0");
  double u = 4 * std::sqrt(x);
  cd c = detail::cos_pi(z / 2.0), s = detail::sin_pi(z / 2.0);
  if (s == cd(0)) return c * kernel_m(z, u);
  if (c == cd(0)) return -s * bessel_j(z, u);
  return c * kernel_m(z, u) - s * bessel_j(z, u);
}

// Kernel of the first transform as a function of u = 2 sqrt(x t):
// cos(pi z) M_{2z}(u) - sin(pi z) J_{2z}(u).
inline cd transform_kernel(cd z, double u) {
  cd c = detail::cos_pi(z), s = detail::sin_pi(z);
  cd out = c * kernel_m(2.0 * z, u);
  if (s != cd(0)) out -= s * bessel_j(2.0 * z, u);
  return out;
}

// Upper bound for |transform_kernel(z, u)| when u >= 2.
inline double transform_kernel_bound(cd z, double u) {
  u = std::max(u, 2.0);
  double amp = std::sqrt(2 / (pi * u)) * std::cosh(pi * std::abs(z.imag()));
  double grow = 1 + (std::abs(4.0 * z * z) + 1) / (8 * u);
  return 1.5 * amp * grow * (std::abs(detail::cos_pi(z)) + std::abs(detail::sin_pi(z))) +
         std::sqrt(pi / (2 * u)) * std::exp(-u) * grow;
}

// A function to transform together with an envelope for its tail.
struct TransformInput {
  std::function<cd(double)> g;
  quad::DecayModel decay;
  bool singular_at_zero = true;
};

// int_0^inf g(t) [cos(pi z) M_{2z}(2 sqrt(xt)) - sin(pi z) J_{2z}(2 sqrt(xt))] dt
inline quad::QuadratureResult<double> first_koshliakov_transform(const TransformInput& in, cd z, double x,
                                                                const quad::QuadratureSpec& spec) {
  if (!(x > 0)) fail(ErrorCode::domain, "transform needs x > 0");
  if (!(std::abs(z.real()) < 0.5)) fail(ErrorCode::domain, "transform needs |Re z| < 1/2");
  auto h = [&](double t) -> cd {
    if (t <= 0) return {};
    return in.g(t) * transform_kernel(z, 2 * std::sqrt(x * t));
  };
  quad::DecayModel d = in.decay;
  d.onset = std::max({d.onset, 1.0, 1.0 / x});
  d.scale *= transform_kernel_bound(z, 2 * std::sqrt(x * d.onset));
  auto sub = spec.with_abs(spec.abs_tol / 2);
  auto r = quad::integrate_finite(h, 0.0, 1.0, sub, in.singular_at_zero ? quad::Singular::left : quad::Singular::none);
  r += quad::integrate_semi_infinite(h, 1.0, d, sub);
  return r;
}

// ---------------------------------------------------------------------------
// Reciprocal pairs

struct ReciprocalPair {
  std::string label;
  std::function<cd(double, cd)> phi;
  std::function<cd(double, cd)> psi;
  double z_re_min = -1, z_re_max = 1;  // open strip for Re z
  bool zero_only = false;
  std::function<cd(cd, cd)> Z_closed;   // optional
  std::function<cd(cd, cd)> dZ_closed;  // optional, d/ds
  // Mellin strip (lo, hi) for Re s, given z
  std::function<std::pair<double, double>(cd)> mellin_strip;
  // tail envelopes of phi and psi
  std::function<quad::DecayModel(cd)> phi_decay;
  std::function<quad::DecayModel(cd)> psi_decay;

  bool has_closed_Z() const { return static_cast<bool>(Z_closed); }

  void check_z(cd z) const {
    if (zero_only) {
      if (z != cd(0)) fail(ErrorCode::domain, label + " is defined only at z = 0");
      return;
    }
    if (!(z.real() > z_re_min && z.real() < z_re_max)) fail(ErrorCode::domain, label + ": Re z outside the pair's strip");
  }
};

inline ReciprocalPair pair_k_bessel(double alpha) {
  if (!(alpha > 0)) fail(ErrorCode::domain, "K-Bessel pair needs alpha > 0");
  const double beta = 1 / alpha;
  ReciprocalPair p;
  p.label = "K-Bessel pair (alpha=" + std::to_string(alpha) + ")";
  p.phi = [alpha](double x, cd z) { return bessel_k(z, cd(2 * alpha * x)); };
  p.psi = [beta](double x, cd z) { return beta * bessel_k(z, cd(2 * beta * x)); };
  p.z_re_min = -1;
  p.z_re_max = 1;
  p.Z_closed = [alpha](cd s, cd) { return (detail::cpow(alpha, -s) + detail::cpow(alpha, s - 1.0)) / 4.0; };
  p.dZ_closed = [alpha](cd s, cd) {
    double la = std::log(alpha);
    return (-detail::cpow(alpha, -s) * la + detail::cpow(alpha, s - 1.0) * la) / 4.0;
  };
  p.mellin_strip = [](cd z) { return std::pair{std::abs(z.real()), std::numeric_limits<double>::infinity()}; };
  // |K_z(y)| <= K_{Re z}(y) <= 2 e^{-y} for y >= 1 and |Re z| <= 1
  p.phi_decay = [alpha](cd) { return quad::DecayModel::exponential(2, 2 * alpha, 1 / (2 * alpha)); };
  p.psi_decay = [beta](cd) { return quad::DecayModel::exponential(2 * beta, 2 * beta, 1 / (2 * beta)); };
  return p;
}

// e^{-x} and its partner built from li; z = 0 only.
inline double dixon_ferrar_psi(double x) {
  if (!(x > 0)) fail(ErrorCode::domain, "Dixon-Ferrar psi needs x > 0");
  // e^{4x} li(e^{-4x}) = -e^{4x} E1(4x),  e^{-4x} li(e^{4x}) = e^{-4x} Ei(4x)
  double u = 4 * x;
  return -2 / pi * (-e1_scaled(u) + ei_scaled(u));
}

inline ReciprocalPair pair_dixon_ferrar() {
  ReciprocalPair p;
  p.label = "Dixon-Ferrar pair";
  p.zero_only = true;
  p.phi = [](double x, cd z) {
    if (z != cd(0)) fail(ErrorCode::domain, "Dixon-Ferrar pair is defined only at z = 0");
    return cd(std::exp(-x));
  };
  p.psi = [](double x, cd z) {
    if (z != cd(0)) fail(ErrorCode::domain, "Dixon-Ferrar pair is defined only at z = 0");
    return cd(dixon_ferrar_psi(x));
  };
  p.mellin_strip = [](cd) { return std::pair{0.0, 2.0}; };
  p.phi_decay = [](cd) { return quad::DecayModel::exponential(1, 1, 0); };
  // psi(x) ~ -1/(4 pi x^2)
  p.psi_decay = [](cd) { return quad::DecayModel::algebraic(0.2, 2, 1); };
  return p;
}

inline cd theta_eval(const ReciprocalPair& pair, double x, cd z) {
  pair.check_z(z);
  if (!(x > 0)) fail(ErrorCode::domain, "theta needs x > 0");
  return pair.phi(x, z) + pair.psi(x, z);
}

// int_0^inf x^{s-1} f(x) dx, with f's tail envelope
inline quad::QuadratureResult<double> mellin_numeric(const std::function<cd(double)>& f, quad::DecayModel d, cd s,
                                                     const quad::QuadratureSpec& spec) {
  auto h = [&](double x) -> cd { return x <= 0 ? cd(0) : std::exp((s - 1.0) * std::log(x)) * f(x); };
  d.onset = std::max(d.onset, 1.0);
  double shift = s.real() - 1;
  if (d.kind == quad::DecayModel::Kind::power) {
    d.rate -= shift;
  } else {
    d.poly += shift;
  }
  auto sub = spec.with_abs(spec.abs_tol / 2);
  auto r = quad::integrate_finite(h, 0.0, 1.0, sub, quad::Singular::left);
  r += quad::integrate_semi_infinite(h, 1.0, d, sub);
  return r;
}

// (Mellin phi + Mellin psi)(s) / (Gamma((s-z)/2) Gamma((s+z)/2))
inline quad::QuadratureResult<double> pair_Z_numeric(const ReciprocalPair& pair, cd s, cd z,
                                                     const quad::QuadratureSpec& spec) {
  pair.check_z(z);
  auto [lo, hi] = pair.mellin_strip(z);
  if (!(s.real() > lo && s.real() < hi)) fail(ErrorCode::domain, pair.label + ": s outside the Mellin strip");
  auto m1 = mellin_numeric([&](double x) { return pair.phi(x, z); }, pair.phi_decay(z), s, spec);
  auto m2 = mellin_numeric([&](double x) { return pair.psi(x, z); }, pair.psi_decay(z), s, spec);
  m1 += m2;
  cd g = gamma((s - z) / 2.0) * gamma((s + z) / 2.0);
  m1.value /= g;
  m1.err_estimate /= std::abs(g);
  m1.truncation_bound /= std::abs(g);
  return m1;
}

// ---------------------------------------------------------------------------
// lambda(x, z) = zeta(z+1, x) - x^{-z}/z - x^{-z-1}/2

namespace detail {

// sum_k B_2k/(2k)! (z+1)_{2k-1} x^{-z-2k}, the large-x expansion of lambda
inline cd lambda_asymptotic(double x, cd z) {
  const auto& b = bernoulli_scaled<double>();
  cd poch = z + 1.0;  // (z+1)_{2k-1}
  cd xp = cpow(x, -z - 2.0);
  double x2 = 1 / (x * x), prev = std::numeric_limits<double>::infinity();
  cd sum{};
  for (int k = 1; k < int(b.size()); ++k) {
    cd term = b[k] * poch * xp;
    double mag = std::abs(term);
    if (mag > prev) break;
    sum += term;
    if (mag <= 1e-17 * std::abs(sum)) break;
    prev = mag;
    poch *= (z + double(2 * k)) * (z + double(2 * k + 1));
    xp *= x2;
  }
  return sum;
}

inline double lambda_direct_threshold(cd z) { return std::max(20.0, 1.3 * std::abs(z.imag()) + std::abs(z)); }

}  // namespace detail

inline cd lambda_fn(double x, cd z) {
  if (!(x > 0)) fail(ErrorCode::domain, "lambda needs x > 0");
  if (z == cd(0)) return std::log(x) - digamma(cd(x)) - 0.5 / x;
  if (std::abs(z) < 1e-4) fail(ErrorCode::near_pole, "lambda is evaluated through its z = 0 limit only at z = 0 exactly");
  const double big = detail::lambda_direct_threshold(z);
  if (x >= big) return detail::lambda_asymptotic(x, z);
  // shift to b = x + N, then undo the pole-subtracted pieces without cancellation
  int n = int(std::ceil(big - x));
  double b = x + n;
  cd sum{};
  for (int k = n - 1; k >= 0; --k) sum += detail::cpow(x + k, -z - 1.0);
  cd xz = detail::cpow(x, -z);
  sum += xz * detail::expm1(-z * std::log(b / x)) / z;           // (b^{-z} - x^{-z}) / z
  sum += 0.5 * (detail::cpow(b, -z - 1.0) - xz / x);              // (b^{-z-1} - x^{-z-1}) / 2
  return sum + detail::lambda_asymptotic(b, z);
}

// sum_{n>=1} lambda(n alpha, z): direct terms, then the tail through Hurwitz zeta.
struct SeriesValue {
  cd value;
  double truncation_bound = 0;
  int direct_terms = 0;
};

inline SeriesValue lambda_sum(double alpha, cd z, int min_direct = 1) {
  if (!(alpha > 0)) fail(ErrorCode::domain, "lambda_sum needs alpha > 0");
  if (z == cd(0)) fail(ErrorCode::domain, "lambda_sum needs z != 0");
  int n_direct = std::max(min_direct, int(std::ceil(detail::lambda_direct_threshold(z) / alpha)));
  cd direct{};
  for (int n = n_direct; n >= 1; --n) direct += lambda_fn(n * alpha, z);
  // sum_{n>N} lambda(n alpha) = sum_k c_k (z+1)_{2k-1} alpha^{-z-2k} zeta(z+2k, N+1)
  const auto& b = detail::bernoulli_scaled<double>();
  cd poch = z + 1.0, tail{};
  double last = 0, prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < int(b.size()); ++k) {
    cd term = b[k] * poch * detail::cpow(alpha, -z - double(2 * k)) * hurwitz_zeta(z + double(2 * k), cd(n_direct + 1));
    double mag = std::abs(term);
    if (mag > prev) break;
    tail += term;
    last = mag;
    if (mag <= 1e-17 * std::abs(tail)) break;
    prev = mag;
    poch *= (z + double(2 * k)) * (z + double(2 * k + 1));
  }
  return {direct + tail, last, n_direct};
}

// Plain truncation with no tail correction (for comparison reporting).
inline cd lambda_sum_truncated(double alpha, cd z, int terms) {
  cd s{};
  for (int n = terms; n >= 1; --n) s += lambda_fn(n * alpha, z);
  return s;
}

// ---------------------------------------------------------------------------
// Omega(x, z)

enum class OmegaMode { definition, partial_fraction, automatic };

struct OmegaValue {
  cd value;
  double tail_bound = 0;
  int terms = 0;
};

namespace detail {

// Partial-fraction representation pieces for one fixed z != 0.
// Partial-fraction representation for one fixed z != 0. Its terms are O(1)
// while Omega is often far smaller, so everything runs in long double.
class OmegaPartialFraction {
  using W = long double;
  using cw = std::complex<W>;

 public:
  OmegaPartialFraction(cd z, int n_terms) : z_(z.real(), z.imag()), n_(n_terms), sigma_(-z_, std::size_t(n_terms)) {
    zeta_z_ = riemann_zeta(z_);
    gamma_zeta_ = gamma(z_) * zeta_z_;
    zeta_z1_ = zeta_one_plus(z_);
    // T_j = zeta(2+2j) zeta(2+2j+z) - sum_{n<=N} sigma(n) n^{-2-2j}; cancels to about N^{-1-2j}
    for (int j = 0; j < max_j; ++j) {
      cw partial{};
      for (int n = n_; n >= 1; --n) partial += sigma_[n] * std::pow(W(n), W(-2 - 2 * j));
      tails_.push_back(riemann_zeta(cw(2 + 2 * j)) * riemann_zeta(z_ + W(2 + 2 * j)) - partial);
    }
    // |T_j| <= N^{-2j} * sum_{n>N} sigma_{-Re z}(n) / n^2
    DivisorTable<W> sr(cw(-z_.real()), std::size_t(n_terms));
    W p0{};
    for (int n = n_; n >= 1; --n) p0 += sr[n].real() / (W(n) * n);
    tail0_bound_ = double((riemann_zeta(cw(2)) * riemann_zeta(cw(2 + z_.real()))).real() - p0);
  }

  // Omega(x) minus the zeta(z) x^{z/2-1}/(2 pi) term when `subtract` is set.
  OmegaValue eval(double x, bool subtract) const {
    if (!(x < 0.5 * n_)) fail(ErrorCode::domain, "partial-fraction Omega needs x < N/2; raise N");
    const W xw = x, piw = constants::pi<W>;
    cw s{};
    for (int n = n_; n >= 1; --n) s += sigma_[n] / (W(n) * n + xw * xw);
    const W q = -xw * xw;
    const double ratio = x * x / (double(n_) * n_);
    W qj = 1;
    double rest = 0;
    for (int j = 0; j < max_j; ++j) {
      s += qj * tails_[j];
      qj *= q;
      // bound on everything after j, from |T_i| <= N^{-2i} |T_0|
      rest = tail0_bound_ * std::pow(ratio, j + 1) / (1 - ratio);
      if (rest <= 1e-19 * double(std::abs(s))) break;
    }
    const W lx = std::log(xw);
    cw xh = std::exp(z_ / W(2) * lx);
    cw out = -gamma_zeta_ * std::exp(-z_ * std::log(2 * piw * std::sqrt(xw))) - xh * zeta_z1_ / W(2) +
             xh * xw / piw * s;
    if (!subtract) out += xh / xw * zeta_z_ / (2 * piw);
    return {cd(double(out.real()), double(out.imag())), double(std::abs(xh * xw / piw)) * rest, n_};
  }

 private:
  static constexpr int max_j = 40;
  cw z_;
  int n_;
  DivisorTable<W> sigma_;
  cw zeta_z_, gamma_zeta_, zeta_z1_;
  std::vector<cw> tails_;
  double tail0_bound_ = 0;
};

}  // namespace detail

// Raw tail bound for the partial-fraction sum: sum_{n>N} |sigma_{-z}(n)|/(n^2+x^2)
// <= zeta(2) zeta(2+Re z) - sum_{n<=N} sigma_{-Re z}(n)/n^2.
inline double omega_partial_fraction_tail_bound(cd z, int n_terms) {
  double a = z.real();
  DivisorTable<double> t(cd(-a), std::size_t(n_terms));
  double partial = 0;
  for (int n = n_terms; n >= 1; --n) partial += t[n].real() / (double(n) * n);
  return (riemann_zeta(cd(2)) * riemann_zeta(cd(2 + a))).real() - partial;
}

class OmegaEvaluator {
 public:
  static constexpr double zero_shift = 1e-4;
  static constexpr double auto_switch = 0.5;  // definition mode at and above this x

  explicit OmegaEvaluator(cd z, int pf_terms = 500) : z_(z), pf_terms_(pf_terms) {
    if (!(std::abs(z.real()) < 1)) fail(ErrorCode::domain, "Omega needs |Re z| < 1");
    if (pf_terms < 1) fail(ErrorCode::domain, "Omega needs at least one series term");
    zeta_z_ = riemann_zeta(z);
    def_sigma_ = std::make_shared<DivisorTable<double>>(-z, def_table);
  }

  cd z() const { return z_; }

  OmegaValue definition(double x) const {
    if (!(x > 0)) fail(ErrorCode::domain, "Omega needs x > 0");
    auto envelope = [&](long n) { return term_envelope(n, x); };
    cd sum{};
    long n = 1;
    double bound = 0;
    for (;; ++n) {
      sum += definition_term(n, x);
      // envelope of everything after n
      bound = 0;
      for (long m = n + 1;; ++m) {
        double e = envelope(m);
        bound += e;
        if (e < 1e-3 * bound || e == 0) break;
      }
      if (bound <= 1e-17 * std::abs(sum) || bound < 1e-300) break;
      if (n > 2'000'000) fail(ErrorCode::no_convergence, "Omega definition series did not converge");
    }
    return {sum, bound, int(n)};
  }

  // Upper bound for |Omega(x)|: the summed term envelopes.
  double envelope(double x) const {
    if (!(x > 0)) fail(ErrorCode::domain, "Omega needs x > 0");
    double total = 0;
    for (long n = 1;; ++n) {
      double e = term_envelope(n, x);
      total += e;
      if (e < 1e-3 * total || e == 0) break;
    }
    return total;
  }

  // n-th term of the K-Bessel series defining Omega
  cd definition_term(long n, double x) const {
    cd sig = n <= long(def_sigma_->size()) ? (*def_sigma_)[n] : sigma(-z_, n);
    cd w = 4 * pi * std::sqrt(n * x) * std::polar(1.0, pi / 4);
    cd rot = std::exp(cd(0, pi / 4) * z_);
    return 2.0 * sig * cpow_n(n, z_ / 2.0) * (rot * bessel_k(z_, w) + bessel_k(z_, std::conj(w)) / rot);
  }

  OmegaValue partial_fraction(double x, bool subtract = false) const {
    if (!(x > 0)) fail(ErrorCode::domain, "Omega needs x > 0");
    if (z_ == cd(0)) {
      // symmetric averages at +-h and +-2h, then one Richardson step on the h^2 error
      const auto& c = cores();
      OmegaValue v[4];
      for (int i = 0; i < 4; ++i) v[i] = c[i].eval(x, subtract);
      cd avg_h = (v[0].value + v[1].value) / 2.0, avg_2h = (v[2].value + v[3].value) / 2.0;
      double tb = std::max({v[0].tail_bound, v[1].tail_bound, v[2].tail_bound, v[3].tail_bound});
      return {(4.0 * avg_h - avg_2h) / 3.0, tb, v[0].terms};
    }
    if (std::abs(z_) < zero_shift)
      fail(ErrorCode::near_pole, "partial-fraction Omega needs z = 0 exactly or |z| >= 1e-4");
    return cores()[0].eval(x, subtract);
  }

  OmegaValue eval(double x, OmegaMode mode = OmegaMode::automatic) const {
    if (mode == OmegaMode::definition || (mode == OmegaMode::automatic && x >= auto_switch)) return definition(x);
    return partial_fraction(x);
  }

  cd operator()(double x, OmegaMode mode = OmegaMode::automatic) const { return eval(x, mode).value; }

  // Omega(x) - zeta(z) x^{z/2-1} / (2 pi)
  OmegaValue subtracted(double x, OmegaMode mode = OmegaMode::automatic) const {
    if (mode == OmegaMode::definition || (mode == OmegaMode::automatic && x >= auto_switch)) {
      auto v = definition(x);
      v.value -= zeta_z_ * detail::cpow(x, z_ / 2.0 - 1.0) / (2 * pi);
      return v;
    }
    return partial_fraction(x, true);
  }

 private:
  static constexpr std::size_t def_table = 4096;

  static cd cpow_n(long n, cd e) { return std::exp(e * std::log(double(n))); }

  // |definition_term(n, x)| <= term_envelope(n, x), via d(n) <= 2 sqrt(n) and the K asymptotics
  double term_envelope(long n, double x) const {
    const double rz = z_.real(), env_order = std::exp(pi * std::abs(z_.imag()) / 4);
    double r = 4 * pi * std::sqrt(n * x);
    double sig = 2 * std::sqrt(double(n)) * std::max(1.0, std::pow(double(n), -rz));
    return 4 * sig * std::pow(double(n), rz / 2) * env_order * 1.2 * std::sqrt(pi / (2 * r)) *
           std::exp(-r * std::cos(pi / 4)) * (2 + std::abs(z_ * z_));
  }

  const std::vector<detail::OmegaPartialFraction>& cores() const {
    std::call_once(*once_, [&] {
      if (z_ == cd(0)) {
        for (double h : {zero_shift, -zero_shift, 2 * zero_shift, -2 * zero_shift}) cores_->emplace_back(cd(h), pf_terms_);
      } else {
        cores_->emplace_back(z_, pf_terms_);
      }
    });
    return *cores_;
  }

  cd z_;
  int pf_terms_;
  cd zeta_z_;
  std::shared_ptr<DivisorTable<double>> def_sigma_;
  std::shared_ptr<std::once_flag> once_ = std::make_shared<std::once_flag>();
  std::shared_ptr<std::vector<detail::OmegaPartialFraction>> cores_ =
      std::make_shared<std::vector<detail::OmegaPartialFraction>>();
};

inline OmegaValue omega(double x, cd z, OmegaMode mode = OmegaMode::automatic, int n_terms = 500) {
  return OmegaEvaluator(z, n_terms).eval(x, mode);
}

}  // namespace koshliakov
