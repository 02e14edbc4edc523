#pragma once

// Both sides of each identity, with residuals and error budgets.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "koshliakov/arith.hpp"
#include "koshliakov/error.hpp"
#include "koshliakov/koshliakov.hpp"
#include "koshliakov/quad.hpp"
#include "koshliakov/specfun.hpp"

namespace koshliakov {

struct Budgets {
  double quad_error = 0;
  double truncation = 0;
  double total() const { return quad_error + truncation; }

  void add(const quad::QuadratureResult<double>& r, double factor = 1) {
    quad_error += std::abs(factor) * r.err_estimate;
    truncation += std::abs(factor) * r.truncation_bound;
  }
  void add(const Budgets& b, double factor = 1) {
    quad_error += std::abs(factor) * b.quad_error;
    truncation += std::abs(factor) * b.truncation;
  }
};

struct ReportParam {
  enum class Kind { real, complex, integer, text };
  std::string name;
  Kind kind = Kind::real;
  cd value{};
  std::string text;
};

struct VerificationReport {
  std::string identity_id;
  std::vector<ReportParam> params;
  cd lhs{}, rhs{};
  double abs_diff = 0, rel_diff = 0;
  Budgets budgets;
  double tolerance = 0;
  bool pass = false;
  // extra numeric diagnostics and free-form remarks, both in insertion order
  std::vector<std::pair<std::string, double>> notes;
  std::vector<std::string> remarks;

  void note(std::string key, double v) { notes.emplace_back(std::move(key), v); }
  std::optional<double> find_note(const std::string& key) const {
    for (const auto& [k, v] : notes)
      if (k == key) return v;
    return std::nullopt;
  }
};

struct IdentityParams {
  cd z = 0.5;
  double alpha = 1;
  int terms = 10;
  quad::QuadratureSpec spec{1e-13, 1e-12};
  // false: use exactly `terms` series terms and no tail correction
  bool adaptive = true;
  double x = 1, y = 1, q = 1;
  cd s = 2.0;
  cd nu = 0.0;
  std::string pair = "k-bessel";
  // 0 selects the identity's default
  double tolerance = 0;
};

// Below this |rhs| the absolute difference decides.
inline constexpr double small_rhs = 1e-3;
// Largest |Im| / |Re| accepted when all inputs are real.
inline constexpr double realness_tol = 1e-10;

namespace detail {

inline void check_alpha(double alpha) {
  if (!(alpha >= 0.25 && alpha <= 4)) fail(ErrorCode::domain, "alpha must lie in [1/4, 4]");
}

inline void check_re_z(cd z, double bound) {
  if (!(std::abs(z.real()) < bound)) {
    fail(ErrorCode::domain, bound == 1 ? "|Re z| < 1 required" : "|Re z| < " + std::to_string(bound) + " required");
  }
}

inline void check_not_near_zero(cd z) {
  if (z != cd(0) && std::abs(z) < 1e-4) fail(ErrorCode::near_pole, "0 < |z| < 1e-4 is too close to the z = 0 limit");
}

inline ReportParam real_param(std::string n, double v) { return {std::move(n), ReportParam::Kind::real, v, {}}; }
inline ReportParam complex_param(std::string n, cd v) { return {std::move(n), ReportParam::Kind::complex, v, {}}; }
inline ReportParam int_param(std::string n, int v) { return {std::move(n), ReportParam::Kind::integer, double(v), {}}; }
inline ReportParam text_param(std::string n, std::string t) { return {std::move(n), ReportParam::Kind::text, {}, std::move(t)}; }

inline bool all_real(const std::vector<ReportParam>& ps) {
  for (const auto& p : ps)
    if (p.kind == ReportParam::Kind::complex && p.value.imag() != 0) return false;
  return true;
}

// Residuals and the pass decision.
inline void finalize(VerificationReport& r) {
  r.abs_diff = std::abs(r.lhs - r.rhs);
  double mag = std::abs(r.rhs);
  r.rel_diff = mag > 0 ? r.abs_diff / mag : (r.abs_diff == 0 ? 0 : std::numeric_limits<double>::infinity());
  double scale = mag >= small_rhs ? mag : 1;
  bool diff_ok = mag >= small_rhs ? r.rel_diff <= r.tolerance : r.abs_diff <= r.tolerance;
  bool budget_ok = r.budgets.total() <= r.tolerance * scale;
  bool real_ok = true;
  if (all_real(r.params)) {
    for (cd v : {r.lhs, r.rhs})
      if (std::abs(v.imag()) > realness_tol * std::abs(v.real())) real_ok = false;
    if (!real_ok) r.remarks.push_back("imaginary part exceeds 1e-10 |Re| although all inputs are real");
  }
  if (!budget_ok) r.remarks.push_back("error budget exceeds the tolerance; computation under-resolved");
  r.pass = diff_ok && budget_ok && real_ok && std::isfinite(r.abs_diff);
}

// int_0^inf f(t) dt for integrands built from Xi. `amplitude` is |f| without
// its oscillating cosine; the exponential envelope is fitted at t_fit and
// inflated tenfold, which covers the slowly varying zeta factors.
inline quad::QuadratureResult<double> xi_integral(const std::function<cd(double)>& f,
                                                  const std::function<double(double)>& amplitude, double rate,
                                                  double t_fit, const quad::QuadratureSpec& spec) {
  double c = 0;
  for (int k = 0; k <= 8; ++k) {
    double t = t_fit + 0.5 * k;
    c = std::max(c, amplitude(t) * std::exp(rate * t));
  }
  auto decay = quad::DecayModel::exponential(10 * c + 1e-300, rate, t_fit);
  auto r = quad::integrate_semi_infinite(f, 0.0, decay, spec);
  return r;
}

inline cd xi_pair(double t, cd z) {
  return big_xi(cd(t, 0) / 2.0 + cd(0, 0.5) * z) * big_xi(cd(t, 0) / 2.0 - cd(0, 0.5) * z);
}

// sqrt(pi/(2y)) e^{-y} bounds |K_nu(y)| for |Re nu| <= 1/2, y > 0.
inline double k_half_bound(double y) { return std::sqrt(pi / (2 * y)) * std::exp(-y); }

// |sigma_{-z}(n)| <= n^{1+|Re z|}
inline double sigma_bound(long n, cd z) { return std::pow(double(n), 1 + std::abs(z.real())); }

// Sum of positive envelope terms m > n until they stop mattering.
template <class Env>
double envelope_tail(long n, Env&& env) {
  double s = 0;
  for (long m = n + 1;; ++m) {
    double e = env(m);
    s += e;
    if (e <= 1e-3 * s || e == 0 || m > n + 1'000'000) break;
  }
  return s;
}

// sum_n term(n) with envelope env(n) >= |term(n)|: at least `terms` terms, then
// (adaptively) until the envelope tail is negligible.
template <class Term, class Env>
SeriesValue exp_decay_sum(Term&& term, Env&& env, int terms, bool adaptive) {
  cd sum{};
  long n = 1;
  double tail = 0;
  for (;; ++n) {
    sum += term(n);
    if (n < terms) continue;
    tail = envelope_tail(n, env);
    if (!adaptive || tail <= 1e-17 * std::abs(sum)) break;
    if (n > 100'000) fail(ErrorCode::no_convergence, "exponentially decaying series did not converge");
  }
  return {sum, tail, int(n)};
}

// sum sigma_{-z}(n) n^{z/2} K_{z/2}(2 n pi a)
inline SeriesValue rg_k_sum(double a, cd z, int terms, bool adaptive) {
  cd nu = z / 2.0;
  auto term = [&](long n) {
    return sigma(-z, n) * detail::cpow(double(n), nu) * bessel_k(nu, cd(2 * pi * n * a));
  };
  auto env = [&](long n) {
    return sigma_bound(n, z) * std::pow(double(n), z.real() / 2) * k_half_bound(2 * pi * n * a);
  };
  return exp_decay_sum(term, env, terms, adaptive);
}

// sum sigma_{-z}(n) n^{z/2} Theta(pi n, z/2) for the K-Bessel pair
inline SeriesValue rg_theta_sum(double alpha, cd z, int terms, bool adaptive) {
  const double beta = 1 / alpha;
  cd nu = z / 2.0;
  auto term = [&](long n) {
    double x = pi * n;
    cd th = bessel_k(nu, cd(2 * alpha * x)) + beta * bessel_k(nu, cd(2 * beta * x));
    return sigma(-z, n) * detail::cpow(double(n), nu) * th;
  };
  auto env = [&](long n) {
    double x = pi * n;
    return sigma_bound(n, z) * std::pow(double(n), z.real() / 2) *
           (k_half_bound(2 * alpha * x) + beta * k_half_bound(2 * beta * x));
  };
  return exp_decay_sum(term, env, terms, adaptive);
}

}  // namespace detail

// The function whose alpha -> 1/alpha invariance is the Ramanujan-Guinand formula.
inline SeriesValue rg_script_f(double alpha, cd z, int terms = 10, bool adaptive = true) {
  if (z == cd(0)) fail(ErrorCode::pole, "the Ramanujan-Guinand function has a pole at z = 0");
  detail::check_not_near_zero(z);
  auto s = detail::rg_k_sum(alpha, z, terms, adaptive);
  cd zh = z / 2.0;
  cd a = detail::cpow(alpha, zh - 1.0) * detail::cpow(pi, -zh) * gamma(zh) * riemann_zeta(z);
  cd b = detail::cpow(alpha, -zh - 1.0) * detail::cpow(pi, zh) * gamma(-zh) * riemann_zeta(-z);
  double ra = std::sqrt(alpha);
  return {ra * (a + b - 4.0 * s.value), 4 * ra * s.truncation_bound, s.direct_terms};
}

// alpha^{(z+1)/2} (sum lambda(n alpha) - zeta(z+1)/(2 alpha^{z+1}) - zeta(z)/(alpha z))
inline SeriesValue hurwitz_script_f(double alpha, cd z, int terms = 10, bool adaptive = true) {
  if (z == cd(0)) fail(ErrorCode::domain, "the z = 0 limit of this function is out of scope");
  detail::check_not_near_zero(z);
  SeriesValue s;
  if (adaptive) {
    s = lambda_sum(alpha, z, terms);
  } else {
    s.value = lambda_sum_truncated(alpha, z, terms);
    // the plain truncation misses the whole tail; report its size
    s.truncation_bound = std::abs(lambda_sum(alpha, z, terms).value - s.value);
    s.direct_terms = terms;
  }
  cd corr = zeta_one_plus(z) / (2.0 * detail::cpow(alpha, z + 1.0)) + riemann_zeta(z) / (alpha * z);
  cd pre = detail::cpow(alpha, (z + 1.0) / 2.0);
  return {pre * (s.value - corr), std::abs(pre) * s.truncation_bound, s.direct_terms};
}

namespace detail {

struct MomentSum {
  cd value;
  Budgets budgets;
  int direct_terms = 0;
  int expansion_terms = 0;
  std::vector<cd> leading_terms;  // first few sigma n^{z+1} I_n
};

struct MomentSumInput {
  std::function<cd(double)> f;
  quad::DecayModel decay;           // envelope of |f| on x >= onset
  std::function<cd(cd)> mellin;     // int_0^inf x^{s-1} f(x) dx
  double kappa = 1;                 // exponential rate of f
};

// sum_{n>=1} sigma_{-z}(n) n^{z+1} int_0^inf f(x) x^{1+z/2} (x^2 + pi^2 n^2)^{-(z+3)/2} dx.
// Direct quadrature up to N, where e^{-kappa pi N} is negligible; beyond N the
// weight is expanded in x^2/(pi n)^2, turning the tail into Mellin moments of f
// times tails of sum sigma_{-z}(n) n^{-2-2j}.
inline MomentSum moment_sum(const MomentSumInput& in, cd z, int terms, bool adaptive,
                            const quad::QuadratureSpec& spec) {
  using W = long double;
  using cw = std::complex<W>;
  const cd a = (z + 3.0) / 2.0, zh = z / 2.0;
  const int n_direct = adaptive ? std::max(terms, int(std::ceil(40 / (pi * in.kappa)))) : terms;
  MomentSum out;
  out.direct_terms = n_direct;

  std::unordered_map<double, cd> cache;
  auto f_cached = [&](double x) {
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
    cd v = in.f(x);
    cache.emplace(x, v);
    return v;
  };

  for (int n = 1; n <= n_direct; ++n) {
    const double pn2 = pi * pi * double(n) * n;
    auto h = [&](double x) -> cd {
      if (x <= 0) return {};
      return f_cached(x) * detail::cpow(x, 1.0 + zh) * std::exp(-a * std::log(x * x + pn2));
    };
    quad::DecayModel d = in.decay;
    d.onset = std::max(d.onset, 1.0);
    d.poly += 1 + z.real() / 2;
    d.scale *= std::pow(pi * n, -(z.real() + 3));
    auto sub = spec.with_abs(spec.abs_tol / 2);
    auto r = quad::integrate_finite(h, 0.0, 1.0, sub, quad::Singular::left);
    r += quad::integrate_semi_infinite(h, 1.0, d, sub);
    cd w = sigma(-z, n) * detail::cpow(double(n), z + 1.0);
    out.value += w * r.value;
    out.budgets.add(r, std::abs(w));
    if (out.leading_terms.size() < 8) out.leading_terms.push_back(w * r.value);
  }

  // tail n > N
  const int big = 16 * n_direct;
  DivisorTable<W> sig(cw(-z.real(), -z.imag()), std::size_t(big));
  const cw zw(z.real(), z.imag());
  const double e_sig = 0.5 + std::max(0.0, -z.real());  // |sigma_{-z}(n)| <= 2 n^{e_sig}
  cd tail{};
  double tail_err = 0, prev = std::numeric_limits<double>::infinity();
  cd binom = 1.0;  // binom(-a, j)
  int j = 0;
  for (; j < 30; ++j) {
    if (j > 0) binom *= -(a + double(j - 1)) / double(j);
    cw d;
    double d_rest = 0;
    if (j <= 1) {
      cw partial{};
      for (int n = n_direct; n >= 1; --n) partial += sig[n] * std::pow(W(n), W(-2 - 2 * j));
      d = riemann_zeta(cw(2 + 2 * j)) * riemann_zeta(zw + W(2 + 2 * j)) - partial;
    } else {
      for (int n = big; n > n_direct; --n) d += sig[n] * std::pow(W(n), W(-2 - 2 * j));
      double ex = e_sig - 2 - 2 * j;
      d_rest = 2 * std::pow(double(big), ex + 1) / (-(ex + 1));
    }
    cd c = binom * detail::cpow(pi, -z - 3.0 - double(2 * j)) * in.mellin(2.0 + zh + double(2 * j));
    cd term = c * cd(double(d.real()), double(d.imag()));
    double mag = std::abs(term);
    if (mag > prev) {
      tail_err += prev;  // asymptotic expansion started to grow
      break;
    }
    tail += term;
    tail_err += std::abs(c) * d_rest;
    prev = mag;
    if (mag <= 1e-17 * std::abs(out.value + tail)) break;
  }
  out.expansion_terms = j + 1;
  if (adaptive) {
    out.value += tail;
    out.budgets.truncation += tail_err;
  } else {
    out.budgets.truncation += std::abs(tail) + tail_err;
  }
  return out;
}

// Theta(x, z/2) for the K-Bessel pair with its moments.
inline MomentSumInput k_pair_theta_input(double alpha, cd z) {
  const double beta = 1 / alpha;
  cd nu = z / 2.0;
  auto pair = pair_k_bessel(alpha);
  MomentSumInput in;
  in.f = [alpha, beta, nu](double x) {
    return bessel_k(nu, cd(2 * alpha * x)) + beta * bessel_k(nu, cd(2 * beta * x));
  };
  in.decay = quad::DecayModel::exponential(2 + 2 * beta, 2 * std::min(alpha, beta),
                                           std::max(1 / (2 * alpha), 1 / (2 * beta)));
  in.mellin = [pair, nu](cd s) {
    return gamma((s - nu) / 2.0) * gamma((s + nu) / 2.0) * pair.Z_closed(s, nu);
  };
  in.kappa = 2 * std::min(alpha, beta);
  return in;
}

inline quad::QuadratureSpec omega_spec(const quad::QuadratureSpec& s) {
  // Omega itself is only good to ~1e-12 relative; do not chase roundoff
  quad::QuadratureSpec out = s;
  out.abs_tol = std::max(s.abs_tol, 1e-12);
  out.rel_tol = std::max(s.rel_tol, 1e-10);
  return out;
}

// int_0^inf e^{-2 pi a x} x^{z/2} (Omega(x) - zeta(z) x^{z/2-1}/(2 pi)) dx
inline quad::QuadratureResult<double> omega_laplace(const OmegaEvaluator& om, double a,
                                                    const quad::QuadratureSpec& spec) {
  cd z = om.z();
  auto h = [&](double x) -> cd {
    if (x <= 0) return {};
    return std::exp(-2 * pi * a * x) * detail::cpow(x, z / 2.0) * om.subtracted(x).value;
  };
  double c = std::abs(riemann_zeta(z)) / (2 * pi) + om.envelope(1);
  auto decay = quad::DecayModel::exponential(c, 2 * pi * a, 1, std::max(0.0, z.real() / 2));
  auto sp = omega_spec(spec);
  auto sub = sp.with_abs(sp.abs_tol / 2);
  auto r = quad::integrate_finite(h, 0.0, 1.0, sub, quad::Singular::left);
  r += quad::integrate_semi_infinite(h, 1.0, decay, sub);
  return r;
}

inline double j_bound(cd nu, double u) {
  u = std::max(u, 2.0);
  return 1.5 * std::sqrt(2 / (pi * u)) * std::cosh(pi * nu.imag() / 2) * (1 + (std::abs(4.0 * nu * nu) + 1) / (8 * u));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Verifiers

inline VerificationReport verify_rg_corollary_z0(const IdentityParams& p);

inline VerificationReport verify_rg_corollary(const IdentityParams& p) {
  if (p.z == cd(0)) {
    auto r = verify_rg_corollary_z0(p);
    r.remarks.push_back("z = 0 routed to the limiting corollary");
    return r;
  }
  detail::check_re_z(p.z, 1);
  detail::check_not_near_zero(p.z);
  detail::check_alpha(p.alpha);
  VerificationReport r;
  r.identity_id = "rg-corollary";
  r.params = {detail::complex_param("z", p.z), detail::real_param("alpha", p.alpha), detail::int_param("terms", p.terms)};
  const cd z = p.z;
  const double la = std::log(p.alpha);
  auto den = [z](double t) { return (t * t + (z + 1.0) * (z + 1.0)) * (t * t + (z - 1.0) * (z - 1.0)); };
  auto f = [&](double t) -> cd { return detail::xi_pair(t, z) * std::cos(0.5 * t * la) / den(t); };
  auto amp = [&](double t) { return std::abs(detail::xi_pair(t, z) / den(t)); };
  auto q = detail::xi_integral(f, amp, pi / 4, 60, p.spec);
  const double pre = -32 / pi;
  r.lhs = pre * q.value;
  r.budgets.add(q, pre);
  auto s = rg_script_f(p.alpha, z, p.terms, p.adaptive);
  r.rhs = s.value;
  r.budgets.truncation += s.truncation_bound;
  r.note("terms_used", s.direct_terms);
  r.note("k_tail_bound", s.truncation_bound);
  r.note("xi_cutoff_tail", q.truncation_bound);
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-8;
  detail::finalize(r);
  return r;
}

inline VerificationReport verify_rg_corollary_z0(const IdentityParams& p) {
  detail::check_alpha(p.alpha);
  VerificationReport r;
  r.identity_id = "rg-corollary-z0";
  r.params = {detail::real_param("alpha", p.alpha), detail::int_param("terms", p.terms)};
  auto pair = pair_k_bessel(p.alpha);
  const double la = std::log(p.alpha), ra = std::sqrt(p.alpha);
  // Z((1+it)/2) = cos(t log(alpha)/2) / (2 sqrt(alpha)) for this pair
  auto f = [&](double t) -> cd {
    cd x = big_xi(cd(t / 2));
    return x * x * std::cos(0.5 * t * la) / (2 * ra) / ((1 + t * t) * (1 + t * t));
  };
  auto amp = [&](double t) { return std::norm(big_xi(cd(t / 2))) / (2 * ra) / ((1 + t * t) * (1 + t * t)); };
  auto q = detail::xi_integral(f, amp, pi / 4, 60, p.spec);
  const double pre = 32 / pi;
  r.lhs = pre * q.value;
  r.budgets.add(q, pre);
  auto s = detail::rg_theta_sum(p.alpha, cd(0), p.terms, p.adaptive);
  cd z1 = pair.Z_closed(1.0, 0.0), dz1 = pair.dZ_closed(1.0, 0.0);
  r.rhs = s.value - (dz1 + (constants::euler_gamma<double> - std::log(4 * pi)) * z1);
  r.budgets.truncation += s.truncation_bound;
  r.note("terms_used", s.direct_terms);
  r.note("Z_at_1", z1.real());
  r.note("dZ_at_1", dz1.real());
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-8;
  detail::finalize(r);
  return r;
}

// F(alpha, z) against F(1/alpha, z), plus the three readings of the braces form.
inline VerificationReport verify_rg_formula(const IdentityParams& p) {
  detail::check_re_z(p.z, 1);
  if (p.z == cd(0)) fail(ErrorCode::pole, "the Ramanujan-Guinand function has a pole at z = 0");
  detail::check_not_near_zero(p.z);
  detail::check_alpha(p.alpha);
  VerificationReport r;
  r.identity_id = "rg-formula";
  r.params = {detail::complex_param("z", p.z), detail::real_param("alpha", p.alpha), detail::int_param("terms", p.terms)};
  const cd z = p.z;
  const double beta = 1 / p.alpha;
  auto fa = rg_script_f(p.alpha, z, p.terms, p.adaptive);
  auto fb = rg_script_f(beta, z, p.terms, p.adaptive);
  r.lhs = fa.value;
  r.rhs = fb.value;
  r.budgets.truncation = fa.truncation_bound + fb.truncation_bound;
  r.note("terms_used_alpha", fa.direct_terms);
  r.note("terms_used_beta", fb.direct_terms);

  // sqrt(a) S(a) - sqrt(b) S(b) = (1/4) G(z) {b^{(1-z)/2} - a^{(1-z)/2}} + (1/4) G(-z) {brace}
  const double a = pi * p.alpha, b = pi * beta;
  auto sa = detail::rg_k_sum(p.alpha, z, p.terms, p.adaptive);
  auto sb = detail::rg_k_sum(beta, z, p.terms, p.adaptive);
  cd left = std::sqrt(a) * sa.value - std::sqrt(b) * sb.value;
  cd g_plus = gamma(z / 2.0) * riemann_zeta(z), g_minus = gamma(-z / 2.0) * riemann_zeta(-z);
  cd first = 0.25 * g_plus * (detail::cpow(b, (1.0 - z) / 2.0) - detail::cpow(a, (1.0 - z) / 2.0));
  cd ap = detail::cpow(a, (1.0 + z) / 2.0), bp = detail::cpow(b, (1.0 + z) / 2.0);
  auto resid = [&](cd brace) {
    cd right = first + 0.25 * g_minus * brace;
    return std::abs(left - right) / std::max(std::abs(left), std::abs(right));
  };
  r.note("brace_as_printed_rel_diff", resid(ap - ap));
  r.note("brace_b_minus_a_rel_diff", resid(bp - ap));
  r.note("brace_a_minus_b_rel_diff", resid(ap - bp));
  r.remarks.push_back("braces form: the second brace must read b^{(1+z)/2} - a^{(1+z)/2}");
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-8;
  detail::finalize(r);
  return r;
}

// General K-pair form with Z((1+it)/2, z/2) and the residual terms written out.
inline VerificationReport verify_rg_theorem(const IdentityParams& p) {
  detail::check_re_z(p.z, 1);
  if (p.z == cd(0)) fail(ErrorCode::pole, "the residual terms have a pole at z = 0; use rg-corollary-z0");
  detail::check_not_near_zero(p.z);
  detail::check_alpha(p.alpha);
  VerificationReport r;
  r.identity_id = "rg-theorem";
  r.params = {detail::complex_param("z", p.z), detail::real_param("alpha", p.alpha), detail::int_param("terms", p.terms)};
  const cd z = p.z, zh = z / 2.0;
  auto pair = pair_k_bessel(p.alpha);
  auto den = [z](double t) { return (t * t + (z + 1.0) * (z + 1.0)) * (t * t + (z - 1.0) * (z - 1.0)); };
  auto f = [&](double t) -> cd { return detail::xi_pair(t, z) * pair.Z_closed(cd(0.5, t / 2), zh) / den(t); };
  auto amp = [&](double t) { return std::abs(detail::xi_pair(t, z) / den(t)) / (2 * std::sqrt(p.alpha)); };
  auto q = detail::xi_integral(f, amp, pi / 4, 60, p.spec);
  const double pre = 32 / pi;
  r.lhs = pre * q.value;
  r.budgets.add(q, pre);
  auto s = detail::rg_theta_sum(p.alpha, z, p.terms, p.adaptive);
  cd res = detail::cpow(pi, zh) * gamma(-zh) * riemann_zeta(-z) * pair.Z_closed(1.0 + zh, zh) +
           detail::cpow(pi, -zh) * gamma(zh) * riemann_zeta(z) * pair.Z_closed(1.0 - zh, zh);
  r.rhs = s.value - res;
  r.budgets.truncation += s.truncation_bound;
  r.note("terms_used", s.direct_terms);
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-8;
  detail::finalize(r);
  return r;
}

namespace detail {

// Gamma((z-1+it)/4) Gamma((z-1-it)/4) Xi((t+iz)/2) Xi((t-iz)/2) / (t^2 + (z+1)^2)
inline cd hurwitz_weight(double t, cd z) {
  cd g = gamma((z - 1.0 + cd(0, t)) / 4.0) * gamma((z - 1.0 - cd(0, t)) / 4.0);
  return g * xi_pair(t, z) / (t * t + (z + 1.0) * (z + 1.0));
}

}  // namespace detail

inline VerificationReport verify_hurwitz_corollary(const IdentityParams& p) {
  detail::check_re_z(p.z, 1);
  if (p.z.real() == 0) fail(ErrorCode::domain, "0 < |Re z| < 1 required");
  detail::check_not_near_zero(p.z);
  detail::check_alpha(p.alpha);
  VerificationReport r;
  r.identity_id = "hurwitz-corollary";
  r.params = {detail::complex_param("z", p.z), detail::real_param("alpha", p.alpha), detail::int_param("terms", p.terms)};
  const cd z = p.z;
  const double la = std::log(p.alpha);
  auto f = [&](double t) -> cd { return detail::hurwitz_weight(t, z) * std::cos(0.5 * t * la); };
  auto amp = [&](double t) { return std::abs(detail::hurwitz_weight(t, z)); };
  auto q = detail::xi_integral(f, amp, pi / 2, 40, p.spec);
  cd pre = 8.0 * detail::cpow(4 * pi, (z - 3.0) / 2.0) / gamma(z + 1.0);
  r.lhs = pre * q.value;
  r.budgets.add(q, std::abs(pre));
  auto s = hurwitz_script_f(p.alpha, z, p.terms, p.adaptive);
  r.rhs = s.value;
  r.budgets.truncation += s.truncation_bound;
  r.note("terms_used", s.direct_terms);
  // the plain sum over `terms` terms, as in a figure-style truncation
  auto naive = hurwitz_script_f(p.alpha, z, p.terms, false);
  r.note("fixed_terms_rel_diff", std::abs(r.lhs - naive.value) / std::abs(naive.value));
  // corollary integral / theorem integral at the K-Bessel pair
  cd ratio = detail::cpow(2, z + 1.0) * std::sqrt(p.alpha) / gamma(z + 1.0);
  r.note("prefactor_ratio_re", ratio.real());
  r.note("prefactor_ratio_im", ratio.imag());
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-6;
  detail::finalize(r);
  return r;
}

inline VerificationReport verify_hurwitz_corollary_z0(const IdentityParams& p) {
  detail::check_alpha(p.alpha);
  VerificationReport r;
  r.identity_id = "hurwitz-corollary-z0";
  r.params = {detail::real_param("alpha", p.alpha), detail::int_param("terms", p.terms)};
  auto pair = pair_k_bessel(p.alpha);
  const double la = std::log(p.alpha), ra = std::sqrt(p.alpha);
  auto w = [&](double t) {
    cd x = big_xi(cd(t / 2));
    return std::norm(gamma(cd(-0.25, t / 4))) * x * x / (1 + t * t);
  };
  auto f = [&](double t) -> cd { return w(t) * std::cos(0.5 * t * la) / (2 * ra); };
  auto amp = [&](double t) { return std::abs(w(t)) / (2 * ra); };
  auto q = detail::xi_integral(f, amp, pi / 2, 40, p.spec);
  const double pre = std::pow(pi, -1.5);
  r.lhs = pre * q.value;
  r.budgets.add(q, pre);
  auto m = detail::moment_sum(detail::k_pair_theta_input(p.alpha, cd(0)), cd(0), p.terms, p.adaptive, p.spec);
  cd z1 = pair.Z_closed(1.0, 0.0), dz1 = pair.dZ_closed(1.0, 0.0);
  r.rhs = pi / 2 * m.value - 0.5 * ((constants::euler_gamma<double> - std::log(2 * pi)) * z1 + dz1);
  r.budgets.add(m.budgets, pi / 2);
  r.note("terms_used", m.direct_terms);
  r.note("expansion_terms", m.expansion_terms);
  if (m.leading_terms.size() >= 8)
    r.note("term8_over_term1", std::abs(m.leading_terms[7]) / std::abs(m.leading_terms[0]));
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-6;
  detail::finalize(r);
  return r;
}

inline VerificationReport verify_hurwitz_theorem(const IdentityParams& p) {
  if (!(std::abs(p.z.real()) < 0.5)) fail(ErrorCode::domain, "|Re z| < 1/2 required");
  if (p.z == cd(0)) fail(ErrorCode::pole, "the residual terms have a pole at z = 0; use hurwitz-corollary-z0");
  detail::check_not_near_zero(p.z);
  detail::check_alpha(p.alpha);
  VerificationReport r;
  r.identity_id = "hurwitz-theorem";
  r.params = {detail::complex_param("z", p.z), detail::real_param("alpha", p.alpha), detail::int_param("terms", p.terms)};
  const cd z = p.z, zh = z / 2.0;
  auto pair = pair_k_bessel(p.alpha);
  auto f = [&](double t) -> cd { return detail::hurwitz_weight(t, z) * pair.Z_closed(cd(0.5, t / 2), zh); };
  auto amp = [&](double t) { return std::abs(detail::hurwitz_weight(t, z)) / (2 * std::sqrt(p.alpha)); };
  auto q = detail::xi_integral(f, amp, pi / 2, 40, p.spec);
  cd pre = detail::cpow(pi, (z - 3.0) / 2.0);
  r.lhs = pre * q.value;
  r.budgets.add(q, std::abs(pre));
  auto m = detail::moment_sum(detail::k_pair_theta_input(p.alpha, z), z, p.terms, p.adaptive, p.spec);
  cd sum_pre = detail::cpow(pi, z + 0.5) * gamma((z + 3.0) / 2.0);
  cd res = detail::cpow(2, -1.0 - z) * gamma(1.0 + z) * zeta_one_plus(z) * pair.Z_closed(1.0 + zh, zh) +
           detail::cpow(2, -z) * gamma(z) * riemann_zeta(z) * pair.Z_closed(1.0 - zh, zh);
  r.rhs = sum_pre * m.value - res;
  r.budgets.add(m.budgets, std::abs(sum_pre));
  r.note("terms_used", m.direct_terms);
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-6;
  detail::finalize(r);
  return r;
}

inline VerificationReport verify_hurwitz_modular(const IdentityParams& p) {
  detail::check_re_z(p.z, 1);
  if (p.z.real() == 0) fail(ErrorCode::domain, "0 < |Re z| < 1 required");
  detail::check_not_near_zero(p.z);
  detail::check_alpha(p.alpha);
  VerificationReport r;
  r.identity_id = "hurwitz-modular";
  r.params = {detail::complex_param("z", p.z), detail::real_param("alpha", p.alpha), detail::int_param("terms", p.terms)};
  auto fa = hurwitz_script_f(p.alpha, p.z, p.terms, p.adaptive);
  auto fb = hurwitz_script_f(1 / p.alpha, p.z, p.terms, p.adaptive);
  r.lhs = fa.value;
  r.rhs = fb.value;
  r.budgets.truncation = fa.truncation_bound + fb.truncation_bound;
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-8;
  detail::finalize(r);
  return r;
}

inline VerificationReport verify_bessel_hurwitz(const IdentityParams& p) {
  if (!(p.z.real() > 0 && p.z.real() < 1)) fail(ErrorCode::domain, "0 < Re z < 1 required");
  detail::check_alpha(p.alpha);
  VerificationReport r;
  r.identity_id = "bessel-hurwitz";
  r.params = {detail::complex_param("z", p.z), detail::real_param("alpha", p.alpha), detail::int_param("terms", p.terms)};
  const cd z = p.z, nu = z / 2.0;
  const double alpha = p.alpha;
  detail::MomentSumInput in;
  in.f = [alpha, nu](double x) { return bessel_k(nu, cd(2 * alpha * x)); };
  in.decay = quad::DecayModel::exponential(2, 2 * alpha, 1 / (2 * alpha));
  in.mellin = [alpha, nu](cd s) {
    return detail::cpow(alpha, -s) / 4.0 * gamma((s - nu) / 2.0) * gamma((s + nu) / 2.0);
  };
  in.kappa = 2 * alpha;
  auto m = detail::moment_sum(in, z, p.terms, p.adaptive, p.spec);
  cd pre = detail::cpow(pi, z + 0.5) * gamma((z + 3.0) / 2.0);
  r.lhs = pre * m.value;
  r.budgets.add(m.budgets, std::abs(pre));
  auto s = lambda_sum(alpha, z, p.terms);
  cd rpre = detail::cpow(alpha, nu) * gamma(z + 1.0) / detail::cpow(2, z + 2.0);
  r.rhs = rpre * s.value;
  r.budgets.truncation += std::abs(rpre) * s.truncation_bound;
  r.note("terms_used", m.direct_terms);
  if (m.leading_terms.size() >= 4)
    r.note("term4_over_term1", std::abs(m.leading_terms[3]) / std::abs(m.leading_terms[0]));
  r.remarks.push_back("last-line lambda uses (m alpha)^{-z-1}/2; the (m alpha)^{-z}/2 reading makes the sum diverge");
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-5;
  detail::finalize(r);
  return r;
}

inline VerificationReport verify_mellin_k(const IdentityParams& p) {
  if (!(p.q > 0)) fail(ErrorCode::domain, "q > 0 required");
  if (!(p.s.real() > std::abs(p.nu.real()))) fail(ErrorCode::domain, "Re s > |Re nu| required");
  VerificationReport r;
  r.identity_id = "mellin-k";
  r.params = {detail::complex_param("s", p.s), detail::complex_param("nu", p.nu), detail::real_param("q", p.q)};
  const cd nu = p.nu;
  const double q = p.q;
  auto decay = quad::DecayModel::exponential(3, q, std::max(1.0, std::norm(nu)) / q);
  auto m = mellin_numeric([&](double x) { return bessel_k(nu, cd(q * x)); }, decay, p.s, p.spec);
  r.lhs = m.value;
  r.budgets.add(m);
  r.rhs = detail::cpow(2, p.s - 2.0) * detail::cpow(q, -p.s) * gamma((p.s - nu) / 2.0) * gamma((p.s + nu) / 2.0);
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-9;
  detail::finalize(r);
  return r;
}

inline VerificationReport verify_laplace_bessel(const IdentityParams& p) {
  if (!(p.z.real() > -1)) fail(ErrorCode::domain, "Re z > -1 required");
  if (!(p.alpha > 0) || !(p.y > 0)) fail(ErrorCode::domain, "alpha > 0 and y > 0 required");
  VerificationReport r;
  r.identity_id = "laplace-bessel";
  r.params = {detail::complex_param("z", p.z), detail::real_param("alpha", p.alpha), detail::real_param("y", p.y)};
  const cd z = p.z;
  const double a = p.alpha, y = p.y;
  auto h = [&](double x) -> cd {
    if (x <= 0) return {};
    return std::exp(-2 * pi * a * x) * detail::cpow(x, z / 2.0) * bessel_j(z, 4 * pi * std::sqrt(x * y));
  };
  double onset = std::max(1.0, 1 / (4 * pi * pi * y));
  auto decay = quad::DecayModel::exponential(detail::j_bound(z, 4 * pi * std::sqrt(onset * y)), 2 * pi * a, onset,
                                             std::max(0.0, z.real() / 2));
  auto sub = p.spec.with_abs(p.spec.abs_tol / 2);
  auto q = quad::integrate_finite(h, 0.0, 1.0, sub, quad::Singular::left);
  q += quad::integrate_semi_infinite(h, 1.0, decay, sub);
  r.lhs = q.value;
  r.budgets.add(q);
  r.rhs = std::exp(-2 * pi * y / a) * detail::cpow(y, z / 2.0) / (2 * pi * detail::cpow(a, z + 1.0));
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-9;
  detail::finalize(r);
  return r;
}

// Omega is its own J_z transform once its leading power is removed.
inline VerificationReport verify_selfomega(const IdentityParams& p) {
  detail::check_re_z(p.z, 1);
  detail::check_not_near_zero(p.z);
  if (!(p.x > 0)) fail(ErrorCode::domain, "x > 0 required");
  VerificationReport r;
  r.identity_id = "selfomega";
  r.params = {detail::complex_param("z", p.z), detail::real_param("x", p.x)};
  const cd z = p.z;
  const double x = p.x, b = 4 * pi * std::sqrt(x);
  constexpr int m_sub = 4;
  OmegaEvaluator om(z);
  const cd c = riemann_zeta(z) / (2 * pi);
  // Omega(y) - c y^{z/2-1} (1+y)^{-M}
  auto g = [&](double y) -> cd {
    cd yp = detail::cpow(y, z / 2.0 - 1.0);
    if (y < OmegaEvaluator::auto_switch) {
      double keep = -std::expm1(-m_sub * std::log1p(y));  // 1 - (1+y)^{-M}
      return om.subtracted(y, OmegaMode::partial_fraction).value + c * yp * keep;
    }
    return om.definition(y).value - c * yp * std::pow(1 + y, -m_sub);
  };
  auto h = [&](double y) -> cd {
    if (y <= 0) return {};
    return bessel_j(z, b * std::sqrt(y)) * g(y);
  };
  // tail envelope C y^{Re z/2 - 1 - M - 1/4}
  const double onset = std::max(1.0, 4 / (b * b));
  const double p_exp = m_sub + 1.25 - z.real() / 2;
  double omega_amp = 0;
  for (int k = 0; k <= 40; ++k) {
    double y = onset * std::pow(10.0, k / 10.0);
    omega_amp = std::max(omega_amp, om.envelope(y) * std::pow(y, 1 + m_sub - z.real() / 2));
  }
  double cj = detail::j_bound(z, b * std::sqrt(onset)) * std::pow(onset, 0.25);
  auto decay = quad::DecayModel::algebraic(cj * (std::abs(c) + omega_amp), p_exp, onset);
  auto sp = detail::omega_spec(p.spec);
  auto sub = sp.with_abs(sp.abs_tol / 2);
  auto q = quad::integrate_finite(h, 0.0, 1.0, sub, quad::Singular::left);
  q += quad::integrate_semi_infinite(h, 1.0, decay, sub);
  // the removed pieces integrate in closed form:
  // int J_z(b sqrt y) y^{z/2} (1+y)^{-k-1} dy = 2 b^k K_{z-k}(b) / (2^k k!)
  cd closed{};
  double fact = 1;
  for (int k = 0; k < m_sub; ++k) {
    if (k > 0) fact *= k;
    closed += 2.0 * std::pow(b / 2, k) / fact * bessel_k(z - double(k), cd(b));
  }
  r.lhs = q.value - c * closed;
  r.budgets.add(q);
  auto rv = om.subtracted(x);
  r.rhs = rv.value / (2 * pi);
  r.budgets.truncation += rv.tail_bound / (2 * pi);
  r.note("cutoff_tail", q.truncation_bound);
  r.note("subtraction_order", m_sub);
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-6;
  detail::finalize(r);
  return r;
}

inline VerificationReport verify_genelkosh(const IdentityParams& p) {
  detail::check_re_z(p.z, 1);
  detail::check_not_near_zero(p.z);
  detail::check_alpha(p.alpha);
  VerificationReport r;
  r.identity_id = "genelkosh";
  r.params = {detail::complex_param("z", p.z), detail::real_param("alpha", p.alpha)};
  OmegaEvaluator om(p.z);
  const double beta = 1 / p.alpha;
  auto ga = detail::omega_laplace(om, p.alpha, p.spec);
  auto gb = detail::omega_laplace(om, beta, p.spec);
  cd pa = detail::cpow(p.alpha, (p.z + 1.0) / 2.0), pb = detail::cpow(beta, (p.z + 1.0) / 2.0);
  r.lhs = pa * ga.value;
  r.rhs = pb * gb.value;
  r.budgets.add(ga, std::abs(pa));
  r.budgets.add(gb, std::abs(pb));
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-6;
  detail::finalize(r);
  return r;
}

inline VerificationReport verify_equi(const IdentityParams& p) {
  if (!(p.z.real() > 0 && p.z.real() < 1)) fail(ErrorCode::domain, "0 < Re z < 1 required");
  detail::check_alpha(p.alpha);
  VerificationReport r;
  r.identity_id = "equi";
  r.params = {detail::complex_param("z", p.z), detail::real_param("alpha", p.alpha), detail::int_param("terms", p.terms)};
  const cd z = p.z;
  OmegaEvaluator om(z);
  auto g = detail::omega_laplace(om, p.alpha, p.spec);
  r.lhs = g.value;
  r.budgets.add(g);
  auto s = lambda_sum(p.alpha, z, p.terms);
  cd corr = zeta_one_plus(z) / (2.0 * detail::cpow(p.alpha, z + 1.0)) + riemann_zeta(z) / (p.alpha * z);
  cd pre = gamma(z + 1.0) / detail::cpow(2 * pi, z + 1.0);
  r.rhs = pre * (s.value - corr);
  r.budgets.truncation += std::abs(pre) * s.truncation_bound;
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-6;
  detail::finalize(r);
  return r;
}

inline VerificationReport verify_omega_modes(const IdentityParams& p) {
  detail::check_re_z(p.z, 1);
  detail::check_not_near_zero(p.z);
  if (!(p.x > 0)) fail(ErrorCode::domain, "x > 0 required");
  VerificationReport r;
  r.identity_id = "omega-modes";
  r.params = {detail::complex_param("z", p.z), detail::real_param("x", p.x)};
  OmegaEvaluator om(p.z);
  auto d = om.definition(p.x);
  auto f = om.partial_fraction(p.x);
  r.lhs = d.value;
  r.rhs = f.value;
  // both sums cancel down from terms of size envelope(x); count that rounding too
  double rounding = 16 * std::numeric_limits<double>::epsilon() * om.envelope(p.x);
  r.budgets.truncation = d.tail_bound + f.tail_bound + rounding;
  r.note("rounding_estimate", rounding);
  r.note("definition_terms", d.terms);
  r.note("partial_fraction_terms", f.terms);
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-8;
  detail::finalize(r);
  return r;
}

inline VerificationReport verify_koshliakov_self(const IdentityParams& p) {
  detail::check_re_z(p.z, 0.5);
  if (!(p.x > 0)) fail(ErrorCode::domain, "x > 0 required");
  VerificationReport r;
  r.identity_id = "koshliakov-self";
  r.params = {detail::complex_param("z", p.z), detail::real_param("x", p.x)};
  const cd z = p.z;
  TransformInput in{[z](double t) { return bessel_k(z, cd(t)); }, quad::DecayModel::exponential(2, 1, 1), true};
  auto q = first_koshliakov_transform(in, z, p.x, p.spec);
  r.lhs = q.value;
  r.budgets.add(q);
  r.rhs = bessel_k(z, cd(p.x));
  r.tolerance = p.tolerance > 0 ? p.tolerance : 1e-6;
  detail::finalize(r);
  return r;
}

inline ReciprocalPair pair_by_name(const std::string& name, double alpha) {
  if (name == "k-bessel") return pair_k_bessel(alpha);
  if (name == "dixon-ferrar") return pair_dixon_ferrar();
  fail(ErrorCode::domain, "unknown pair '" + name + "' (expected k-bessel or dixon-ferrar)");
}

// phi(x) = 2 (transform of psi)(4x), and the same with phi and psi swapped.
inline VerificationReport verify_pair_reciprocity(const IdentityParams& p) {
  if (!(p.x > 0)) fail(ErrorCode::domain, "x > 0 required");
  const bool df = p.pair == "dixon-ferrar";
  if (!df) detail::check_alpha(p.alpha);
  auto pair = pair_by_name(p.pair, p.alpha);
  pair.check_z(p.z);
  VerificationReport r;
  r.identity_id = "pair-reciprocity";
  r.params = {detail::text_param("pair", p.pair), detail::complex_param("z", p.z), detail::real_param("x", p.x)};
  if (!df) r.params.push_back(detail::real_param("alpha", p.alpha));
  const cd z = p.z;
  quad::QuadratureSpec spec = p.spec;
  if (df) {
    // psi decays only like t^{-2}; the cutoff is pushed far out
    spec.abs_tol = std::max(spec.abs_tol, 1e-10);
    spec.rel_tol = std::max(spec.rel_tol, 1e-10);
    spec.max_panels = std::max(spec.max_panels, 20000);
  }
  TransformInput from_psi{[&](double t) { return pair.psi(t, z); }, pair.psi_decay(z), true};
  TransformInput from_phi{[&](double t) { return pair.phi(t, z); }, pair.phi_decay(z), true};
  auto q = first_koshliakov_transform(from_psi, z, 4 * p.x, spec);
  r.lhs = pair.phi(p.x, z);
  r.rhs = 2.0 * q.value;
  r.budgets.add(q, 2);
  auto mq = first_koshliakov_transform(from_phi, z, 4 * p.x, spec);
  cd psi_x = pair.psi(p.x, z);
  double mirrored = std::abs(psi_x - 2.0 * mq.value) / std::abs(psi_x);
  r.note("mirrored_rel_diff", mirrored);
  r.tolerance = p.tolerance > 0 ? p.tolerance : (df ? 1e-4 : 1e-6);
  detail::finalize(r);
  if (!(mirrored <= r.tolerance)) {
    r.pass = false;
    r.remarks.push_back("mirrored check psi = 2 T(phi)(4x) failed");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Registry

struct IdentityInfo {
  std::string id;
  std::string description;
  std::vector<std::string> params;  // accepted CLI parameters
  double default_tolerance;
  bool alpha_sweepable;
  std::function<VerificationReport(const IdentityParams&)> run;
};

inline const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> reg = {
      {"rg-corollary", "Xi-integral corollary of the Ramanujan-Guinand formula (z = 0 routes to rg-corollary-z0)",
       {"z", "alpha", "terms"}, 1e-8, true, verify_rg_corollary},
      {"rg-corollary-z0", "z = 0 limit of the Ramanujan-Guinand Xi-integral corollary (K-Bessel pair)",
       {"alpha", "terms"}, 1e-8, true, verify_rg_corollary_z0},
      {"rg-formula", "Ramanujan-Guinand formula as F(alpha, z) = F(1/alpha, z)", {"z", "alpha", "terms"}, 1e-8, true,
       verify_rg_formula},
      {"rg-theorem", "Ramanujan-Guinand Xi-integral identity with Z((1+it)/2, z/2), K-Bessel pair",
       {"z", "alpha", "terms"}, 1e-8, true, verify_rg_theorem},
      {"hurwitz-corollary", "Gamma-weighted Xi-integral equal to the Hurwitz-zeta lambda series",
       {"z", "alpha", "terms"}, 1e-6, true, verify_hurwitz_corollary},
      {"hurwitz-corollary-z0", "z = 0 limit of the Gamma-weighted Xi-integral (K-Bessel pair)", {"alpha", "terms"},
       1e-6, true, verify_hurwitz_corollary_z0},
      {"hurwitz-theorem", "Gamma-weighted Xi-integral with Z((1+it)/2, z/2), K-Bessel pair", {"z", "alpha", "terms"},
       1e-6, true, verify_hurwitz_theorem},
      {"hurwitz-modular", "lambda-series function F(alpha) = F(1/alpha)", {"z", "alpha", "terms"}, 1e-8, true,
       verify_hurwitz_modular},
      {"bessel-hurwitz", "divisor sum of K-Bessel integrals equal to a lambda series", {"z", "alpha", "terms"}, 1e-5,
       true, verify_bessel_hurwitz},
      {"mellin-k", "Mellin transform of K_nu(q x)", {"s", "nu", "q"}, 1e-9, false, verify_mellin_k},
      {"laplace-bessel", "Laplace transform of x^{z/2} J_z(4 pi sqrt(x y))", {"z", "alpha", "y"}, 1e-9, true,
       verify_laplace_bessel},
      {"selfomega", "Omega minus its leading power is self-reciprocal under J_z", {"z", "x"}, 1e-6, false,
       verify_selfomega},
      {"genelkosh", "Laplace transform of subtracted Omega, alpha -> 1/alpha symmetry", {"z", "alpha"}, 1e-6, true,
       verify_genelkosh},
      {"equi", "Laplace transform of subtracted Omega equal to a lambda series", {"z", "alpha", "terms"}, 1e-6, true,
       verify_equi},
      {"omega-modes", "Omega from its K-Bessel series against its partial-fraction form", {"z", "x"}, 1e-8, false,
       verify_omega_modes},
      {"koshliakov-self", "K_z is self-reciprocal under the Koshliakov kernel", {"z", "x"}, 1e-6, false,
       verify_koshliakov_self},
      {"pair-reciprocity", "reciprocal pair relation in both directions (k-bessel or dixon-ferrar)",
       {"pair", "z", "alpha", "x"}, 1e-6, true, verify_pair_reciprocity},
  };
  return reg;
}

inline const IdentityInfo* find_identity(const std::string& id) {
  for (const auto& i : identity_registry())
    if (i.id == id) return &i;
  return nullptr;
}

}  // namespace koshliakov
