#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "koshliakov/quad.hpp"
#include "koshliakov/specfun.hpp"

using namespace koshliakov;
using namespace koshliakov::quad;

namespace {
const double pi = constants::pi<double>;

struct Case {
  const char* name;
  std::function<double(double)> f;
  double a, b;  // b = inf for semi-infinite
  Singular sing;
  DecayModel decay;
  double exact;
};

std::vector<Case> suite() {
  const double inf = INFINITY;
  auto ex = [](double C, double l, double T0 = 0, double c = 0) { return DecayModel::exponential(C, l, T0, c); };
  return {
      {"sqrt singularity", [](double x) { return 1 / std::sqrt(x); }, 0, 1, Singular::left, {}, 2},
      {"sin", [](double x) { return std::sin(x); }, 0, pi, Singular::none, {}, 2},
      {"log singularity", [](double x) { return -std::log(x); }, 0, 1, Singular::left, {}, 1},
      {"x^-0.9", [](double x) { return std::pow(x, -0.9); }, 0, 1, Singular::left, {}, 10},
      {"both ends", [](double x) { return std::log(x) * std::log1p(-x); }, 0, 1, Singular::both, {}, 2 - pi * pi / 6},
      {"right end", [](double x) { return -std::log(2 - x); }, 0, 2, Singular::right, {}, 2 - 2 * std::log(2.0)},
      {"gaussian", [](double x) { return std::exp(-x * x); }, -6, 6, Singular::none, {}, std::sqrt(pi) * std::erf(6.0)},
      {"oscill poly", [](double x) { return x * x * std::cos(20 * x); }, 0, 1, Singular::none, {},
       (2 * 20 * std::cos(20.0) + (400 - 2) * std::sin(20.0)) / 8000},
      {"runge", [](double x) { return 1 / (1 + 25 * x * x); }, -1, 1, Singular::none, {}, 2 * std::atan(5.0) / 5},
      {"exp", [](double x) { return std::exp(x); }, 0, 3, Singular::none, {}, std::exp(3.0) - 1},
      {"e^-x", [](double x) { return std::exp(-x); }, 0, inf, Singular::none, ex(1, 1), 1},
      {"x e^-x^2", [](double x) { return x * std::exp(-x * x); }, 0, inf, Singular::none, ex(1, 1, 1, 1), 0.5},
      {"e^-x cos 3x", [](double x) { return std::exp(-x) * std::cos(3 * x); }, 0, inf, Singular::none, ex(1, 1), 0.1},
      {"e^-x cos 10x", [](double x) { return std::exp(-x) * std::cos(10 * x); }, 0, inf, Singular::none, ex(1, 1),
       1.0 / 101},
      {"e^-2x sin 7x", [](double x) { return std::exp(-2 * x) * std::sin(7 * x); }, 0, inf, Singular::none, ex(1, 2),
       7.0 / 53},
      {"x^-1/2 e^-x", [](double x) { return std::exp(-x) / std::sqrt(x); }, 0, inf, Singular::left, ex(1, 1, 1),
       std::sqrt(pi)},
      {"1/(1+x^2)", [](double x) { return 1 / (1 + x * x); }, 0, inf, Singular::none, DecayModel::algebraic(1, 2, 1),
       pi / 2},
      {"x K0(x)", [](double x) { return x * bessel_k(std::complex<double>(0), std::complex<double>(x)).real(); }, 0,
       inf, Singular::left, ex(1.3, 1, 1, 0.5), 1},
      {"x^3 e^-x", [](double x) { return x * x * x * std::exp(-x); }, 0, inf, Singular::none, ex(1, 1, 1, 3), 6},
      {"log x e^-x", [](double x) { return std::log(x) * std::exp(-x); }, 0, inf, Singular::left, ex(1, 1, 3, 1),
       -constants::euler_gamma<double>},
  };
}

QuadratureResult<double> run(const Case& c, const QuadratureSpec& spec) {
  if (std::isinf(c.b)) return integrate_semi_infinite(c.f, c.a, c.decay, spec, c.sing);
  return integrate_finite(c.f, c.a, c.b, spec, c.sing);
}
}  // namespace

TEST(Quadrature, ClosedFormSuiteMeetsTolerance) {
  QuadratureSpec spec{1e-10, 1e-10};
  auto cases = suite();
  ASSERT_EQ(cases.size(), 20u);
  int conservative = 0;
  for (const auto& c : cases) {
    auto r = run(c, spec);
    double err = std::abs(r.value.real() - c.exact);
    EXPECT_LE(err, std::max(spec.abs_tol, spec.rel_tol * std::abs(c.exact))) << c.name;
    EXPECT_GE(r.err_estimate, 0) << c.name;
    EXPECT_GE(r.truncation_bound, 0) << c.name;
    EXPECT_GT(r.nodes_used, 0) << c.name;
    if (err <= 3 * r.total_error() + 1e-15) ++conservative;
  }
  EXPECT_GE(conservative, 19) << "error estimates should bound the true error in at least 95% of cases";
}

TEST(Quadrature, TighterTolerancesStillConverge) {
  QuadratureSpec spec{1e-14, 1e-14};
  for (const auto& c : suite()) {
    auto r = run(c, spec);
    EXPECT_LE(std::abs(r.value.real() - c.exact), 1e-12 * std::max(1.0, std::abs(c.exact))) << c.name;
  }
}

TEST(Quadrature, ComplexIntegrand) {
  auto f = [](double x) { return std::exp(std::complex<double>(-1, 2) * x); };
  auto r = integrate_semi_infinite(f, 0.0, DecayModel::exponential(1, 1), QuadratureSpec{1e-13, 1e-13});
  std::complex<double> want = 1.0 / std::complex<double>(1, -2);
  EXPECT_LE(std::abs(r.value - want), 1e-12);
}

TEST(Quadrature, NonConvergenceIsReported) {
  QuadratureSpec spec{1e-14, 1e-14, 8};
  auto f = [](double x) { return std::sin(1 / x); };
  try {
    integrate_finite(f, 1e-4, 1.0, spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_convergence);
  }
}

TEST(Quadrature, DecayModelValidation) {
  auto f = [](double x) { return 1 / x; };
  try {
    integrate_semi_infinite(f, 1.0, DecayModel::algebraic(1, 1), QuadratureSpec{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::decay);
  }
  EXPECT_THROW((QuadratureSpec{0, 1e-3}).validate(), Error);
  EXPECT_THROW((QuadratureSpec{1e-3, 1e-3, 4}).validate(), Error);
}

TEST(Quadrature, CutoffMeetsTailBudget) {
  auto d = DecayModel::exponential(2, 0.5, 1, 2);
  double T = d.cutoff_for(1e-12);
  EXPECT_LE(d.tail_bound(T), 1e-12);
  EXPECT_GT(d.tail_bound(T * 0.95), 1e-12);
  auto p = DecayModel::algebraic(3, 2.5, 1);
  EXPECT_NEAR(p.tail_bound(p.cutoff_for(1e-6)), 1e-6, 1e-9);
}

TEST(Quadrature, ExplicitCutoff) {
  QuadratureSpec spec{1e-10, 1e-10};
  spec.cutoff = 50;
  auto r = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, DecayModel::exponential(1, 1), spec);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-10);
  EXPECT_NEAR(r.truncation_bound, std::exp(-50.0), 1e-25);
}

TEST(Quadrature, LongDoubleInstantiation) {
  auto f = [](long double x) { return std::exp(-x * x); };
  auto r = integrate_finite(f, -8.0L, 8.0L, QuadratureSpec{1e-18, 1e-18});
  EXPECT_NEAR(double(r.value.real() - std::sqrt(constants::pi<long double>)), 0.0, 1e-17);
}
