#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "koshliakov/koshliakov.hpp"
#include "test_support.hpp"

using namespace koshliakov;
using testing_support::rel_err;

namespace {

// identity,params,side -> value from the mpmath oracle file
std::map<std::string, cd> oracle() {
  std::map<std::string, cd> m;
  for (const auto& r : testing_support::read_csv(testing_support::data_path("identity_oracle.csv")))
    m[r[0] + "|" + r[1] + "|" + r[2]] = cd(std::stod(r[3]), std::stod(r[4]));
  return m;
}

quad::QuadratureSpec tight() { return {1e-13, 1e-12}; }

TransformInput k_input(cd z) {
  return {[z](double t) { return bessel_k(z, cd(t)); }, quad::DecayModel::exponential(2, 1, 1), true};
}

}  // namespace

TEST(KernelM, Values) {
  double k0 = 0.42102443824070833334, y0 = 0.088256964215676957983;
  EXPECT_LE(rel_err(kernel_m(cd(0), 1.0), 2 / pi * k0 - y0), 1e-13);
  double half = 2 / pi * std::sqrt(pi / 2) * std::exp(-1.0) + std::sqrt(2 / pi) * std::cos(1.0);
  EXPECT_LE(rel_err(kernel_m(cd(0.5), 1.0), half), 1e-13);
}

TEST(KernelM, NotEvenInOrderAwayFromZero) {
  // K is even in the order, Y is not, so only z = 0 is a symmetric point
  EXPECT_EQ(kernel_m(cd(0), 2.0), kernel_m(-cd(0), 2.0));
  EXPECT_GT(std::abs(kernel_m(cd(0.3), 2.0) - kernel_m(cd(-0.3), 2.0)), 1e-3);
}

TEST(KoshliakovKernel, SpecialOrders) {
  for (double x : {0.3, 1.0, 5.0}) {
    EXPECT_LE(rel_err(koshliakov_kernel(cd(0), x), kernel_m(cd(0), 4 * std::sqrt(x))), 1e-15);
    EXPECT_LE(rel_err(koshliakov_kernel(cd(1), x), -bessel_j(cd(1), 4 * std::sqrt(x))), 1e-14);
  }
  double c = std::cos(pi / 4);
  cd want = c * kernel_m(cd(0.5), 4.0) - c * bessel_j(cd(0.5), 4.0);
  EXPECT_LE(rel_err(koshliakov_kernel(cd(0.5), 1.0), want), 1e-14);
  EXPECT_THROW(koshliakov_kernel(cd(0), 0.0), Error);
}

TEST(FirstTransform, KBesselIsSelfReciprocal) {
  for (double z : {0.0, 0.25, -0.4}) {
    for (double x : {0.5, 1.0, 2.0, 4.0}) {
      auto r = first_koshliakov_transform(k_input(cd(z)), cd(z), x, tight());
      cd want = bessel_k(cd(z), cd(x));
      EXPECT_LE(rel_err(r.value, want), 1e-6) << "z=" << z << " x=" << x;
      EXPECT_LE(rel_err(r.value, want), 1e-10) << "z=" << z << " x=" << x;
    }
  }
}

TEST(FirstTransform, ComplexOrder) {
  cd z(0.1, 0.3);
  auto r = first_koshliakov_transform(k_input(z), z, 1.5, tight());
  EXPECT_LE(rel_err(r.value, bessel_k(z, cd(1.5))), 1e-9);
}

TEST(FirstTransform, ScaledPartnerGivesHalfPhiAtQuarterArgument) {
  // transform of t -> beta K_z(2 beta t) at x equals phi(x/4)/2 = K_z(alpha x / 2)/2
  double alpha = 2, beta = 0.5;
  auto pair = pair_k_bessel(alpha);
  TransformInput in{[&](double t) { return pair.psi(t, cd(0)); }, pair.psi_decay(cd(0)), true};
  auto r = first_koshliakov_transform(in, cd(0), 1.0, tight());
  EXPECT_LE(rel_err(r.value, 0.5 * pair.phi(0.25, cd(0))), 1e-10);
  (void)beta;
}

TEST(FirstTransform, RejectsOutsideStrip) {
  try {
    first_koshliakov_transform(k_input(cd(0.6)), cd(0.6), 1.0, tight());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::domain);
  }
}

TEST(KBesselPair, ClosedZIsSymmetric) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3, 3), a(0.2, 5);
  for (int i = 0; i < 50; ++i) {
    auto p = pair_k_bessel(a(rng));
    cd s(u(rng), u(rng)), z(u(rng) / 4, u(rng) / 4);
    EXPECT_LE(rel_err(p.Z_closed(s, z), p.Z_closed(1.0 - s, z)), 1e-12);
  }
}

TEST(KBesselPair, ClosedZSpecialValues) {
  auto one = pair_k_bessel(1);
  EXPECT_LE(rel_err(one.Z_closed(cd(0.3, 2), cd(0.1)), 0.5), 1e-15);
  auto two = pair_k_bessel(2);
  EXPECT_LE(rel_err(two.Z_closed(cd(0.3), cd(0)), two.Z_closed(cd(0.7), cd(0))), 1e-15);
  for (double t : {0.0, 1.0, 7.5}) {
    cd want = std::cos(0.5 * t * std::log(2.0)) / (2 * std::sqrt(2.0));
    EXPECT_LE(rel_err(two.Z_closed(cd(0.5, t / 2), cd(0.15)), want), 1e-14);
  }
  // derivative against a central difference
  cd s(0.4, 0.3);
  double h = 1e-5;
  cd fd = (two.Z_closed(s + h, cd(0)) - two.Z_closed(s - h, cd(0))) / (2 * h);
  EXPECT_LE(rel_err(two.dZ_closed(s, cd(0)), fd), 1e-9);
  EXPECT_THROW(pair_k_bessel(0), Error);
  EXPECT_THROW(pair_k_bessel(-1), Error);
}

TEST(KBesselPair, NumericZMatchesClosedAndIsSymmetric) {
  auto p = pair_k_bessel(2);
  // pair order 0.15: s = 0.3 and 0.7 both lie inside Re s > |Re z|
  cd z(0.15);
  for (cd s : {cd(0.3), cd(0.5, 2)}) {
    auto a = pair_Z_numeric(p, s, z, tight());
    auto b = pair_Z_numeric(p, 1.0 - s, z, tight());
    EXPECT_LE(rel_err(a.value, b.value), 1e-8) << s;
    EXPECT_LE(rel_err(a.value, p.Z_closed(s, z)), 1e-8) << s;
  }
  auto c = pair_Z_numeric(p, cd(0.5), cd(0.3), tight());
  EXPECT_LE(rel_err(c.value, 2 * std::pow(2.0, -0.5) / 4), 1e-9);
  auto one = pair_Z_numeric(pair_k_bessel(1), cd(0.8, -1), cd(0.1), tight());
  EXPECT_LE(rel_err(one.value, 0.5), 1e-9);
}

TEST(KBesselPair, NumericZRejectsStripBoundary) {
  auto p = pair_k_bessel(2);
  try {
    pair_Z_numeric(p, cd(0.3), cd(0.3), tight());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::domain);
  }
}

TEST(Mellin, KBesselClosedForm) {
  auto m = oracle();
  cd s(1.2, 0.7);
  double nu = 0.3;
  auto r = mellin_numeric([&](double x) { return bessel_k(cd(nu), cd(x)); }, quad::DecayModel::exponential(2, 1, 1), s,
                          tight());
  EXPECT_LE(rel_err(r.value, m.at("mellin-k|s=1.2+0.7i;nu=0.3;q=1|rhs")), 1e-10);
  for (double q : {0.5, 4.0}) {
    cd closed = std::pow(2.0, s - 2.0) * std::pow(q, -s) * gamma((s - nu) / 2.0) * gamma((s + nu) / 2.0);
    auto rq = mellin_numeric([&](double x) { return bessel_k(cd(nu), cd(q * x)); },
                             quad::DecayModel::exponential(2, q, 1 / q), s, tight());
    EXPECT_LE(rel_err(rq.value, closed), 1e-10) << q;
  }
}

TEST(Theta, KBesselPair) {
  auto one = pair_k_bessel(1);
  for (double x : {0.2, 1.0, 3.0})
    EXPECT_LE(rel_err(theta_eval(one, x, cd(0.3)), 2.0 * bessel_k(cd(0.3), cd(2 * x))), 1e-15);
  auto two = pair_k_bessel(2);
  cd want = bessel_k(cd(0), cd(4 * pi)) + 0.5 * bessel_k(cd(0), cd(pi));
  EXPECT_LE(rel_err(theta_eval(two, pi, cd(0)), want), 1e-15);
  EXPECT_LT(theta_eval(two, 10, cd(0)).real(), theta_eval(two, 1, cd(0)).real());
}

TEST(Theta, PositiveForRealParameters) {
  for (double alpha : {0.3, 1.0, 2.5})
    for (double z : {-0.9, -0.3, 0.0, 0.5, 0.9})
      for (double x : {0.01, 0.5, 2.0, 10.0, 40.0}) {
        cd th = theta_eval(pair_k_bessel(alpha), x, cd(z));
        EXPECT_GT(th.real(), 0);
        EXPECT_EQ(th.imag(), 0);
      }
}

TEST(Theta, DomainChecks) {
  EXPECT_THROW(theta_eval(pair_k_bessel(1), 1, cd(1.2)), Error);
  EXPECT_THROW(theta_eval(pair_dixon_ferrar(), 1, cd(0.1)), Error);
  EXPECT_THROW(theta_eval(pair_k_bessel(1), 0, cd(0)), Error);
}

TEST(DixonFerrar, Values) {
  auto m = oracle();
  auto p = pair_dixon_ferrar();
  EXPECT_LE(rel_err(p.phi(1, cd(0)), std::exp(-1.0)), 1e-15);
  EXPECT_LE(rel_err(p.psi(1, cd(0)), m.at("dixon-ferrar|x=1|psi")), 1e-13);
  // direct li form where nothing overflows
  double x = 0.7;
  double direct = -2 / pi * (std::exp(4 * x) * exp_integral_li(std::exp(-4 * x)) +
                             std::exp(-4 * x) * exp_integral_li(std::exp(4 * x)));
  EXPECT_LE(rel_err(p.psi(x, cd(0)), direct), 1e-13);
  // large x: no overflow, and psi ~ -1/(4 pi x^2)
  double big = 300;
  EXPECT_LE(rel_err(p.psi(big, cd(0)), -1 / (4 * pi * big * big)), 1e-4);
  EXPECT_FALSE(p.has_closed_Z());
  EXPECT_THROW(p.psi(1, cd(0.2)), Error);
}

TEST(DixonFerrar, ReciprocityAtZeroOrder) {
  auto p = pair_dixon_ferrar();
  TransformInput in{[&](double t) { return p.psi(t, cd(0)); }, p.psi_decay(cd(0)), true};
  for (double x : {0.5, 1.0}) {
    auto r = first_koshliakov_transform(in, cd(0), 4 * x, {1e-10, 1e-10, 20000});
    EXPECT_LE(rel_err(2.0 * r.value, p.phi(x, cd(0))), 1e-4) << x;
  }
}

TEST(Omega, CrossModeAgreement) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ux(0.5, 3), uz(-0.8, 0.8), ui(-0.5, 0.5);
  for (int i = 0; i < 10; ++i) {
    double x = ux(rng);
    cd z(uz(rng), ui(rng));
    OmegaEvaluator om(z);
    cd d = om.definition(x).value, f = om.partial_fraction(x).value;
    EXPECT_LE(rel_err(f, d), 1e-8) << "x=" << x << " z=" << z;
  }
  OmegaEvaluator om(cd(0.4));
  EXPECT_LE(rel_err(om.partial_fraction(1).value, om.definition(1).value), 1e-8);
}

TEST(Omega, OracleValues) {
  auto m = oracle();
  EXPECT_LE(rel_err(omega(1, cd(0.4), OmegaMode::definition).value, m.at("omega|x=1;z=0.4|value")), 1e-9);
  EXPECT_LE(rel_err(omega(2, cd(-0.4), OmegaMode::definition).value, m.at("omega|x=2;z=-0.4|value")), 1e-9);
  EXPECT_LE(rel_err(omega(1, cd(0.4), OmegaMode::partial_fraction).value, m.at("omega|x=1;z=0.4|value")), 1e-8);
}

TEST(Omega, ZeroOrderThroughAveraging) {
  OmegaEvaluator om(cd(0));
  for (double x : {0.5, 1.0, 2.0}) EXPECT_LE(rel_err(om.partial_fraction(x).value, om.definition(x).value), 1e-9) << x;
}

TEST(Omega, NearPoleIsAnError) {
  OmegaEvaluator om(cd(5e-5));
  try {
    om.partial_fraction(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::near_pole);
  }
  EXPECT_NO_THROW(om.definition(1));
  EXPECT_THROW(OmegaEvaluator(cd(1.0)), Error);
}

TEST(Omega, PartialFractionTailBound) {
  cd z(0.4);
  double x = 1;
  int n = 200;
  double bound = omega_partial_fraction_tail_bound(z, n);
  DivisorTable<double> t(-z, 2 * n);
  double extension = 0;
  for (int k = n + 1; k <= 2 * n; ++k) extension += std::abs(t[k]) / (double(k) * k + x * x);
  EXPECT_GT(bound, 0);
  EXPECT_LE(extension, bound);
  EXPECT_GT(extension, bound / 4);  // not wildly loose
}

TEST(Omega, SubtractedFormRemovesTheSingularTerm) {
  cd z(0.3);
  OmegaEvaluator om(z);
  for (double x : {0.2, 1.0, 3.0}) {
    cd full = om(x), sub = om.subtracted(x).value;
    cd term = riemann_zeta(z) * std::pow(x, z / 2.0 - 1.0) / (2 * pi);
    EXPECT_LE(std::abs(full - sub - term), 1e-12 * std::abs(term)) << x;
  }
}

TEST(Omega, DefinitionTermsDecayExponentially) {
  OmegaEvaluator om(cd(0));
  // divide out the divisor count, which is not monotone
  auto scaled = [&](long n) { return std::abs(om.definition_term(n, 1)) / sigma(cd(0), n).real(); };
  for (long n = 1; n < 10; ++n) EXPECT_LT(scaled(n + 1), scaled(n)) << n;
  // e^{-2 sqrt(2) pi sqrt(10)} scale: about 1e-11, well above 1e-15
  double t10 = std::abs(om.definition_term(10, 1));
  EXPECT_LT(t10, 1e-10);
  EXPECT_GT(t10, 1e-15);
}

TEST(Lambda, Values) {
  EXPECT_NEAR(lambda_fn(1, cd(0)).real(), constants::euler_gamma<double> - 0.5, 1e-15);
  cd want = hurwitz_zeta(cd(1.5), cd(2)) - std::pow(2.0, -0.5) / 0.5 - 0.5 * std::pow(2.0, -1.5);
  EXPECT_LE(rel_err(lambda_fn(2, cd(0.5)), want), 1e-12);
  cd far = lambda_fn(100, cd(0.5));
  EXPECT_LT(std::abs(far), 1e-4);
  EXPECT_LE(rel_err(far, 1.5 / 12 * std::pow(100.0, -2.5)), 1e-3);
}

TEST(Lambda, ShiftedAndAsymptoticPathsAgree) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ux(0.1, 60), uz(-0.9, 0.9);
  for (int i = 0; i < 40; ++i) {
    double x = ux(rng);
    cd z(uz(rng), uz(rng));
    if (std::abs(z) < 0.05) continue;
    cd direct = hurwitz_zeta(z + 1.0, cd(x)) - std::pow(x, -z) / z - 0.5 * std::pow(x, -z - 1.0);
    double scale = std::abs(std::pow(x, -z) / z) + std::abs(hurwitz_zeta(z + 1.0, cd(x)));
    EXPECT_LE(std::abs(lambda_fn(x, z) - direct), 1e-13 * scale) << x << " " << z;
  }
}

TEST(Lambda, NearPoleIsAnError) {
  try {
    lambda_fn(1, cd(1e-5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::near_pole);
  }
}

TEST(Lambda, SumTailMatchesLongTruncation) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    cd z(0.5);
    auto s = lambda_sum(alpha, z);
    // Richardson on plain truncations: the remainder is ~ c N^{-z-1}
    cd a = lambda_sum_truncated(alpha, z, 4000), b = lambda_sum_truncated(alpha, z, 8000);
    double r = std::pow(2.0, 1.5);
    cd extrap = (r * b - a) / (r - 1);
    EXPECT_LE(rel_err(s.value, extrap), 1e-9) << alpha;
    EXPECT_LT(s.truncation_bound, 1e-14);
  }
}
