// Prints a few special-function values in double and long double.

#include <cstdio>

#include "koshliakov/koshliakov.hpp"
#include "koshliakov/specfun.hpp"

using namespace koshliakov;

int main() {
  using cl = std::complex<long double>;
  std::printf("%-28s %-24s %s\n", "quantity", "double", "long double");
  auto row = [](const char* name, double d, long double l) { std::printf("%-28s %-24.17g %.20Lg\n", name, d, l); };
  row("zeta(1/2)", riemann_zeta(cd(0.5)).real(), riemann_zeta(cl(0.5L)).real());
  row("Gamma(1/3)", gamma(cd(1.0 / 3)).real(), gamma(cl(1.0L / 3)).real());
  row("K_0(1)", bessel_k(cd(0), cd(1)).real(), bessel_k(cl(0), cl(1)).real());
  row("Y_0(1)", bessel_y(cd(0), 1.0).real(), bessel_y(cl(0), 1.0L).real());
  row("Xi(0)", big_xi(cd(0)).real(), big_xi(cl(0)).real());
  row("li(2)", exp_integral_li(2.0), exp_integral_li(2.0L));

  cd k = bessel_k(cd(0.3), std::polar(2.0, constants::pi<double> / 4));
  std::printf("\nK_0.3(2 e^{i pi/4}) = %.15g %+.15gi\n", k.real(), k.imag());
  std::printf("Koshliakov kernel at z=0.25, x=2: %.15g\n", koshliakov_kernel(cd(0.25), 2.0).real());
  std::printf("Omega(1, 0.4) by both evaluations: %.15g  %.15g\n",
              omega(1.0, cd(0.4), OmegaMode::definition).value.real(),
              omega(1.0, cd(0.4), OmegaMode::partial_fraction).value.real());
}
