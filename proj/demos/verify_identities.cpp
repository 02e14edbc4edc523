// Runs every registered identity at its default parameters and prints a summary line each.

#include <cstdio>

#include "koshliakov/identities.hpp"

using namespace koshliakov;

int main() {
  int failed = 0;
  for (const auto& info : identity_registry()) {
    IdentityParams p;
    p.alpha = 1.6;  // alpha = 1 is the fixed point of the inversion symmetries
    if (info.id == "hurwitz-theorem") p.z = 0.25;
    if (info.id == "pair-reciprocity" || info.id == "koshliakov-self") p.z = 0.25;
    try {
      auto r = info.run(p);
      std::printf("%-22s %s  rel_diff %.2e  budget %.2e  tol %.0e\n", info.id.c_str(), r.pass ? "pass" : "FAIL",
                  r.rel_diff, r.budgets.total(), r.tolerance);
      failed += !r.pass;
    } catch (const Error& e) {
      std::printf("%-22s error %s\n", info.id.c_str(), e.what());
      ++failed;
    }
  }
  return failed ? 1 : 0;
}
