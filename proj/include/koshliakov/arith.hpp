#pragma once

// Divisor sums sigma_a(n) = sum_{d | n} d^a for complex a.

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "koshliakov/error.hpp"

namespace koshliakov {

inline constexpr std::size_t default_divisor_table_limit = 20'000'000;

template <class Real>
std::complex<Real> divisor_power(std::complex<Real> a, long d) {
  return d == 1 ? std::complex<Real>(1) : std::exp(a * std::log(Real(d)));
}

// Trial division up to sqrt(n).
template <class Real>
std::complex<Real> sigma(std::complex<Real> a, long n) {
  if (n < 1) fail(ErrorCode::domain, "sigma needs n >= 1");
  std::complex<Real> s{};
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += divisor_power(a, d);
    long e = n / d;
    if (e != d) s += divisor_power(a, e);
  }
  return s;
}

template <class Real = double>
class DivisorTable {
 public:
  DivisorTable(std::complex<Real> a, std::size_t n_max, std::size_t limit = default_divisor_table_limit)
      : exponent_(a) {
    if (n_max < 1) fail(ErrorCode::domain, "divisor table needs N_max >= 1");
    if (n_max > limit)
      fail(ErrorCode::limit, "divisor table of " + std::to_string(n_max) + " entries exceeds the limit " +
                                 std::to_string(limit));
    values_.assign(n_max + 1, std::complex<Real>{});
    for (std::size_t d = 1; d <= n_max; ++d) {
      std::complex<Real> p = divisor_power(a, long(d));
      for (std::size_t m = d; m <= n_max; m += d) values_[m] += p;
    }
  }

  std::complex<Real> exponent() const { return exponent_; }
  std::size_t size() const { return values_.size() - 1; }
  const std::complex<Real>& operator[](std::size_t n) const { return values_[n]; }
  std::complex<Real> at(std::size_t n) const {
    if (n < 1 || n > size()) fail(ErrorCode::domain, "divisor table index out of range");
    return values_[n];
  }

 private:
  std::complex<Real> exponent_;
  std::vector<std::complex<Real>> values_;  // index 0 unused
};

template <class Real>
DivisorTable<Real> build_table(std::complex<Real> a, std::size_t n_max,
                               std::size_t limit = default_divisor_table_limit) {
  return DivisorTable<Real>(a, n_max, limit);
}

}  // namespace koshliakov
