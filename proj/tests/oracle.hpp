#pragma once

// Test-only oracles. These deliberately take different computational routes
// than the library: the Fisher oracle enumerates the support with a factorial
// table instead of multiplicative binomials, and the Wilson oracle is a
// frozen table of values computed offline at 50-digit precision.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using boost::multiprecision::cpp_int;

// Two-sided Fisher exact p by brute-force enumeration of all 2x2 tables with
// the observed margins, weighting each by factorial ratios.
inline double fisher_two_sided(long long a, long long b, long long c, long long d) {
  const long long r1 = a + b, r2 = c + d, c1 = a + c, c2 = b + d;
  const long long n = r1 + r2;
  if (r1 == 0 || r2 == 0 || c1 == 0 || c2 == 0) return 1.0;

  std::vector<cpp_int> fact(static_cast<std::size_t>(n) + 1);
  fact[0] = 1;
  for (long long i = 1; i <= n; ++i) {
    fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
  }
  auto f = [&](long long k) { return fact[static_cast<std::size_t>(k)]; };

  // Weight of the table with top-left cell x (common positive factor
  // c1!c2!/n! dropped; comparisons and the final ratio are unaffected).
  auto weight = [&](long long x) {
    const long long bb = r1 - x, cc = c1 - x, dd = r2 - c1 + x;
    return f(r1) * f(r2) / (f(x) * f(bb) * f(cc) * f(dd));
  };

  const long long lo = std::max(0LL, c1 - r2);
  const long long hi = std::min(r1, c1);
  const cpp_int observed = weight(a);
  cpp_int tail = 0, total = 0;
  for (long long x = lo; x <= hi; ++x) {
    const cpp_int w = weight(x);
    total += w;
    if (w <= observed) tail += w;
  }
  using big_float = boost::multiprecision::cpp_bin_float_50;
  return static_cast<double>(big_float(tail) / big_float(total));
}

// Frozen 95% Wilson intervals, computed offline with mpmath at 50 digits.
struct WilsonCase {
  long long k;
  long long n;
  double lo;
  double hi;
};

inline const std::vector<WilsonCase>& wilson_cases() {
  static const std::vector<WilsonCase> kCases = {
      {15, 30, 0.33154125640533765, 0.66845874359466235},
      {1, 30, 0.0059085903816124466, 0.16670390991409174},
      {27, 30, 0.74378917420815916, 0.96540011125266582},
      {22, 30, 0.55552038304811112, 0.85817336680403679},
      {4, 30, 0.053096554840547442, 0.29681326682036299},
      {28, 30, 0.78676541637383077, 0.98152297620872963},
      {23, 30, 0.59071673841877828, 0.88207611855510504},
      {29, 30, 0.83329609008590826, 0.99409140961838755},
      {0, 30, 0.0, 0.11351339317396877},
      {30, 30, 0.88648660682603123, 1.0},
      {35, 200, 0.1286051506627333, 0.23364431148248998},
  };
  return kCases;
}

// Exact p-values for the pilot study's two headline tables, computed offline
// with exact rational arithmetic.
inline constexpr double kFisherMlcsP = 5.242482506564868e-16;      // (1,29;30,0)
inline constexpr double kFisherHumanitiesP = 9.2267692115541677e-14;  // (27,3;0,30)

}  // namespace oracle
