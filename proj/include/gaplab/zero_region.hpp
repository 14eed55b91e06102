#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/interval.hpp"
#include "gaplab/trace.hpp"

namespace gaplab {

using hp::Interval;

// Constants feeding the progression and pair-count coefficients: the
// zero-free-region / zero-density side and the upper-bound-sieve side.
struct ZeroRegionConstants {
  Interval mccurley_r;   // 9.6459, truncated literal from the source table
  Interval r1;           // (5 - sqrt 5) / (15 - 10 sqrt 2)
  Interval c_zfr;        // zero-free-region constant, default 1/24
  Interval a;            // character-sum decay exponent, (3/10)*c_zfr
  double jutila_exp = 6.0;
  double trivial_exp = 15.0;
  long c_zd = 16;        // zero-density exponent
  Interval d_pap;        // 10 * c_zd
  Interval c_pap;        // 1 - exp(-a * d_pap)
  Interval c_ub;         // 8 * e^(2*gamma)
};

// R1 = (5 - sqrt 5)/(15 - 10 sqrt 2); R is a stored literal, flagged as
// externally sourced in the trace.
std::pair<Interval, Interval> mccurley_constants();

// (3/10) * c_zfr
Interval gallagher_exponent(const Interval& c_zfr);

// Smallest integer strictly greater than max(jutila_exp, trivial_exp).
long zero_density_exponent(double jutila_exp, double trivial_exp);

// D_PAP = 10 * c_zd, C_PAP = 1 - exp(-a * D_PAP)
std::pair<Interval, Interval> derive_pap(long c_zd, const Interval& a);

struct SelbergResult {
  Interval c_ub;        // 2^2 * 2! * e^(2*gamma)
  double finite_ratio;  // prod_{p<=x} (1-1/p)^-2 / (e^gamma log x)^2
};
// Requires x >= 10; the product is evaluated over a fresh prime enumeration.
SelbergResult selberg_cub(uint64_t x);

// Root-counting case analysis for the two-form pair sieve at modulus p.
struct RhoInput {
  uint64_t p = 0;   // prime modulus
  uint64_t a = 0;
  uint64_t b = 0;
  uint64_t b0 = 1;  // 1 or the excluded prime
  uint64_t x = 0;   // small-prime threshold
};
enum class RhoCase { small_prime, excluded_prime, large_prime };
struct RhoResult {
  int rho = 0;
  bool pair_count_zero = false;  // a small sieved prime divides a*b
  RhoCase which = RhoCase::small_prime;
};
// `primorial` is the product of the sieved primes (for the solvability
// precondition gcd(primorial, p) = 1 in the non-small cases).
RhoResult rho_classify(const RhoInput& in, uint64_t primorial);

// c_ub * (log x / log Z)^2 * Z. In strict mode requires log Z >= 10 log x,
// the finite stand-in for log x = o(log Z); relaxed callers get the value
// with the flag reported by the caller instead.
double hr_pair_upper_bound(double x, double z, double c_ub, bool strict = true);

struct ZeroRegionOverrides {
  std::optional<Interval> mccurley_r;
  std::optional<Interval> c_zfr;
  std::optional<double> jutila_exp;
  std::optional<double> trivial_exp;
};

struct ZeroRegionChain {
  ZeroRegionConstants values;
  DerivationTrace trace;
  std::vector<ConstraintCheck> checks;
  bool all_checks_pass() const;
};

// Full default chain: c_zfr = 1/24 -> a = 1/80 -> c_zd = 16 ->
// (D_PAP, C_PAP) = (160, 1 - e^-2), plus C_UB and the finite product ratio
// at `ratio_x`.
ZeroRegionChain derive_zero_region_chain(const ZeroRegionOverrides& ov = {},
                                         uint64_t ratio_x = 100000);

}  // namespace gaplab
