#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gaplab/errors.hpp"

namespace gaplab {

// Exact prime membership on (lo, hi], one bit per integer.
class PrimeTable {
 public:
  PrimeTable() = default;
  PrimeTable(uint64_t lo, uint64_t hi);

  uint64_t lo() const { return lo_; }
  uint64_t hi() const { return hi_; }
  bool contains(uint64_t n) const;
  uint64_t count() const;
  std::vector<uint64_t> to_vector() const;
  void for_each(const std::function<void(uint64_t)>& fn) const;

  bool operator==(const PrimeTable& other) const;

  // internal: bit index of n is n - lo - 1
  void mark_composite(uint64_t n);
  void finalize();  // flips composite marks into membership bits
  std::vector<uint64_t>& words() { return bits_; }
  const std::vector<uint64_t>& words() const { return bits_; }

 private:
  uint64_t lo_ = 0, hi_ = 0;
  std::vector<uint64_t> bits_;  // after finalize(): set bit = prime
};

struct SieveLimits {
  uint64_t max_hi = uint64_t(1) << 40;    // absolute ceiling
  uint64_t max_span = uint64_t(1) << 33;  // per-call memory guard
};

// Serial reference: plain Eratosthenes over [0, hi], kept as the oracle the
// parallel kernel is tested and benchmarked against.
PrimeTable simple_sieve(uint64_t hi);

// Segmented kernel, OpenMP-parallel over word-aligned segments. Bit-for-bit
// equal to simple_sieve on the same range.
PrimeTable segmented_sieve(uint64_t lo, uint64_t hi, const SieveLimits& limits = {});

// Deterministic strong-probable-prime test (valid for all 64-bit inputs).
bool is_prime_u64(uint64_t n);

// Product of all primes <= x divided by b0; b0 must be 1 or a prime <= x.
// Throws ResourceError on 64-bit overflow.
uint64_t primorial_div(uint64_t x, uint64_t b0);

// A maximal-gap witness: k+1 consecutive primes whose k successive
// differences all reach the recorded value, last prime <= x_limit.
struct GapRecord {
  int k = 0;
  uint64_t x_limit = 0;
  uint64_t value = 0;
  std::vector<uint64_t> witness;
};

// Exact max over chains of k+1 consecutive primes (last prime <= x) of the
// minimum successive difference. Ties report the smallest witness.
GapRecord max_gap(uint64_t x, int k, const SieveLimits& limits = {});

struct MertensResult {
  double product;              // prod_{p<=x} (1 - 1/p)^-1
  double ratio_to_asymptotic;  // product / (e^gamma log x)
};
MertensResult mertens_product(uint64_t x, const SieveLimits& limits = {});

struct BtResult {
  uint64_t count;  // primes p <= x with p = a (mod q)
  double bound;    // 2x / (phi(q) log(x/q))
  bool holds;
};
BtResult brun_titchmarsh_check(uint64_t x, uint64_t q, uint64_t a,
                               const SieveLimits& limits = {});

struct PairCountResult {
  uint64_t count = 0;   // z in [Z] with Pz+a and Pz+b both prime
  double bound = 0.0;   // c_ub * (log x / log Z)^2 * Z
  bool holds = false;
  bool ratio_precondition_ok = false;  // log Z >= 10 log x
  bool short_circuited = false;        // a small sieved prime divides a*b
  uint64_t primorial = 0;
};
PairCountResult ub_pair_count(uint64_t x, uint64_t b0, uint64_t z_max, uint64_t a,
                              uint64_t b, double c_ub);

struct ApCountResult {
  uint64_t count = 0;            // z in [Z] with Pz+a prime
  double reference_lower = 0.0;  // e^gamma/(1+1/D_PAP) * (log x/log Z) * Z,
                                 // reported for comparison, never asserted
  uint64_t primorial = 0;
};
ApCountResult ap_prime_count(uint64_t x, uint64_t b0, uint64_t a, uint64_t z_max,
                             double d_pap = 160.0);

// Euler phi by trial factorization (small moduli only).
uint64_t euler_phi(uint64_t n);

double e_gamma_double();  // exp(Euler-Mascheroni), from the hp layer

}  // namespace gaplab
