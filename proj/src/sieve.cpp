#include "gaplab/sieve.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gaplab/interval.hpp"

namespace gaplab {

namespace {

uint64_t isqrt_u64(uint64_t n) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void check_limits(uint64_t lo, uint64_t hi, const SieveLimits& limits) {
  if (lo > hi) throw DomainError("sieve range reversed");
  if (hi > limits.max_hi)
    throw ResourceError("sieve upper limit " + std::to_string(hi) +
                        " exceeds cap " + std::to_string(limits.max_hi));
  if (hi - lo > limits.max_span)
    throw ResourceError("sieve span " + std::to_string(hi - lo) +
                        " exceeds cap " + std::to_string(limits.max_span));
}

}  // namespace

PrimeTable::PrimeTable(uint64_t lo, uint64_t hi) : lo_(lo), hi_(hi) {
  bits_.assign((hi - lo + 63) / 64, 0);
}

bool PrimeTable::contains(uint64_t n) const {
  if (n <= lo_ || n > hi_) return false;
  const uint64_t i = n - lo_ - 1;
  return (bits_[i >> 6] >> (i & 63)) & 1;
}

uint64_t PrimeTable::count() const {
  uint64_t c = 0;
  for (uint64_t w : bits_) c += static_cast<uint64_t>(__builtin_popcountll(w));
  return c;
}

std::vector<uint64_t> PrimeTable::to_vector() const {
  std::vector<uint64_t> out;
  out.reserve(count());
  for_each([&](uint64_t p) { out.push_back(p); });
  return out;
}

void PrimeTable::for_each(const std::function<void(uint64_t)>& fn) const {
  for (size_t wi = 0; wi < bits_.size(); ++wi) {
    uint64_t w = bits_[wi];
    while (w) {
      const int b = __builtin_ctzll(w);
      fn(lo_ + 1 + (uint64_t(wi) << 6) + b);
      w &= w - 1;
    }
  }
}

bool PrimeTable::operator==(const PrimeTable& other) const {
  return lo_ == other.lo_ && hi_ == other.hi_ && bits_ == other.bits_;
}

void PrimeTable::mark_composite(uint64_t n) {
  const uint64_t i = n - lo_ - 1;
  bits_[i >> 6] |= uint64_t(1) << (i & 63);
}

void PrimeTable::finalize() {
  for (auto& w : bits_) w = ~w;
  // clear tail bits beyond hi
  const uint64_t span = hi_ - lo_;
  if (span % 64 != 0 && !bits_.empty())
    bits_.back() &= (uint64_t(1) << (span % 64)) - 1;
  // 0 and 1 are not prime
  for (uint64_t n = lo_ + 1; n <= hi_ && n <= 1; ++n) {
    const uint64_t i = n - lo_ - 1;
    bits_[i >> 6] &= ~(uint64_t(1) << (i & 63));
  }
}

PrimeTable simple_sieve(uint64_t hi) {
  PrimeTable t(0, hi);
  if (hi == 0) return t;
  for (uint64_t p = 2; p * p <= hi; ++p) {
    if (t.words()[(p - 1) >> 6] >> ((p - 1) & 63) & 1) continue;  // composite
    for (uint64_t m = p * p; m <= hi; m += p) t.mark_composite(m);
  }
  t.finalize();
  return t;
}

PrimeTable segmented_sieve(uint64_t lo, uint64_t hi, const SieveLimits& limits) {
  check_limits(lo, hi, limits);
  PrimeTable t(lo, hi);
  if (hi <= 1 || hi <= lo) {
    t.finalize();
    return t;
  }
  const std::vector<uint64_t> base = simple_sieve(isqrt_u64(hi)).to_vector();

  // Segments are multiples of 64 numbers so threads never share a word.
  const uint64_t seg = uint64_t(1) << 18;
  const uint64_t span = hi - lo;
  const int64_t nseg = static_cast<int64_t>((span + seg - 1) / seg);

#pragma omp parallel for schedule(dynamic)
  for (int64_t si = 0; si < nseg; ++si) {
    const uint64_t seg_lo = lo + uint64_t(si) * seg;        // exclusive
    const uint64_t seg_hi = std::min(hi, seg_lo + seg);     // inclusive
    for (uint64_t p : base) {
      uint64_t start = ((seg_lo / p) + 1) * p;  // first multiple > seg_lo
      if (start < p * p) start = p * p;
      for (uint64_t m = start; m <= seg_hi; m += p) t.mark_composite(m);
    }
  }
  t.finalize();
  return t;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set decides primality for everything below 3.3e24, far past
  // the 64-bit range handled here.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t primorial_div(uint64_t x, uint64_t b0) {
  if (b0 != 1 && (!is_prime_u64(b0) || b0 > x))
    throw DomainError("B0 must be 1 or a prime <= x");
  const auto primes = simple_sieve(x).to_vector();
  uint64_t prod = 1;
  for (uint64_t p : primes) {
    if (p == b0) continue;
    if (prod > UINT64_MAX / p)
      throw ResourceError("primorial of x = " + std::to_string(x) +
                          " overflows 64 bits");
    prod *= p;
  }
  return prod;
}

GapRecord max_gap(uint64_t x, int k, const SieveLimits& limits) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (x > limits.max_hi)
    throw ResourceError("gap search limit exceeds sieve cap");

  GapRecord rec;
  rec.k = k;
  rec.x_limit = x;
  rec.value = 0;

  std::vector<uint64_t> window;  // last k+1 primes
  window.reserve(k + 1);
  bool found = false;

  const uint64_t seg = 1u << 22;
  for (uint64_t lo = 0; lo < x; lo += seg) {
    const uint64_t hi = std::min(x, lo + seg);
    PrimeTable t = segmented_sieve(lo, hi, limits);
    t.for_each([&](uint64_t p) {
      window.push_back(p);
      if (window.size() > static_cast<size_t>(k) + 1)
        window.erase(window.begin());
      if (window.size() == static_cast<size_t>(k) + 1) {
        uint64_t mn = UINT64_MAX;
        for (size_t i = 1; i < window.size(); ++i)
          mn = std::min(mn, window[i] - window[i - 1]);
        if (!found || mn > rec.value) {
          rec.value = mn;
          rec.witness = window;
          found = true;
        }
      }
    });
  }
  if (!found)
    throw DomainError("G_k undefined: fewer than " + std::to_string(k + 1) +
                      " primes <= " + std::to_string(x));
  return rec;
}

double e_gamma_double() {
  static const double v = hp::Interval::euler_gamma().exp().mid_double();
  return v;
}

MertensResult mertens_product(uint64_t x, const SieveLimits& limits) {
  if (x < 2) throw DomainError("x must be >= 2");
  long double prod = 1.0L;
  segmented_sieve(0, x, limits).for_each([&](uint64_t p) {
    prod *= static_cast<long double>(p) / static_cast<long double>(p - 1);
  });
  MertensResult r;
  r.product = static_cast<double>(prod);
  r.ratio_to_asymptotic =
      static_cast<double>(prod / (e_gamma_double() * std::log(static_cast<double>(x))));
  return r;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t result = n;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

BtResult brun_titchmarsh_check(uint64_t x, uint64_t q, uint64_t a,
                               const SieveLimits& limits) {
  if (q < 1 || q >= x) throw DomainError("requires x > q >= 1");
  a %= q;
  if (std::gcd(a, q) != 1) throw DomainError("requires gcd(a, q) = 1");
  BtResult r{};
  uint64_t count = 0;
  segmented_sieve(0, x, limits).for_each([&](uint64_t p) {
    if (p % q == a) ++count;
  });
  r.count = count;
  r.bound = 2.0 * static_cast<double>(x) /
            (static_cast<double>(euler_phi(q)) *
             std::log(static_cast<double>(x) / static_cast<double>(q)));
  r.holds = static_cast<double>(count) <= r.bound;
  return r;
}

PairCountResult ub_pair_count(uint64_t x, uint64_t b0, uint64_t z_max, uint64_t a,
                              uint64_t b, double c_ub) {
  if (a == b) throw DomainError("requires a != b");
  if (z_max < 1) throw DomainError("requires Z >= 1");
  PairCountResult r{};
  const uint64_t big_p = primorial_div(x, b0);
  r.primorial = big_p;
  if (a < 1 || a > big_p || b < 1 || b > big_p)
    throw DomainError("a and b must lie in [1, P]");
  if (big_p > (UINT64_MAX - std::max(a, b)) / z_max)
    throw ResourceError("P*Z overflows 64 bits");

  const double lx = std::log(static_cast<double>(x));
  const double lz = std::log(static_cast<double>(z_max));
  r.ratio_precondition_ok = lz >= 10.0 * lx;
  r.bound = c_ub * (lx / lz) * (lx / lz) * static_cast<double>(z_max);

  bool zero = false;
  simple_sieve(x).for_each([&](uint64_t p) {
    if (p != b0 && (a % p == 0 || b % p == 0)) zero = true;
  });
  if (zero) {
    r.short_circuited = true;
    r.count = 0;
    r.holds = true;
    return r;
  }

  uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (int64_t z = 1; z <= static_cast<int64_t>(z_max); ++z) {
    const uint64_t n = big_p * static_cast<uint64_t>(z);
    if (is_prime_u64(n + a) && is_prime_u64(n + b)) ++count;
  }
  r.count = count;
  r.holds = static_cast<double>(count) <= r.bound;
  return r;
}

ApCountResult ap_prime_count(uint64_t x, uint64_t b0, uint64_t a, uint64_t z_max,
                             double d_pap) {
  if (z_max < 1) throw DomainError("requires Z >= 1");
  ApCountResult r{};
  const uint64_t big_p = primorial_div(x, b0);
  r.primorial = big_p;
  if (std::gcd(a, big_p) != 1) throw DomainError("requires gcd(a, P) = 1");
  if (big_p > (UINT64_MAX - a) / z_max)
    throw ResourceError("P*Z overflows 64 bits");

  uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (int64_t z = 1; z <= static_cast<int64_t>(z_max); ++z) {
    if (is_prime_u64(big_p * static_cast<uint64_t>(z) + a)) ++count;
  }
  r.count = count;
  const double lx = std::log(static_cast<double>(x));
  const double lz = std::log(static_cast<double>(z_max));
  r.reference_lower =
      e_gamma_double() / (1.0 + 1.0 / d_pap) * (lx / lz) * static_cast<double>(z_max);
  return r;
}

}  // namespace gaplab
