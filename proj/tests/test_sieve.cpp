#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "gaplab/sieve.hpp"

using gaplab::DomainError;
using gaplab::ResourceError;

namespace {

// Independent oracle: odd-divisor trial division.
bool trial_is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> trial_primes_upto(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t v = 2; v <= n; ++v)
    if (trial_is_prime(v)) out.push_back(v);
  return out;
}

// Exhaustive gap-record oracle straight from the definition.
gaplab::GapRecord brute_gap(uint64_t x, int k) {
  const auto primes = trial_primes_upto(x);
  gaplab::GapRecord rec;
  rec.k = k;
  rec.x_limit = x;
  bool found = false;
  for (size_t n = 0; n + k < primes.size(); ++n) {
    uint64_t mn = UINT64_MAX;
    for (int i = 1; i <= k; ++i)
      mn = std::min(mn, primes[n + i] - primes[n + i - 1]);
    if (!found || mn > rec.value) {
      rec.value = mn;
      rec.witness.assign(primes.begin() + n, primes.begin() + n + k + 1);
      found = true;
    }
  }
  if (!found) throw DomainError("undefined");
  return rec;
}

}  // namespace

TEST_CASE("small ranges") {
  const auto t = gaplab::segmented_sieve(1, 30);
  CHECK(t.to_vector() ==
        std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(t.count() == 10);
  CHECK(gaplab::segmented_sieve(0, 1).count() == 0);
  CHECK(gaplab::segmented_sieve(0, 0).count() == 0);
  CHECK(gaplab::segmented_sieve(0, 2).to_vector() == std::vector<uint64_t>{2});
}

TEST_CASE("membership agrees with trial division up to 1e6") {
  const auto t = gaplab::segmented_sieve(0, 1000000);
  for (uint64_t n = 0; n <= 1000000; ++n) {
    if (t.contains(n) != trial_is_prime(n)) {
      FAIL_CHECK("mismatch at " << n);
      break;
    }
  }
  CHECK(t.count() == 78498);
}

TEST_CASE("segmented kernel is bit-identical to the serial reference") {
  CHECK(gaplab::segmented_sieve(0, 1000000) == gaplab::simple_sieve(1000000));
  CHECK(gaplab::segmented_sieve(0, 65536) == gaplab::simple_sieve(65536));
}

TEST_CASE("segment concatenation is associative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const uint64_t a = rng() % 100000;
    const uint64_t b = a + 1 + rng() % 100000;
    const uint64_t c = b + 1 + rng() % 100000;
    auto left = gaplab::segmented_sieve(a, b).to_vector();
    const auto right = gaplab::segmented_sieve(b, c).to_vector();
    left.insert(left.end(), right.begin(), right.end());
    CHECK(left == gaplab::segmented_sieve(a, c).to_vector());
  }
}

TEST_CASE("resource caps") {
  gaplab::SieveLimits tiny;
  tiny.max_span = 1000;
  CHECK_THROWS_AS(gaplab::segmented_sieve(0, 100000, tiny), ResourceError);
  tiny.max_hi = 10;
  CHECK_THROWS_AS(gaplab::segmented_sieve(0, 100, tiny), ResourceError);
}

TEST_CASE("probable-prime test agrees with the sieve") {
  const auto t = gaplab::simple_sieve(1000000);
  for (uint64_t n = 0; n <= 1000000; n += (n < 1000 ? 1 : 97))
    CHECK(gaplab::is_prime_u64(n) == t.contains(n));
  // classic strong-pseudoprime traps
  CHECK(!gaplab::is_prime_u64(341));   // 11 * 31
  CHECK(!gaplab::is_prime_u64(561));   // Carmichael
  CHECK(!gaplab::is_prime_u64(3215031751ull));
  CHECK(gaplab::is_prime_u64(2305843009213693951ull));  // 2^61 - 1
}

TEST_CASE("primorials") {
  CHECK(gaplab::primorial_div(10, 1) == 210);
  CHECK(gaplab::primorial_div(11, 11) == 210);
  CHECK(gaplab::primorial_div(13, 1) == 30030);
  CHECK(gaplab::primorial_div(5, 1) == 30);
  CHECK_THROWS_AS(gaplab::primorial_div(60, 1), ResourceError);
  CHECK_THROWS_AS(gaplab::primorial_div(10, 4), DomainError);
  CHECK_THROWS_AS(gaplab::primorial_div(10, 13), DomainError);
}

TEST_CASE("gap records") {
  auto rec = gaplab::max_gap(30, 1);
  CHECK(rec.value == 6);
  CHECK(rec.witness == std::vector<uint64_t>{23, 29});
  rec = gaplab::max_gap(30, 2);
  CHECK(rec.value == 4);
  CHECK(rec.witness == std::vector<uint64_t>{19, 23, 29});
  rec = gaplab::max_gap(100, 1);
  CHECK(rec.value == 8);
  CHECK(rec.witness == std::vector<uint64_t>{89, 97});
  CHECK_THROWS_AS(gaplab::max_gap(3, 2), DomainError);
}

TEST_CASE("gap records match the exhaustive oracle") {
  for (uint64_t x : {100ull, 1000ull, 10000ull, 100000ull}) {
    for (int k = 1; k <= 3; ++k) {
      const auto got = gaplab::max_gap(x, k);
      const auto want = brute_gap(x, k);
      CHECK(got.value == want.value);
      CHECK(got.witness == want.witness);
    }
  }
}

TEST_CASE("gap monotonicity") {
  // nondecreasing in X
  uint64_t prev = 0;
  for (uint64_t x : {1000ull, 10000ull, 100000ull}) {
    const auto rec = gaplab::max_gap(x, 1);
    CHECK(rec.value >= prev);
    prev = rec.value;
  }
  // min over more gaps can only shrink
  uint64_t prev_k = UINT64_MAX;
  for (int k = 1; k <= 4; ++k) {
    const auto rec = gaplab::max_gap(10000, k);
    CHECK(rec.value <= prev_k);
    prev_k = rec.value;
  }
}

TEST_CASE("finite Mertens products") {
  CHECK(gaplab::mertens_product(2).product == 2.0);
  const auto r4 = gaplab::mertens_product(10000);
  CHECK(std::abs(r4.ratio_to_asymptotic - 1.0) < 0.005);
  double prev = 1e9;
  for (uint64_t x : {1000ull, 10000ull, 100000ull, 1000000ull}) {
    const auto r = gaplab::mertens_product(x);
    CHECK(std::abs(r.ratio_to_asymptotic - 1.0) < prev);
    prev = std::abs(r.ratio_to_asymptotic - 1.0);
  }
  CHECK_THROWS_AS(gaplab::mertens_product(1), DomainError);
}

TEST_CASE("progression prime counts against the classic bound") {
  auto r = gaplab::brun_titchmarsh_check(100, 3, 1);
  CHECK(r.count == 11);
  CHECK(r.bound == doctest::Approx(2.0 * 100 / (2 * std::log(100.0 / 3.0))));
  CHECK(r.holds);
  r = gaplab::brun_titchmarsh_check(100, 3, 2);
  CHECK(r.count == 13);
  CHECK(r.holds);
  // the bound is a theorem; a violation would be an implementation bug
  for (uint64_t q = 1; q <= 20; ++q)
    for (uint64_t a = 0; a < q; ++a) {
      if (q > 1 && (a == 0 || std::gcd(a, q) != 1)) continue;
      CHECK(gaplab::brun_titchmarsh_check(1000, q, a).holds);
    }
  CHECK_THROWS_AS(gaplab::brun_titchmarsh_check(100, 100, 1), DomainError);
  CHECK_THROWS_AS(gaplab::brun_titchmarsh_check(100, 6, 3), DomainError);
}

TEST_CASE("pair counts at primorial moduli") {
  // independent enumeration with the trial-division oracle
  uint64_t expect = 0;
  for (uint64_t z = 1; z <= 1000; ++z)
    if (trial_is_prime(30 * z + 7) && trial_is_prime(30 * z + 11)) ++expect;
  const double cub = 25.377751665003604;
  const auto r = gaplab::ub_pair_count(5, 1, 1000, 7, 11, cub);
  CHECK(r.primorial == 30);
  CHECK(r.count == expect);
  CHECK(r.bound == doctest::Approx(1377.6145194482962).epsilon(1e-12));
  CHECK(!r.ratio_precondition_ok);
  CHECK(r.holds);
  CHECK(!r.short_circuited);

  // a divisible by a small sieved prime: immediate zero
  const auto zero = gaplab::ub_pair_count(5, 1, 1000, 6, 11, cub);
  CHECK(zero.short_circuited);
  CHECK(zero.count == 0);

  // excluded prime case: a = B0 = 7 is allowed, P = 30
  uint64_t expect2 = 0;
  for (uint64_t z = 1; z <= 100; ++z)
    if (trial_is_prime(30 * z + 7) && trial_is_prime(30 * z + 11)) ++expect2;
  const auto r2 = gaplab::ub_pair_count(7, 7, 100, 7, 11, cub);
  CHECK(r2.primorial == 30);
  CHECK(r2.count == expect2);
  CHECK(!r2.short_circuited);

  CHECK_THROWS_AS(gaplab::ub_pair_count(5, 1, 1000, 7, 7, cub), DomainError);
  CHECK_THROWS_AS(gaplab::ub_pair_count(5, 1, 1000, 7, 31, cub), DomainError);
}

TEST_CASE("single progression counts at primorial moduli") {
  uint64_t expect = 0;
  for (uint64_t z = 1; z <= 100; ++z)
    if (trial_is_prime(30 * z + 7)) ++expect;
  const auto r = gaplab::ap_prime_count(5, 1, 7, 100);
  CHECK(r.primorial == 30);
  CHECK(r.count == expect);
  CHECK(r.reference_lower > 0.0);
  CHECK_THROWS_AS(gaplab::ap_prime_count(5, 1, 15, 100), DomainError);
  // monotone in Z
  uint64_t prev = 0;
  for (uint64_t z : {50ull, 100ull, 200ull}) {
    const auto rr = gaplab::ap_prime_count(5, 1, 7, z);
    CHECK(rr.count >= prev);
    prev = rr.count;
  }
}
