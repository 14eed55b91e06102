#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gaplab/sieve.hpp"
#include "gaplab/zero_region.hpp"

using gaplab::DomainError;
using gaplab::Interval;

namespace {

// independent 50-digit oracle values (tests/oracle/constants_oracle.py)
const char* kR1 = "3.2218752741789645469583158294075430023871506792569";
const char* kQuarterR1Inv = "7.7594561776978746075802917201963178324126627900916e-2";
const char* kCpapChain = "0.86466471676338730810600050502751559659236845409042";
const char* kCpap125 = "0.71349520313980989967511457335216239720684920767175";
const char* kCub = "25.377751665003604221823307272555799816983661902178";
const char* kHrToy = "1377.6145194482961610197869436587988506112675807284";

double rel_to(const Interval& got, const char* want) {
  const Interval ref = Interval::parse(want);
  const Interval d = (got - ref) / ref;
  return std::max(std::abs(d.lo_double()), std::abs(d.hi_double()));
}

}  // namespace

TEST_CASE("table constants") {
  const auto [r, r1] = gaplab::mccurley_constants();
  CHECK(rel_to(r, "9.6459") < 1e-70);
  CHECK(rel_to(r1, kR1) < 1e-45);
  // 1/24 < 1/(4 R1)
  const Interval cap = Interval::exact(1) / (Interval::exact(4) * r1);
  CHECK(rel_to(cap, kQuarterR1Inv) < 1e-45);
  CHECK(Interval::from_ratio(1, 24).certainly_less(cap));
}

TEST_CASE("decay exponent") {
  const Interval a = gaplab::gallagher_exponent(Interval::from_ratio(1, 24));
  CHECK(a.contains(Interval::from_ratio(1, 80)));
  CHECK(rel_to(a, "0.0125") < 1e-70);
  // homogeneous of degree one
  const Interval doubled = gaplab::gallagher_exponent(Interval::from_ratio(1, 12));
  CHECK(rel_to(doubled / a, "2") < 1e-55);
  CHECK_THROWS_AS(gaplab::gallagher_exponent(Interval::exact(0)), DomainError);
}

TEST_CASE("zero density exponent rule") {
  CHECK(gaplab::zero_density_exponent(6, 15) == 16);
  CHECK(gaplab::zero_density_exponent(3, 3) == 4);
  CHECK(gaplab::zero_density_exponent(6, 12) == 13);
  CHECK(gaplab::zero_density_exponent(6.5, 3) == 7);
  CHECK_THROWS_AS(gaplab::zero_density_exponent(0, 15), DomainError);
}

TEST_CASE("progression constants") {
  const auto [d160, c160] = gaplab::derive_pap(16, Interval::from_ratio(1, 80));
  CHECK(d160.contains(160.0));
  CHECK(d160.relative_width() == 0.0);
  CHECK(rel_to(c160, kCpapChain) < 1e-45);

  const auto [d100, c100] = gaplab::derive_pap(10, Interval::parse("0.0125"));
  CHECK(d100.contains(100.0));
  CHECK(rel_to(c100, kCpap125) < 1e-45);

  // saturating limit: enormous decay exponent forces C_PAP to 1
  const auto [d_big, c_big] = gaplab::derive_pap(16, Interval::exact(100));
  CHECK(d_big.contains(160.0));
  CHECK(c_big.certainly_greater_equal(Interval::parse("0.999999999")));
}

TEST_CASE("pair-count coefficient and finite product ratio") {
  const auto r10 = gaplab::selberg_cub(10);
  CHECK(rel_to(r10.c_ub, kCub) < 1e-45);
  // slow convergence: still 10%+ high at x = 10
  CHECK(r10.finite_ratio > 1.1);
  CHECK(r10.finite_ratio == doctest::Approx(1.1380506234810018).epsilon(1e-9));

  double prev = r10.finite_ratio;
  for (uint64_t x : {100ull, 1000ull, 10000ull, 100000ull}) {
    const auto r = gaplab::selberg_cub(x);
    CHECK(std::abs(r.finite_ratio - 1.0) < std::abs(prev - 1.0));
    prev = r.finite_ratio;
  }
  CHECK(std::abs(prev - 1.0) < 0.01);  // within 1% at 1e5
  CHECK_THROWS_AS(gaplab::selberg_cub(9), DomainError);
}

TEST_CASE("pair root-count classification") {
  const uint64_t p210 = gaplab::primorial_div(10, 1);
  // small coprime prime: no roots
  auto r = gaplab::rho_classify({7, 11, 13, 1, 10}, p210);
  CHECK(r.rho == 0);
  CHECK(!r.pair_count_zero);
  CHECK(r.which == gaplab::RhoCase::small_prime);
  // excluded prime contributes two roots
  const uint64_t p_no11 = gaplab::primorial_div(11, 11);
  r = gaplab::rho_classify({11, 7, 13, 11, 11}, p_no11);
  CHECK(r.rho == 2);
  CHECK(r.which == gaplab::RhoCase::excluded_prime);
  // large prime: one root iff a = b (mod p)
  r = gaplab::rho_classify({101, 7, 108, 1, 10}, p210);
  CHECK(r.rho == 1);
  CHECK(r.which == gaplab::RhoCase::large_prime);
  r = gaplab::rho_classify({101, 7, 109, 1, 10}, p210);
  CHECK(r.rho == 2);
  // a small sieved prime dividing a*b zeroes the pair count
  r = gaplab::rho_classify({7, 14, 13, 1, 10}, p210);
  CHECK(r.pair_count_zero);
  CHECK_THROWS_AS(gaplab::rho_classify({8, 1, 2, 1, 10}, p210), DomainError);
}

TEST_CASE("classification is a partition over valid inputs") {
  std::mt19937_64 rng(99);
  const std::vector<uint64_t> primes = gaplab::simple_sieve(200).to_vector();
  int small = 0, excluded = 0, large = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const uint64_t x = 10 + rng() % 20;
    uint64_t b0 = 1;
    if (rng() % 2) {
      // pick a prime <= x as the excluded modulus
      std::vector<uint64_t> cand;
      for (uint64_t p : primes)
        if (p <= x) cand.push_back(p);
      b0 = cand[rng() % cand.size()];
    }
    const uint64_t p = primes[rng() % primes.size()];
    const uint64_t big_p = gaplab::primorial_div(x, b0);
    const gaplab::RhoInput in{p, 1 + rng() % 300, 1 + rng() % 300, b0, x};
    const auto res = gaplab::rho_classify(in, big_p);
    // exactly one predicate fires, and it matches the reported case
    const bool is_small = p <= x && p != b0;
    const bool is_excluded = p == b0;
    const bool is_large = p > x;
    CHECK(int(is_small) + int(is_excluded) + int(is_large) == 1);
    if (is_small) {
      CHECK(res.which == gaplab::RhoCase::small_prime);
      ++small;
      if (!res.pair_count_zero) CHECK(res.rho == 0);
    }
    if (is_excluded) {
      CHECK(res.which == gaplab::RhoCase::excluded_prime);
      CHECK(res.rho == 2);
      ++excluded;
    }
    if (is_large) {
      CHECK(res.which == gaplab::RhoCase::large_prime);
      CHECK((res.rho == 1 || res.rho == 2));
      CHECK((res.rho == 1) == (in.a % p == in.b % p));
      ++large;
    }
  }
  // all three branches exercised
  CHECK(small > 0);
  CHECK(excluded > 0);
  CHECK(large > 0);
}

TEST_CASE("pair upper bound") {
  const double cub = Interval::parse(kCub).mid_double();
  // strict mode rejects the toy scale
  CHECK_THROWS_AS(gaplab::hr_pair_upper_bound(5, 1000, cub, true), DomainError);
  // relaxed evaluation matches the oracle
  const double toy = gaplab::hr_pair_upper_bound(5, 1000, cub, false);
  CHECK(toy == doctest::Approx(Interval::parse(kHrToy).mid_double()).epsilon(1e-12));
  // log-scale structural case: logs are exactly 1 and 100
  const double xe = std::exp(1.0);
  const double ze = std::exp(100.0);
  const double v = gaplab::hr_pair_upper_bound(xe, ze, cub, true);
  CHECK(v == doctest::Approx(cub * 1e-4 * ze).epsilon(1e-12));
  // enlarging Z with x fixed shrinks the ratio factor strictly
  const double z1 = std::pow(5.0, 10);
  const double b1 = gaplab::hr_pair_upper_bound(5, z1, cub, true) / z1;
  const double z2 = z1 * std::exp(10.0);
  const double b2 = gaplab::hr_pair_upper_bound(5, z2, cub, true) / z2;
  CHECK(b2 < b1);
}

TEST_CASE("default chain reproduces the headline component constants") {
  const auto chain = gaplab::derive_zero_region_chain({}, 1000);
  CHECK(chain.all_checks_pass());
  CHECK(chain.values.c_zd == 16);
  CHECK(chain.values.d_pap.contains(160.0));
  CHECK(chain.values.d_pap.relative_width() == 0.0);
  CHECK(rel_to(chain.values.c_pap, kCpapChain) < 1e-45);
  CHECK(rel_to(chain.values.c_ub, kCub) < 1e-45);
  CHECK(chain.values.a.contains(Interval::from_ratio(1, 80)));
  // determinism
  const auto chain2 = gaplab::derive_zero_region_chain({}, 1000);
  CHECK(chain.trace.to_csv() == chain2.trace.to_csv());
}

TEST_CASE("chain overrides") {
  gaplab::ZeroRegionOverrides ov;
  ov.c_zfr = Interval::from_ratio(1, 12);
  const auto chain = gaplab::derive_zero_region_chain(ov, 1000);
  // a = (3/10)(1/12) = 1/40, D = 160, C = 1 - e^-4
  CHECK(chain.values.a.contains(Interval::from_ratio(1, 40)));
  const Interval expect = Interval::exact(1) - (-Interval::exact(4)).exp();
  CHECK(rel_to(chain.values.c_pap / expect, "1") < 1e-50);
}
