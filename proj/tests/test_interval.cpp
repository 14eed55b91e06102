#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "gaplab/interval.hpp"

using gaplab::DomainError;
using gaplab::hp::Interval;

namespace {

// 50-digit reference values computed with an independent arbitrary-precision
// package (mpmath); regeneration script: tests/oracle/constants_oracle.py.
const char* kGamma = "0.57721566490153286060651209008240243104215933593992";
const char* kLog5 = "1.6094379124341003746007593332261876395256013542685";
const char* kEGamma = "1.7810724179901979852365041031071795491696452143034";

// Both arguments are razor-thin enclosures of nearby values; closeness is
// the right relation, strict containment of one in the other is not.
double rel_diff_mid(const Interval& a, const char* decimal) {
  const Interval ref = Interval::parse(decimal);
  const Interval d = (a - ref) / ref;
  return std::max(std::abs(d.lo_double()), std::abs(d.hi_double()));
}

}  // namespace

TEST_CASE("exact construction and containment") {
  const Interval one = Interval::exact(1);
  CHECK(one.contains(1.0));
  CHECK(one.relative_width() == 0.0);
  CHECK(Interval::exact(-3).strictly_negative());
  CHECK(Interval::from_double(0.5).contains(0.5));
}

TEST_CASE("rational parse encloses the true value") {
  const Interval third = Interval::parse("1/3");
  CHECK(third.lo_double() < third.hi_double());
  CHECK(third.relative_width() > 0.0);
  CHECK(third.relative_width() < 1e-70);
  CHECK(rel_diff_mid(third, "0.33333333333333333333333333333333333333333") < 1e-40);
  const Interval three_thirds = third * Interval::exact(3);
  CHECK(three_thirds.contains(1.0));
}

TEST_CASE("decimal and scientific parse") {
  // 2.5e-3 is exactly 1/400; the two independent parses enclose one value
  const Interval dec = Interval::parse("2.5e-3");
  const Interval rat = Interval::parse("1/400");
  CHECK(!dec.certainly_less(rat));
  CHECK(!rat.certainly_less(dec));
  CHECK(rel_diff_mid(dec, "0.0025") < 1e-70);
  CHECK_THROWS_AS(Interval::parse("abc"), DomainError);
  CHECK_THROWS_AS(Interval::parse("1/0"), DomainError);
}

TEST_CASE("huge exponents survive in log space") {
  const Interval big = Interval::parse("1e290000");
  const Interval l = big.log();
  CHECK(l.mid_double() == doctest::Approx(290000 * std::log(10.0)).epsilon(1e-12));
}

TEST_CASE("constants match the independent oracle") {
  CHECK(rel_diff_mid(Interval::euler_gamma(), kGamma) < 1e-45);
  CHECK(rel_diff_mid(Interval::log_ui(5), kLog5) < 1e-45);
  CHECK(rel_diff_mid(Interval::euler_gamma().exp(), kEGamma) < 1e-45);
}

TEST_CASE("arithmetic encloses exact rational results") {
  std::mt19937_64 rng(12345);
  auto rand_q = [&]() {
    const long num = static_cast<long>(rng() % 2001) - 1000;
    const long den = static_cast<long>(rng() % 999) + 1;
    return mpq_class(num, den);
  };
  for (int trial = 0; trial < 200; ++trial) {
    mpq_class qa = rand_q(), qb = rand_q();
    const Interval a = Interval::from_ratio(qa.get_num().get_si(), qa.get_den().get_si());
    const Interval b = Interval::from_ratio(qb.get_num().get_si(), qb.get_den().get_si());
    auto check_op = [&](const Interval& got, const mpq_class& want) {
      const Interval w = Interval::parse(mpq_class(want).get_str());
      CHECK(got.contains(w));
    };
    check_op(a + b, qa + qb);
    check_op(a - b, qa - qb);
    check_op(a * b, qa * qb);
    if (qb != 0 && !b.contains_zero()) check_op(a / b, qa / qb);
  }
}

TEST_CASE("division by zero-spanning interval is rejected") {
  // gamma - gamma leaves a sliver of rounding slack around zero
  const Interval span = Interval::euler_gamma() - Interval::euler_gamma();
  CHECK(span.contains_zero());
  CHECK_THROWS_AS(Interval::exact(1) / span, DomainError);
  CHECK_THROWS_AS(Interval::exact(1) / Interval::exact(0), DomainError);
}

TEST_CASE("monotone function enclosures") {
  const Interval e1 = Interval::exact(1).exp();
  CHECK(rel_diff_mid(e1, "2.7182818284590452353602874713526624977572470937") < 1e-45);
  CHECK(e1.log().contains(1.0));
  const Interval two = Interval::exact(2);
  CHECK((two.sqrt() * two.sqrt()).contains(2.0));
  CHECK_THROWS_AS(Interval::exact(-1).sqrt(), DomainError);
  CHECK_THROWS_AS(Interval::exact(0).log(), DomainError);
}

TEST_CASE("integer powers") {
  const Interval p = Interval::parse("1/3").pow_ui(3);
  CHECK(p.contains(Interval::parse("1/27")));
  CHECK(Interval::exact(7).pow_ui(0).contains(1.0));
  const Interval neg = Interval::exact(-2).pow_ui(3);
  CHECK(neg.contains(-8.0));
}

TEST_CASE("floor") {
  CHECK(Interval::parse("2.7").floor().contains(2.0));
  CHECK(Interval::parse("-0.5").floor().contains(-1.0));
}

TEST_CASE("certainty comparisons") {
  const Interval a = Interval::parse("1/3");
  const Interval b = Interval::parse("1/2");
  CHECK(a.certainly_less(b));
  CHECK(b.certainly_greater_equal(a));
  CHECK(!a.certainly_less(a));
  CHECK(a.certainly_less_equal(Interval::from_ratio(1, 3) + Interval::parse("1e-60")));
}

TEST_CASE("directed decimal output brackets the value") {
  const Interval third = Interval::parse("1/3");
  CHECK(third.lo_string(20) <= third.hi_string(20));
  CHECK(third.lo_string(20).substr(0, 10) == "3.33333333");
  // deterministic across recomputation
  CHECK(Interval::euler_gamma().lo_string(40) == Interval::euler_gamma().lo_string(40));
  CHECK(Interval::exact(1).radius_string() == Interval::exact(1).radius_string());
}

TEST_CASE("negation flips endpoints") {
  const Interval a = Interval::parse("1/3");
  const Interval n = -a;
  CHECK(n.strictly_negative());
  CHECK((a + n).contains(0.0));
}
