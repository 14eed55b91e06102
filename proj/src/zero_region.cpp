#include "gaplab/zero_region.hpp"

#include <cmath>

#include "gaplab/sieve.hpp"

namespace gaplab {

std::pair<Interval, Interval> mccurley_constants() {
  const Interval r = Interval::parse("9.6459");
  const Interval five = Interval::exact(5);
  const Interval r1 = (five - five.sqrt()) /
                      (Interval::exact(15) - Interval::exact(10) * Interval::exact(2).sqrt());
  return {r, r1};
}

Interval gallagher_exponent(const Interval& c_zfr) {
  require_positive(c_zfr, "c_ZFR");
  return Interval::from_ratio(3, 10) * c_zfr;
}

long zero_density_exponent(double jutila_exp, double trivial_exp) {
  if (!(jutila_exp > 0.0) || !(trivial_exp > 0.0))
    throw DomainError("exponents must be positive");
  const double mx = std::max(jutila_exp, trivial_exp);
  return static_cast<long>(std::floor(mx)) + 1;
}

std::pair<Interval, Interval> derive_pap(long c_zd, const Interval& a) {
  if (c_zd < 1) throw DomainError("c_ZD must be >= 1");
  require_positive(a, "a");
  const Interval d_pap = Interval::exact(10 * c_zd);
  const Interval c_pap = Interval::exact(1) - (-(a * d_pap)).exp();
  return {d_pap, c_pap};
}

SelbergResult selberg_cub(uint64_t x) {
  if (x < 10) throw DomainError("requires x >= 10");
  SelbergResult r;
  r.c_ub = Interval::exact(8) * (Interval::exact(2) * Interval::euler_gamma()).exp();
  long double prod = 1.0L;
  segmented_sieve(0, x).for_each([&](uint64_t p) {
    const long double f = static_cast<long double>(p) / static_cast<long double>(p - 1);
    prod *= f * f;
  });
  const long double denom_root =
      static_cast<long double>(e_gamma_double()) *
      std::log(static_cast<long double>(x));
  r.finite_ratio = static_cast<double>(prod / (denom_root * denom_root));
  return r;
}

RhoResult rho_classify(const RhoInput& in, uint64_t primorial) {
  if (!is_prime_u64(in.p)) throw DomainError("p must be prime");
  if (in.b0 != 1 && !is_prime_u64(in.b0))
    throw DomainError("B0 must be 1 or prime");
  if (in.b0 > in.x) throw DomainError("B0 must be <= x");

  RhoResult r;
  if (static_cast<double>(in.p) <= static_cast<double>(in.x) && in.p != in.b0) {
    // p divides the primorial: the pair form reduces to a*b mod p.
    r.which = RhoCase::small_prime;
    if ((in.a % in.p == 0) || (in.b % in.p == 0)) {
      r.pair_count_zero = true;
      r.rho = 0;
      return r;
    }
    r.rho = 0;
    return r;
  }
  if (primorial % in.p == 0)
    throw DomainError("P must be coprime to p outside the small-prime case");
  if (in.p == in.b0) {
    r.which = RhoCase::excluded_prime;
    r.rho = 2;
    return r;
  }
  // p > x
  r.which = RhoCase::large_prime;
  r.rho = (in.a % in.p == in.b % in.p) ? 1 : 2;
  return r;
}

double hr_pair_upper_bound(double x, double z, double c_ub, bool strict) {
  if (!(x > 1.0) || !(z > 1.0)) throw DomainError("requires x > 1 and Z > 1");
  const double lx = std::log(x);
  const double lz = std::log(z);
  if (strict && lz < 10.0 * lx)
    throw DomainError("requires log Z >= 10 log x (finite stand-in for "
                      "log x = o(log Z))");
  return c_ub * (lx / lz) * (lx / lz) * z;
}

bool ZeroRegionChain::all_checks_pass() const {
  for (const auto& c : checks)
    if (!c.satisfied) return false;
  return true;
}

ZeroRegionChain derive_zero_region_chain(const ZeroRegionOverrides& ov,
                                         uint64_t ratio_x) {
  ZeroRegionChain out;
  ZeroRegionConstants& v = out.values;
  DerivationTrace& tr = out.trace;

  auto [r, r1] = mccurley_constants();
  if (ov.mccurley_r) r = *ov.mccurley_r;
  v.mccurley_r = r;
  v.r1 = r1;
  tr.add({"R", "literal 9.6459 (externally sourced zero-free-region table)",
          r, false, {}});
  tr.add({"R1", "(5 - sqrt 5)/(15 - 10*sqrt 2)", r1, false, {}});

  v.c_zfr = ov.c_zfr ? *ov.c_zfr : Interval::from_ratio(1, 24);
  tr.add({"c_ZFR", "chosen zero-free-region constant (default 1/24)", v.c_zfr,
          false, {}});
  ConstraintCheck zfr_ok;
  zfr_ok.name = "c_ZFR_below_quarter_R1";
  const Interval cap = Interval::exact(1) / (Interval::exact(4) * v.r1);
  zfr_ok.satisfied = v.c_zfr.certainly_less(cap);
  zfr_ok.detail = "requires c_ZFR < 1/(4*R1) = " + cap.mid_string(12);
  out.checks.push_back(zfr_ok);

  v.a = gallagher_exponent(v.c_zfr);
  tr.add({"a", "(3/10)*c_ZFR", v.a, false, {"c_ZFR"}});

  v.jutila_exp = ov.jutila_exp.value_or(6.0);
  v.trivial_exp = ov.trivial_exp.value_or(15.0);
  v.c_zd = zero_density_exponent(v.jutila_exp, v.trivial_exp);
  tr.add({"jutila_exp", "density exponent on the high range (Q = T)",
          Interval::from_double(v.jutila_exp), false, {}});
  tr.add({"trivial_exp", "density exponent from the trivial count",
          Interval::from_double(v.trivial_exp), false, {}});
  tr.add({"c_ZD", "smallest integer > max(jutila_exp, trivial_exp)",
          Interval::exact(v.c_zd), false, {"jutila_exp", "trivial_exp"}});

  auto [d_pap, c_pap] = derive_pap(v.c_zd, v.a);
  v.d_pap = d_pap;
  v.c_pap = c_pap;
  tr.add({"D_PAP", "10*c_ZD", v.d_pap, false, {"c_ZD"}});
  tr.add({"C_PAP", "1 - exp(-a*D_PAP)", v.c_pap, false, {"a", "D_PAP"}});

  const SelbergResult sel = selberg_cub(ratio_x);
  v.c_ub = sel.c_ub;
  tr.add({"C_UB", "2^2 * 2! * e^(2*gamma)", v.c_ub, false, {}});
  tr.add({"finite_ratio",
          "prod_{p<=x}(1-1/p)^-2 / (e^gamma log x)^2 at x = " +
              std::to_string(ratio_x),
          Interval::from_double(sel.finite_ratio), true, {}});

  return out;
}

}  // namespace gaplab
