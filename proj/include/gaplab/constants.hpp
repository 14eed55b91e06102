#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaplab/interval.hpp"
#include "gaplab/trace.hpp"

namespace gaplab {

using hp::Interval;

// The tunable inputs of the explicit lower-bound chain. gamma is always the
// computed Euler-Mascheroni enclosure, never a decimal literal; M is derived
// on demand as max(d_pap, d_ub).
struct ComponentConstants {
  Interval theta;   // equidistribution level, in (0,1)
  Interval c_ij;    // variational ratio coefficient, > 0
  Interval c_pap;   // progression lower-bound coefficient, in (0,1]
  Interval d_pap;   // progression exponent, >= 1
  Interval c_ub;    // pair-count upper-bound coefficient, >= 1
  Interval d_ub;    // pair-count exponent, > 0
  Interval gamma;   // Euler-Mascheroni constant

  // theta = 1/3, c_ij = 1/4, c_pap = 1 - e^-2, d_pap = 160,
  // c_ub = 8*e^(2*gamma), d_ub = 1 (so M = 160).
  static ComponentConstants defaults();

  Interval big_m() const;       // max(d_pap, d_ub), recomputed every call
  void validate() const;        // throws DomainError when out of range
};

struct MomentBounds {
  Interval en_lower;    // lower bound on the mean prime count
  Interval en2_upper;   // upper bound on its second moment
  Interval prob_lower;  // exact second-moment (Cauchy-Schwarz) tail bound
};

struct EpsilonResult {
  Interval epsilon;
  ConstraintCheck below_one;
};

struct MSelection {
  long m = 0;                // floor(log(80c*log2x / A) / log 5)
  Interval a_prime;          // 5^-m * 80c * log2x
  bool feasible = false;     // m >= 0 attainable
  ConstraintCheck amplitude; // A <= A' <= 5A
  ConstraintCheck depth;     // m <= log3x / log 5
};

struct PipelineResult {
  Interval u;              // main-term sieve exponent
  Interval sigma_y_coeff;  // sigma*y / x main term: 80c*log2x
  Interval big_c;          // u / (160c*log2x)
};

// ---- individual derivation steps ----

// theta * c_ij / (12800 * log 5)
Interval sieve_scale_c(const Interval& theta, const Interval& c_ij);

// 2 * e^-gamma * c_pap^-1 * M * (1 + d_pap^-1) * k
Interval population_constant(const ComponentConstants& cc, long k);

// c_pap * e^gamma / (2 * (1 + d_pap^-1) * M); always half the admissible cap
Interval threshold_c1(const ComponentConstants& cc);

// (M^2 / (1800 A^2 c_ub)) * e^(2 gamma) / (4 (1+d_pap^-1)^2 (25 c_ub + 20 e^gamma M))
EpsilonResult separation_epsilon(const Interval& a_pop, const ComponentConstants& cc);

// 1800 * eps * A^2 * c_ub / M^2; requires 0 < eps < 1
Interval collision_probability(const Interval& epsilon, const Interval& a_pop,
                               const ComponentConstants& cc);

MomentBounds moment_bounds(const Interval& a_pop, const ComponentConstants& cc);

// The same tail bound with the c_pap^2 factor dropped; kept as a separate
// labeled quantity because the two differ by exactly c_pap^2.
Interval prob_lower_simplified(const ComponentConstants& cc);

// c_pap^2 * theta * c_ij * e^(4 gamma) /
//   (737280000 * log5 * c_ub * M * (1+d_pap^-1)^4 * (25 c_ub + 20 e^gamma M))
Interval headline_constant(const ComponentConstants& cc);

// (c_lg / k^2) * log X * log2 X * log4 X / log3 X, evaluated from log X so
// that X far beyond floating range stays representable. Requires log4 X > 0.
Interval lower_bound_gk(const Interval& log_x, long k, const Interval& c_lg);
Interval lower_bound_gk_from_x(double x, long k, const Interval& c_lg);

// (theta*c_ij/(9600c), theta*c_ij/(4800c)) plus the admissibility check
// C_low >= (5/4) log 5.
struct CRange {
  Interval c_low, c_high;
  ConstraintCheck admissible;
};
CRange c_target_range(const Interval& theta, const Interval& c_ij, const Interval& c);

// Residual-depth selection: requires 80c*log2x >= A for m >= 0.
MSelection choose_m(const Interval& a_pop, const Interval& c, const Interval& log_x);

// Main-term parameter pipeline; r may be an enclosure of a huge integer.
// Requires 1/2 <= phi_b_over_b <= 1 and r >= 2.
PipelineResult maynard_pipeline(const Interval& log_x, const Interval& r,
                                const Interval& phi_b_over_b, const Interval& theta,
                                const Interval& ji_ratio, const Interval& c);

// ---- full derivation with audit trace ----

struct DerivedParams {
  Interval c;
  Interval a_pop;
  Interval c1;
  Interval epsilon;
  Interval en_lower, en2_upper, prob_lower;
  Interval c_lg;
  Interval c_low, c_high;
  Interval epsilon0;  // 80*k*c / A
  // Present only when the derivation was evaluated at a finite log x.
  std::optional<long> m;
  std::optional<Interval> a_prime;
  std::optional<Interval> u;
  std::optional<Interval> sigma_y_coeff;
};

struct DerivationResult {
  DerivedParams params;
  DerivationTrace trace;
  std::vector<ConstraintCheck> checks;
  bool all_checks_pass() const;
};

// Runs the whole chain for a given k. When log_x is provided the
// x-dependent parameter selection (m, A', u, sigma_y coefficient, C) is
// evaluated there as well, with asymptotic main-term flags set.
DerivationResult derive_chain(const ComponentConstants& cc, long k,
                              const std::optional<Interval>& log_x = std::nullopt);

}  // namespace gaplab
