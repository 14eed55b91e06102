#include "gaplab/constants.hpp"

namespace gaplab {

namespace {

Interval one() { return Interval::exact(1); }

Interval e_gamma(const ComponentConstants& cc) { return cc.gamma.exp(); }

// (1 + d_pap^-1)
Interval d_factor(const ComponentConstants& cc) {
  return one() + one() / cc.d_pap;
}

// 25 c_ub + 20 e^gamma M
Interval tail_denominator(const ComponentConstants& cc) {
  return Interval::exact(25) * cc.c_ub +
         Interval::exact(20) * e_gamma(cc) * cc.big_m();
}

}  // namespace

ComponentConstants ComponentConstants::defaults() {
  ComponentConstants cc;
  cc.gamma = Interval::euler_gamma();
  cc.theta = Interval::from_ratio(1, 3);
  cc.c_ij = Interval::from_ratio(1, 4);
  cc.c_pap = Interval::exact(1) - (-Interval::exact(2)).exp();
  cc.d_pap = Interval::exact(160);
  cc.c_ub = Interval::exact(8) * (Interval::exact(2) * cc.gamma).exp();
  cc.d_ub = Interval::exact(1);
  return cc;
}

Interval ComponentConstants::big_m() const {
  return d_pap.certainly_greater_equal(d_ub) ? d_pap : d_ub;
}

void ComponentConstants::validate() const {
  if (!theta.strictly_positive() || !theta.certainly_less(Interval::exact(1)))
    throw DomainError("theta must lie in (0,1)");
  require_positive(c_ij, "c_IJ");
  if (!c_pap.strictly_positive() || !c_pap.certainly_less_equal(Interval::exact(1)))
    throw DomainError("C_PAP must lie in (0,1]");
  if (!d_pap.certainly_greater_equal(Interval::exact(1)))
    throw DomainError("D_PAP must be >= 1");
  if (!c_ub.certainly_greater_equal(Interval::exact(1)))
    throw DomainError("C_UB must be >= 1");
  require_positive(d_ub, "D_UB");
  if (!d_pap.certainly_greater_equal(d_ub) && !d_ub.certainly_greater_equal(d_pap))
    throw DomainError("D_PAP and D_UB overlap; M = max is ambiguous");
}

Interval sieve_scale_c(const Interval& theta, const Interval& c_ij) {
  require_positive(theta, "theta");
  require_positive(c_ij, "c_IJ");
  return theta * c_ij / (Interval::exact(12800) * Interval::log_ui(5));
}

Interval population_constant(const ComponentConstants& cc, long k) {
  if (k < 1) throw DomainError("k must be >= 1");
  cc.validate();
  return Interval::exact(2) / e_gamma(cc) / cc.c_pap * cc.big_m() * d_factor(cc) *
         Interval::exact(k);
}

Interval threshold_c1(const ComponentConstants& cc) {
  cc.validate();
  return cc.c_pap * e_gamma(cc) / (Interval::exact(2) * d_factor(cc) * cc.big_m());
}

EpsilonResult separation_epsilon(const Interval& a_pop, const ComponentConstants& cc) {
  if (!a_pop.certainly_greater_equal(Interval::exact(1)))
    throw DomainError("A must be >= 1");
  const Interval m = cc.big_m();
  const Interval eg = e_gamma(cc);
  Interval eps = m.pow_ui(2) / (Interval::exact(1800) * a_pop.pow_ui(2) * cc.c_ub);
  eps = eps * (Interval::exact(2) * cc.gamma).exp() /
        (Interval::exact(4) * d_factor(cc).pow_ui(2) * tail_denominator(cc));
  EpsilonResult result;
  result.epsilon = eps;
  result.below_one.name = "epsilon_below_one";
  result.below_one.satisfied = eps.certainly_less(Interval::exact(1));
  result.below_one.detail =
      "separation fraction epsilon = " + eps.hi_string(12) + " must be < 1";
  return result;
}

Interval collision_probability(const Interval& epsilon, const Interval& a_pop,
                               const ComponentConstants& cc) {
  if (!epsilon.strictly_positive() || !epsilon.certainly_less(Interval::exact(1)))
    throw DomainError("epsilon must lie in (0,1)");
  return Interval::exact(1800) * epsilon * a_pop.pow_ui(2) * cc.c_ub /
         cc.big_m().pow_ui(2);
}

MomentBounds moment_bounds(const Interval& a_pop, const ComponentConstants& cc) {
  cc.validate();
  const Interval c1 = threshold_c1(cc);
  // The chosen threshold is half the admissible cap; anything at or above
  // the cap makes the tail bound vacuous.
  const Interval cap = cc.c_pap * e_gamma(cc) / (d_factor(cc) * cc.big_m());
  if (!c1.certainly_less(cap))
    throw DomainError("threshold c1 must stay below C_PAP*e^gamma/((1+1/D_PAP)*M)");
  MomentBounds mb;
  mb.en_lower = cc.c_pap * e_gamma(cc) * a_pop / (d_factor(cc) * cc.big_m());
  mb.en2_upper = tail_denominator(cc) * a_pop.pow_ui(2) / cc.big_m().pow_ui(2);
  mb.prob_lower = (mb.en_lower - c1 * a_pop).pow_ui(2) / mb.en2_upper;
  return mb;
}

Interval prob_lower_simplified(const ComponentConstants& cc) {
  return (Interval::exact(2) * cc.gamma).exp() /
         (Interval::exact(4) * d_factor(cc).pow_ui(2) * tail_denominator(cc));
}

Interval headline_constant(const ComponentConstants& cc) {
  cc.validate();
  const Interval numerator =
      cc.c_pap.pow_ui(2) * cc.theta * cc.c_ij * (Interval::exact(4) * cc.gamma).exp();
  const Interval denominator = Interval::exact(737280000) * Interval::log_ui(5) *
                               cc.c_ub * cc.big_m() * d_factor(cc).pow_ui(4) *
                               tail_denominator(cc);
  return numerator / denominator;
}

Interval lower_bound_gk(const Interval& log_x, long k, const Interval& c_lg) {
  if (k < 1) throw DomainError("k must be >= 1");
  require_positive(log_x, "log X");
  const Interval l2 = log_x.log();
  if (!l2.strictly_positive()) throw DomainError("X too small: log2 X <= 0");
  const Interval l3 = l2.log();
  if (!l3.strictly_positive()) throw DomainError("X too small: log3 X <= 0");
  const Interval l4 = l3.log();
  if (!l4.strictly_positive()) throw DomainError("X too small: log4 X <= 0");
  return c_lg / Interval::exact(k).pow_ui(2) * log_x * l2 * l4 / l3;
}

Interval lower_bound_gk_from_x(double x, long k, const Interval& c_lg) {
  if (!(x > 1.0)) throw DomainError("X too small: log X <= 0");
  return lower_bound_gk(Interval::from_double(x).log(), k, c_lg);
}

CRange c_target_range(const Interval& theta, const Interval& c_ij, const Interval& c) {
  require_positive(theta, "theta");
  require_positive(c_ij, "c_IJ");
  require_positive(c, "c");
  CRange out;
  out.c_low = theta * c_ij / (Interval::exact(9600) * c);
  out.c_high = theta * c_ij / (Interval::exact(4800) * c);
  const Interval floor_bound = Interval::from_ratio(5, 4) * Interval::log_ui(5);
  out.admissible.name = "C_low_admissible";
  out.admissible.satisfied = out.c_low.certainly_greater_equal(floor_bound);
  out.admissible.detail = "requires C_low >= (5/4)*log 5; C_low = " +
                          out.c_low.mid_string(12);
  return out;
}

MSelection choose_m(const Interval& a_pop, const Interval& c, const Interval& log_x) {
  if (!a_pop.certainly_greater_equal(Interval::exact(1)))
    throw DomainError("A must be >= 1");
  require_positive(c, "c");
  if (!log_x.certainly_greater_equal(Interval::exact(10).log()))
    throw DomainError("x must be >= 10");
  const Interval l2 = log_x.log();
  const Interval target = Interval::exact(80) * c * l2 / a_pop;  // 80c*log2x / A

  MSelection sel;
  // feasible unless the ratio is certainly below 1 (boundary cases count)
  sel.feasible = !target.certainly_less(Interval::exact(1));
  if (!sel.feasible) {
    sel.m = -1;
    sel.amplitude = {"residual_depth_feasible", false,
                     "requires 80c*log2(x) >= A; ratio = " + target.mid_string(12)};
    sel.depth = {"residual_depth_bound", false, "not evaluated (infeasible)"};
    return sel;
  }
  const Interval m_real = target.log() / Interval::log_ui(5);
  const Interval m_floor = m_real.floor();
  const double m_lo = m_floor.lo_double();
  const double m_hi = m_floor.hi_double();
  // When the enclosure of log5(target) straddles an integer (target an exact
  // power of 5 up to rounding), the upper floor is the right reading.
  sel.m = static_cast<long>(m_hi);
  if (m_hi - m_lo > 1.0)
    throw DomainError("residual depth m unresolvable at working precision");
  sel.a_prime = Interval::exact(80) * c * l2 / Interval::exact(5).pow_ui(sel.m);

  // Reported as violated only when the inequality certainly fails; boundary
  // cases (A' = A or A' = 5A exactly) pass.
  const bool lower_bad = sel.a_prime.certainly_less(a_pop);
  const bool upper_bad = (Interval::exact(5) * a_pop).certainly_less(sel.a_prime);
  sel.amplitude.name = "residual_amplitude";
  sel.amplitude.satisfied = !lower_bad && !upper_bad;
  sel.amplitude.detail = "requires A <= A' <= 5A; A' = " + sel.a_prime.mid_string(12);

  const Interval depth_cap = log_x.log().log() / Interval::log_ui(5);
  sel.depth.name = "residual_depth_bound";
  sel.depth.satisfied = !depth_cap.certainly_less(Interval::exact(sel.m));
  sel.depth.detail = "requires m <= log3(x)/log 5 = " + depth_cap.mid_string(12) +
                     "; m = " + std::to_string(sel.m);
  return sel;
}

PipelineResult maynard_pipeline(const Interval& log_x, const Interval& r,
                                const Interval& phi_b_over_b, const Interval& theta,
                                const Interval& ji_ratio, const Interval& c) {
  if (!phi_b_over_b.certainly_greater_equal(Interval::from_ratio(1, 2)) ||
      !phi_b_over_b.certainly_less_equal(Interval::exact(1)))
    throw DomainError("phi(B)/B must lie in [1/2, 1]");
  if (!r.certainly_greater_equal(Interval::exact(2)))
    throw DomainError("r must be >= 2");
  require_positive(log_x, "log x");
  require_positive(c, "c");
  PipelineResult out;
  out.u = phi_b_over_b * (theta / Interval::exact(3)) *
          (r * ji_ratio / Interval::exact(2));
  const Interval l2 = log_x.log();
  out.sigma_y_coeff = Interval::exact(80) * c * l2;
  out.big_c = out.u / (Interval::exact(160) * c * l2);
  return out;
}

bool DerivationResult::all_checks_pass() const {
  for (const auto& c : checks)
    if (!c.satisfied) return false;
  return true;
}

DerivationResult derive_chain(const ComponentConstants& cc, long k,
                              const std::optional<Interval>& log_x) {
  if (k < 1) throw DomainError("k must be >= 1");
  cc.validate();

  DerivationResult res;
  DerivationTrace& tr = res.trace;
  const Interval eg = e_gamma(cc);
  const Interval m = cc.big_m();

  tr.add({"gamma", "Euler-Mascheroni constant", cc.gamma, false, {}});
  tr.add({"log5", "log 5", Interval::log_ui(5), false, {}});
  tr.add({"e_gamma", "exp(gamma)", eg, false, {"gamma"}});
  tr.add({"theta", "input", cc.theta, false, {}});
  tr.add({"c_IJ", "input", cc.c_ij, false, {}});
  tr.add({"C_PAP", "input", cc.c_pap, false, {}});
  tr.add({"D_PAP", "input", cc.d_pap, false, {}});
  tr.add({"C_UB", "input", cc.c_ub, false, {}});
  tr.add({"D_UB", "input", cc.d_ub, false, {}});
  tr.add({"M", "max(D_PAP, D_UB)", m, false, {"D_PAP", "D_UB"}});
  tr.add({"k", "input", Interval::exact(k), false, {}});

  DerivedParams& p = res.params;
  p.c = sieve_scale_c(cc.theta, cc.c_ij);
  tr.add({"c", "theta*c_IJ/(12800*log5)", p.c, false, {"theta", "c_IJ", "log5"}});

  p.a_pop = population_constant(cc, k);
  tr.add({"A", "2*exp(-gamma)*C_PAP^-1*M*(1+1/D_PAP)*k", p.a_pop, false,
          {"e_gamma", "C_PAP", "M", "D_PAP", "k"}});

  p.c1 = threshold_c1(cc);
  tr.add({"c1", "C_PAP*e^gamma/(2*(1+1/D_PAP)*M)", p.c1, false,
          {"C_PAP", "e_gamma", "D_PAP", "M"}});

  auto eps = separation_epsilon(p.a_pop, cc);
  p.epsilon = eps.epsilon;
  tr.add({"epsilon",
          "(M^2/(1800*A^2*C_UB)) * e^(2*gamma)/(4*(1+1/D_PAP)^2*(25*C_UB+20*e^gamma*M))",
          p.epsilon, false, {"M", "A", "C_UB", "e_gamma", "D_PAP"}});
  res.checks.push_back(eps.below_one);

  tr.add({"collision_bound", "1800*epsilon*A^2*C_UB/M^2",
          collision_probability(p.epsilon, p.a_pop, cc), false,
          {"epsilon", "A", "C_UB", "M"}});

  const MomentBounds mb = moment_bounds(p.a_pop, cc);
  p.en_lower = mb.en_lower;
  p.en2_upper = mb.en2_upper;
  p.prob_lower = mb.prob_lower;
  tr.add({"EN_lower", "C_PAP*e^gamma*A/((1+1/D_PAP)*M)", p.en_lower, false,
          {"C_PAP", "e_gamma", "A", "D_PAP", "M"}});
  tr.add({"EN2_upper", "(25*C_UB+20*e^gamma*M)*A^2/M^2", p.en2_upper, false,
          {"C_UB", "e_gamma", "M", "A"}});
  tr.add({"prob_lower", "(EN_lower - c1*A)^2 / EN2_upper", p.prob_lower, false,
          {"EN_lower", "c1", "A", "EN2_upper"}});
  tr.add({"prob_lower_simplified",
          "e^(2*gamma)/(4*(1+1/D_PAP)^2*(25*C_UB+20*e^gamma*M)); "
          "equals prob_lower/C_PAP^2",
          prob_lower_simplified(cc), false, {"e_gamma", "D_PAP", "C_UB", "M"}});

  const CRange crange = c_target_range(cc.theta, cc.c_ij, p.c);
  p.c_low = crange.c_low;
  p.c_high = crange.c_high;
  tr.add({"C_low", "theta*c_IJ/(9600*c)", p.c_low, false, {"theta", "c_IJ", "c"}});
  tr.add({"C_high", "theta*c_IJ/(4800*c)", p.c_high, false, {"theta", "c_IJ", "c"}});
  res.checks.push_back(crange.admissible);

  p.epsilon0 = Interval::exact(80) * Interval::exact(k) * p.c / p.a_pop;
  tr.add({"epsilon0", "80*k*c/A", p.epsilon0, false, {"k", "c", "A"}});

  p.c_lg = headline_constant(cc);
  tr.add({"c_LG",
          "C_PAP^2*theta*c_IJ*e^(4*gamma) / "
          "(737280000*log5*C_UB*M*(1+1/D_PAP)^4*(25*C_UB+20*e^gamma*M))",
          p.c_lg, false,
          {"C_PAP", "theta", "c_IJ", "e_gamma", "log5", "C_UB", "M", "D_PAP"}});

  if (log_x.has_value()) {
    const Interval& lx = *log_x;
    tr.add({"log_x", "input (evaluation point, as log x)", lx, false, {}});
    const MSelection sel = choose_m(p.a_pop, p.c, lx);
    res.checks.push_back(sel.amplitude);
    res.checks.push_back(sel.depth);
    if (sel.feasible) {
      p.m = sel.m;
      p.a_prime = sel.a_prime;
      tr.add({"m", "floor(log(80*c*log2x/A)/log5)", Interval::exact(sel.m), true,
              {"c", "A", "log_x", "log5"}});
      tr.add({"A_prime", "5^-m * 80*c*log2x", sel.a_prime, true,
              {"m", "c", "log_x"}});
    }
    // r = floor(log^(1/5) x) and the resulting ratio main term.
    const Interval r =
        (lx.log() / Interval::exact(5)).exp().floor();
    if (r.certainly_greater_equal(Interval::exact(2))) {
      const Interval ji = cc.c_ij * r.log() / r;
      const PipelineResult pipe =
          maynard_pipeline(lx, r, Interval::exact(1), cc.theta, ji, p.c);
      p.u = pipe.u;
      p.sigma_y_coeff = pipe.sigma_y_coeff;
      tr.add({"r", "floor(exp(log2x/5)) = floor(log^(1/5) x)", r, true, {"log_x"}});
      tr.add({"JI_ratio", "c_IJ*log(r)/r (main term)", ji, true, {"c_IJ", "r"}});
      tr.add({"u", "(phi(B)/B)*(theta/3)*(r*JI_ratio/2), phi(B)/B = 1", pipe.u, true,
              {"theta", "r", "JI_ratio"}});
      tr.add({"sigma_y_coeff", "80*c*log2x (sigma*y main term / x)",
              pipe.sigma_y_coeff, true, {"c", "log_x"}});
      tr.add({"C", "u/(160*c*log2x)", pipe.big_c, true, {"u", "c", "log_x"}});
      ConstraintCheck in_range;
      in_range.name = "C_in_target_range";
      in_range.satisfied = !pipe.big_c.certainly_less(p.c_low) &&
                           !p.c_high.certainly_less(pipe.big_c);
      in_range.detail = "requires C_low <= C <= C_high; C = " +
                        pipe.big_c.mid_string(12);
      res.checks.push_back(in_range);
    }
  }

  return res;
}

}  // namespace gaplab
