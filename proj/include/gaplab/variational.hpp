#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gaplab/errors.hpp"

namespace gaplab {

using Rational = mpq_class;

// A symmetrized monomial: the exponent multiset, stored as a weakly
// decreasing vector (trailing zeros implicit up to the dimension r). The
// polynomial it names is the sum of x^sigma over the distinct permutations
// sigma of the padded exponent tuple.
using ExponentMultiset = std::vector<unsigned>;

// A symmetric polynomial on r variables in the symmetrized-monomial basis,
// with exact rational coefficients. Supported on the standard simplex
// {t >= 0, t_1 + ... + t_r <= 1} by the integration domain.
struct SymmetricPolynomial {
  unsigned r = 1;
  std::vector<ExponentMultiset> basis;
  std::vector<Rational> coeffs;
};

// integral over the simplex of prod t_i^{a_i} = prod(a_i!) / (r + sum a_i)!
// `exponents` must have exactly r entries.
Rational simplex_monomial_integral(unsigned r, const std::vector<long>& exponents);

// All exponent multisets with at most r parts and total degree <= degree,
// in a fixed deterministic order (degree-major, lexicographic).
std::vector<ExponentMultiset> monomial_basis(unsigned r, unsigned degree);

struct GramPair {
  // gram_i[i][j] = integral of m_i * m_j over the simplex;
  // gram_j[i][j] = the squared-inner-integral pairing of m_i and m_j.
  std::vector<std::vector<Rational>> gram_i;
  std::vector<std::vector<Rational>> gram_j;
};

// Exact assembly, OpenMP-parallel over entries; results are independent of
// the thread count.
GramPair gram_matrices(unsigned r, const std::vector<ExponentMultiset>& basis);

// integral of F^2 over the simplex
Rational compute_i(const SymmetricPolynomial& f);
// integral over the (r-1)-simplex of the squared inner integral of F in the
// last coordinate; for r = 1 this is the square of the integral of F.
Rational compute_j(const SymmetricPolynomial& f);

struct RatioResult {
  unsigned r = 0;
  unsigned degree = 0;
  double ratio = 0.0;
  std::vector<double> coefficients;  // maximizer, normalized
  std::size_t basis_size = 0;
  GramPair gram;
  std::vector<ExponentMultiset> basis;
};

// Largest generalized eigenvalue of (gram_j, gram_i) over the degree-capped
// basis, i.e. the maximum of J(F)/I(F). Throws ConditioningError when the
// floating reduction fails or the eigenpair residual exceeds 1e-10 relative.
RatioResult maximize_ratio(unsigned r, unsigned degree);

struct CijCheck {
  bool pass = false;
  double margin = 0.0;  // ratio - c_ij * log(r)/r
};
// Requires r >= 2 (the comparison degenerates at r = 1).
CijCheck check_cij_bound(unsigned r, double ratio, double c_ij);

}  // namespace gaplab
