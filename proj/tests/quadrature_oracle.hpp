#pragma once

// Test-only numerical oracle: evaluates the simplex integrals by nested
// adaptive Simpson quadrature on a direct pointwise evaluation of the
// polynomial, fully independent of the exact rational assembly it checks.

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "gaplab/variational.hpp"

namespace oracle {

// Expanded plain-monomial form: one (coefficient, exponent tuple) term per
// distinct arrangement of each symmetrized monomial.
struct ExpandedPoly {
  unsigned r = 1;
  std::vector<std::pair<double, std::vector<unsigned>>> terms;
};

inline ExpandedPoly expand(const gaplab::SymmetricPolynomial& f) {
  ExpandedPoly out;
  out.r = f.r;
  for (size_t bi = 0; bi < f.basis.size(); ++bi) {
    std::vector<unsigned> e(f.r, 0);
    std::copy(f.basis[bi].begin(), f.basis[bi].end(), e.begin());
    std::sort(e.begin(), e.end());
    const double c = f.coeffs[bi].get_d();
    do {
      out.terms.emplace_back(c, e);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

inline double eval_expanded(const ExpandedPoly& f, const std::vector<double>& t) {
  double total = 0.0;
  for (const auto& [c, e] : f.terms) {
    double term = c;
    for (unsigned i = 0; i < f.r; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= t[i];
    total += term;
  }
  return total;
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol, int depth = 20) {
  if (b <= a) return 0.0;
  const double c = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fc = f(c);
  std::function<double(double, double, double, double, double, double, double, int)>
      rec = [&](double lo, double hi, double flo, double fhi, double fmid,
                double whole, double eps, int d) -> double {
    const double m = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + m), rm = 0.5 * (m + hi);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - m) / 6.0 * (fmid + 4.0 * frm + fhi);
    if (d <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
      return left + right + (left + right - whole) / 15.0;
    return rec(lo, m, flo, fmid, flm, left, eps * 0.5, d - 1) +
           rec(m, hi, fmid, fhi, frm, right, eps * 0.5, d - 1);
  };
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
  return rec(a, b, fa, fb, fc, whole, tol, depth);
}

// integral of F^2 over the simplex, nesting one coordinate at a time
inline double oracle_i(const gaplab::SymmetricPolynomial& f, double tol = 1e-11) {
  const ExpandedPoly ef = expand(f);
  std::vector<double> point(f.r, 0.0);
  std::function<double(unsigned, double, double)> level =
      [&](unsigned dim, double used, double eps) -> double {
    return adaptive_simpson(
        [&, dim, used, eps](double t) {
          point[dim] = t;
          if (dim + 1 == f.r) {
            const double v = eval_expanded(ef, point);
            return v * v;
          }
          return level(dim + 1, used + t, eps * 0.5);
        },
        0.0, 1.0 - used, eps);
  };
  return level(0, 0.0, tol);
}

// outer integral over the first r-1 coordinates of the squared inner
// integral in the last coordinate; for r = 1 the square of the integral
inline double oracle_j(const gaplab::SymmetricPolynomial& f, double tol = 1e-11) {
  const ExpandedPoly ef = expand(f);
  std::vector<double> point(f.r, 0.0);
  auto inner = [&](double used, double eps) {
    return adaptive_simpson(
        [&](double t) {
          point[f.r - 1] = t;
          return eval_expanded(ef, point);
        },
        0.0, 1.0 - used, eps);
  };
  if (f.r == 1) {
    const double v = inner(0.0, tol);
    return v * v;
  }
  std::function<double(unsigned, double, double)> level =
      [&](unsigned dim, double used, double eps) -> double {
    return adaptive_simpson(
        [&, dim, used, eps](double t) {
          point[dim] = t;
          if (dim + 2 == f.r) {
            const double v = inner(used + t, eps);
            return v * v;
          }
          return level(dim + 1, used + t, eps * 0.5);
        },
        0.0, 1.0 - used, eps);
  };
  return level(0, 0.0, tol);
}

}  // namespace oracle
