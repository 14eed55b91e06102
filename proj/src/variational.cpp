#include "gaplab/variational.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace gaplab {

namespace {

std::vector<mpz_class> factorial_table(unsigned n) {
  std::vector<mpz_class> f(n + 1);
  f[0] = 1;
  for (unsigned i = 1; i <= n; ++i) f[i] = f[i - 1] * static_cast<long>(i);
  return f;
}

unsigned total_degree(const ExponentMultiset& e) {
  unsigned s = 0;
  for (unsigned v : e) s += v;
  return s;
}

// Weakly increasing padded tuple, the starting point for next_permutation
// enumeration of all distinct arrangements.
std::vector<unsigned> padded_ascending(const ExponentMultiset& e, unsigned slots) {
  std::vector<unsigned> t(slots, 0);
  std::copy(e.begin(), e.end(), t.begin());
  std::sort(t.begin(), t.end());
  return t;
}

// Number of distinct arrangements of the multiset over `slots` positions.
mpz_class arrangement_count(const ExponentMultiset& e, unsigned slots,
                            const std::vector<mpz_class>& fact) {
  mpz_class denom = 1;
  auto t = padded_ascending(e, slots);
  unsigned run = 1;
  for (size_t i = 1; i <= t.size(); ++i) {
    if (i < t.size() && t[i] == t[i - 1]) {
      ++run;
    } else {
      denom *= fact[run];
      run = 1;
    }
  }
  return fact[slots] / denom;
}

// Entry of the plain Gram matrix:
//   sum over arrangements alpha of A and beta of B of
//   prod (alpha_i + beta_i)! / (r + |A| + |B|)!.
// By symmetry of the integral the alpha-sum collapses to a multiplicity.
Rational gram_i_entry(unsigned r, const ExponentMultiset& a,
                      const ExponentMultiset& b,
                      const std::vector<mpz_class>& fact) {
  const auto alpha = padded_ascending(a, r);
  auto beta = padded_ascending(b, r);
  mpz_class sum = 0;
  do {
    mpz_class term = 1;
    for (unsigned i = 0; i < r; ++i) term *= fact[alpha[i] + beta[i]];
    sum += term;
  } while (std::next_permutation(beta.begin(), beta.end()));
  const mpz_class mult = arrangement_count(a, r, fact);
  Rational out(mult * sum, fact[r + total_degree(a) + total_degree(b)]);
  out.canonicalize();
  return out;
}

// Entry of the inner-integral Gram matrix. Splitting off the last
// coordinate (value v from A, w from B) and integrating it first gives
//   sum_{v,w} (v+w+2)!/((v+1)(w+1)) * [arrangements of A\v] *
//   sum over arrangements beta of B\w of prod (alpha_i + beta_i)!
// all over the constant (r + 1 + |A| + |B|)!.
Rational gram_j_entry(unsigned r, const ExponentMultiset& a,
                      const ExponentMultiset& b,
                      const std::vector<mpz_class>& fact) {
  auto distinct_values = [](const ExponentMultiset& e, unsigned slots) {
    std::vector<unsigned> vals(e.begin(), e.end());
    while (vals.size() < slots) vals.push_back(0);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
  };
  auto remove_one = [](const ExponentMultiset& e, unsigned slots, unsigned v) {
    std::vector<unsigned> rest;
    bool removed = false;
    for (unsigned u : e) {
      if (!removed && u == v) {
        removed = true;
        continue;
      }
      rest.push_back(u);
    }
    // v = 0 may come from implicit zero padding; shrinking the slot count
    // by one removes it.
    if (!removed && v != 0)
      throw DomainError("internal: exponent not present in multiset");
    while (rest.size() < slots - 1) rest.push_back(0);
    return rest;
  };

  Rational total(0);
  for (unsigned v : distinct_values(a, r)) {
    const auto a_rest = remove_one(a, r, v);
    const mpz_class a_mult =
        arrangement_count(ExponentMultiset(a_rest.begin(), a_rest.end()), r - 1, fact);
    const auto alpha = padded_ascending(
        ExponentMultiset(a_rest.begin(), a_rest.end()), r - 1);
    for (unsigned w : distinct_values(b, r)) {
      const auto b_rest = remove_one(b, r, w);
      auto beta = padded_ascending(
          ExponentMultiset(b_rest.begin(), b_rest.end()), r - 1);
      mpz_class inner = 0;
      do {
        mpz_class term = 1;
        for (unsigned i = 0; i + 1 < r; ++i) term *= fact[alpha[i] + beta[i]];
        inner += term;
      } while (std::next_permutation(beta.begin(), beta.end()));
      Rational term(a_mult * fact[v + w + 2] * inner,
                    mpz_class(v + 1) * mpz_class(w + 1));
      term.canonicalize();
      total += term;
    }
  }
  total /= Rational(fact[r + 1 + total_degree(a) + total_degree(b)]);
  return total;
}

}  // namespace

Rational simplex_monomial_integral(unsigned r, const std::vector<long>& exponents) {
  if (r == 0) throw DomainError("dimension must be >= 1");
  if (exponents.size() != r)
    throw DomainError("exponent vector length must equal the dimension");
  long total = 0;
  for (long e : exponents) {
    if (e < 0) throw DomainError("exponents must be nonnegative");
    total += e;
  }
  const auto fact = factorial_table(static_cast<unsigned>(r + total));
  mpz_class num = 1;
  for (long e : exponents) num *= fact[static_cast<unsigned>(e)];
  Rational out(num, fact[static_cast<unsigned>(r + total)]);
  out.canonicalize();
  return out;
}

std::vector<ExponentMultiset> monomial_basis(unsigned r, unsigned degree) {
  if (r == 0) throw DomainError("dimension must be >= 1");
  // Partitions of d into at most r parts, degree-major order.
  std::vector<ExponentMultiset> all;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      all.push_back(cur);
      return;
    }
    if (cur.size() == r) return;
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  for (unsigned d = 0; d <= degree; ++d) rec(rec, d, d);
  return all;
}

GramPair gram_matrices(unsigned r, const std::vector<ExponentMultiset>& basis) {
  if (r == 0) throw DomainError("dimension must be >= 1");
  unsigned max_deg = 0;
  for (const auto& e : basis) {
    if (e.size() > r) throw DomainError("basis element has more parts than r");
    max_deg = std::max(max_deg, total_degree(e));
  }
  const auto fact = factorial_table(r + 2 * max_deg + 2);
  const size_t n = basis.size();
  GramPair g;
  g.gram_i.assign(n, std::vector<Rational>(n));
  g.gram_j.assign(n, std::vector<Rational>(n));

  std::vector<std::pair<unsigned, unsigned>> entries;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) entries.emplace_back(i, j);

#pragma omp parallel for schedule(dynamic)
  for (int64_t t = 0; t < static_cast<int64_t>(entries.size()); ++t) {
    const auto [i, j] = entries[static_cast<size_t>(t)];
    g.gram_i[i][j] = gram_i_entry(r, basis[i], basis[j], fact);
    g.gram_j[i][j] = gram_j_entry(r, basis[i], basis[j], fact);
  }
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < i; ++j) {
      g.gram_i[i][j] = g.gram_i[j][i];
      g.gram_j[i][j] = g.gram_j[j][i];
    }
  }
  return g;
}

Rational compute_i(const SymmetricPolynomial& f) {
  if (f.basis.size() != f.coeffs.size())
    throw DomainError("basis/coefficient size mismatch");
  const GramPair g = gram_matrices(f.r, f.basis);
  Rational total(0);
  for (size_t i = 0; i < f.basis.size(); ++i)
    for (size_t j = 0; j < f.basis.size(); ++j)
      total += f.coeffs[i] * f.coeffs[j] * g.gram_i[i][j];
  return total;
}

Rational compute_j(const SymmetricPolynomial& f) {
  if (f.basis.size() != f.coeffs.size())
    throw DomainError("basis/coefficient size mismatch");
  const GramPair g = gram_matrices(f.r, f.basis);
  Rational total(0);
  for (size_t i = 0; i < f.basis.size(); ++i)
    for (size_t j = 0; j < f.basis.size(); ++j)
      total += f.coeffs[i] * f.coeffs[j] * g.gram_j[i][j];
  return total;
}

RatioResult maximize_ratio(unsigned r, unsigned degree) {
  if (r == 0) throw DomainError("dimension must be >= 1");
  RatioResult res;
  res.r = r;
  res.degree = degree;
  res.basis = monomial_basis(r, degree);
  res.basis_size = res.basis.size();
  res.gram = gram_matrices(r, res.basis);
  const size_t n = res.basis.size();

  if (n == 1) {
    // one-dimensional quotient, exact
    const Rational q = res.gram.gram_j[0][0] / res.gram.gram_i[0][0];
    res.ratio = q.get_d();
    res.coefficients = {1.0};
    return res;
  }

  Eigen::MatrixXd gi(n, n), gj(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      gi(i, j) = res.gram.gram_i[i][j].get_d();
      gj(i, j) = res.gram.gram_j[i][j].get_d();
    }
  }

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(gj, gi);
  if (solver.info() != Eigen::Success)
    throw ConditioningError("generalized eigensolve failed on basis of size " +
                            std::to_string(n));
  const Eigen::Index top = static_cast<Eigen::Index>(n) - 1;
  const double lambda = solver.eigenvalues()(top);
  Eigen::VectorXd v = solver.eigenvectors().col(top);

  const Eigen::VectorXd resid = gj * v - lambda * (gi * v);
  const double rel = resid.lpNorm<Eigen::Infinity>() /
                     std::max(1e-300, (gi * v).lpNorm<Eigen::Infinity>() *
                                          std::max(std::abs(lambda), 1.0));
  if (rel > 1e-10)
    throw ConditioningError("eigenpair residual " + std::to_string(rel) +
                            " too large on basis of size " + std::to_string(n));

  // Deterministic normalization: unit max-abs entry, first significant
  // entry positive.
  double scale = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > std::abs(scale)) scale = v(i);
  if (scale != 0.0) v /= scale;

  res.ratio = lambda;
  res.coefficients.assign(v.data(), v.data() + v.size());
  return res;
}

CijCheck check_cij_bound(unsigned r, double ratio, double c_ij) {
  if (r < 2) throw DomainError("requires r >= 2");
  CijCheck c;
  c.margin = ratio - c_ij * std::log(static_cast<double>(r)) / static_cast<double>(r);
  c.pass = c.margin >= 0.0;
  return c;
}

}  // namespace gaplab
