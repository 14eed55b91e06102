#include "gaplab/interval.hpp"

#include <gmp.h>

#include <cfloat>
#include <cmath>
#include <cstdio>

namespace gaplab::hp {

namespace {

std::string mpfr_to_string(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
  const char* rc = "N";
  switch (rnd) {
    case MPFR_RNDD: rc = "D"; break;
    case MPFR_RNDU: rc = "U"; break;
    case MPFR_RNDZ: rc = "Z"; break;
    default: rc = "N"; break;
  }
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dR%se", digits, rc);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, v);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace

Interval::Interval() {
  mpfr_init2(lo_, kPrecisionBits);
  mpfr_init2(hi_, kPrecisionBits);
  mpfr_set_nan(lo_);
  mpfr_set_nan(hi_);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, kPrecisionBits);
  mpfr_init2(hi_, kPrecisionBits);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, kPrecisionBits);
  mpfr_init2(hi_, kPrecisionBits);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(long v) {
  Interval r;
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::exact_ui(unsigned long v) {
  Interval r;
  mpfr_set_ui(r.lo_, v, MPFR_RNDD);
  mpfr_set_ui(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value");
  Interval r;
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_ratio(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Interval r;
  mpfr_set_si(r.lo_, num, MPFR_RNDD);
  mpfr_set_si(r.hi_, num, MPFR_RNDU);
  mpfr_div_si(r.lo_, r.lo_, den, den > 0 ? MPFR_RNDD : MPFR_RNDU);
  mpfr_div_si(r.hi_, r.hi_, den, den > 0 ? MPFR_RNDU : MPFR_RNDD);
  if (den < 0) mpfr_swap(r.lo_, r.hi_);
  return r;
}

Interval Interval::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, text.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
      mpq_clear(q);
      throw DomainError("unparseable rational: '" + text + "'");
    }
    mpq_canonicalize(q);
    Interval r;
    mpfr_set_q(r.lo_, q, MPFR_RNDD);
    mpfr_set_q(r.hi_, q, MPFR_RNDU);
    mpq_clear(q);
    return r;
  }
  Interval r;
  if (mpfr_set_str(r.lo_, text.c_str(), 10, MPFR_RNDD) != 0)
    throw DomainError("unparseable number: '" + text + "'");
  mpfr_set_str(r.hi_, text.c_str(), 10, MPFR_RNDU);
  return r;
}

Interval Interval::euler_gamma() {
  Interval r;
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log_ui(unsigned long v) {
  if (v == 0) throw DomainError("log of zero");
  Interval r;
  mpfr_set_ui(r.lo_, v, MPFR_RNDN);
  mpfr_log(r.hi_, r.lo_, MPFR_RNDU);
  mpfr_log(r.lo_, r.lo_, MPFR_RNDD);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r;
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

namespace {

// min/max over the four endpoint products, rounded outward.
void corners(mpfr_ptr out, mpfr_srcptr alo, mpfr_srcptr ahi, mpfr_srcptr blo,
             mpfr_srcptr bhi, bool want_min, bool divide) {
  mpfr_t t, best;
  mpfr_init2(t, kPrecisionBits);
  mpfr_init2(best, kPrecisionBits);
  const mpfr_rnd_t rnd = want_min ? MPFR_RNDD : MPFR_RNDU;
  mpfr_srcptr as[2] = {alo, ahi};
  mpfr_srcptr bs[2] = {blo, bhi};
  bool first = true;
  for (auto a : as) {
    for (auto b : bs) {
      if (divide)
        mpfr_div(t, a, b, rnd);
      else
        mpfr_mul(t, a, b, rnd);
      if (first || (want_min ? mpfr_less_p(t, best) : mpfr_greater_p(t, best)))
        mpfr_set(best, t, rnd);
      first = false;
    }
  }
  mpfr_set(out, best, rnd);
  mpfr_clear(t);
  mpfr_clear(best);
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) {
  Interval r;
  corners(r.lo_, a.lo_, a.hi_, b.lo_, b.hi_, true, false);
  corners(r.hi_, a.lo_, a.hi_, b.lo_, b.hi_, false, false);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("division by interval containing zero");
  Interval r;
  corners(r.lo_, a.lo_, a.hi_, b.lo_, b.hi_, true, true);
  corners(r.hi_, a.lo_, a.hi_, b.lo_, b.hi_, false, true);
  return r;
}

Interval Interval::exp() const {
  Interval r;
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw DomainError("log of interval reaching zero");
  Interval r;
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw DomainError("sqrt of negative interval");
  Interval r;
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pow_ui(unsigned long n) const {
  Interval r = Interval::exact(1);
  Interval base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Interval Interval::floor() const {
  Interval r;
  mpfr_floor(r.lo_, lo_);
  mpfr_floor(r.hi_, hi_);
  return r;
}

bool Interval::is_finite() const {
  return mpfr_number_p(lo_) && mpfr_number_p(hi_);
}

bool Interval::contains(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool Interval::contains(const Interval& other) const {
  return mpfr_cmp(lo_, other.lo_) <= 0 && mpfr_cmp(hi_, other.hi_) >= 0;
}

bool Interval::strictly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::strictly_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::certainly_less(const Interval& other) const {
  return mpfr_cmp(hi_, other.lo_) < 0;
}

bool Interval::certainly_less_equal(const Interval& other) const {
  return mpfr_cmp(hi_, other.lo_) <= 0;
}

bool Interval::certainly_greater_equal(const Interval& other) const {
  return mpfr_cmp(lo_, other.hi_) >= 0;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, kPrecisionBits);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  const double out = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return out;
}

double Interval::relative_width() const {
  mpfr_t w, m;
  mpfr_init2(w, kPrecisionBits);
  mpfr_init2(m, kPrecisionBits);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  mpfr_abs(m, m, MPFR_RNDN);
  double out;
  if (mpfr_zero_p(w)) {
    out = 0.0;
  } else if (mpfr_zero_p(m)) {
    out = mpfr_get_d(w, MPFR_RNDU);
  } else {
    mpfr_div(w, w, m, MPFR_RNDU);
    out = mpfr_get_d(w, MPFR_RNDU);
    if (out == 0.0) out = DBL_MIN;  // underflow: width positive but tiny
  }
  mpfr_clear(w);
  mpfr_clear(m);
  return out;
}

std::string Interval::lo_string(int digits) const {
  return mpfr_to_string(lo_, digits, MPFR_RNDD);
}

std::string Interval::hi_string(int digits) const {
  return mpfr_to_string(hi_, digits, MPFR_RNDU);
}

std::string Interval::mid_string(int digits) const {
  mpfr_t m;
  mpfr_init2(m, kPrecisionBits);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  std::string s = mpfr_to_string(m, digits, MPFR_RNDN);
  mpfr_clear(m);
  return s;
}

std::string Interval::radius_string() const {
  mpfr_t w;
  mpfr_init2(w, kPrecisionBits);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_div_ui(w, w, 2, MPFR_RNDU);
  std::string s = mpfr_to_string(w, 3, MPFR_RNDU);
  mpfr_clear(w);
  return s;
}

void require_positive(const Interval& v, const std::string& name) {
  if (!v.is_finite() || !v.strictly_positive())
    throw DomainError(name + " must be > 0");
}

}  // namespace gaplab::hp
