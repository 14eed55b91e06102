#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "gaplab/errors.hpp"

namespace gaplab::hp {

// Working precision of every interval endpoint, in bits. 256 bits is about
// 77 decimal digits; the derivation chains multiply ~10 enclosures, so the
// final relative widths stay far below the 1e-30 reporting requirement.
inline constexpr mpfr_prec_t kPrecisionBits = 256;

// A closed interval [lo, hi] with mpfr endpoints and outward rounding on
// every operation. Enclosures are rigorous: the mathematically exact result
// of an operation on members of the inputs is a member of the output.
class Interval {
 public:
  Interval();
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval exact(long v);
  static Interval exact_ui(unsigned long v);
  static Interval from_double(double v);  // both endpoints set to v, exact
  static Interval from_ratio(long num, long den);
  // Accepts "p/q" rationals and decimal/scientific literals.
  static Interval parse(const std::string& text);

  // Shared constants, enclosed to working precision.
  static Interval euler_gamma();
  static Interval log_ui(unsigned long v);

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  Interval exp() const;
  Interval log() const;   // requires lo > 0
  Interval sqrt() const;  // requires lo >= 0
  Interval pow_ui(unsigned long n) const;
  Interval floor() const;

  bool is_finite() const;
  bool contains(double v) const;
  bool contains(const Interval& other) const;  // superset test
  bool strictly_positive() const;              // lo > 0
  bool strictly_negative() const;              // hi < 0
  bool contains_zero() const;
  // Order certainty: true only when the comparison holds for every pair of
  // members of the two intervals.
  bool certainly_less(const Interval& other) const;
  bool certainly_less_equal(const Interval& other) const;
  bool certainly_greater_equal(const Interval& other) const;

  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up
  double mid_double() const;
  // Relative width (hi - lo) / max(|mid|, DBL_MIN); 0 for exact points.
  double relative_width() const;

  // Decimal renderings with directed rounding: lo rounds down, hi rounds up,
  // so the printed pair still encloses the value. `digits` counts digits
  // after the leading one (scientific notation).
  std::string lo_string(int digits) const;
  std::string hi_string(int digits) const;
  std::string mid_string(int digits) const;  // round-to-nearest midpoint
  std::string radius_string() const;         // (hi - lo) / 2, rounded up

  mpfr_srcptr lo_raw() const { return lo_; }
  mpfr_srcptr hi_raw() const { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

// Throws DomainError when `v` is not strictly positive (its whole enclosure).
void require_positive(const Interval& v, const std::string& name);

}  // namespace gaplab::hp
