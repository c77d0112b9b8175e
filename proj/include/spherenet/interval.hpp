#pragma once

// Outward-rounded interval arithmetic.
//
// Rounding strategy ("outward-ulp", stated in every certification report
// header): each primitive is computed once in round-to-nearest double
// precision and the result is then nudged outward with std::nextafter. For
// correctly rounded operations (+, -, *, /, sqrt) one ulp per side is a strict
// enclosure; for the libm arccos, which is only faithfully rounded, four ulps
// per side leave ample headroom. Compile without value-changing FP options
// (-ffast-math, -ffp-contract=fast).

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spherenet {

class interval_error : public std::domain_error {
 public:
  explicit interval_error(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

inline double step_down(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  return x;
}

inline double step_up(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, std::numeric_limits<double>::infinity());
  return x;
}

}  // namespace detail

// Enclosure [lo, hi] of a real number; every operation returns a superset of
// the exact image, so a value once enclosed stays enclosed.
class Interval {
 public:
  Interval() = default;

  static Interval exact(double v) {
    check_finite(v);
    return Interval(v, v);
  }

  // Rigorous enclosure of the rational p/q.
  static Interval rational(long long p, long long q) {
    if (q == 0) throw interval_error("rational: zero denominator");
    return exact(static_cast<double>(p)) / exact(static_cast<double>(q));
  }

  static Interval from_bounds(double lo, double hi) {
    check_finite(lo);
    check_finite(hi);
    if (lo > hi) throw interval_error("interval bounds out of order");
    return Interval(lo, hi);
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  double abs_upper() const { return std::max(std::abs(lo_), std::abs(hi_)); }

  Interval widened(double eps) const {
    if (eps < 0.0) throw interval_error("widened: negative inflation");
    return from_bounds(lo_ - eps, hi_ + eps);
  }

  friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return make(detail::step_down(a.lo_ + b.lo_), detail::step_up(a.hi_ + b.hi_));
  }

  friend Interval operator-(const Interval& a, const Interval& b) {
    return make(detail::step_down(a.lo_ - b.hi_), detail::step_up(a.hi_ - b.lo_));
  }

  friend Interval operator*(const Interval& a, const Interval& b) {
    const double c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    double lo = c[0], hi = c[0];
    for (double v : c) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return make(detail::step_down(lo), detail::step_up(hi));
  }

  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_ <= 0.0 && b.hi_ >= 0.0) {
      throw interval_error("division by an enclosure containing zero");
    }
    const double c[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
    double lo = c[0], hi = c[0];
    for (double v : c) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return make(detail::step_down(lo), detail::step_up(hi));
  }

 private:
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {}

  static void check_finite(double v) {
    if (!std::isfinite(v)) throw interval_error("non-finite interval bound");
  }

  static Interval make(double lo, double hi) {
    check_finite(lo);
    check_finite(hi);
    return Interval(lo, hi);
  }

  double lo_ = 0.0;
  double hi_ = 0.0;

  friend Interval sqrt(const Interval&);
  friend Interval arccos(const Interval&);
};

inline Interval sqrt(const Interval& a) {
  if (a.lo_ < 0.0) {
    throw interval_error("sqrt of an enclosure reaching below zero");
  }
  const double lo = std::max(0.0, detail::step_down(std::sqrt(a.lo_)));
  return Interval::from_bounds(lo, detail::step_up(std::sqrt(a.hi_)));
}

// Monotone endpoint evaluation; four outward ulps cover the libm evaluation
// error. arccos is decreasing, so the image endpoints swap.
inline Interval arccos(const Interval& a) {
  if (a.lo_ < -1.0 || a.hi_ > 1.0) {
    throw interval_error("arccos of an enclosure outside [-1, 1]");
  }
  const double lo = std::max(0.0, detail::step_down(std::acos(a.hi_), 4));
  return Interval::from_bounds(lo, detail::step_up(std::acos(a.lo_), 4));
}

inline Interval pi_enclosure() {
  const double approx = std::numbers::pi;  // nearest double is below pi
  return Interval::from_bounds(approx, detail::step_up(approx));
}

// True iff every point of a is strictly below every point of b.
inline bool certainly_less(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }

// Certified lower bound on inf(b) - sup(a), the slack of a < b.
inline double certified_gap(const Interval& a, const Interval& b) {
  return detail::step_down(b.lo() - a.hi());
}

}  // namespace spherenet
