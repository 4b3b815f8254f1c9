#ifndef NILFORM_INTERVAL_HPP
#define NILFORM_INTERVAL_HPP

#include <algorithm>
#include <iosfwd>

#include "nilform/polynomial.hpp"
#include "nilform/rational.hpp"

namespace nilform {

/// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  /// Strictly below / above a rational bound.
  bool below(const Rational& x) const { return hi < x; }
  bool above(const Rational& x) const { return lo > x; }
  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }

  /// Enclosure of {|x| : x in this}.
  Interval abs() const;

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Rational& c);
  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Interval& i);
};

/// Horner evaluation of p over an interval argument; the result encloses p(x)
/// for every x in the argument.
Interval eval(const Polynomial& p, const Interval& x);

}  // namespace nilform

#endif  // NILFORM_INTERVAL_HPP
