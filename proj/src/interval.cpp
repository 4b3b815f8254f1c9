#include "nilform/interval.hpp"

#include <ostream>

namespace nilform {

Interval Interval::abs() const {
  if (lo.sign() >= 0) return *this;
  if (hi.sign() <= 0) return {-hi, -lo};
  return {Rational(0), std::max(-lo, hi)};
}

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator*(const Interval& a, const Rational& c) {
  if (c.sign() >= 0) return {a.lo * c, a.hi * c};
  return {a.hi * c, a.lo * c};
}

std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << "[" << i.lo << ", " << i.hi << "]"; }

Interval eval(const Polynomial& p, const Interval& x) {
  Interval acc = Interval::point(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Interval::point(*it);
  return acc;
}

}  // namespace nilform
