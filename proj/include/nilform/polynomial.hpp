#ifndef NILFORM_POLYNOMIAL_HPP
#define NILFORM_POLYNOMIAL_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nilform/rational.hpp"

namespace nilform {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of X^i; zero past the degree.
  Rational coeff(int i) const;
  Rational leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool has_integer_coeffs() const;

  Rational eval(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  /// X^deg(p) * p(1/X).
  Polynomial reciprocal() const;
  /// this(q(X)).
  Polynomial compose(const Polynomial& q) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str(const std::string& var = "X") const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder). Throws on zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic gcd; zero when both inputs are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  Polynomial gcd;
  Polynomial s;
  Polynomial t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made monic.
Polynomial squarefree_part(const Polynomial& p);

Polynomial pow(const Polynomial& p, int exponent);

}  // namespace nilform

#endif  // NILFORM_POLYNOMIAL_HPP
