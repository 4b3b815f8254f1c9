#ifndef NILFORM_PFAFFIAN_HPP
#define NILFORM_PFAFFIAN_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilform/liealg.hpp"

namespace nilform {

/// Polynomial in several variables over Q, keyed by exponent vectors.
class MPoly {
 public:
  MPoly() = default;
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT
  MPoly(const Rational& c);             // NOLINT
  static MPoly variable(std::size_t i, std::size_t nvars);

  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  Rational coeff(const std::vector<int>& exponents) const;
  bool is_zero() const { return terms_.empty(); }
  Rational eval(const std::vector<Rational>& point) const;
  std::string str() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return MPoly() - a; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const std::vector<int>& e, const Rational& c);
  std::map<std::vector<int>, Rational> terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

/// h(X, Y) = a X^2 + b XY + c Y^2.
struct BinaryQuadraticForm {
  Rational a, b, c;
  Rational discriminant() const { return b * b - 4 * a * c; }
  Rational eval(const Rational& x, const Rational& y) const { return a * x * x + b * x * y + c * y * y; }
  /// h(U v) as a form in v.
  BinaryQuadraticForm compose(const RationalMatrix& u) const;
  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

/// Sizes of the adapted decomposition: the first n1 basis vectors span a
/// complement V, the last k span gamma_2. Throws NotTwoStep / BasisNotAdapted.
struct Adapted {
  std::size_t n1, k;
};
Adapted adapted_split(const LieAlgebra& a);

/// (J_Z)_{ij} = <[X_i, X_j], Z>, Z given by its coordinates on gamma_2.
RationalMatrix j_map(const LieAlgebra& a, const std::vector<Rational>& z);

/// Pfaffian by expansion along the first row; +1 on the standard symplectic matrix.
template <class T>
T pfaffian_expand(const Matrix<T>& s) {
  const std::size_t n = s.rows();
  if (n == 0) return T(1);
  T out(0);
  for (std::size_t j = 1; j < n; ++j) {
    if (is_zero(s(0, j))) continue;
    std::vector<std::size_t> keep;
    for (std::size_t i = 1; i < n; ++i)
      if (i != j) keep.push_back(i);
    Matrix<T> minor(n - 2, n - 2);
    for (std::size_t p = 0; p < keep.size(); ++p)
      for (std::size_t q = 0; q < keep.size(); ++q) minor(p, q) = s(keep[p], keep[q]);
    const T term = s(0, j) * pfaffian_expand(minor);
    if (j % 2 == 1) out += term;
    else out -= term;
  }
  return out;
}

/// Checks shape and skewness. Throws NonSquare, OddDimension, BadParameters.
Rational pfaffian(const RationalMatrix& s);

/// h(Y_1, ..., Y_k) = Pf(sum Y_i J_{Z_i}).
MPoly pfaffian_form(const LieAlgebra& a);
/// The binary form for type (4, 2).
BinaryQuadraticForm pfaffian_form_42(const LieAlgebra& a);

struct Type42Class {
  BinaryQuadraticForm form;
  Rational discriminant;
  /// squarefree, sign kept; a is isomorphic to n_s
  Integer squarefree;
  bool anosov_compatible = false;
};
Type42Class classify_type42(const LieAlgebra& a);

/// Squarefree integer s with r / s a nonzero rational square.
Integer squarefree_part(const Rational& r);

struct PellSolution {
  Integer x, y;
  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};
/// Smallest solution with y >= 1 of x^2 - D y^2 = 4.
PellSolution solve_pell(const Integer& d);

/// U(x, y) = ((x - yb)/2, -cy; ay, (x + yb)/2), verified to preserve h.
RationalMatrix pell_automorphism(const BinaryQuadraticForm& h, const PellSolution& sol);

/// [X_1,X_3] = Z_1, [X_2,X_4] = Z_1, [X_1,X_4] = Z_2, [X_2,X_3] = k Z_2.
LieAlgebra n_k_algebra(long k);
/// [X_1,X_2] = Z_1, [X_1,X_3] = Z_2, [X_1,X_4] = k Z_3, [X_2,X_3] = -Z_3,
/// [X_2,X_4] = -Z_2, [X_3,X_4] = Z_4.
LieAlgebra h_k_algebra(long k);

/// Skew matrices as coordinates on e_pq, p < q.
std::vector<Rational> skew_coordinates(const RationalMatrix& s);
RationalMatrix skew_from_coordinates(const std::vector<Rational>& v, std::size_t n);

/// The Scheuneman dual on V + W~, W~ the B-orthogonal complement of
/// W = span{J_Z}. The centre basis is B-dual to the primitive integral
/// reduced-echelon basis of W~.
LieAlgebra scheuneman_dual(const LieAlgebra& a);

/// Extensions of alpha on a and of alpha^T on its dual. Throws DoesNotPreserveW.
std::pair<RationalMatrix, RationalMatrix> dual_automorphism(const RationalMatrix& alpha, const LieAlgebra& a,
                                                            const LieAlgebra& dual);

/// Lambda^2 alpha on the basis e_p ^ e_q, p < q.
RationalMatrix wedge_square(const RationalMatrix& alpha);

/// Extends a map on the first n1 basis vectors of a two-step algebra.
RationalMatrix extend_degree_one(const LieAlgebra& a, const RationalMatrix& alpha);

}  // namespace nilform

#endif  // NILFORM_PFAFFIAN_HPP
