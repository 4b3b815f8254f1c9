#ifndef NILFORM_EXACTMATH_HPP
#define NILFORM_EXACTMATH_HPP

#include <optional>
#include <vector>

#include "nilform/interval.hpp"
#include "nilform/matrix.hpp"
#include "nilform/polynomial.hpp"
#include "nilform/rational.hpp"

namespace nilform {

/// det(X*I - m), via reduction to upper Hessenberg form over Q.
Polynomial charpoly(const RationalMatrix& m);

/// Number of real roots of a squarefree p in the open interval (lo, hi).
/// Throws EndpointIsRoot if p vanishes at either endpoint.
int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Number of distinct complex roots of p with modulus exactly 1.
int count_roots_on_unit_circle(const Polynomial& p);

/// Number of roots of p (with multiplicity) strictly inside the unit disk.
/// Requires that p has no root on the unit circle (RootOnCircle otherwise).
int count_roots_inside_unit_disk(const Polynomial& p);

/// Signed remainder sequence f0 = a, f1 = b, f_{k+1} = -rem(f_{k-1}, f_k).
std::vector<Polynomial> sturm_sequence(const Polynomial& a, const Polynomial& b);

/// Sign variations of a sequence evaluated at x, zeros skipped.
int sign_variations_at(const std::vector<Polynomial>& seq, const Rational& x);
/// Sign variations at +infinity (positive = true) or -infinity.
int sign_variations_at_infinity(const std::vector<Polynomial>& seq, bool positive);

namespace detail {

/// Schur-Cohn reduction. Returns nullopt when a reduction step is singular
/// (|p(0)| equals |leading coefficient|), which happens for reciprocal-
/// symmetric root pairs and some other configurations.
std::optional<int> schur_cohn_inside(const Polynomial& p);

/// Inside-disk count through the Cayley transform z = (1+w)/(1-w) and the
/// Cauchy index of Re/Im of the transformed polynomial on the imaginary axis.
/// Handles every case covered by the no-root-on-circle precondition.
int cayley_inside(const Polynomial& p);

/// X^d * h(X + 1/X) = g for a palindromic g of degree 2d; returns h.
Polynomial palindromic_to_trace_form(const Polynomial& g);

}  // namespace detail

}  // namespace nilform

#endif  // NILFORM_EXACTMATH_HPP
