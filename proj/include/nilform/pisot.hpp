#ifndef NILFORM_PISOT_HPP
#define NILFORM_PISOT_HPP

#include <vector>

#include "nilform/numfield.hpp"

namespace nilform {

/// Multiplicative constraint prod_i |sigma_i(x)|^{c_i} < 1 (or > 1), i.e. a
/// strict half-space in the log embedding. coeffs are indexed by automorphism.
struct ConeConstraint {
  enum class Relation { LessThanOne, GreaterThanOne };
  std::vector<long> coeffs;
  Relation rel = Relation::LessThanOne;
};

/// prod_i sigma_i(x)^{c_i}, computed exactly in the field.
FieldElement cone_element(const FieldElement& x, const std::vector<long>& coeffs);
bool satisfies(const FieldElement& x, const ConeConstraint& c, long budget = 100'000);

/// |x| > 1 in the designated embedding and |sigma(x)| < 1 for the others.
std::vector<ConeConstraint> pisot_cone(const DatumPtr& datum);

bool is_unit_pisot(const FieldElement& x, long budget = 100'000);

struct SearchOptions {
  int product_rounds = 1;
  long budget = 100'000;
};

/// Units with power-basis coordinates in [-H, H]^d, closed under powers up
/// to power_bound and products, filtered by the constraints, sorted by trace.
std::vector<FieldElement> search_units(const DatumPtr& datum, int height_bound, int power_bound,
                                       const std::vector<ConeConstraint>& constraints, const SearchOptions& options = {});

/// Products prod g_i^{e_i} (|e_i| <= exponent_bound) of the given units, and
/// their negatives, filtered by the constraints, sorted by trace. This walks the
/// unit lattice spanned by the generators in the log embedding directly.
std::vector<FieldElement> search_unit_lattice(const std::vector<FieldElement>& generators, int exponent_bound,
                                              const std::vector<ConeConstraint>& constraints, long budget = 100'000);

/// Smallest solution (x, y), y >= 1, of x^2 - D y^2 = +-1 from the continued
/// fraction of sqrt D; returns (x, y, norm).
struct QuadraticUnit {
  Integer x;
  Integer y;
  int norm;
};
QuadraticUnit quadratic_unit(long d);

/// True unless some exponent tuple with entries in [-b, b], not all equal,
/// makes prod sigma_j(x)^{d_j} = +-1. Unit Pisot numbers short-circuit to true.
bool check_full_rank_condition(const FieldElement& x, int exponent_bound);
/// The exhaustive part alone, without the Pisot short-circuit.
bool full_rank_brute_force(const FieldElement& x, int exponent_bound);

}  // namespace nilform

#endif  // NILFORM_PISOT_HPP
