#ifndef NILFORM_RECIPES_HPP
#define NILFORM_RECIPES_HPP

#include <optional>
#include <string>
#include <vector>

#include "nilform/anosov.hpp"
#include "nilform/galoisform.hpp"
#include "nilform/pisot.hpp"

namespace nilform {

struct Provenance {
  std::string recipe;
  std::string datum;
  FieldElement lambda;
  std::vector<FieldElement> labels;
};

struct RecipeOutput {
  LieAlgebra algebra;
  RationalMatrix matrix;
  AnosovCertificate certificate;
  Provenance provenance;
  LabeledAlgebra labeled;
  std::optional<Representation> representation;
  RationalFormBasis basis;
};

// search bounds used when no unit is supplied
struct RecipeSearch {
  int height = 2;
  int power = 2;
  int lattice_exponent = 4;
};

RecipeOutput recipe_z4_example();

/// Two Heisenberg blocks over Q(sqrt k, sqrt l) labeled (l, tau l, sigma l, sigma tau l).
RecipeOutput recipe_count(long k, long l, std::optional<FieldElement> lambda = std::nullopt,
                          const RecipeSearch& search = {});

/// m copies of a graded g, copy i graded by sigma_i(lambda^j).
RecipeOutput recipe_laur(const LieAlgebra& g, const Grading& grading, const DatumPtr& datum,
                         const FieldElement& lambda);

/// Cyclic datum of order 2n, type (2n, n, 2n, ..., 2n) of class c.
RecipeOutput recipe_csig(const DatumPtr& datum, std::optional<FieldElement> lambda, int c,
                         const RecipeSearch& search = {});

/// Cyclic datum of order n >= 3, type (n, ..., n) of class c.
RecipeOutput recipe_last(const DatumPtr& datum, std::optional<FieldElement> lambda, int c,
                         const RecipeSearch& search = {});

/// |lambda sigma^n(lambda^2)| < 1 for the generator sigma of a cyclic datum of order 2n.
ConeConstraint csig_constraint(const DatumPtr& datum);

/// First unit Pisot number found by search_units (negatives flipped), else PisotNotFound.
FieldElement find_unit_pisot(const DatumPtr& datum, const std::vector<ConeConstraint>& extra,
                             const RecipeSearch& search = {});

/// prod (X - label), which must have rational coefficients.
Polynomial label_polynomial(const std::vector<FieldElement>& labels);

}  // namespace nilform

#endif  // NILFORM_RECIPES_HPP
