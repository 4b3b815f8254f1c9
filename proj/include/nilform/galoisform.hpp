#ifndef NILFORM_GALOISFORM_HPP
#define NILFORM_GALOISFORM_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilform/liealg.hpp"
#include "nilform/numfield.hpp"

namespace nilform {

using FieldMatrix = Matrix<FieldElement>;
using FieldVector = std::vector<FieldElement>;

/// rho: Gal(E, Q) -> GL_m(Q), one image per group element (datum indexing).
/// With a target algebra every image must also be an automorphism of it.
class Representation {
 public:
  Representation(DatumPtr datum, std::vector<RationalMatrix> images, std::optional<LieAlgebra> target = std::nullopt);

  const DatumPtr& datum() const { return datum_; }
  std::size_t dim() const { return images_.front().rows(); }
  const RationalMatrix& image(std::size_t sigma) const { return images_.at(sigma); }
  const std::vector<RationalMatrix>& images() const { return images_; }
  const std::optional<LieAlgebra>& target() const { return target_; }

 private:
  DatumPtr datum_;
  std::vector<RationalMatrix> images_;
  std::optional<LieAlgebra> target_;
};

/// Trivial representation on Q^m.
Representation trivial_representation(const DatumPtr& datum, std::size_t m);
/// Block sum rho_1 + rho_2 (over the same datum).
Representation direct_sum(const Representation& a, const Representation& b);

/// Basis of the rational form {v in E^m : rho_sigma(v) = v^sigma}.
struct RationalFormBasis {
  std::vector<FieldVector> vectors;
  /// Columns are the basis vectors.
  FieldMatrix matrix() const;
};

/// rho_sigma(v) == v^sigma.
bool satisfies_form_condition(const Representation& rho, std::size_t sigma, const FieldVector& v);

RationalFormBasis rational_form(const Representation& rho);
/// Accepts an explicit basis after checking the form condition for every
/// group element and linear independence over E.
RationalFormBasis form_basis_from_vectors(const Representation& rho, std::vector<FieldVector> vectors);

/// The rational algebra spanned by the basis inside a.
LieAlgebra structure_constants_on_form(const RationalFormBasis& basis, const LieAlgebraE& a);

/// M = B^{-1} F B after checking f^sigma = rho_sigma f rho_{sigma^-1} for all sigma.
RationalMatrix transport(const Representation& rho, const RationalFormBasis& basis, const FieldMatrix& f);

struct BracketTerm {
  std::size_t i, j;
  Rational coeff;
  std::size_t k;
};

/// Basis vectors labeled by their eigenvalue. [b_i, b_j] only has components
/// along basis vectors labeled label(i) * label(j).
struct LabeledAlgebra {
  std::vector<FieldElement> labels;
  LieAlgebra algebra;
  std::vector<std::size_t> generators;
};

LabeledAlgebra build_labeled_algebra(std::vector<FieldElement> labels, const std::vector<BracketTerm>& brackets,
                                     std::vector<std::size_t> generators);
/// Throws LabelMismatch unless every structure constant respects the labels.
void check_labels(const LieAlgebra& a, const std::vector<FieldElement>& labels);

/// Image of one generator under a group generator: sign * b_target.
struct SignedImage {
  std::size_t target;
  int sign = 1;
};
/// Action of a group element on la.generators (images[p] is the image of
/// b_{generators[p]}).
struct GeneratorAction {
  std::size_t sigma;
  std::vector<SignedImage> images;
};

/// X_lambda -> X_{sigma(lambda)} on the generators, read off from the labels.
GeneratorAction label_action(const LabeledAlgebra& la, std::size_t sigma);

/// Extends the given actions to automorphisms of the whole algebra and to
/// the whole group. Signs on non-generators come out of the brackets.
Representation extend_representation(const LabeledAlgebra& la, const std::vector<GeneratorAction>& actions);
/// Uses label_action for every generator of the Galois group.
Representation extend_representation(const LabeledAlgebra& la);

struct Main2Result {
  RationalFormBasis basis;
  LieAlgebra algebra;
  RationalMatrix matrix;
};

/// f = diag(labels) over E, transported to the rational form.
Main2Result main2_construct(const LabeledAlgebra& la, const Representation& rho);
/// Same, with an explicit basis of the rational form.
Main2Result main2_construct(const LabeledAlgebra& la, const Representation& rho, const RationalFormBasis& basis);

FieldMatrix to_field(const RationalMatrix& m, const DatumPtr& datum);
/// Entrywise right action sigma^{-1}.
FieldMatrix right_action(std::size_t sigma, const FieldMatrix& m);

}  // namespace nilform

#endif  // NILFORM_GALOISFORM_HPP
