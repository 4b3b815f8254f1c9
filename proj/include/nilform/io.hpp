#ifndef NILFORM_IO_HPP
#define NILFORM_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "nilform/anosov.hpp"
#include "nilform/galoisform.hpp"
#include "nilform/pfaffian.hpp"
#include "nilform/pisot.hpp"
#include "nilform/recipes.hpp"

namespace nilform::io {

using Json = nlohmann::json;

// Rationals are "p/q" strings, polynomials ascending coefficient arrays,
// matrices arrays of rows. Malformed input throws ParseError.

Json to_json(const Rational& q);
Json to_json(const Polynomial& p);
Json to_json(const RationalMatrix& m);
Json to_json(const FieldElement& x);
Json to_json(const GaloisDatumSpec& spec);
Json to_json(const LieAlgebra& a);
Json to_json(const LieAlgebraE& a);
Json to_json(const AnosovCertificate& c);
Json to_json(const ConeConstraint& c);
Json to_json(const BinaryQuadraticForm& h);
Json to_json(const Representation& rho);
Json to_json(const LabeledAlgebra& la);
Json to_json(const RecipeOutput& out);

Rational rational_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
FieldElement element_from_json(const Json& j, const DatumPtr& datum);
GaloisDatumSpec datum_spec_from_json(const Json& j);
DatumPtr datum_from_json(const Json& j);
/// field must be "Q"
LieAlgebra algebra_from_json(const Json& j);
LieAlgebraE algebra_e_from_json(const Json& j);
AnosovCertificate certificate_from_json(const Json& j);
std::vector<ConeConstraint> constraints_from_json(const Json& j);
BinaryQuadraticForm form_from_json(const Json& j);
Representation representation_from_json(const Json& j, std::optional<LieAlgebra> target = std::nullopt);

Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
/// Sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace nilform::io

#endif  // NILFORM_IO_HPP
