#ifndef NILFORM_ANOSOV_HPP
#define NILFORM_ANOSOV_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilform/liealg.hpp"

namespace nilform {

struct AnosovCertificate {
  Polynomial charpoly;
  Rational determinant;
  bool integer_like = false;
  bool hyperbolic = false;
  /// {p, q} sorted ascending; only meaningful when hyperbolic.
  std::optional<std::pair<int, int>> signature;
  std::vector<int> algebra_type;
  int nilpotency_class = 0;
  bool minimal_signature = false;
  std::vector<std::string> assumptions;

  bool is_anosov() const { return integer_like && hyperbolic; }
};

/// Integer characteristic polynomial with constant term +-1.
bool is_integer_like(const RationalMatrix& m);

AnosovCertificate certify(const LieAlgebra& a, const RationalMatrix& m, std::vector<std::string> assumptions = {});

enum class TypeVerdict { Abelian, CaseII, CaseIII, Infeasible };
TypeVerdict check_type_constraints(const std::vector<int>& type);
std::string to_string(TypeVerdict v);

}  // namespace nilform

#endif  // NILFORM_ANOSOV_HPP
