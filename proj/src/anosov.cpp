#include "nilform/anosov.hpp"

#include <algorithm>

namespace nilform {

bool is_integer_like(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "integer-like check of a non-square matrix");
  const Polynomial p = charpoly(m);
  if (!p.has_integer_coeffs()) return false;
  return p.coeff(0).abs() == 1;
}

AnosovCertificate certify(const LieAlgebra& a, const RationalMatrix& m, std::vector<std::string> assumptions) {
  if (m.rows() != a.dim() || m.cols() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix and algebra dimensions differ");
  if (!is_automorphism(a, m)) throw Error(ErrorCode::NotAutomorphism, "matrix is not an automorphism of the algebra");
  AnosovCertificate c;
  c.charpoly = charpoly(m);
  c.determinant = determinant(m);
  c.integer_like = c.charpoly.has_integer_coeffs() && c.charpoly.coeff(0).abs() == 1;
  c.hyperbolic = count_roots_on_unit_circle(c.charpoly) == 0;
  const auto lcs = lower_central_series(a);
  c.algebra_type = lcs.type;
  c.nilpotency_class = lcs.nilpotency_class;
  if (c.hyperbolic) {
    const int p = count_roots_inside_unit_disk(c.charpoly);
    const int q = static_cast<int>(a.dim()) - p;
    c.signature = std::minmax(p, q);
    c.minimal_signature = c.signature->first == c.nilpotency_class;
  }
  c.assumptions = std::move(assumptions);
  return c;
}

TypeVerdict check_type_constraints(const std::vector<int>& type) {
  if (type.empty()) throw Error(ErrorCode::BadParameters, "empty type");
  for (int t : type)
    if (t <= 0) throw Error(ErrorCode::BadParameters, "type entries must be positive");
  if (type.size() == 1) return TypeVerdict::Abelian;
  if (type[0] >= 4 && std::all_of(type.begin(), type.end(), [](int t) { return t >= 2; })) return TypeVerdict::CaseII;
  if (type[0] == 3 && type[1] == 3 && std::all_of(type.begin(), type.end(), [](int t) { return t % 3 == 0; }))
    return TypeVerdict::CaseIII;
  return TypeVerdict::Infeasible;
}

std::string to_string(TypeVerdict v) {
  switch (v) {
    case TypeVerdict::Abelian: return "abelian";
    case TypeVerdict::CaseII: return "case_ii";
    case TypeVerdict::CaseIII: return "case_iii";
    case TypeVerdict::Infeasible: return "infeasible";
  }
  return "infeasible";
}

}  // namespace nilform
