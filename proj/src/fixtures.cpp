#include "nilform/fixtures.hpp"

namespace nilform::fixtures {

GaloisDatumSpec quartic_z4_spec() {
  GaloisDatumSpec s;
  s.min_poly = Polynomial{1, 1, -4, -4, 1};
  s.automorphisms = {
      Polynomial{0, 1},
      Polynomial{-6, 2, 19, -4},
      Polynomial{7, -7, -18, 4},
      Polynomial{3, 4, -1},
  };
  s.description = "Q(theta), theta^4 - 4 theta^3 - 4 theta^2 + theta + 1 = 0";
  s.provenance = {"automorphism polynomials of the quartic field precomputed externally, verified exactly"};
  return s;
}

GaloisDatumSpec cubic_z3_spec() {
  GaloisDatumSpec s;
  s.min_poly = Polynomial{1, -3, 0, 1};
  s.automorphisms = {Polynomial{0, 1}, Polynomial{-2, 0, 1}, Polynomial{2, -1, -1}};
  s.description = "Q(theta), theta^3 - 3 theta + 1 = 0";
  return s;
}

DatumPtr quartic_z4() {
  static const DatumPtr d = GaloisDatum::verify(quartic_z4_spec());
  return d;
}

DatumPtr cubic_z3() {
  static const DatumPtr d = GaloisDatum::verify(cubic_z3_spec());
  return d;
}

}  // namespace nilform::fixtures
