#ifndef NILFORM_FIXTURES_HPP
#define NILFORM_FIXTURES_HPP

#include "nilform/numfield.hpp"

namespace nilform::fixtures {

/// Q(theta), theta the largest root of X^4 - 4X^3 - 4X^2 + X + 1. Cyclic of
/// order 4; index 1 is the generator sending the roots (descending) to the
/// next one, indices 2 and 3 are its square and cube.
DatumPtr quartic_z4();

/// Q(theta), theta the largest root of X^3 - 3X + 1, cyclic of order 3;
/// index 1 is theta -> theta^2 - 2, which cycles the roots in descending order.
DatumPtr cubic_z3();

/// Spec (unverified) forms, for serialization and negative tests.
GaloisDatumSpec quartic_z4_spec();
GaloisDatumSpec cubic_z3_spec();

}  // namespace nilform::fixtures

#endif  // NILFORM_FIXTURES_HPP
