#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "nilform/errors.hpp"
#include "nilform/fixtures.hpp"
#include "nilform/pisot.hpp"

using namespace nilform;

namespace {

// Conjugates of x in double precision from double roots of the minimal
// polynomial of theta; independent of the interval machinery.
std::vector<double> double_conjugates(const FieldElement& x, const std::vector<double>& theta_conjugates) {
  std::vector<double> out;
  for (double t : theta_conjugates) {
    double acc = 0;
    const auto& c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i].raw().get_d();
    out.push_back(acc);
  }
  return out;
}

std::vector<double> theta_images(const DatumPtr& d) {
  std::vector<double> out;
  for (std::size_t s = 0; s < d->degree(); ++s) {
    const Interval i = conjugate_interval(FieldElement::generator(d), s, Rational(1, 1 << 30));
    out.push_back(i.midpoint().raw().get_d());
  }
  return out;
}

const ConeConstraint kCsig{{1, 0, 2, 0}, ConeConstraint::Relation::LessThanOne};

}  // namespace

TEST_CASE("unit pisot examples") {
  const auto q2 = quadratic_datum(2);
  const FieldElement s = FieldElement::generator(q2);
  CHECK(is_unit_pisot(1 + s));
  CHECK(!is_unit_pisot(s));
  CHECK(!is_unit_pisot(-1 - s));
  CHECK(!is_unit_pisot(FieldElement(q2, {1})));
  CHECK(is_unit_pisot(FieldElement::generator(fixtures::quartic_z4())));
  CHECK(is_unit_pisot(FieldElement::generator(fixtures::cubic_z3())) == false);  // conjugate -1.879
}

TEST_CASE("search over Q(sqrt 2)") {
  const auto q2 = quadratic_datum(2);
  const FieldElement s = FieldElement::generator(q2);
  const auto found = search_units(q2, 2, 1, pisot_cone(q2));
  CHECK(std::find(found.begin(), found.end(), 1 + s) != found.end());

  auto constraints = pisot_cone(q2);
  constraints.push_back({{1, 2}, ConeConstraint::Relation::LessThanOne});
  const auto found2 = search_units(q2, 2, 1, constraints);
  CHECK(std::find(found2.begin(), found2.end(), 1 + s) != found2.end());
  CHECK(cone_element(1 + s, {1, 2}) == s - 1);

  // a unit has |norm| = 1, so prod |sigma_i| > 1 is impossible
  CHECK(search_units(q2, 3, 3, {{{1, 1}, ConeConstraint::Relation::GreaterThanOne}}).empty());
  CHECK(search_units(q2, 0, 3, {}).empty());
}

TEST_CASE("search results pass every constraint when rechecked") {
  for (const auto& d : {quadratic_datum(3), quadratic_datum(5), fixtures::cubic_z3()}) {
    const auto cone = pisot_cone(d);
    const auto found = search_units(d, 2, 3, cone);
    CHECK(!found.empty());
    const auto images = theta_images(d);
    for (const auto& x : found) {
      CHECK(is_algebraic_unit(x));
      const auto c = double_conjugates(x, images);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == d->identity()) CHECK(std::abs(c[i]) > 1);
        else CHECK(std::abs(c[i]) < 1);
      }
      if (compare_conjugate_to_one(x, d->identity()) > 0)
        for (int k = 1; k <= 4; ++k) CHECK(is_unit_pisot(pow(x, k)));
    }
  }
}

TEST_CASE("search agrees with an independent enumeration") {
  const auto d = fixtures::cubic_z3();
  const auto images = theta_images(d);
  const auto found = search_units(d, 2, 1, pisot_cone(d), {0, 100'000});
  std::set<std::vector<Rational>> expected;
  for (int a = 2; a >= -2; --a)
    for (int b = 2; b >= -2; --b)
      for (int c = 2; c >= -2; --c) {
        const FieldElement x(d, {a, b, c});
        const auto conj = double_conjugates(x, images);
        double prod = 1;
        for (double v : conj) prod *= v;
        if (std::abs(std::abs(prod) - 1) > 1e-9) continue;  // not a unit (integral coordinates)
        bool ok = std::abs(conj[0]) > 1;
        for (std::size_t i = 1; i < conj.size(); ++i) ok = ok && std::abs(conj[i]) < 1;
        if (ok) expected.insert(x.coeffs());
      }
  std::set<std::vector<Rational>> got;
  for (const auto& x : found) got.insert(x.coeffs());
  CHECK(got == expected);
}

TEST_CASE("csig constraint on the quartic fixture") {
  const auto d = fixtures::quartic_z4();
  const FieldElement t = FieldElement::generator(d);
  CHECK(!satisfies(t, kCsig));
  const FieldElement lam(d, {-1, 0, 3, 0});
  CHECK(is_unit_pisot(lam));
  CHECK(satisfies(lam, kCsig));
}

TEST_CASE("full rank condition") {
  const auto q2 = quadratic_datum(2);
  const FieldElement x = 1 + FieldElement::generator(q2);
  CHECK(check_full_rank_condition(x, 5));
  CHECK(full_rank_brute_force(x, 5));
  CHECK(check_full_rank_condition(FieldElement(rational_datum(), {-1}), 3));
  const FieldElement t = FieldElement::generator(fixtures::quartic_z4());
  CHECK(check_full_rank_condition(t, 3));
  CHECK(full_rank_brute_force(t, 3));
  // an element of the subfield Q(sqrt 5) inside Q(sqrt 5, sqrt 2) violates it
  const auto d52 = biquadratic_datum(5, 2);
  const FieldElement tt = FieldElement::generator(d52);
  const FieldElement sqrt5 = (pow(tt, 3) - 17 * tt) / FieldElement(-6);
  const FieldElement phi = (1 + sqrt5) / FieldElement(2);
  CHECK(is_algebraic_unit(phi));
  CHECK(!full_rank_brute_force(phi, 1));
}

TEST_CASE("quadratic units from continued fractions") {
  for (long d : {2L, 3L, 5L, 6L, 7L, 10L, 13L, 61L}) {
    const auto u = quadratic_unit(d);
    CHECK(u.x * u.x - Integer(d) * u.y * u.y == u.norm);
    // no smaller y solves x^2 - d y^2 = +-1
    for (long y = 1; y < u.y && y < 2000; ++y) {
      Integer t = Integer(d) * y * y, r;
      for (long s : {1L, -1L}) {
        Integer v = t + s;
        mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
        CHECK(r * r != v);
      }
    }
  }
  CHECK(quadratic_unit(2).x == 1);
  CHECK(quadratic_unit(61).x == Integer(29718));
}

TEST_CASE("lattice search in a biquadratic field") {
  const auto d = biquadratic_datum(5, 2);
  const FieldElement t = FieldElement::generator(d);
  const FieldElement sqrt5 = (pow(t, 3) - 17 * t) / FieldElement(-6);
  const FieldElement sqrt2 = t - sqrt5;
  const std::vector<FieldElement> gens{2 + sqrt5, 1 + sqrt2, 3 + sqrt5 * sqrt2};
  const auto found = search_unit_lattice(gens, 4, pisot_cone(d));
  REQUIRE(!found.empty());
  const auto images = theta_images(d);
  for (const auto& x : found) {
    const auto c = double_conjugates(x, images);
    CHECK(std::abs(c[0]) > 1);
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(c[i]) < 1);
  }
}
