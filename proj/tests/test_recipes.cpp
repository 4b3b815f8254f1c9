#include <cmath>

#include "doctest.h"
#include "nilform/errors.hpp"
#include "nilform/fixtures.hpp"
#include "nilform/pfaffian.hpp"
#include "nilform/recipes.hpp"

using namespace nilform;

namespace {

long double as_ld(const Rational& q) { return static_cast<long double>(q.num().get_d()) / q.den().get_d(); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::VerificationFailed;
}

// largest real root of the minimal polynomial, by plain bisection in long double
long double theta_numeric(const DatumPtr& d) {
  const auto& c = d->min_poly().coeffs();
  auto f = [&](long double x) {
    long double v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + as_ld(*it);
    return v;
  };
  long double bound = 1;
  for (const auto& a : c) bound += std::fabs(as_ld(a));
  long double hi = bound, lo = hi;
  const long double step = 1e-3L;
  while (lo > -bound && (f(lo) > 0) == (f(hi) > 0)) {
    hi = lo;
    lo -= step;
  }
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    if ((f(mid) > 0) == (f(hi) > 0)) hi = mid;
    else lo = mid;
  }
  return (lo + hi) / 2;
}

long double numeric(const FieldElement& x, long double theta) {
  long double v = 0;
  const auto& c = x.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * theta + as_ld(*it);
  return v;
}

std::pair<int, int> oracle_signature(const RecipeOutput& out) {
  const long double t = theta_numeric(out.labeled.labels.front().datum());
  int p = 0, q = 0;
  for (const auto& l : out.labeled.labels) (std::fabs(numeric(l, t)) > 1 ? p : q)++;
  return {std::min(p, q), std::max(p, q)};
}

void check_common(const RecipeOutput& out) {
  CHECK(out.certificate.integer_like);
  CHECK(out.certificate.hyperbolic);
  REQUIRE(out.certificate.signature);
  CHECK(*out.certificate.signature == oracle_signature(out));
  CHECK(check_type_constraints(out.certificate.algebra_type) != TypeVerdict::Infeasible);
  CHECK(out.certificate.charpoly == label_polynomial(out.labeled.labels));
  CHECK(is_automorphism(out.algebra, out.matrix));
  CHECK(check_jacobi(out.algebra));
}

const ConeConstraint kCsig{{1, 0, 2, 0}, ConeConstraint::Relation::LessThanOne};

}  // namespace

TEST_CASE("z4 example is reproduced exactly") {
  const auto out = recipe_z4_example();
  const Rational h(1, 2);
  CHECK(out.matrix == RationalMatrix::from_rows({{0, 0, 0, -1, 0, 0},
                                                 {1, 0, 0, -1, 0, 0},
                                                 {0, 1, 0, 4, 0, 0},
                                                 {0, 0, 1, 4, 0, 0},
                                                 {0, 0, 0, 0, -h, -h},
                                                 {0, 0, 0, 0, -h, Rational(-5, 2)}}));
  CHECK(*out.certificate.signature == std::pair{2, 4});
  CHECK(out.certificate.algebra_type == std::vector<int>{4, 2});
  CHECK(classify_type42(out.algebra).squarefree == 5);
  CHECK(out.provenance.recipe == "z4_example");
  CHECK(out.provenance.labels.size() == 6);
  check_common(out);
}

TEST_CASE("count") {
  const auto a = recipe_count(5, 2);
  CHECK(*a.certificate.signature == std::pair{2, 4});
  CHECK(classify_type42(a.algebra).squarefree == 5);
  CHECK(is_unit_pisot(a.provenance.lambda));
  check_common(a);

  const auto b = recipe_count(2, 3);
  CHECK(*b.certificate.signature == std::pair{2, 4});
  CHECK(classify_type42(b.algebra).squarefree == 2);
  check_common(b);

  // the same lambda handed in explicitly gives the same output
  const auto c = recipe_count(5, 2, a.provenance.lambda);
  CHECK(c.matrix == a.matrix);
  CHECK(c.algebra == a.algebra);

  CHECK(code_of([] { recipe_count(4, 2); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { recipe_count(5, 5); }) == ErrorCode::BadParameters);
  const auto d = biquadratic_datum(5, 2);
  CHECK(code_of([&] { recipe_count(5, 2, FieldElement::generator(d)); }) == ErrorCode::NotPisot);
}

TEST_CASE("laur") {
  const auto q2 = quadratic_datum(2);
  const FieldElement u(q2, {1, 1});
  const auto h = recipe_laur(heisenberg(), Grading{{2, 1}}, q2, u);
  CHECK(h.algebra.dim() == 6);
  CHECK(h.certificate.algebra_type == std::vector<int>{4, 2});
  CHECK(*h.certificate.signature == std::pair{3, 3});
  check_common(h);

  const auto t = recipe_laur(abelian(1), Grading{{1}}, q2, u);
  CHECK(t.algebra.dim() == 2);
  CHECK(*t.certificate.signature == std::pair{1, 1});
  CHECK(t.certificate.charpoly == Polynomial({-1, -2, 1}));
  check_common(t);

  CHECK(code_of([&] { recipe_laur(heisenberg(), Grading{{2, 1}}, q2, FieldElement(q2, {0, 1})); }) ==
        ErrorCode::NotPisot);
  CHECK(code_of([&] { recipe_laur(heisenberg(), Grading{{1, 2}}, q2, u); }) == ErrorCode::NotGraded);
  CHECK(code_of([&] { recipe_laur(heisenberg(), Grading{{2, 1}}, rational_datum(), FieldElement(3)); }) ==
        ErrorCode::BadParameters);

  // a cubic base field: three copies, each degree-1 label a conjugate of lambda
  const auto d3 = fixtures::cubic_z3();
  const auto lam = find_unit_pisot(d3, {});
  const auto c = recipe_laur(heisenberg(), Grading{{2, 1}}, d3, lam);
  CHECK(c.algebra.dim() == 9);
  CHECK(c.certificate.algebra_type == std::vector<int>{6, 3});
  check_common(c);
}

TEST_CASE("csig") {
  const auto d = fixtures::quartic_z4();
  const FieldElement theta = FieldElement::generator(d);
  CHECK(csig_constraint(d).coeffs == kCsig.coeffs);
  const FieldElement lam(d, {-1, 0, 3, 0});

  const auto a = recipe_csig(d, lam, 2);
  CHECK(a.certificate.algebra_type == std::vector<int>{4, 2});
  CHECK(*a.certificate.signature == std::pair{2, 4});
  CHECK(a.certificate.minimal_signature);
  check_common(a);

  const auto b = recipe_csig(d, lam, 3);
  CHECK(b.certificate.algebra_type == std::vector<int>{4, 2, 4});
  CHECK(*b.certificate.signature == std::pair{3, 7});
  CHECK(b.certificate.minimal_signature);
  CHECK(b.certificate.signature->first == b.certificate.nilpotency_class);
  check_common(b);

  // signs come out of the brackets: mu_{2,2} goes to -mu_{1,2}, mu_{1,2} to +mu_{2,2}
  const auto rho = extend_representation(b.labeled);
  const auto& r = rho.image(1);
  CHECK(r(4, 5) == -1);
  CHECK(r(5, 4) == 1);
  // degree three, i = n = 2 and i = 2n = 4 pick up the sign
  CHECK(r(7, 6) == 1);
  CHECK(r(8, 7) == -1);
  CHECK(r(6, 9) == -1);

  const auto s = recipe_csig(d, std::nullopt, 2);
  CHECK(satisfies(s.provenance.lambda, kCsig));
  check_common(s);

  CHECK(code_of([&] { recipe_csig(d, theta, 2); }) == ErrorCode::ConstraintFailed);
  CHECK(code_of([&] { recipe_csig(d, lam, 1); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { recipe_csig(fixtures::cubic_z3(), std::nullopt, 2); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { recipe_csig(biquadratic_datum(5, 2), std::nullopt, 2); }) == ErrorCode::BadParameters);
}

TEST_CASE("last") {
  const auto d3 = fixtures::cubic_z3();
  const FieldElement lam(d3, {-1, 1, 1});
  REQUIRE(is_unit_pisot(lam));
  const auto a = recipe_last(d3, lam, 3);
  CHECK(a.certificate.algebra_type == std::vector<int>{3, 3, 3});
  CHECK(a.certificate.nilpotency_class == 3);
  check_common(a);

  const auto b = recipe_last(d3, lam, 1);
  CHECK(b.certificate.algebra_type == std::vector<int>{3});
  CHECK(b.certificate.charpoly == minimal_polynomial(lam));
  check_common(b);

  const auto d4 = fixtures::quartic_z4();
  const auto c = recipe_last(d4, FieldElement::generator(d4), 2);
  CHECK(c.certificate.algebra_type == std::vector<int>{4, 4});
  check_common(c);

  const auto s = recipe_last(d3, std::nullopt, 4);
  CHECK(s.certificate.algebra_type == std::vector<int>{3, 3, 3, 3});
  check_common(s);

  CHECK(code_of([] { recipe_last(quadratic_datum(2), std::nullopt, 2); }) == ErrorCode::BadParameters);
  CHECK(code_of([&] { recipe_last(d3, FieldElement::generator(d3), 2); }) == ErrorCode::NotPisot);
}
