#include "nilform/recipes.hpp"

#include <algorithm>
#include <utility>

#include "nilform/errors.hpp"
#include "nilform/fixtures.hpp"
#include "nilform/pfaffian.hpp"
#include "nilform/pisot.hpp"

namespace nilform {

namespace {

FieldElement flip_positive(const FieldElement& x) {
  return compare_conjugate_to_one(x, x.datum()->identity()) > 0 ? x : -x;
}

// smallest index of order N, for cyclic data
std::size_t cyclic_generator(const DatumPtr& d) {
  for (std::size_t s = 0; s < d->group_order(); ++s)
    if (d->order_of(s) == d->group_order()) return s;
  throw Error(ErrorCode::BadParameters, "Galois group is not cyclic");
}

std::vector<std::size_t> powers(const DatumPtr& d, std::size_t s) {
  std::vector<std::size_t> out{d->identity()};
  for (std::size_t i = 1; i < d->group_order(); ++i) out.push_back(d->compose(out.back(), s));
  return out;
}

FieldElement checked_pisot(const DatumPtr& d, const FieldElement& lambda) {
  if (lambda.datum() && !(lambda.datum()->min_poly() == d->min_poly()))
    throw Error(ErrorCode::DatumMismatch, "lambda must live in the datum's field");
  auto c = lambda.coeffs();
  c.resize(d->degree(), Rational(0));
  const FieldElement x(d, c);
  if (!is_unit_pisot(x)) throw Error(ErrorCode::NotPisot, "lambda = " + x.str());
  return x;
}

RecipeOutput finish(std::string name, const FieldElement& lambda, LabeledAlgebra la, const Representation& rho,
                    std::optional<RationalFormBasis> basis = std::nullopt) {
  Main2Result r = basis ? main2_construct(la, rho, *basis) : main2_construct(la, rho);
  AnosovCertificate cert = certify(r.algebra, r.matrix, rho.datum()->assumptions());
  if (!cert.is_anosov()) throw Error(ErrorCode::VerificationFailed, name + ": transported map is not Anosov");
  if (!(cert.charpoly == label_polynomial(la.labels)))
    throw Error(ErrorCode::VerificationFailed, name + ": characteristic polynomial differs from the labels");
  Provenance p{std::move(name), rho.datum()->description(), lambda, la.labels};
  return {std::move(r.algebra), std::move(r.matrix), std::move(cert), std::move(p), std::move(la), rho, std::move(r.basis)};
}

void expect_type(const RecipeOutput& out, const std::vector<int>& type) {
  if (out.certificate.algebra_type != type) throw Error(ErrorCode::VerificationFailed, "unexpected type");
}

}  // namespace

Polynomial label_polynomial(const std::vector<FieldElement>& labels) {
  std::vector<FieldElement> c{FieldElement(1)};
  for (const auto& l : labels) {
    std::vector<FieldElement> next(c.size() + 1, FieldElement(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= l * c[i];
    }
    c = std::move(next);
  }
  std::vector<Rational> out;
  for (const auto& x : c) {
    if (!x.is_rational()) throw Error(ErrorCode::IrrationalEntry, "labels are not closed under conjugation");
    out.push_back(x.rational_value());
  }
  return Polynomial(out);
}

ConeConstraint csig_constraint(const DatumPtr& d) {
  const std::size_t order = d->group_order();
  if (order % 2 != 0) throw Error(ErrorCode::BadParameters, "csig needs a group of even order");
  const std::size_t s = cyclic_generator(d);
  ConeConstraint c{std::vector<long>(order, 0), ConeConstraint::Relation::LessThanOne};
  c.coeffs[d->identity()] = 1;
  c.coeffs[powers(d, s)[order / 2]] = 2;
  return c;
}

FieldElement find_unit_pisot(const DatumPtr& d, const std::vector<ConeConstraint>& extra, const RecipeSearch& search) {
  auto cone = pisot_cone(d);
  cone.insert(cone.end(), extra.begin(), extra.end());
  for (const auto& x : search_units(d, search.height, search.power, cone)) {
    const FieldElement y = flip_positive(x);
    if (is_unit_pisot(y)) return y;
  }
  throw Error(ErrorCode::PisotNotFound, "no unit found at height " + std::to_string(search.height));
}

RecipeOutput recipe_z4_example() {
  const DatumPtr d = fixtures::quartic_z4();
  std::vector<FieldElement> l;
  for (std::size_t s = 0; s < 4; ++s) l.push_back(apply_automorphism(s, FieldElement::generator(d)));
  LabeledAlgebra la =
      build_labeled_algebra({l[0], l[1], l[2], l[3], l[0] * l[2], l[1] * l[3]}, {{0, 2, 1, 4}, {1, 3, 1, 5}}, {0, 1, 2, 3});
  const Representation rho = extend_representation(la);
  // U_i = sum_j l_j^{i-1} X_j, V_i = (l3^i - l1^i) Y13 + (l4^i - l2^i) Y24
  std::vector<FieldVector> vs;
  const FieldElement zero(d, {0});
  for (long i = 1; i <= 4; ++i) {
    FieldVector u(6, zero);
    for (std::size_t j = 0; j < 4; ++j) u[j] = pow(l[j], i - 1);
    vs.push_back(u);
  }
  for (long i = 1; i <= 2; ++i) {
    FieldVector v(6, zero);
    v[4] = pow(l[2], i) - pow(l[0], i);
    v[5] = pow(l[3], i) - pow(l[1], i);
    vs.push_back(v);
  }
  auto out = finish("z4_example", l[0], std::move(la), rho, form_basis_from_vectors(rho, vs));
  expect_type(out, {4, 2});
  return out;
}

RecipeOutput recipe_count(long k, long l, std::optional<FieldElement> lambda, const RecipeSearch& search) {
  const DatumPtr d = biquadratic_datum(k, l);
  if (!lambda) {
    try {
      lambda = find_unit_pisot(d, {}, search);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PisotNotFound) throw;
      // walk the lattice of the three quadratic subfield units instead
      const FieldElement t = FieldElement::generator(d);
      const FieldElement sk = (pow(t, 3) - FieldElement(3 * k + l) * t) / FieldElement(2 * l - 2 * k);
      const FieldElement sl = t - sk;
      const Integer kl = Integer(k) * Integer(l);
      const Integer s = squarefree_part(Rational(kl));
      const Integer r = sqrt(Integer(kl / s));
      const FieldElement ss = sk * sl / FieldElement(Rational(r));
      std::vector<FieldElement> gens;
      for (auto [dd, root] : {std::pair{k, sk}, std::pair{l, sl}, std::pair{s.get_si(), ss}}) {
        const QuadraticUnit u = quadratic_unit(dd);
        gens.push_back(FieldElement(Rational(u.x)) + FieldElement(Rational(u.y)) * root);
      }
      for (const auto& x : search_unit_lattice(gens, search.lattice_exponent, pisot_cone(d))) {
        const FieldElement y = flip_positive(x);
        if (is_unit_pisot(y)) {
          lambda = y;
          break;
        }
      }
      if (!lambda)
        throw Error(ErrorCode::PisotNotFound,
                    "no unit at height " + std::to_string(search.height) + " or lattice exponent " +
                        std::to_string(search.lattice_exponent));
    }
  }
  const FieldElement lam = checked_pisot(d, *lambda);
  std::vector<FieldElement> x;
  for (std::size_t s = 0; s < 4; ++s) x.push_back(apply_automorphism(s, lam));
  LabeledAlgebra la =
      build_labeled_algebra({x[0], x[1], x[2], x[3], x[0] * x[1], x[2] * x[3]}, {{0, 1, 1, 4}, {2, 3, 1, 5}}, {0, 1, 2, 3});
  const Representation rho = extend_representation(la);
  auto out = finish("count", lam, std::move(la), rho);
  expect_type(out, {4, 2});
  if (classify_type42(out.algebra).squarefree != k)
    throw Error(ErrorCode::VerificationFailed, "output is not isomorphic to n_" + std::to_string(k));
  return out;
}

RecipeOutput recipe_laur(const LieAlgebra& g, const Grading& grading, const DatumPtr& d, const FieldElement& lambda) {
  const std::size_t m = d->group_order();
  if (m < 2) throw Error(ErrorCode::BadParameters, "need a datum of degree at least 2");
  if (!check_grading(g, grading)) throw Error(ErrorCode::NotGraded, "grading is not compatible with the bracket");
  const FieldElement lam = checked_pisot(d, lambda);
  const std::size_t n = g.dim();
  const LieAlgebra sum = direct_sum(std::vector<LieAlgebra>(m, g));
  std::vector<FieldElement> labels;
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t b = 0; b < n; ++b) {
      const int j = grading.degree_of(b);
      labels.push_back(apply_automorphism(i, pow(lam, j)));
      if (j == 1) gens.push_back(i * n + b);
    }
  std::vector<BracketTerm> brackets;
  for (const auto& e : sum.entries()) brackets.push_back({e.i, e.j, e.coeff, e.k});
  LabeledAlgebra la = build_labeled_algebra(labels, brackets, gens);
  // sigma sigma_i = sigma_{pi(i)}: copy i goes to copy pi(i)
  std::vector<RationalMatrix> images;
  for (std::size_t s = 0; s < m; ++s) {
    RationalMatrix r(m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t b = 0; b < n; ++b) r(d->compose(s, i) * n + b, i * n + b) = 1;
    images.push_back(std::move(r));
  }
  const Representation rho(d, std::move(images), la.algebra);
  return finish("laur", lam, std::move(la), rho);
}

RecipeOutput recipe_csig(const DatumPtr& d, std::optional<FieldElement> lambda, int c, const RecipeSearch& search) {
  const std::size_t order = d->group_order();
  if (order < 4 || order % 2 != 0) throw Error(ErrorCode::BadParameters, "csig needs a cyclic group of order 2n, n >= 2");
  if (c < 2) throw Error(ErrorCode::BadParameters, "class must be at least 2");
  const ConeConstraint extra = csig_constraint(d);
  if (!lambda) lambda = find_unit_pisot(d, {extra}, search);
  const FieldElement lam = checked_pisot(d, *lambda);
  if (!satisfies(lam, extra)) throw Error(ErrorCode::ConstraintFailed, "|lambda sigma^n(lambda^2)| >= 1");

  const std::size_t n = order / 2;
  const auto pw = powers(d, cyclic_generator(d));
  auto conj = [&](std::size_t i, const FieldElement& x) { return apply_automorphism(pw[i % order], x); };
  // slot grid: X_{sigma^i lambda} for i = 1..2n, then mu_{i,2} for i = 1..n,
  // then mu_{i,j} for i = 1..2n, j = 3..c
  auto deg1 = [&](std::size_t i) { return i - 1; };
  auto mu = [&](std::size_t i, std::size_t j) -> std::size_t {
    if (j == 2) return 2 * n + (i - 1) % n;
    return 3 * n + (j - 3) * 2 * n + (i - 1);
  };
  const std::size_t dim = 2 * n + n + static_cast<std::size_t>(c - 2) * 2 * n;
  std::vector<FieldElement> labels(dim);
  for (std::size_t i = 1; i <= 2 * n; ++i) {
    labels[deg1(i)] = conj(i, lam);
    for (std::size_t j = 2; j <= static_cast<std::size_t>(c); ++j)
      labels[mu(i, j)] = conj(i, pow(lam, static_cast<long>(j) - 1)) * conj(i + n, lam);
  }
  std::vector<BracketTerm> brackets;
  for (std::size_t i = 1; i <= n; ++i) brackets.push_back({deg1(i), deg1(i + n), 1, mu(i, 2)});
  for (std::size_t i = 1; i <= 2 * n; ++i)
    for (std::size_t j = 2; j + 1 <= static_cast<std::size_t>(c); ++j) brackets.push_back({deg1(i), mu(i, j), 1, mu(i, j + 1)});
  std::vector<std::size_t> gens;
  for (std::size_t i = 1; i <= 2 * n; ++i) gens.push_back(deg1(i));
  LabeledAlgebra la = build_labeled_algebra(labels, brackets, gens);
  const Representation rho = extend_representation(la);
  auto out = finish("csig", lam, std::move(la), rho);
  std::vector<int> type{static_cast<int>(2 * n), static_cast<int>(n)};
  for (int j = 3; j <= c; ++j) type.push_back(static_cast<int>(2 * n));
  expect_type(out, type);
  if (!out.certificate.minimal_signature) throw Error(ErrorCode::VerificationFailed, "signature is not minimal");
  return out;
}

RecipeOutput recipe_last(const DatumPtr& d, std::optional<FieldElement> lambda, int c, const RecipeSearch& search) {
  const std::size_t n = d->group_order();
  if (n < 3) throw Error(ErrorCode::BadParameters, "last needs a cyclic group of order at least 3");
  if (c < 1) throw Error(ErrorCode::BadParameters, "class must be at least 1");
  if (!lambda) lambda = find_unit_pisot(d, {}, search);
  const FieldElement lam = checked_pisot(d, *lambda);
  const auto pw = powers(d, cyclic_generator(d));
  // lambda_i = sigma^{i-1}(lambda), i = 1..n; mu_{i,1} = lambda_{i+1} sits in degree 1
  auto li = [&](std::size_t i) { return apply_automorphism(pw[(i - 1) % n], lam); };
  auto mu = [&](std::size_t i, std::size_t j) -> std::size_t { return j == 1 ? i % n : (j - 1) * n + (i - 1); };
  const std::size_t cc = static_cast<std::size_t>(c);
  std::vector<FieldElement> labels(n * cc);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= cc; ++j) labels[mu(i, j)] = pow(li(i), static_cast<long>(j) - 1) * li(i + 1);
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (labels[a] == labels[b])
        throw Error(ErrorCode::LabelCollision, "labels " + std::to_string(a) + " and " + std::to_string(b) + " agree");
  std::vector<BracketTerm> brackets;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j < cc; ++j) brackets.push_back({i - 1, mu(i, j), 1, mu(i, j + 1)});
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(i);
  LabeledAlgebra la = build_labeled_algebra(labels, brackets, gens);
  const Representation rho = extend_representation(la);
  auto out = finish("last", lam, std::move(la), rho);
  expect_type(out, std::vector<int>(cc, static_cast<int>(n)));
  return out;
}

}  // namespace nilform
