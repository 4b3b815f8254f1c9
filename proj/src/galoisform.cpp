#include "nilform/galoisform.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace nilform {

namespace {

std::string pair_str(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

FieldMatrix field_inverse(const FieldMatrix& b) {
  auto inv = inverse(b);
  if (!inv) throw Error(ErrorCode::Singular, "rational form basis is not independent over E");
  return *inv;
}

DatumPtr labels_datum(const std::vector<FieldElement>& labels) {
  for (const auto& l : labels)
    if (l.datum()) return l.datum();
  throw Error(ErrorCode::BadParameters, "labels do not determine a number field");
}

}  // namespace

Representation::Representation(DatumPtr datum, std::vector<RationalMatrix> images, std::optional<LieAlgebra> target)
    : datum_(std::move(datum)), images_(std::move(images)), target_(std::move(target)) {
  if (!datum_) throw Error(ErrorCode::BadParameters, "representation without a datum");
  if (images_.size() != datum_->group_order())
    throw Error(ErrorCode::DimensionMismatch, "one image per group element expected");
  const std::size_t m = images_.front().rows();
  for (const auto& a : images_) {
    if (a.rows() != m || a.cols() != m) throw Error(ErrorCode::DimensionMismatch, "representation image shape");
    if (is_zero(determinant(a))) throw Error(ErrorCode::NotHomomorphism, "singular image");
  }
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = 0; j < images_.size(); ++j)
      if (images_[datum_->compose(i, j)] != images_[i] * images_[j])
        throw Error(ErrorCode::NotHomomorphism, "rho(s_i s_j) != rho(s_i) rho(s_j) at " + pair_str(i, j));
  if (target_) {
    if (target_->dim() != m) throw Error(ErrorCode::DimensionMismatch, "target algebra dimension");
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (!is_automorphism(*target_, images_[i]))
        throw Error(ErrorCode::NotAutomorphism, "image " + std::to_string(i) + " is not an automorphism");
  }
}

Representation trivial_representation(const DatumPtr& datum, std::size_t m) {
  return Representation(datum, std::vector<RationalMatrix>(datum->group_order(), RationalMatrix::identity(m)));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.datum() != b.datum() && a.datum()->min_poly() != b.datum()->min_poly())
    throw Error(ErrorCode::DatumMismatch, "direct sum of representations over different fields");
  const std::size_t m = a.dim(), n = b.dim();
  std::vector<RationalMatrix> images;
  for (std::size_t s = 0; s < a.images().size(); ++s) {
    RationalMatrix r(m + n, m + n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) r(i, j) = a.image(s)(i, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(m + i, m + j) = b.image(s)(i, j);
    images.push_back(std::move(r));
  }
  return Representation(a.datum(), std::move(images));
}

FieldMatrix RationalFormBasis::matrix() const {
  return FieldMatrix::from_columns(vectors, vectors.empty() ? 0 : vectors.front().size());
}

FieldMatrix to_field(const RationalMatrix& m, const DatumPtr& datum) {
  FieldMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = FieldElement(datum, {m(i, j)});
  return out;
}

FieldMatrix right_action(std::size_t sigma, const FieldMatrix& m) {
  FieldMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = right_action(sigma, m(i, j));
  return out;
}

bool satisfies_form_condition(const Representation& rho, std::size_t sigma, const FieldVector& v) {
  if (v.size() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "vector length");
  const FieldMatrix r = to_field(rho.image(sigma), rho.datum());
  FieldVector promoted;
  for (const auto& x : v) promoted.push_back(x.promoted(rho.datum()));
  return r * promoted == right_action(sigma, promoted);
}

RationalFormBasis rational_form(const Representation& rho) {
  const DatumPtr& d = rho.datum();
  const std::size_t m = rho.dim(), deg = d->degree();
  const auto& gens = d->generators();
  // unknown (a, t) is coordinate t of component a
  RationalMatrix system(gens.size() * m * deg, m * deg);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const RationalMatrix& r = rho.image(gens[g]);
    const RationalMatrix& act = d->action_matrix(d->inverse(gens[g]));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t t = 0; t < deg; ++t) {
        const std::size_t row = (g * m + a) * deg + t;
        for (std::size_t b = 0; b < m; ++b) system(row, b * deg + t) += r(a, b);
        for (std::size_t u = 0; u < deg; ++u) system(row, a * deg + u) -= act(t, u);
      }
  }
  const auto kernel = nullspace(system);
  if (kernel.size() != m)
    throw Error(ErrorCode::DimensionMismatch,
                "rational form has Q-dimension " + std::to_string(kernel.size()) + ", expected " + std::to_string(m));
  std::vector<FieldVector> vectors;
  for (const auto& k : kernel) {
    FieldVector v;
    for (std::size_t a = 0; a < m; ++a)
      v.emplace_back(d, std::vector<Rational>(k.begin() + static_cast<std::ptrdiff_t>(a * deg),
                                              k.begin() + static_cast<std::ptrdiff_t>((a + 1) * deg)));
    vectors.push_back(std::move(v));
  }
  return form_basis_from_vectors(rho, std::move(vectors));
}

RationalFormBasis form_basis_from_vectors(const Representation& rho, std::vector<FieldVector> vectors) {
  if (vectors.size() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "need one vector per dimension");
  for (auto& v : vectors) {
    if (v.size() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "vector length");
    for (auto& x : v) x = x.promoted(rho.datum());
  }
  for (std::size_t s = 0; s < rho.images().size(); ++s)
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (!satisfies_form_condition(rho, s, vectors[i]))
        throw Error(ErrorCode::VerificationFailed,
                    "basis vector " + std::to_string(i) + " violates the form condition at " + std::to_string(s));
  RationalFormBasis out{std::move(vectors)};
  if (is_zero(determinant(out.matrix())))
    throw Error(ErrorCode::Singular, "rational form basis is not independent over E");
  return out;
}

LieAlgebra structure_constants_on_form(const RationalFormBasis& basis, const LieAlgebraE& a) {
  const std::size_t m = basis.vectors.size();
  if (a.dim() != m) throw Error(ErrorCode::DimensionMismatch, "basis and algebra dimensions differ");
  const FieldMatrix binv = field_inverse(basis.matrix());
  LieAlgebra out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const FieldVector c = binv * a.bracket(basis.vectors[i], basis.vectors[j]);
      for (std::size_t k = 0; k < m; ++k) {
        if (c[k].is_zero()) continue;
        if (!c[k].is_rational()) throw Error(ErrorCode::IrrationalStructureConstant, pair_str(i, j));
        out.add_bracket(i, j, k, c[k].rational_value());
      }
    }
  if (!check_jacobi(out)) throw Error(ErrorCode::JacobiViolation, "algebra on the rational form");
  return out;
}

RationalMatrix transport(const Representation& rho, const RationalFormBasis& basis, const FieldMatrix& f) {
  const DatumPtr& d = rho.datum();
  const std::size_t m = rho.dim();
  if (f.rows() != m || f.cols() != m) throw Error(ErrorCode::DimensionMismatch, "map shape");
  FieldMatrix fe(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) fe(i, j) = f(i, j).promoted(d);
  for (std::size_t s = 0; s < rho.images().size(); ++s) {
    const FieldMatrix rhs = to_field(rho.image(s), d) * fe * to_field(rho.image(d->inverse(s)), d);
    if (right_action(s, fe) != rhs) throw Error(ErrorCode::CommutationViolation, "sigma " + std::to_string(s));
  }
  const FieldMatrix b = basis.matrix();
  const FieldMatrix mt = field_inverse(b) * fe * b;
  RationalMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!mt(i, j).is_rational()) throw Error(ErrorCode::IrrationalEntry, "transported entry " + pair_str(i, j));
      out(i, j) = mt(i, j).rational_value();
    }
  return out;
}

void check_labels(const LieAlgebra& a, const std::vector<FieldElement>& labels) {
  if (labels.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "one label per basis vector");
  for (const auto& e : a.entries())
    if (!(labels[e.k] == labels[e.i] * labels[e.j]))
      throw Error(ErrorCode::LabelMismatch,
                  "[b" + std::to_string(e.i) + ", b" + std::to_string(e.j) + "] has a component on b" + std::to_string(e.k));
}

LabeledAlgebra build_labeled_algebra(std::vector<FieldElement> labels, const std::vector<BracketTerm>& brackets,
                                     std::vector<std::size_t> generators) {
  LieAlgebra a(labels.size());
  for (const auto& b : brackets) a.add_bracket(b.i, b.j, b.k, b.coeff);
  const DatumPtr d = labels_datum(labels);
  for (auto& l : labels) l = l.promoted(d);
  check_labels(a, labels);
  if (!check_jacobi(a)) throw Error(ErrorCode::JacobiViolation, "labeled algebra");
  for (auto g : generators)
    if (g >= a.dim()) throw Error(ErrorCode::DimensionMismatch, "generator index out of range");
  return {std::move(labels), std::move(a), std::move(generators)};
}

GeneratorAction label_action(const LabeledAlgebra& la, std::size_t sigma) {
  GeneratorAction out{sigma, {}};
  for (auto g : la.generators) {
    const FieldElement target = apply_automorphism(sigma, la.labels[g]);
    std::optional<std::size_t> found;
    for (auto h : la.generators)
      if (la.labels[h] == target) {
        if (found) throw Error(ErrorCode::LabelMismatch, "generator labels are not distinct");
        found = h;
      }
    if (!found) throw Error(ErrorCode::LabelMismatch, "no generator labeled sigma(label(b" + std::to_string(g) + "))");
    out.images.push_back({*found, 1});
  }
  return out;
}

namespace {

RationalMatrix extend_action(const LabeledAlgebra& la, const GeneratorAction& act) {
  const std::size_t n = la.algebra.dim();
  if (act.images.size() != la.generators.size())
    throw Error(ErrorCode::DimensionMismatch, "one image per generator expected");
  std::vector<std::vector<Rational>> gens, images;
  for (std::size_t p = 0; p < la.generators.size(); ++p) {
    const auto& im = act.images[p];
    if (im.target >= n || (im.sign != 1 && im.sign != -1))
      throw Error(ErrorCode::BadParameters, "bad signed generator image");
    std::vector<Rational> w(n, Rational(0));
    w[im.target] = Rational(im.sign);
    gens.push_back(unit_vector<Rational>(n, la.generators[p]));
    images.push_back(std::move(w));
  }
  return extend_from_generators(la.algebra, gens, images);
}

}  // namespace

Representation extend_representation(const LabeledAlgebra& la, const std::vector<GeneratorAction>& actions) {
  const DatumPtr d = labels_datum(la.labels);
  const std::size_t order = d->group_order();
  std::vector<std::pair<std::size_t, RationalMatrix>> gens;
  for (const auto& act : actions) {
    if (act.sigma >= order) throw Error(ErrorCode::BadParameters, "group element out of range");
    gens.emplace_back(act.sigma, extend_action(la, act));
  }
  std::vector<std::optional<RationalMatrix>> images(order);
  images[d->identity()] = RationalMatrix::identity(la.algebra.dim());
  std::deque<std::size_t> queue{d->identity()};
  while (!queue.empty()) {
    const std::size_t g = queue.front();
    queue.pop_front();
    for (const auto& [s, r] : gens) {
      const std::size_t h = d->compose(g, s);
      RationalMatrix img = *images[g] * r;
      if (images[h]) {
        if (*images[h] != img) throw Error(ErrorCode::NotHomomorphism, "relation of the Galois group violated");
        continue;
      }
      images[h] = std::move(img);
      queue.push_back(h);
    }
  }
  std::vector<RationalMatrix> all;
  for (auto& im : images) {
    if (!im) throw Error(ErrorCode::NotGenerating, "actions do not generate the Galois group");
    all.push_back(std::move(*im));
  }
  Representation rho(d, std::move(all), la.algebra);
  for (std::size_t s = 0; s < order; ++s)
    for (std::size_t i = 0; i < la.algebra.dim(); ++i) {
      const FieldElement want = apply_automorphism(s, la.labels[i]);
      for (std::size_t k = 0; k < la.algebra.dim(); ++k)
        if (!rho.image(s)(k, i).is_zero() && !(la.labels[k] == want))
          throw Error(ErrorCode::LabelMismatch, "rho_" + std::to_string(s) + " does not map V_lambda to V_sigma(lambda)");
    }
  return rho;
}

Representation extend_representation(const LabeledAlgebra& la) {
  const DatumPtr d = labels_datum(la.labels);
  std::vector<GeneratorAction> actions;
  for (auto s : d->generators()) actions.push_back(label_action(la, s));
  return extend_representation(la, actions);
}

Main2Result main2_construct(const LabeledAlgebra& la, const Representation& rho) {
  return main2_construct(la, rho, rational_form(rho));
}

Main2Result main2_construct(const LabeledAlgebra& la, const Representation& rho, const RationalFormBasis& basis) {
  const std::size_t m = la.algebra.dim();
  if (rho.dim() != m) throw Error(ErrorCode::DimensionMismatch, "representation and algebra dimensions differ");
  for (std::size_t i = 0; i < m; ++i)
    if (!is_algebraic_unit(la.labels[i])) throw Error(ErrorCode::NonUnitLabel, "label " + std::to_string(i));
  FieldMatrix f(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) f(i, j) = FieldElement(rho.datum(), {Rational(0)});
    f(i, i) = la.labels[i].promoted(rho.datum());
  }
  LieAlgebra algebra = structure_constants_on_form(basis, extend_scalars(la.algebra, rho.datum()));
  RationalMatrix matrix = transport(rho, basis, f);
  if (!is_automorphism(algebra, matrix)) throw Error(ErrorCode::VerificationFailed, "transported map is not an automorphism");
  return {basis, std::move(algebra), std::move(matrix)};
}

}  // namespace nilform
