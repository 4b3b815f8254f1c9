#include "nilform/pfaffian.hpp"

#include <algorithm>
#include <sstream>

namespace nilform {

namespace {

void strip(std::vector<int>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) out.emplace_back(p, q);
  return out;
}

bool is_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root * root == n;
}

// primitive integer multiple with positive leading entry
std::vector<Rational> primitive(const std::vector<Rational>& v) {
  Integer l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  std::vector<Integer> ints;
  for (const auto& x : v) {
    ints.push_back(x.num() * (l / x.den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (g == 0) return v;
  for (const auto& x : ints)
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  std::vector<Rational> out;
  for (const auto& x : ints) out.emplace_back(Integer(x / g));
  return out;
}

std::vector<std::vector<Rational>> w_basis(const LieAlgebra& a, const Adapted& s) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t l = 0; l < s.k; ++l) {
    std::vector<Rational> z(s.k, Rational(0));
    z[l] = 1;
    rows.push_back(skew_coordinates(j_map(a, z)));
  }
  return rows;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_[{}] = c;
}

MPoly MPoly::variable(std::size_t i, std::size_t nvars) {
  if (i >= nvars) throw Error(ErrorCode::DimensionMismatch, "variable index");
  std::vector<int> e(i + 1, 0);
  e[i] = 1;
  MPoly p;
  p.terms_[e] = 1;
  return p;
}

void MPoly::add_term(const std::vector<int>& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational MPoly::coeff(const std::vector<int>& exponents) const {
  auto e = exponents;
  strip(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    if (e.size() > point.size()) throw Error(ErrorCode::DimensionMismatch, "too few coordinates");
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= pow(point[i], e[i]);
    out += t;
  }
  return out;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree in the first variable first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    if (first) os << (c.sign() < 0 ? "-" : "");
    else os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool monomial = false;
    for (auto x : e) monomial = monomial || x != 0;
    if (mag != 1 || !monomial) os << mag.str() << (monomial ? "*" : "");
    bool star = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (star ? "*" : "") << "Y" << i + 1;
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      strip(e);
      out.add_term(e, ca * cb);
    }
  return out;
}

BinaryQuadraticForm BinaryQuadraticForm::compose(const RationalMatrix& u) const {
  if (u.rows() != 2 || u.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "2x2 matrix expected");
  return {eval(u(0, 0), u(1, 0)),
          2 * a * u(0, 0) * u(0, 1) + b * (u(0, 0) * u(1, 1) + u(0, 1) * u(1, 0)) + 2 * c * u(1, 0) * u(1, 1),
          eval(u(0, 1), u(1, 1))};
}

Adapted adapted_split(const LieAlgebra& a) {
  const auto lcs = lower_central_series(a);
  if (lcs.nilpotency_class > 2) throw Error(ErrorCode::NotTwoStep, "nilpotency class above 2");
  if (lcs.nilpotency_class <= 1) return {a.dim(), 0};
  const std::size_t n1 = static_cast<std::size_t>(lcs.type[0]), k = static_cast<std::size_t>(lcs.type[1]);
  std::vector<std::vector<Rational>> tail;
  for (std::size_t i = n1; i < a.dim(); ++i) tail.push_back(unit_vector<Rational>(a.dim(), i));
  if (lcs.bases[1] != tail) throw Error(ErrorCode::BasisNotAdapted, "gamma_2 is not spanned by the last basis vectors");
  return {n1, k};
}

RationalMatrix j_map(const LieAlgebra& a, const std::vector<Rational>& z) {
  const Adapted s = adapted_split(a);
  if (z.size() != s.k) throw Error(ErrorCode::DimensionMismatch, "centre coordinates");
  RationalMatrix out(s.n1, s.n1);
  for (std::size_t i = 0; i < s.n1; ++i)
    for (std::size_t j = i + 1; j < s.n1; ++j) {
      const auto& b = a.basis_bracket(i, j);
      Rational v(0);
      for (std::size_t l = 0; l < s.k; ++l) v += b[s.n1 + l] * z[l];
      out(i, j) = v;
      out(j, i) = -v;
    }
  return out;
}

Rational pfaffian(const RationalMatrix& s) {
  if (!s.is_square()) throw Error(ErrorCode::NonSquare, "Pfaffian of a non-square matrix");
  if (s.rows() % 2 != 0) throw Error(ErrorCode::OddDimension, "Pfaffian of odd size");
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (s(i, j) != -s(j, i)) throw Error(ErrorCode::BadParameters, "matrix is not skew-symmetric");
  return pfaffian_expand(s);
}

MPoly pfaffian_form(const LieAlgebra& a) {
  const Adapted s = adapted_split(a);
  if (s.n1 % 2 != 0) throw Error(ErrorCode::OddDimension, "complement has odd dimension");
  Matrix<MPoly> m(s.n1, s.n1);
  for (std::size_t l = 0; l < s.k; ++l) {
    std::vector<Rational> z(s.k, Rational(0));
    z[l] = 1;
    const RationalMatrix j = j_map(a, z);
    const MPoly y = MPoly::variable(l, s.k);
    for (std::size_t p = 0; p < s.n1; ++p)
      for (std::size_t q = 0; q < s.n1; ++q)
        if (!j(p, q).is_zero()) m(p, q) += MPoly(j(p, q)) * y;
  }
  return pfaffian_expand(m);
}

BinaryQuadraticForm pfaffian_form_42(const LieAlgebra& a) {
  const auto type = lower_central_series(a).type;
  if (type != std::vector<int>{4, 2}) throw Error(ErrorCode::BadParameters, "type (4, 2) expected");
  const MPoly h = pfaffian_form(a);
  return {h.coeff({2}), h.coeff({1, 1}), h.coeff({0, 2})};
}

Integer squarefree_part(const Rational& r) {
  if (r.is_zero()) throw Error(ErrorCode::BadParameters, "squarefree part of zero");
  Integer n = r.num() * r.den();
  const int sign = n < 0 ? -1 : 1;
  n = abs(n);
  Integer out = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  out *= n;
  return sign * out;
}

Type42Class classify_type42(const LieAlgebra& a) {
  Type42Class c;
  c.form = pfaffian_form_42(a);
  c.discriminant = c.form.discriminant();
  if (c.discriminant.is_zero()) throw Error(ErrorCode::DegeneratePfaffian, "Pfaffian form has discriminant 0");
  c.squarefree = squarefree_part(c.discriminant);
  c.anosov_compatible = c.squarefree > 1;
  return c;
}

PellSolution solve_pell(const Integer& d) {
  Integer root;
  if (d <= 0 || is_square(d, root)) throw Error(ErrorCode::BadDiscriminant, "D must be a positive non-square");
  // fundamental solution of u^2 - D v^2 = 1 from the continued fraction of sqrt D
  const Integer a0 = root;
  Integer m = 0, q = 1, a = a0;
  Integer p_prev = 1, p = a0, r_prev = 0, r = 1;
  while (p * p - d * r * r != 1) {
    m = q * a - m;
    q = (d - m * m) / q;
    a = (a0 + m) / q;
    Integer np = a * p + p_prev, nr = a * r + r_prev;
    p_prev = p, r_prev = r, p = np, r = nr;
  }
  const Integer u = p, v = r;
  // the minimal solution eps of x^2 - D y^2 = 4 has eps^k = u + v sqrt D, k in {3, 2, 1}
  Integer t;
  mpz_root(t.get_mpz_t(), Integer(2 * u).get_mpz_t(), 3);
  for (Integer c = t - 1; c <= t + 2; ++c) {
    if (c <= 2 || c * c * c - 3 * c != 2 * u) continue;
    const Integer y2 = c * c - 4;
    Integer y;
    if (y2 % d == 0 && is_square(y2 / d, y) && y > 0) return {c, y};
  }
  Integer x;
  if (is_square(2 * u + 2, x) && (2 * v) % x == 0) {
    const Integer y = 2 * v / x;
    if (x * x - d * y * y == 4) return {x, y};
  }
  return {2 * u, 2 * v};
}

RationalMatrix pell_automorphism(const BinaryQuadraticForm& h, const PellSolution& sol) {
  const Rational disc = h.discriminant();
  const Rational x(sol.x), y(sol.y);
  if (x * x - disc * y * y != 4) throw Error(ErrorCode::SolutionMismatch, "x^2 - D y^2 != 4");
  RationalMatrix u = RationalMatrix::from_rows({{(x - y * h.b) / 2, -h.c * y}, {h.a * y, (x + y * h.b) / 2}});
  if (determinant(u) != 1 || !(h.compose(u) == h) || charpoly(u) != Polynomial{Rational(1), -x, Rational(1)})
    throw Error(ErrorCode::VerificationFailed, "U(x, y) does not preserve the form");
  return u;
}

LieAlgebra n_k_algebra(long k) {
  LieAlgebra a(6);
  a.add_bracket(0, 2, 4, 1);
  a.add_bracket(1, 3, 4, 1);
  a.add_bracket(0, 3, 5, 1);
  a.add_bracket(1, 2, 5, k);
  return a;
}

LieAlgebra h_k_algebra(long k) {
  LieAlgebra a(8);
  a.add_bracket(0, 1, 4, 1);
  a.add_bracket(0, 2, 5, 1);
  a.add_bracket(0, 3, 6, k);
  a.add_bracket(1, 2, 6, -1);
  a.add_bracket(1, 3, 5, -1);
  a.add_bracket(2, 3, 7, 1);
  return a;
}

std::vector<Rational> skew_coordinates(const RationalMatrix& s) {
  std::vector<Rational> out;
  for (const auto& [p, q] : pairs_of(s.rows())) out.push_back(s(p, q));
  return out;
}

RationalMatrix skew_from_coordinates(const std::vector<Rational>& v, std::size_t n) {
  const auto pairs = pairs_of(n);
  if (v.size() != pairs.size()) throw Error(ErrorCode::DimensionMismatch, "skew coordinate count");
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out(pairs[i].first, pairs[i].second) = v[i];
    out(pairs[i].second, pairs[i].first) = -v[i];
  }
  return out;
}

LieAlgebra scheuneman_dual(const LieAlgebra& a) {
  const Adapted s = adapted_split(a);
  const auto w = w_basis(a, s);
  const auto pairs = pairs_of(s.n1);
  if (!w.empty() && rank(RationalMatrix::from_rows(w)) < s.k)
    throw Error(ErrorCode::JNotInjective, "Z -> J_Z is not injective");
  // B(Z1, Z2) = tr(Z1^T Z2) = 2 * dot of coordinates, so the complement is a kernel
  std::vector<std::vector<Rational>> dual_w;
  if (w.empty()) {
    for (std::size_t i = 0; i < pairs.size(); ++i) dual_w.push_back(unit_vector<Rational>(pairs.size(), i));
  } else {
    dual_w = nullspace(RationalMatrix::from_rows(w));
  }
  if (!dual_w.empty()) dual_w = row_space_basis(dual_w);
  for (auto& v : dual_w) v = primitive(v);
  // centre basis B-dual to dual_w: [X_p, X_q] = sum_l (W~_l)_pq Z_l
  LieAlgebra out(s.n1 + dual_w.size());
  for (std::size_t l = 0; l < dual_w.size(); ++l)
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (!dual_w[l][i].is_zero()) out.add_bracket(pairs[i].first, pairs[i].second, s.n1 + l, dual_w[l][i]);
  return out;
}

RationalMatrix extend_degree_one(const LieAlgebra& a, const RationalMatrix& alpha) {
  const Adapted s = adapted_split(a);
  if (alpha.rows() != s.n1 || alpha.cols() != s.n1) throw Error(ErrorCode::DimensionMismatch, "map on V has the wrong size");
  std::vector<std::vector<Rational>> gens, images;
  for (std::size_t i = 0; i < s.n1; ++i) {
    gens.push_back(unit_vector<Rational>(a.dim(), i));
    std::vector<Rational> img(a.dim(), Rational(0));
    for (std::size_t r = 0; r < s.n1; ++r) img[r] = alpha(r, i);
    images.push_back(std::move(img));
  }
  return extend_from_generators(a, gens, images);
}

std::pair<RationalMatrix, RationalMatrix> dual_automorphism(const RationalMatrix& alpha, const LieAlgebra& a,
                                                            const LieAlgebra& dual) {
  const Adapted s = adapted_split(a);
  if (alpha.rows() != s.n1 || alpha.cols() != s.n1) throw Error(ErrorCode::DimensionMismatch, "map on V has the wrong size");
  if (is_zero(determinant(alpha))) throw Error(ErrorCode::BadParameters, "alpha is singular");
  const auto w = w_basis(a, s);
  if (!w.empty()) {
    const auto span = row_space_basis(w);
    for (const auto& z : w)
      if (!in_span(span, skew_coordinates(alpha.transpose() * skew_from_coordinates(z, s.n1) * alpha)))
        throw Error(ErrorCode::DoesNotPreserveW, "alpha^T W alpha is not W");
  }
  return {extend_degree_one(a, alpha), extend_degree_one(dual, alpha.transpose())};
}

RationalMatrix wedge_square(const RationalMatrix& alpha) {
  if (!alpha.is_square()) throw Error(ErrorCode::NonSquare, "wedge square of a non-square matrix");
  const auto pairs = pairs_of(alpha.rows());
  RationalMatrix out(pairs.size(), pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto [i, j] = pairs[c];
    for (std::size_t r = 0; r < pairs.size(); ++r) {
      const auto [p, q] = pairs[r];
      out(r, c) = alpha(p, i) * alpha(q, j) - alpha(q, i) * alpha(p, j);
    }
  }
  return out;
}

}  // namespace nilform
