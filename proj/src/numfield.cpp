#include "nilform/numfield.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include "nilform/errors.hpp"

namespace nilform {

long default_budget(long fallback) {
  if (const char* env = std::getenv("ANOSOV_SEARCH_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

// ---------------------------------------------------------------- irreducibility

namespace {

Integer isqrt_ceil(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) r += 1;
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<Integer> signed_divisors(const Integer& n) {
  Integer a = abs(n);
  std::vector<Integer> out;
  for (Integer i = 1; i * i <= a; ++i) {
    if (a % i != 0) continue;
    out.push_back(i);
    out.push_back(-i);
    if (i * i != a) {
      out.push_back(a / i);
      out.push_back(-(a / i));
    }
  }
  return out;
}

bool divides(const Integer& a, const Integer& b) { return a != 0 && b % a == 0; }

}  // namespace

void check_irreducible(const Polynomial& p, long budget) {
  if (!p.is_monic() || !p.has_integer_coeffs()) {
    throw Error(ErrorCode::BadParameters, "minimal polynomial must be monic with integer coefficients");
  }
  const int d = p.degree();
  if (d <= 1) return;
  const Integer c0 = p.coeff(0).num();
  if (c0 == 0) throw Error(ErrorCode::NotIrreducible, "X divides " + p.str());

  Integer norm2 = 0;
  for (const auto& c : p.coeffs()) norm2 += c.num() * c.num();
  const Integer l2 = isqrt_ceil(norm2);
  const Integer at_one = p.eval(1).num(), at_minus_one = p.eval(-1).num();
  const auto constants = signed_divisors(c0);

  long tried = 0;
  for (int k = 1; 2 * k <= d; ++k) {
    // coefficients g_1..g_{k-1} bounded by C(k,j)*||p||_2; g_0 divides p(0)
    std::vector<Integer> bound(static_cast<std::size_t>(k));
    for (int j = 1; j < k; ++j) bound[static_cast<std::size_t>(j)] = binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)) * l2;
    std::vector<Integer> g(static_cast<std::size_t>(k) + 1);
    g[static_cast<std::size_t>(k)] = 1;
    for (const auto& c : constants) {
      g[0] = c;
      for (int j = 1; j < k; ++j) g[static_cast<std::size_t>(j)] = -bound[static_cast<std::size_t>(j)];
      while (true) {
        if (++tried > budget) {
          throw Error(ErrorCode::IrreducibilityUnproven,
                      "factor search budget exhausted for " + p.str() + "; supply assume_irreducible");
        }
        Integer g1 = 0, gm1 = 0;
        for (int j = 0; j <= k; ++j) {
          g1 += g[static_cast<std::size_t>(j)];
          gm1 += (j % 2 == 0) ? g[static_cast<std::size_t>(j)] : Integer(-g[static_cast<std::size_t>(j)]);
        }
        const bool plausible = (at_one == 0 || divides(g1, at_one)) && (at_minus_one == 0 || divides(gm1, at_minus_one));
        if (plausible) {
          std::vector<Rational> gc;
          for (const auto& x : g) gc.emplace_back(x);
          if ((p % Polynomial(gc)).is_zero()) {
            throw Error(ErrorCode::NotIrreducible, Polynomial(gc).str() + " divides " + p.str());
          }
        }
        int j = 1;
        while (j < k && g[static_cast<std::size_t>(j)] == bound[static_cast<std::size_t>(j)]) {
          g[static_cast<std::size_t>(j)] = -bound[static_cast<std::size_t>(j)];
          ++j;
        }
        if (j >= k) break;
        g[static_cast<std::size_t>(j)] += 1;
      }
    }
  }
}

// ---------------------------------------------------------------- real roots

namespace {

Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, (p.coeff(i) / p.leading()).abs());
  return m + 1;
}

// A split point strictly inside (lo, hi) that is not a root of p.
Rational split_point(const Polynomial& p, const Interval& i) {
  for (const Rational& t : {Rational(1, 2), Rational(3, 7), Rational(4, 7), Rational(2, 7), Rational(5, 7)}) {
    const Rational mid = i.lo + i.width() * t;
    if (!p.eval(mid).is_zero()) return mid;
  }
  throw Error(ErrorCode::VerificationFailed, "no split point found");
}

bool is_isolating(const Polynomial& p, const Interval& i) {
  if (i.lo == i.hi) return p.eval(i.lo).is_zero();
  if (i.lo > i.hi) return false;
  if (p.eval(i.lo).is_zero() || p.eval(i.hi).is_zero()) return false;
  return sturm_count(p, i.lo, i.hi) == 1;
}

Interval bisect(const Polynomial& p, const Interval& i) {
  if (i.lo == i.hi) return i;
  const Rational m = i.midpoint();
  const Rational fm = p.eval(m);
  if (fm.is_zero()) return Interval::point(m);
  if (p.eval(i.lo).sign() * fm.sign() < 0) return {i.lo, m};
  return {m, i.hi};
}

}  // namespace

std::vector<Interval> isolate_real_roots(const Polynomial& p_in) {
  const Polynomial p = squarefree_part(p_in);
  std::vector<Interval> out;
  if (p.degree() <= 0) return out;
  const Rational b = cauchy_bound(p);
  std::vector<Interval> work{{-b, b}};
  while (!work.empty()) {
    Interval i = work.back();
    work.pop_back();
    const int n = sturm_count(p, i.lo, i.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(i);
      continue;
    }
    const Rational m = split_point(p, i);
    work.push_back({i.lo, m});
    work.push_back({m, i.hi});
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& c) { return a.lo > c.lo; });
  // neighbours may share an endpoint; shrink until strictly separated
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    while (!(out[i + 1].hi < out[i].lo)) {
      out[i] = bisect(p, out[i]);
      out[i + 1] = bisect(p, out[i + 1]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- GaloisDatum

std::vector<Rational> GaloisDatum::reduce(const Polynomial& p) const {
  const Polynomial r = p % spec_.min_poly;
  std::vector<Rational> c(degree_, Rational(0));
  for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r.coeff(i);
  return c;
}

RationalMatrix GaloisDatum::multiplication_matrix(const std::vector<Rational>& coeffs) const {
  RationalMatrix m(degree_, degree_);
  const Polynomial x(coeffs);
  Polynomial basis = Polynomial::constant(1);
  for (std::size_t s = 0; s < degree_; ++s) {
    const auto col = reduce(x * basis);
    for (std::size_t r = 0; r < degree_; ++r) m(r, s) = col[r];
    basis = basis * Polynomial::x();
  }
  return m;
}

std::size_t GaloisDatum::order_of(std::size_t i) const {
  std::size_t k = 1, cur = i;
  while (cur != identity_) {
    cur = compose(i, cur);
    ++k;
  }
  return k;
}

std::vector<std::string> GaloisDatum::assumptions() const {
  std::vector<std::string> out;
  if (spec_.assume_irreducible) out.push_back("assume_irreducible: " + spec_.min_poly.str());
  for (const auto& p : spec_.provenance) out.push_back(p);
  return out;
}

Interval GaloisDatum::refine_root(std::size_t root, const Rational& width, long budget) const {
  Interval i = spec_.roots.at(root);
  long steps = 0;
  while (i.width() > width) {
    if (++steps > budget) throw Error(ErrorCode::PrecisionUnreachable, "root refinement budget exhausted");
    i = bisect(spec_.min_poly, i);
  }
  return i;
}

DatumPtr GaloisDatum::verify(const GaloisDatumSpec& spec_in, const DatumOptions& options) {
  auto datum = std::shared_ptr<GaloisDatum>(new GaloisDatum());
  GaloisDatum& g = *datum;
  g.spec_ = spec_in;
  const Polynomial& f = g.spec_.min_poly;
  if (f.degree() < 1 || !f.is_monic() || !f.has_integer_coeffs()) {
    throw Error(ErrorCode::BadParameters, "minimal polynomial must be monic, integral, of degree >= 1");
  }
  const std::size_t d = static_cast<std::size_t>(f.degree());
  g.degree_ = d;
  if (!g.spec_.assume_irreducible) check_irreducible(f, default_budget(options.irreducibility_budget));

  if (g.spec_.automorphisms.size() != d) {
    throw Error(ErrorCode::WrongAutomorphismCount,
                std::to_string(g.spec_.automorphisms.size()) + " automorphisms for degree " + std::to_string(d));
  }
  for (std::size_t i = 0; i < d; ++i) {
    Polynomial& q = g.spec_.automorphisms[i];
    q = q % f;
    if (!(f.compose(q) % f).is_zero()) {
      throw Error(ErrorCode::AutomorphismFailsMinPoly, "automorphism index " + std::to_string(i) + ": " + q.str());
    }
  }
  std::map<std::vector<Rational>, std::size_t> index_of;
  for (std::size_t i = 0; i < d; ++i) {
    if (!index_of.emplace(g.reduce(g.spec_.automorphisms[i]), i).second) {
      throw Error(ErrorCode::WrongAutomorphismCount, "duplicate automorphism at index " + std::to_string(i));
    }
  }

  // sigma_i o sigma_j sends theta to q_j(q_i(theta))
  g.table_.assign(d, std::vector<std::size_t>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto key = g.reduce(g.spec_.automorphisms[j].compose(g.spec_.automorphisms[i]));
      auto it = index_of.find(key);
      if (it == index_of.end()) throw Error(ErrorCode::TableNotAGroup, "composition leaves the automorphism list");
      g.table_[i][j] = it->second;
    }
  }
  auto id = index_of.find(g.reduce(Polynomial::x()));
  if (id == index_of.end()) throw Error(ErrorCode::TableNotAGroup, "identity automorphism missing");
  g.identity_ = id->second;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<bool> seen_row(d, false), seen_col(d, false);
    for (std::size_t j = 0; j < d; ++j) {
      seen_row[g.table_[i][j]] = true;
      seen_col[g.table_[j][i]] = true;
    }
    if (std::count(seen_row.begin(), seen_row.end(), true) != static_cast<long>(d) ||
        std::count(seen_col.begin(), seen_col.end(), true) != static_cast<long>(d)) {
      throw Error(ErrorCode::TableNotAGroup, "table row or column is not a permutation");
    }
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]]) {
          throw Error(ErrorCode::TableNotAGroup, "composition is not associative");
        }
  if (g.spec_.identity && *g.spec_.identity != g.identity_) {
    throw Error(ErrorCode::TableNotAGroup, "claimed identity index differs from the computed one");
  }
  if (g.spec_.table && *g.spec_.table != g.table_) {
    throw Error(ErrorCode::TableNotAGroup, "claimed composition table differs from the computed one");
  }
  g.spec_.identity = g.identity_;
  g.spec_.table = g.table_;

  g.inverse_.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (g.table_[i][j] == g.identity_) g.inverse_[i] = j;

  // greedy generating set
  std::vector<bool> reached(d, false);
  reached[g.identity_] = true;
  for (std::size_t i = 0; i < d; ++i) {
    if (reached[i]) continue;
    g.generators_.push_back(i);
    std::vector<std::size_t> frontier;
    for (std::size_t k = 0; k < d; ++k)
      if (reached[k]) frontier.push_back(k);
    while (!frontier.empty()) {
      const std::size_t e = frontier.back();
      frontier.pop_back();
      for (auto gen : g.generators_) {
        const std::size_t n = g.table_[gen][e];
        if (!reached[n]) {
          reached[n] = true;
          frontier.push_back(n);
        }
      }
    }
  }

  // real embeddings
  const Rational b = cauchy_bound(f);
  if (sturm_count(f, -b, b) != static_cast<int>(d)) {
    throw Error(ErrorCode::NotTotallyReal, "only totally real fields are supported: " + f.str());
  }
  if (g.spec_.roots.empty()) {
    g.spec_.roots = isolate_real_roots(f);
  } else {
    auto& r = g.spec_.roots;
    if (r.size() != d) throw Error(ErrorCode::EnclosuresOverlap, "wrong number of root enclosures");
    for (std::size_t i = 0; i < d; ++i) {
      if (!is_isolating(f, r[i])) {
        throw Error(ErrorCode::EnclosuresOverlap, "enclosure " + std::to_string(i) + " does not isolate one root");
      }
      if (i + 1 < d && !(r[i + 1].hi < r[i].lo)) {
        throw Error(ErrorCode::EnclosuresOverlap, "enclosures not disjoint and descending at " + std::to_string(i));
      }
    }
  }

  g.action_.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    RationalMatrix m(d, d);
    Polynomial power = Polynomial::constant(1);
    for (std::size_t s = 0; s < d; ++s) {
      const auto col = g.reduce(power);
      for (std::size_t r = 0; r < d; ++r) m(r, s) = col[r];
      power = power * g.spec_.automorphisms[i];
    }
    g.action_.push_back(std::move(m));
  }
  g.theta_ = g.refine_root(0, Rational(Integer(1), Integer(Integer(1) << 64)), 1000);
  return datum;
}

DatumPtr rational_datum() {
  static const DatumPtr q = [] {
    GaloisDatumSpec s;
    s.min_poly = Polynomial::x();
    s.automorphisms = {Polynomial::x()};
    s.description = "Q";
    return GaloisDatum::verify(s);
  }();
  return q;
}

namespace {

bool squarefree_gt_one(long k) {
  if (k <= 1) return false;
  for (long p = 2; p * p <= k; ++p)
    if (k % (p * p) == 0) return false;
  return true;
}

}  // namespace

DatumPtr quadratic_datum(long k) {
  if (!squarefree_gt_one(k)) throw Error(ErrorCode::BadParameters, "k must be a squarefree integer > 1");
  GaloisDatumSpec s;
  s.min_poly = Polynomial{Rational(-k), 0, 1};
  s.automorphisms = {Polynomial{0, 1}, Polynomial{0, -1}};
  s.description = "Q(sqrt " + std::to_string(k) + ")";
  return GaloisDatum::verify(s);
}

DatumPtr biquadratic_datum(long k, long l) {
  if (!squarefree_gt_one(k) || !squarefree_gt_one(l) || k == l) {
    throw Error(ErrorCode::BadParameters, "k, l must be distinct squarefree integers > 1");
  }
  const Rational kk(k), ll(l);
  GaloisDatumSpec s;
  s.min_poly = Polynomial{(kk - ll) * (kk - ll), 0, Rational(-2) * (kk + ll), 0, 1};
  // theta^3 = (k+3l) sqrt k + (3k+l) sqrt l
  const Polynomial sqrt_k = Polynomial{0, -(3 * kk + ll), 0, 1} * (Rational(1) / (2 * ll - 2 * kk));
  const Polynomial sqrt_l = Polynomial::x() - sqrt_k;
  // identity, tau (fixes sqrt k), sigma (fixes sqrt l), sigma tau
  s.automorphisms = {sqrt_k + sqrt_l, sqrt_k - sqrt_l, -sqrt_k + sqrt_l, -sqrt_k - sqrt_l};
  s.description = "Q(sqrt " + std::to_string(k) + ", sqrt " + std::to_string(l) + ")";
  return GaloisDatum::verify(s);
}

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(DatumPtr datum, std::vector<Rational> coeffs) : datum_(std::move(datum)), coeffs_(std::move(coeffs)) {
  const std::size_t d = datum_ ? datum_->degree() : 1;
  if (coeffs_.size() > d) {
    if (!datum_) throw Error(ErrorCode::DimensionMismatch, "rational element with more than one coordinate");
    coeffs_ = datum_->reduce(Polynomial(coeffs_));
  }
  coeffs_.resize(d, Rational(0));
}

FieldElement FieldElement::generator(const DatumPtr& datum) {
  return FieldElement(datum, datum->reduce(Polynomial::x()));
}

FieldElement FieldElement::from_polynomial(const DatumPtr& datum, const Polynomial& p) {
  return FieldElement(datum, datum->reduce(p));
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::IrrationalEntry, "element is not rational: " + str());
  return coeffs_[0];
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

DatumPtr FieldElement::common_datum(const FieldElement& a, const FieldElement& b) {
  if (!a.datum_) return b.datum_;
  if (!b.datum_ || a.datum_ == b.datum_) return a.datum_;
  if (a.datum_->min_poly() == b.datum_->min_poly() &&
      a.datum_->spec().automorphisms == b.datum_->spec().automorphisms) {
    return a.datum_;
  }
  throw Error(ErrorCode::DatumMismatch, "elements of different fields");
}

FieldElement FieldElement::promoted(const DatumPtr& datum) const {
  if (!datum || datum_ == datum) return *this;
  if (datum_) {
    common_datum(*this, FieldElement(datum, {}));
    return FieldElement(datum, coeffs_);
  }
  return FieldElement(datum, coeffs_);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  const DatumPtr d = common_datum(*this, o);
  if (d != datum_) *this = promoted(d);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  const DatumPtr d = common_datum(*this, o);
  if (d != datum_) *this = promoted(d);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  const DatumPtr d = common_datum(*this, o);
  if (o.is_rational()) {
    const Rational c = o.coeffs_[0];
    if (d != datum_) *this = promoted(d);
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  if (is_rational()) {
    const Rational c = coeffs_[0];
    *this = o.promoted(d);
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  const Polynomial prod = as_polynomial() * o.as_polynomial();
  datum_ = d;
  coeffs_ = d->reduce(prod);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero field element");
  if (is_rational()) return FieldElement(datum_, {coeffs_[0].inverse()});
  const auto eg = extended_gcd(as_polynomial(), datum_->min_poly());
  // gcd is 1 because the minimal polynomial is irreducible
  if (eg.gcd.degree() != 0) throw Error(ErrorCode::NotIrreducible, "element shares a factor with the minimal polynomial");
  return FieldElement(datum_, datum_->reduce(eg.s * eg.gcd.coeff(0).inverse()));
}

FieldElement operator-(const FieldElement& a) {
  FieldElement r = a;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.datum_ && b.datum_ && a.datum_ != b.datum_) {
    try {
      FieldElement::common_datum(a, b);
    } catch (const Error&) {
      return false;
    }
  }
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
    const Rational y = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
    if (x != y) return false;
  }
  return true;
}

std::string FieldElement::str(const std::string& var) const { return as_polynomial().str(var); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.str(); }

FieldElement pow(const FieldElement& x, long exponent) {
  if (exponent < 0) return pow(x.inverse(), -exponent);
  FieldElement result = FieldElement(x.datum(), {Rational(1)});
  FieldElement base = x;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

FieldElement apply_automorphism(std::size_t sigma, const FieldElement& x) {
  if (!x.datum()) return x;
  if (sigma >= x.datum()->degree()) throw Error(ErrorCode::BadParameters, "automorphism index out of range");
  return FieldElement(x.datum(), x.datum()->action_matrix(sigma) * x.coeffs());
}

FieldElement right_action(std::size_t sigma, const FieldElement& x) {
  if (!x.datum()) return x;
  return apply_automorphism(x.datum()->inverse(sigma), x);
}

std::vector<FieldElement> right_action(std::size_t sigma, const std::vector<FieldElement>& v) {
  std::vector<FieldElement> out;
  out.reserve(v.size());
  DatumPtr d;
  for (const auto& x : v) {
    if (x.datum()) {
      if (d && d != x.datum() && d->min_poly() != x.datum()->min_poly()) {
        throw Error(ErrorCode::DatumMismatch, "vector components from different fields");
      }
      d = x.datum();
    }
    out.push_back(right_action(sigma, x));
  }
  return out;
}

Polynomial minimal_polynomial(const FieldElement& x) {
  if (!x.datum()) return Polynomial{-x.coeffs()[0], 1};
  return squarefree_part(charpoly(x.datum()->multiplication_matrix(x.coeffs())));
}

bool is_algebraic_unit(const FieldElement& x) {
  const Polynomial p = minimal_polynomial(x);
  return p.has_integer_coeffs() && p.coeff(0).abs() == 1;
}

Rational trace(const FieldElement& x) {
  if (!x.datum()) return x.coeffs()[0];
  const auto m = x.datum()->multiplication_matrix(x.coeffs());
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Rational norm(const FieldElement& x) {
  if (!x.datum()) return x.coeffs()[0];
  return determinant(x.datum()->multiplication_matrix(x.coeffs()));
}

Interval conjugate_interval(const FieldElement& x, std::size_t sigma, const Rational& precision, long budget) {
  const FieldElement y = apply_automorphism(sigma, x);
  if (y.is_rational()) return Interval::point(y.coeffs()[0]);
  const DatumPtr& d = y.datum();
  const Polynomial py = y.as_polynomial();
  Interval enc = d->theta_enclosure();
  long steps = 0;
  while (true) {
    const Interval v = eval(py, enc);
    if (v.width() <= precision) return v;
    for (int k = 0; k < 4; ++k) {
      if (++steps > budget) throw Error(ErrorCode::PrecisionUnreachable, "conjugate enclosure budget exhausted");
      enc = bisect(d->min_poly(), enc);
    }
  }
}

Interval conjugate_modulus_interval(const FieldElement& x, std::size_t sigma, const Rational& precision, long budget) {
  return conjugate_interval(x, sigma, precision, budget).abs();
}

namespace {

int compare_to_one(const FieldElement& x, std::size_t sigma, long budget, bool modulus) {
  const FieldElement y = apply_automorphism(sigma, x);
  if (y == FieldElement(1) || (modulus && y == FieldElement(-1))) return 0;
  Rational precision(1, 16);
  long used = 0;
  while (true) {
    Interval v;
    try {
      v = conjugate_interval(y, x.datum() ? x.datum()->identity() : 0, precision, budget - used);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PrecisionUnreachable) throw Error(ErrorCode::Undecidable, "modulus comparison budget exhausted");
      throw;
    }
    if (modulus) v = v.abs();
    if (v.below(1)) return -1;
    if (v.above(1)) return 1;
    precision /= 1024;
    used += 10;
    if (used > budget) throw Error(ErrorCode::Undecidable, "modulus comparison budget exhausted");
  }
}

}  // namespace

int compare_conjugate_modulus_to_one(const FieldElement& x, std::size_t sigma, long budget) {
  return compare_to_one(x, sigma, budget, true);
}

int compare_conjugate_to_one(const FieldElement& x, std::size_t sigma, long budget) {
  return compare_to_one(x, sigma, budget, false);
}

}  // namespace nilform
