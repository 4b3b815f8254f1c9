#include "nilform/pisot.hpp"

#include <algorithm>
#include <set>

#include "nilform/errors.hpp"

namespace nilform {

FieldElement cone_element(const FieldElement& x, const std::vector<long>& coeffs) {
  const std::size_t d = x.degree();
  if (coeffs.size() != d) throw Error(ErrorCode::DimensionMismatch, "constraint length differs from field degree");
  FieldElement mu = FieldElement(x.datum(), {Rational(1)});
  for (std::size_t i = 0; i < d; ++i)
    if (coeffs[i] != 0) mu *= pow(apply_automorphism(i, x), coeffs[i]);
  return mu;
}

bool satisfies(const FieldElement& x, const ConeConstraint& c, long budget) {
  if (x.is_zero()) return false;
  const FieldElement mu = cone_element(x, c.coeffs);
  const std::size_t id = x.datum() ? x.datum()->identity() : 0;
  const int s = compare_conjugate_modulus_to_one(mu, id, budget);
  return c.rel == ConeConstraint::Relation::LessThanOne ? s < 0 : s > 0;
}

std::vector<ConeConstraint> pisot_cone(const DatumPtr& datum) {
  std::vector<ConeConstraint> out;
  const std::size_t d = datum->degree();
  for (std::size_t i = 0; i < d; ++i) {
    ConeConstraint c;
    c.coeffs.assign(d, 0);
    c.coeffs[i] = 1;
    c.rel = i == datum->identity() ? ConeConstraint::Relation::GreaterThanOne : ConeConstraint::Relation::LessThanOne;
    out.push_back(std::move(c));
  }
  return out;
}

bool is_unit_pisot(const FieldElement& x, long budget) {
  if (!is_algebraic_unit(x)) return false;
  const std::size_t d = x.degree();
  const std::size_t id = x.datum() ? x.datum()->identity() : 0;
  try {
    if (compare_conjugate_to_one(x, id, budget) <= 0) return false;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == id) continue;
      if (compare_conjugate_modulus_to_one(x, i, budget) >= 0) return false;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Undecidable) throw;
    throw Error(ErrorCode::Undecidable, e.what());
  }
  return true;
}

std::vector<FieldElement> search_units(const DatumPtr& datum, int height_bound, int power_bound,
                                       const std::vector<ConeConstraint>& constraints, const SearchOptions& options) {
  const std::size_t d = datum->degree();
  std::vector<FieldElement> base;
  std::set<std::vector<Rational>> seen;
  if (height_bound > 0) {
    std::vector<int> c(d, -height_bound);
    while (true) {
      std::vector<Rational> coeffs(c.begin(), c.end());
      FieldElement x(datum, coeffs);
      if (!x.is_zero() && is_algebraic_unit(x) && seen.insert(coeffs).second) base.push_back(x);
      std::size_t j = 0;
      while (j < d && c[j] == height_bound) c[j++] = -height_bound;
      if (j == d) break;
      ++c[j];
    }
  }

  std::vector<FieldElement> pool = base;
  auto add = [&](const FieldElement& x) {
    if (seen.insert(x.coeffs()).second) pool.push_back(x);
  };
  for (const auto& u : base)
    for (int k = 2; k <= power_bound; ++k) add(pow(u, k));
  for (int round = 0; round < options.product_rounds; ++round) {
    const std::vector<FieldElement> snapshot = round == 0 ? base : pool;
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) add(snapshot[i] * snapshot[j]);
  }

  std::vector<FieldElement> out;
  for (const auto& x : pool) {
    bool ok = true;
    for (const auto& c : constraints) {
      if (!satisfies(x, c, options.budget)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](const FieldElement& a, const FieldElement& b) {
    const Rational ta = trace(a), tb = trace(b);
    if (ta != tb) return ta < tb;
    return a.coeffs() < b.coeffs();
  });
  return out;
}

std::vector<FieldElement> search_unit_lattice(const std::vector<FieldElement>& generators, int exponent_bound,
                                              const std::vector<ConeConstraint>& constraints, long budget) {
  std::vector<FieldElement> out;
  if (generators.empty()) return out;
  const int b = exponent_bound;
  std::vector<std::vector<FieldElement>> powers;
  for (const auto& g : generators) {
    std::vector<FieldElement> row;
    for (int e = -b; e <= b; ++e) row.push_back(pow(g, e));
    powers.push_back(std::move(row));
  }
  std::set<std::vector<Rational>> seen;
  std::vector<int> e(generators.size(), -b);
  while (true) {
    FieldElement x = FieldElement(generators[0].datum(), {Rational(1)});
    for (std::size_t i = 0; i < e.size(); ++i) x *= powers[i][static_cast<std::size_t>(e[i] + b)];
    for (const FieldElement& y : {x, -x}) {
      if (!seen.insert(y.coeffs()).second) continue;
      bool ok = true;
      for (const auto& c : constraints) {
        if (!satisfies(y, c, budget)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(y);
    }
    std::size_t j = 0;
    while (j < e.size() && e[j] == b) e[j++] = -b;
    if (j == e.size()) break;
    ++e[j];
  }
  std::sort(out.begin(), out.end(), [](const FieldElement& a, const FieldElement& c) {
    const Rational ta = trace(a), tc = trace(c);
    if (ta != tc) return ta < tc;
    return a.coeffs() < c.coeffs();
  });
  return out;
}

QuadraticUnit quadratic_unit(long d) {
  if (d <= 1) throw Error(ErrorCode::BadParameters, "quadratic_unit needs D > 1");
  Integer a0;
  mpz_sqrt(a0.get_mpz_t(), Integer(d).get_mpz_t());
  if (a0 * a0 == d) throw Error(ErrorCode::BadDiscriminant, "D is a perfect square");
  // continued fraction of sqrt D: m, q, a recurrences with convergents p/q
  Integer m = 0, den = 1, a = a0;
  Integer p_prev = 1, p = a0, q_prev = 0, q = 1;
  while (true) {
    const Integer n = p * p - Integer(d) * q * q;
    if (n == 1 || n == -1) return {p, q, n == 1 ? 1 : -1};
    m = den * a - m;
    den = (Integer(d) - m * m) / den;
    a = (a0 + m) / den;
    const Integer p_next = a * p + p_prev, q_next = a * q + q_prev;
    p_prev = p;
    p = p_next;
    q_prev = q;
    q = q_next;
  }
}

bool full_rank_brute_force(const FieldElement& x, int exponent_bound) {
  const std::size_t d = x.degree();
  const int b = exponent_bound;
  // powers[j][e + b] = sigma_j(x)^e
  std::vector<std::vector<FieldElement>> powers(d);
  for (std::size_t j = 0; j < d; ++j) {
    const FieldElement c = apply_automorphism(j, x);
    for (int e = -b; e <= b; ++e) powers[j].push_back(pow(c, e));
  }
  const FieldElement one = FieldElement(x.datum(), {Rational(1)});
  const FieldElement minus_one = -one;
  std::vector<int> e(d, -b);
  while (true) {
    const bool all_equal = std::all_of(e.begin(), e.end(), [&](int v) { return v == e[0]; });
    if (!all_equal) {
      FieldElement prod = one;
      for (std::size_t j = 0; j < d; ++j) prod *= powers[j][static_cast<std::size_t>(e[j] + b)];
      if (prod == one || prod == minus_one) return false;
    }
    std::size_t j = 0;
    while (j < d && e[j] == b) e[j++] = -b;
    if (j == d) break;
    ++e[j];
  }
  return true;
}

bool check_full_rank_condition(const FieldElement& x, int exponent_bound) {
  if (x.degree() > 1 && is_unit_pisot(x)) return true;
  return full_rank_brute_force(x, exponent_bound);
}

}  // namespace nilform
