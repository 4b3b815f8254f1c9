// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "nilform/errors.hpp"
#include "nilform/exactmath.hpp"
#include "nilform/fixtures.hpp"
#include "nilform/pfaffian.hpp"
#include "nilform/recipes.hpp"
#include "oracles/numeric_roots.hpp"

using namespace nilform;

namespace {

struct Check {
  std::vector<std::string> fails;
  std::string note;
  void operator()(bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
  }
};

RationalMatrix block(const RationalMatrix& m, std::size_t from, std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(from + i, from + j);
  return out;
}

RationalMatrix random_invertible(std::mt19937& rng, std::size_t n, int h = 3) {
  std::uniform_int_distribution<int> dist(-h, h);
  for (;;) {
    RationalMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = dist(rng);
    if (!is_zero(determinant(p))) return p;
  }
}

// [x, y]' = g^-1 [g x, g y]
LieAlgebra transported(const LieAlgebra& a, const RationalMatrix& g) {
  const RationalMatrix ginv = *inverse(g);
  LieAlgebra out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) out.set_bracket(i, j, ginv * a.bracket(g.col(i), g.col(j)));
  return out;
}

const Polynomial kQuartic{1, 1, -4, -4, 1};

// ---------------------------------------------------------------- 1

void worked_example(Check& c) {
  const auto out = recipe_z4_example();
  const Rational h(1, 2);
  c(out.matrix == RationalMatrix::from_rows({{0, 0, 0, -1, 0, 0},
                                             {1, 0, 0, -1, 0, 0},
                                             {0, 1, 0, 4, 0, 0},
                                             {0, 0, 1, 4, 0, 0},
                                             {0, 0, 0, 0, -h, -h},
                                             {0, 0, 0, 0, -h, Rational(-5, 2)}}),
    "matrix");
  LieAlgebra brackets(6);
  brackets.set_bracket(0, 1, {0, 0, 0, 0, 1, 0});
  brackets.set_bracket(0, 2, {0, 0, 0, 0, 0, 1});
  brackets.set_bracket(1, 2, {0, 0, 0, 0, -h, -h});
  brackets.set_bracket(1, 3, {0, 0, 0, 0, -h, Rational(-5, 2)});
  brackets.set_bracket(2, 3, {0, 0, 0, 0, h, Rational(3, 2)});
  brackets.set_bracket(0, 3, {0, 0, 0, 0, Rational(3, 2), Rational(9, 2)});
  c(out.algebra == brackets, "brackets");
  c(classify_type42(out.algebra).discriminant == Rational(5, 4), "discriminant");
  c(charpoly(block(out.matrix, 4, 2)) == Polynomial({1, 3, 1}), "center charpoly");
  c(out.certificate.charpoly == kQuartic * Polynomial({1, 3, 1}), "full charpoly");
  c(out.certificate.signature == std::pair{2, 4}, "signature");
  c(out.certificate.algebra_type == std::vector<int>{4, 2}, "type");
}

// ---------------------------------------------------------------- 2

const std::vector<std::pair<long, long>> kCountPairs{{2, 3}, {3, 2}, {5, 2}, {6, 5}, {7, 2}};

std::vector<RecipeOutput>& count_outputs() {
  static std::vector<RecipeOutput> outs;
  if (outs.empty())
    for (auto [k, l] : kCountPairs) outs.push_back(recipe_count(k, l));
  return outs;
}

void count_sweep(Check& c) {
  const auto& outs = count_outputs();
  for (std::size_t i = 0; i < outs.size(); ++i) {
    const long k = kCountPairs[i].first;
    c(outs[i].certificate.signature == std::pair{2, 4}, "signature for k = " + std::to_string(k));
    c(classify_type42(outs[i].algebra).squarefree == k, "classification for k = " + std::to_string(k));
  }
}

// ---------------------------------------------------------------- 3

std::vector<RationalMatrix> coset_action(const DatumPtr& d, const std::vector<std::size_t>& h) {
  const std::size_t n = d->group_order();
  std::vector<std::vector<std::size_t>> cosets;
  std::vector<int> which(n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    if (which[g] >= 0) continue;
    std::vector<std::size_t> cs;
    for (auto x : h) {
      cs.push_back(d->compose(g, x));
      which[d->compose(g, x)] = static_cast<int>(cosets.size());
    }
    cosets.push_back(cs);
  }
  std::vector<RationalMatrix> out;
  for (std::size_t s = 0; s < n; ++s) {
    RationalMatrix r(cosets.size(), cosets.size());
    for (std::size_t i = 0; i < cosets.size(); ++i) r(static_cast<std::size_t>(which[d->compose(s, cosets[i][0])]), i) = 1;
    out.push_back(r);
  }
  return out;
}

// building blocks: trivial, regular, coset permutations, index-two characters
std::vector<std::vector<RationalMatrix>> rep_blocks(const DatumPtr& d) {
  const std::size_t n = d->group_order();
  std::vector<std::vector<RationalMatrix>> out;
  out.push_back(coset_action(d, {d->identity()}));
  std::vector<std::size_t> all;
  for (std::size_t g = 0; g < n; ++g) all.push_back(g);
  out.push_back(coset_action(d, all));
  for (std::size_t x = 0; x < n; ++x) {
    if (x == d->identity()) continue;
    std::vector<std::size_t> h{d->identity()};
    while (d->compose(h.back(), x) != d->identity()) h.push_back(d->compose(h.back(), x));
    if (h.size() == n) continue;
    out.push_back(coset_action(d, h));
    if (2 * h.size() == n) {
      std::vector<RationalMatrix> chi;
      for (std::size_t s = 0; s < n; ++s)
        chi.push_back(RationalMatrix::from_rows({{std::find(h.begin(), h.end(), s) != h.end() ? 1 : -1}}));
      out.push_back(chi);
    }
  }
  return out;
}

void galois_compatible(Check& c) {
  std::mt19937 rng(2026);
  const std::vector<DatumPtr> data{quadratic_datum(2), quadratic_datum(5), biquadratic_datum(5, 2), fixtures::quartic_z4()};
  int runs = 0;
  for (int t = 0; t < 240; ++t) {
    const DatumPtr d = data[static_cast<std::size_t>(t) % data.size()];
    const auto blocks = rep_blocks(d);
    std::vector<RationalMatrix> images(d->group_order(), RationalMatrix(0, 0));
    std::size_t m = 0;
    std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
    for (int tries = 0; tries < 6; ++tries) {
      const auto& b = blocks[pick(rng)];
      if (m + b.front().rows() > 6) continue;
      for (std::size_t s = 0; s < images.size(); ++s) {
        RationalMatrix big(m + b[s].rows(), m + b[s].rows());
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) big(i, j) = images[s](i, j);
        for (std::size_t i = 0; i < b[s].rows(); ++i)
          for (std::size_t j = 0; j < b[s].rows(); ++j) big(m + i, m + j) = b[s](i, j);
        images[s] = big;
      }
      m += b.front().rows();
      if (rng() % 3 == 0) break;
    }
    const RationalMatrix p = random_invertible(rng, m);
    const RationalMatrix pinv = *inverse(p);
    for (auto& r : images) r = p * r * pinv;
    const Representation rho(d, images);
    const RationalFormBasis basis = rational_form(rho);
    c(basis.vectors.size() == m, "basis size");
    bool cond = true;
    for (const auto& v : basis.vectors)
      for (std::size_t s = 0; s < d->group_order(); ++s) cond = cond && satisfies_form_condition(rho, s, v);
    c(cond, "form condition");
    c(!is_zero(determinant(basis.matrix())), "det_E(B) = 0");
    ++runs;
  }
  c(runs >= 200, "fewer than 200 representations");
  c.note = std::to_string(runs) + " representations";
}

// ---------------------------------------------------------------- 4

std::vector<RecipeOutput> all_recipe_outputs() {
  std::vector<RecipeOutput> outs{recipe_z4_example()};
  for (const auto& o : count_outputs()) outs.push_back(o);
  const auto q2 = quadratic_datum(2);
  outs.push_back(recipe_laur(heisenberg(), Grading{{2, 1}}, q2, FieldElement(q2, {1, 1})));
  const auto d4 = fixtures::quartic_z4();
  outs.push_back(recipe_csig(d4, FieldElement(d4, {-1, 0, 3, 0}), 2));
  outs.push_back(recipe_csig(d4, FieldElement(d4, {-1, 0, 3, 0}), 3));
  const auto d3 = fixtures::cubic_z3();
  outs.push_back(recipe_last(d3, FieldElement(d3, {-1, 1, 1}), 3));
  outs.push_back(recipe_last(d4, FieldElement::generator(d4), 2));
  return outs;
}

FieldMatrix diagonal(const RecipeOutput& out) {
  const DatumPtr d = out.representation->datum();
  const std::size_t m = out.labeled.labels.size();
  FieldMatrix f(m, m, FieldElement(d, {0}));
  for (std::size_t i = 0; i < m; ++i) f(i, i) = out.labeled.labels[i].promoted(d);
  return f;
}

void transport_both_ways(Check& c) {
  std::mt19937 rng(77);
  int perturbed = 0, false_accepts = 0;
  std::map<std::string, int> verdicts;
  for (const auto& out : all_recipe_outputs()) {
    const Representation& rho = *out.representation;
    const FieldMatrix f = diagonal(out);
    const RationalMatrix m = transport(rho, out.basis, f);
    c(m == out.matrix && is_automorphism(out.algebra, m), out.provenance.recipe + ": recipe map does not transport");
    const DatumPtr d = rho.datum();
    const std::size_t n = f.rows();
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    const std::vector<FieldElement> deltas{FieldElement(d, {1}), FieldElement(d, {Rational(-1, 2)}),
                                           FieldElement::generator(d), FieldElement::generator(d) * FieldElement(3)};
    for (int t = 0; t < 8; ++t) {
      FieldMatrix g = f;
      const std::size_t i = idx(rng), j = idx(rng);
      g(i, j) += deltas[static_cast<std::size_t>(t) % deltas.size()];
      ++perturbed;
      try {
        const RationalMatrix mg = transport(rho, out.basis, g);
        if (is_automorphism(out.algebra, mg)) {
          ++false_accepts;
          verdicts["accepted"]++;
        } else {
          verdicts["NotAutomorphism"]++;
        }
      } catch (const Error& e) {
        verdicts[std::string(name(e.code()))]++;
      }
    }
  }
  c(perturbed >= 50, "fewer than 50 perturbations");
  c(false_accepts == 0, std::to_string(false_accepts) + " false accepts");
  c(verdicts.size() == 1 || (verdicts.size() == 2 && verdicts.count("NotAutomorphism")), "unexpected verdict kinds");
  c(verdicts.count("CommutationViolation") || verdicts.count("NotAutomorphism"), "no rejection recorded");
  c.note = std::to_string(perturbed) + " perturbations";
  for (const auto& [k, v] : verdicts) c.note += ", " + k + " " + std::to_string(v);
}

// ---------------------------------------------------------------- 5

oracle::DiskCounts numeric_counts(const Polynomial& p) {
  std::vector<oracle::BigReal> cs;
  for (const auto& x : p.coeffs()) cs.push_back(oracle::parse_rational(x.str()));
  return oracle::classify(cs);
}

RationalMatrix companion(const Polynomial& p) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  RationalMatrix m(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p.coeff(static_cast<int>(i));
  return m;
}

RationalMatrix random_integer_like(std::mt19937& rng, std::size_t n, int t) {
  if (t % 4 == 0) {
    std::uniform_int_distribution<int> dist(-4, 4);
    std::vector<Rational> cs(n + 1);
    for (auto& x : cs) x = dist(rng);
    cs.front() = rng() % 2 ? 1 : -1;
    cs.back() = 1;
    return companion(Polynomial(cs));
  }
  RationalMatrix m = RationalMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (std::size_t k = 0; k < 3 * n; ++k) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    RationalMatrix e = RationalMatrix::identity(n);
    e(i, j) = mult(rng);
    m = e * m;
  }
  RationalMatrix p(n, n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = rng() % 2 ? 1 : -1;
  return p * m;
}

void hyperbolicity_oracle(Check& c) {
  std::mt19937 rng(5);
  std::vector<RationalMatrix> ms{companion(Polynomial{1, -3, 1}), companion(Polynomial{1, -3, 1} * Polynomial{1, 0, 1}),
                                 companion(kQuartic * Polynomial{1, 3, 1})};
  for (int t = 0; ms.size() < 520; ++t) ms.push_back(random_integer_like(rng, 1 + static_cast<std::size_t>(t) % 6, t));
  int hyperbolic = 0;
  for (const auto& m : ms) {
    c(is_integer_like(m), "generator produced a non integer-like matrix");
    const Polynomial p = charpoly(m);
    const auto ref = numeric_counts(p);
    c(!ref.ambiguous, "oracle ambiguous for " + p.str());
    const int on = count_roots_on_unit_circle(p);
    c(on == ref.on_circle, "unit circle count for " + p.str());
    const auto cert = certify(abelian(m.rows()), m);
    c(cert.hyperbolic == (ref.on_circle == 0), "hyperbolic verdict for " + p.str());
    if (on == 0) {
      ++hyperbolic;
      c(count_roots_inside_unit_disk(p) == ref.inside, "inside count for " + p.str());
      c(cert.signature == std::pair{std::min(ref.inside, ref.outside), std::max(ref.inside, ref.outside)},
        "signature for " + p.str());
    }
  }
  c.note = std::to_string(ms.size()) + " matrices, " + std::to_string(hyperbolic) + " hyperbolic";
}

// ---------------------------------------------------------------- 6

void pfaffian_identities(Check& c) {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  int n_checked = 0;
  for (int t = 0; t < 220; ++t) {
    const std::size_t n = t % 2 ? 6 : 4;
    RationalMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        s(i, j) = Rational(num(rng), den(rng));
        s(j, i) = -s(i, j);
      }
    const RationalMatrix a = random_invertible(rng, n, 2);
    const Rational pf = pfaffian(s);
    c(pf * pf == determinant(s), "Pf^2 = det");
    c(pfaffian(a.transpose() * s * a) == determinant(a) * pf, "Pf(A^T S A) = det(A) Pf(S)");
    ++n_checked;
  }
  for (long k = 2; k <= 10; ++k) {
    const Rational ratio = pfaffian_form_42(n_k_algebra(k)).discriminant() / Rational(4 * k);
    c(ratio > 0 && squarefree_part(ratio) == 1, "discriminant of n_" + std::to_string(k));
  }
  c.note = std::to_string(n_checked) + " skew matrices";
}

// ---------------------------------------------------------------- 7

PellSolution brute_pell(long d) {
  for (long y = 1; y <= 100000; ++y) {
    Integer v = Integer(d) * y * y + 4, r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    if (r * r == v) return {r, Integer(y)};
  }
  return {0, 0};
}

void pell(Check& c) {
  for (long d : {5, 8, 12, 13, 20, 21, 24}) {
    const PellSolution s = solve_pell(Integer(d));
    c(s == brute_pell(d), "solution for D = " + std::to_string(d));
    const Rational b = d % 2, cc = (b * b - Rational(d)) / 4;
    const BinaryQuadraticForm h{1, b, cc};
    const RationalMatrix u = pell_automorphism(h, s);
    c(determinant(u) == 1, "det U for D = " + std::to_string(d));
    c(h.compose(u) == h, "U preserves h for D = " + std::to_string(d));
    c(charpoly(u) == Polynomial({1, -Rational(s.x), 1}), "charpoly of U for D = " + std::to_string(d));
  }
}

// ---------------------------------------------------------------- 8

void duality(Check& c) {
  for (long k : {2, 3, 5}) {
    const auto dual = scheuneman_dual(n_k_algebra(k));
    c(dual == h_k_algebra(k), "dual(n_" + std::to_string(k) + ") = h_" + std::to_string(k));
    c(scheuneman_dual(dual) == n_k_algebra(k), "dual(dual(n_" + std::to_string(k) + "))");
  }
  for (const auto& out : count_outputs()) {
    // move to a basis whose last two vectors span gamma_2
    const auto series = lower_central_series(out.algebra);
    std::vector<std::vector<Rational>> cols;
    std::vector<std::vector<Rational>> span = series.bases[1];
    for (std::size_t i = 0; i < 6 && cols.size() < 4; ++i) {
      auto e = unit_vector<Rational>(6, i);
      if (in_span(span, e)) continue;
      cols.push_back(e);
      span.push_back(e);
      span = row_space_basis(span);
    }
    for (const auto& v : series.bases[1]) cols.push_back(v);
    const RationalMatrix g = RationalMatrix::from_columns(cols, 6);
    const LieAlgebra a = transported(out.algebra, g);
    const RationalMatrix m = *inverse(g) * out.matrix * g;
    const RationalMatrix alpha = block(m, 0, 4);
    const LieAlgebra dual = scheuneman_dual(a);
    const auto [f, gd] = dual_automorphism(alpha, a, dual);
    c(charpoly(block(m, 4, 2)) * charpoly(block(gd, 4, 4)) == charpoly(wedge_square(alpha)), "combined eigenvalues");
    const auto cert = certify(dual, gd);
    c(cert.is_anosov() && cert.signature == std::pair{3, 5}, "dual certificate for " + out.provenance.datum);
  }
}

// ---------------------------------------------------------------- 9

void minimal_signature(Check& c) {
  const auto d = fixtures::quartic_z4();
  const FieldElement frozen(d, {-1, 0, 3, 0});
  const FieldElement found = find_unit_pisot(d, {csig_constraint(d)}, {4, 6, 0});
  c(satisfies(found, csig_constraint(d)) && is_unit_pisot(found), "search result");
  for (const auto& lam : {frozen, found}) {
    const auto a = recipe_csig(d, lam, 2), b = recipe_csig(d, lam, 3);
    c(a.certificate.minimal_signature && a.certificate.algebra_type == std::vector<int>{4, 2}, "c = 2");
    c(b.certificate.minimal_signature && b.certificate.algebra_type == std::vector<int>{4, 2, 4}, "c = 3");
    c(a.certificate.signature->first == 2 && b.certificate.signature->first == 3, "min(signature) = class");
  }
  c.note = "frozen lambda = " + frozen.str("t") + ", searched lambda = " + found.str("t");
}

// ---------------------------------------------------------------- 10

void type_n_n(Check& c) {
  const auto d = fixtures::cubic_z3();
  const FieldElement lam(d, {-1, 1, 1});
  for (int cls : {2, 3}) {
    const auto out = recipe_last(d, lam, cls);
    c(out.certificate.algebra_type == std::vector<int>(static_cast<std::size_t>(cls), 3), "type");
    c(check_type_constraints(out.certificate.algebra_type) == TypeVerdict::CaseIII, "case iii");
    c(out.certificate.is_anosov(), "Anosov");
  }
}

// ---------------------------------------------------------------- 11

void quadratic_units(Check& c) {
  const auto q2 = quadratic_datum(2);
  const FieldElement lam(q2, {1, 1});
  const auto units = search_units(q2, 2, 1, pisot_cone(q2));
  c(std::find(units.begin(), units.end(), lam) != units.end(), "1 + sqrt 2 not found");
  std::vector<long> coeffs(2, 0);
  coeffs[q2->identity()] = 1;
  coeffs[1 - q2->identity()] = 2;
  c(cone_element(lam, coeffs) == FieldElement(q2, {-1, 1}), "lambda sigma(lambda^2) = sqrt 2 - 1");
  c(satisfies(lam, {coeffs, ConeConstraint::Relation::LessThanOne}), "constraint");
  c(full_rank_brute_force(lam, 5), "full rank");
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Check&)> run;
    double limit;
  };
  const std::vector<Criterion> criteria{
      {"worked Z4 example reproduced exactly", worked_example, 5},
      {"two-Heisenberg sweep, k in {2,3,5,6,7}", count_sweep, 60},
      {"rational forms of random Galois representations", galois_compatible, 0},
      {"transport accepts recipe maps, rejects perturbations", transport_both_ways, 0},
      {"exact hyperbolicity agrees with numerical roots", hyperbolicity_oracle, 0},
      {"Pfaffian identities and n_k discriminants", pfaffian_identities, 0},
      {"Pell solutions and U(x, y)", pell, 0},
      {"Scheuneman duality and combined eigenvalues", duality, 0},
      {"minimal signature, types (4,2) and (4,2,4)", minimal_signature, 120},
      {"type (3,...,3) of class 2 and 3", type_n_n, 0},
      {"units of Q(sqrt 2)", quadratic_units, 0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.fails.push_back(std::string("threw ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (criteria[i].limit > 0 && secs > criteria[i].limit) c.fails.push_back("over the time limit");
    const bool ok = c.fails.empty();
    failed += !ok;
    std::printf("%s  AC%-2zu %-55s %7.2fs", ok ? "PASS" : "FAIL", i + 1, criteria[i].title, secs);
    if (!c.note.empty()) std::printf("  [%s]", c.note.c_str());
    if (!ok) std::printf("  (%zu failures, first: %s)", c.fails.size(), c.fails.front().c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
