#include "nilform/exactmath.hpp"

#include <cassert>

#include "nilform/errors.hpp"

namespace nilform {

Polynomial charpoly(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix h = m;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Rational inv = h(j + 1, j).inverse();
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h(r, j).is_zero()) continue;
      const Rational f = h(r, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= f * h(j + 1, c);
      for (std::size_t c = 0; c < n; ++c) h(c, j + 1) += f * h(c, r);
    }
  }

  // p_k = (X - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod of subdiagonal) p_{k-i-1}
  std::vector<Polynomial> p(n + 1);
  p[0] = Polynomial::constant(1);
  const Polynomial x = Polynomial::x();
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (x - Polynomial::constant(h(k - 1, k - 1))) * p[k - 1];
    Rational sub = 1;
    for (std::size_t i = 1; i < k; ++i) {
      sub *= h(k - i, k - i - 1);
      if (sub.is_zero()) break;
      p[k] -= p[k - i - 1] * (h(k - i - 1, k - 1) * sub);
    }
  }
  return p[n];
}

std::vector<Polynomial> sturm_sequence(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial> seq;
  if (a.is_zero()) return seq;
  seq.push_back(a);
  if (b.is_zero()) return seq;
  seq.push_back(b);
  while (true) {
    Polynomial r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sign_variations_at(const std::vector<Polynomial>& seq, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& f : seq) signs.push_back(f.eval(x).sign());
  return count_variations(signs);
}

int sign_variations_at_infinity(const std::vector<Polynomial>& seq, bool positive) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& f : seq) {
    int s = f.leading().sign();
    if (!positive && f.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sturm_count of zero polynomial");
  if (p.eval(lo).is_zero() || p.eval(hi).is_zero()) {
    throw Error(ErrorCode::EndpointIsRoot, "interval endpoint is a root");
  }
  if (hi <= lo) return 0;
  const auto seq = sturm_sequence(p, p.derivative());
  return sign_variations_at(seq, lo) - sign_variations_at(seq, hi);
}

namespace detail {

Polynomial palindromic_to_trace_form(const Polynomial& g) {
  const int deg = g.degree();
  assert(deg % 2 == 0);
  const int d = deg / 2;
  // D_0 = 2, D_1 = Y, D_{k+1} = Y D_k - D_{k-1}, with D_k(X + 1/X) = X^k + X^-k.
  const Polynomial y = Polynomial::x();
  Polynomial prev = Polynomial::constant(2);
  Polynomial cur = y;
  Polynomial h = Polynomial::constant(g.coeff(d));
  for (int k = 1; k <= d; ++k) {
    h += cur * g.coeff(d + k);
    Polynomial next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return h;
}

std::optional<int> schur_cohn_inside(const Polynomial& p) {
  const int n = p.degree();
  if (n <= 0) return 0;
  const Rational a0 = p.coeff(0);
  const Rational an = p.leading();
  const Rational m0 = a0.abs(), mn = an.abs();
  if (m0 == mn) return std::nullopt;
  const Polynomial t = p * a0 - p.reciprocal() * an;
  const auto inner = schur_cohn_inside(t);
  if (!inner) return std::nullopt;
  return m0 < mn ? n - *inner : *inner;
}

int cayley_inside(const Polynomial& p) {
  const int n = p.degree();
  if (n <= 0) return 0;
  // q(w) = sum a_i (1+w)^i (1-w)^(n-i); roots inside the disk map to Re w < 0.
  const Polynomial one_plus = Polynomial{1, 1};
  const Polynomial one_minus = Polynomial{1, -1};
  Polynomial q;
  for (int i = 0; i <= n; ++i) {
    const Rational a = p.coeff(i);
    if (a.is_zero()) continue;
    q += pow(one_plus, i) * pow(one_minus, n - i) * a;
  }
  assert(q.degree() == n);
  // q(iy) = A(y) + i B(y)
  std::vector<Rational> a_coeffs(static_cast<std::size_t>(n) + 1), b_coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const Rational c = q.coeff(k);
    switch (k % 4) {
      case 0: a_coeffs[static_cast<std::size_t>(k)] = c; break;
      case 1: b_coeffs[static_cast<std::size_t>(k)] = c; break;
      case 2: a_coeffs[static_cast<std::size_t>(k)] = -c; break;
      default: b_coeffs[static_cast<std::size_t>(k)] = -c; break;
    }
  }
  const Polynomial re(std::move(a_coeffs)), im(std::move(b_coeffs));
  // Cauchy index of num/den over the real line.
  auto cauchy_index = [](const Polynomial& num, const Polynomial& den) {
    const auto seq = sturm_sequence(den, num);
    return sign_variations_at_infinity(seq, false) - sign_variations_at_infinity(seq, true);
  };
  const int left_minus_right = (n % 2 == 0) ? -cauchy_index(im, re) : cauchy_index(re, im);
  assert((n + left_minus_right) % 2 == 0);
  return (n + left_minus_right) / 2;
}

}  // namespace detail

int count_roots_on_unit_circle(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "count_roots_on_unit_circle of zero polynomial");
  Polynomial sq = squarefree_part(p);
  int count = 0;
  for (const Rational& r : {Rational(1), Rational(-1)}) {
    if (sq.eval(r).is_zero()) {
      ++count;
      sq = divmod(sq, Polynomial{-r, 1}).first;
    }
  }
  const Polynomial g = poly_gcd(sq, sq.reciprocal());
  if (g.degree() <= 0) return count;
  // With +-1 removed, g is palindromic of even degree.
  assert(g.degree() % 2 == 0 && g.reciprocal() == g);
  const Polynomial h = squarefree_part(detail::palindromic_to_trace_form(g));
  return count + 2 * sturm_count(h, Rational(-2), Rational(2));
}

int count_roots_inside_unit_disk(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "count_roots_inside_unit_disk of zero polynomial");
  if (count_roots_on_unit_circle(p) != 0) {
    throw Error(ErrorCode::RootOnCircle, "polynomial has a root of modulus 1: " + p.str());
  }
  if (auto sc = detail::schur_cohn_inside(p)) return *sc;
  return detail::cayley_inside(p);
}

}  // namespace nilform
