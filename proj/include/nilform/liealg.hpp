#ifndef NILFORM_LIEALG_HPP
#define NILFORM_LIEALG_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/matrix.hpp"
#include "nilform/numfield.hpp"

namespace nilform {

/// Finite-dimensional algebra given by structure constants over Q (T =
/// Rational) or over a Galois field (T = FieldElement). Brackets of basis
/// vectors are stored densely; [b_j, b_i] = -[b_i, b_j] by construction.
template <class T>
class BasicLieAlgebra {
 public:
  using Vector = std::vector<T>;

  struct Entry {
    std::size_t i, j, k;
    T coeff;
  };

  BasicLieAlgebra() = default;
  explicit BasicLieAlgebra(std::size_t dim, DatumPtr field = nullptr)
      : dim_(dim), field_(std::move(field)), table_(dim * dim, Vector(dim, T(0))) {}

  std::size_t dim() const { return dim_; }
  const DatumPtr& field() const { return field_; }

  /// Sets [b_i, b_j] = value (and the antisymmetric entry).
  void set_bracket(std::size_t i, std::size_t j, Vector value) {
    check_index(i);
    check_index(j);
    if (value.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "bracket value length");
    if (i == j) {
      for (const auto& x : value)
        if (!is_zero(x)) throw Error(ErrorCode::BadParameters, "[b_i, b_i] must vanish");
      return;
    }
    Vector neg(dim_, T(0));
    for (std::size_t k = 0; k < dim_; ++k) neg[k] = -value[k];
    table_[j * dim_ + i] = std::move(neg);
    table_[i * dim_ + j] = std::move(value);
  }
  /// Adds c * b_k to [b_i, b_j].
  void add_bracket(std::size_t i, std::size_t j, std::size_t k, const T& c) {
    check_index(k);
    Vector v = basis_bracket(i, j);
    v[k] += c;
    set_bracket(i, j, std::move(v));
  }

  const Vector& basis_bracket(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    return table_[i * dim_ + j];
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    Vector out(dim_, T(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i == j || is_zero(y[j])) continue;
        const T c = x[i] * y[j];
        const Vector& b = table_[i * dim_ + j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!is_zero(b[k])) out[k] += c * b[k];
      }
    }
    return out;
  }

  /// Nonzero structure constants with i < j.
  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!is_zero(table_[i * dim_ + j][k])) out.push_back({i, j, k, table_[i * dim_ + j][k]});
    return out;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "label count");
    labels_ = std::move(labels);
  }

  friend bool operator==(const BasicLieAlgebra& a, const BasicLieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= dim_) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  }
  std::size_t dim_ = 0;
  DatumPtr field_;
  std::vector<Vector> table_;
  std::vector<std::string> labels_;
};

using LieAlgebra = BasicLieAlgebra<Rational>;
using LieAlgebraE = BasicLieAlgebra<FieldElement>;

template <class T>
std::vector<T> unit_vector(std::size_t n, std::size_t i) {
  std::vector<T> v(n, T(0));
  v[i] = T(1);
  return v;
}

template <class T>
bool check_jacobi(const BasicLieAlgebra<T>& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto bi = unit_vector<T>(n, i), bj = unit_vector<T>(n, j), bk = unit_vector<T>(n, k);
        auto s = a.bracket(a.bracket(bi, bj), bk);
        const auto t = a.bracket(a.bracket(bj, bk), bi);
        const auto u = a.bracket(a.bracket(bk, bi), bj);
        for (std::size_t m = 0; m < n; ++m)
          if (!is_zero(s[m] + t[m] + u[m])) return false;
      }
  return true;
}

template <class T>
struct CentralSeries {
  /// canonical (RREF) bases of gamma_1, gamma_2, ..., gamma_c (gamma_{c+1} = 0 omitted)
  std::vector<std::vector<std::vector<T>>> bases;
  std::vector<int> type;
  int nilpotency_class = 0;
};

template <class T>
CentralSeries<T> lower_central_series(const BasicLieAlgebra<T>& a) {
  const std::size_t n = a.dim();
  CentralSeries<T> out;
  std::vector<std::vector<T>> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(unit_vector<T>(n, i));
  while (!current.empty()) {
    std::vector<std::vector<T>> brackets;
    for (std::size_t i = 0; i < n; ++i) {
      const auto bi = unit_vector<T>(n, i);
      for (const auto& v : current) brackets.push_back(a.bracket(bi, v));
    }
    auto next = row_space_basis(brackets);
    if (next.size() == current.size()) throw Error(ErrorCode::NotNilpotent, "lower central series stabilizes");
    out.type.push_back(static_cast<int>(current.size() - next.size()));
    out.bases.push_back(std::move(current));
    current = std::move(next);
  }
  out.nilpotency_class = static_cast<int>(out.type.size());
  return out;
}

/// f invertible and f[x, y] = [f x, f y] on basis pairs. Columns of f are
/// the images of the basis vectors.
template <class T>
bool is_automorphism(const BasicLieAlgebra<T>& a, const Matrix<T>& f) {
  const std::size_t n = a.dim();
  if (f.rows() != n || f.cols() != n) return false;
  if (is_zero(determinant(f))) return false;
  std::vector<std::vector<T>> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(f.col(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (f * a.basis_bracket(i, j) != a.bracket(img[i], img[j])) return false;
  return true;
}

template <class T>
BasicLieAlgebra<T> direct_sum(const std::vector<BasicLieAlgebra<T>>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.field() != parts.front().field()) throw Error(ErrorCode::FieldMismatch, "direct sum over different fields");
    total += p.dim();
  }
  BasicLieAlgebra<T> out(total, parts.empty() ? nullptr : parts.front().field());
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& e : p.entries()) out.add_bracket(offset + e.i, offset + e.j, offset + e.k, e.coeff);
    for (std::size_t i = 0; i < p.dim(); ++i) labels.push_back(p.labels().empty() ? "" : p.labels()[i]);
    offset += p.dim();
  }
  if (std::any_of(labels.begin(), labels.end(), [](const std::string& s) { return !s.empty(); })) out.set_labels(labels);
  return out;
}

/// First dims[0] basis vectors have degree 1, the next dims[1] degree 2, ...
struct Grading {
  std::vector<std::size_t> dims;
  int degree_of(std::size_t basis_index) const;
};

template <class T>
bool check_grading(const BasicLieAlgebra<T>& a, const Grading& g) {
  std::size_t total = 0;
  for (auto d : g.dims) total += d;
  if (total != a.dim()) throw Error(ErrorCode::DimensionMismatch, "grading dimensions do not sum to dim");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const int target = g.degree_of(i) + g.degree_of(j);
      const auto& b = a.basis_bracket(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!is_zero(b[k]) && g.degree_of(k) != target) return false;
    }
  return true;
}

/// The same structure constants viewed over a number field.
LieAlgebraE extend_scalars(const LieAlgebra& a, const DatumPtr& field);

/// The automorphism sending each generator to its image, extended through
/// brackets. Throws NotGenerating or ExtensionInconsistent.
RationalMatrix extend_from_generators(const LieAlgebra& a, const std::vector<std::vector<Rational>>& generators,
                                     const std::vector<std::vector<Rational>>& images);

/// [b_0, b_1] = b_2.
LieAlgebra heisenberg();
LieAlgebra abelian(std::size_t dim);

}  // namespace nilform

#endif  // NILFORM_LIEALG_HPP
