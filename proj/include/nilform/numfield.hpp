#ifndef NILFORM_NUMFIELD_HPP
#define NILFORM_NUMFIELD_HPP

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilform/exactmath.hpp"

namespace nilform {

/// Unverified description of a Galois number field: what a fixture file holds.
struct GaloisDatumSpec {
  Polynomial min_poly;
  /// automorphisms[i] = sigma_i(theta) as a polynomial in theta of degree < d
  std::vector<Polynomial> automorphisms;
  /// Optional claims; checked against the recomputed values when present.
  std::optional<std::size_t> identity;
  std::optional<std::vector<std::vector<std::size_t>>> table;
  /// Real root enclosures in descending order. Computed when empty.
  std::vector<Interval> roots;
  bool assume_irreducible = false;
  std::string description;
  /// Free-form provenance notes copied into certificates.
  std::vector<std::string> provenance;
};

struct DatumOptions {
  /// Max number of candidate factors tried by the irreducibility search.
  long irreducibility_budget = 20'000'000;
};

class GaloisDatum;
using DatumPtr = std::shared_ptr<const GaloisDatum>;

/// A verified Galois datum. Only obtainable through verify().
class GaloisDatum {
 public:
  static DatumPtr verify(const GaloisDatumSpec& spec, const DatumOptions& options = {});

  std::size_t degree() const { return degree_; }
  const Polynomial& min_poly() const { return spec_.min_poly; }
  const Polynomial& automorphism(std::size_t i) const { return spec_.automorphisms.at(i); }
  std::size_t group_order() const { return degree_; }
  std::size_t identity() const { return identity_; }
  /// sigma_{compose(i, j)} = sigma_i o sigma_j
  std::size_t compose(std::size_t i, std::size_t j) const { return table_[i][j]; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  /// A small generating set of the group, chosen greedily by index.
  const std::vector<std::size_t>& generators() const { return generators_; }
  std::size_t order_of(std::size_t i) const;
  /// Root enclosures, descending; index 0 is the designated embedding of theta.
  const std::vector<Interval>& root_enclosures() const { return spec_.roots; }
  bool assume_irreducible() const { return spec_.assume_irreducible; }
  const std::string& description() const { return spec_.description; }
  /// Assumption flags to be carried into downstream certificates.
  std::vector<std::string> assumptions() const;
  const GaloisDatumSpec& spec() const { return spec_; }

  /// Matrix of sigma_i on power-basis coordinates.
  const RationalMatrix& action_matrix(std::size_t i) const { return action_[i]; }
  /// Power-basis coordinates (length d) of p(theta).
  std::vector<Rational> reduce(const Polynomial& p) const;
  /// Matrix of multiplication by the element with the given coordinates.
  RationalMatrix multiplication_matrix(const std::vector<Rational>& coeffs) const;
  /// Bisects root enclosure i until its width is <= width (exact endpoints).
  Interval refine_root(std::size_t root, const Rational& width, long budget) const;
  /// Enclosure of theta in the designated embedding, pre-refined at construction.
  const Interval& theta_enclosure() const { return theta_; }

 private:
  GaloisDatum() = default;
  GaloisDatumSpec spec_;
  std::size_t degree_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generators_;
  std::vector<RationalMatrix> action_;
  Interval theta_;
};

/// Verifies that a monic integer polynomial has no monic integer factor of
/// degree <= deg/2. Throws NotIrreducible or IrreducibilityUnproven.
void check_irreducible(const Polynomial& p, long budget);

/// Isolating intervals of the real roots of a squarefree polynomial, descending.
std::vector<Interval> isolate_real_roots(const Polynomial& p);

/// Q as a degree-1 datum.
DatumPtr rational_datum();
/// Q(sqrt k, sqrt l) with theta = sqrt k + sqrt l.
DatumPtr biquadratic_datum(long k, long l);
/// Q(sqrt k), theta = sqrt k, k squarefree > 1.
DatumPtr quadratic_datum(long k);

/// Element of the field of a datum in power-basis coordinates. A null datum
/// denotes an element of Q; mixing it with any datum promotes it.
class FieldElement {
 public:
  FieldElement() : coeffs_{Rational(0)} {}
  template <std::integral I>
  FieldElement(I v) : coeffs_{Rational(v)} {}  // NOLINT
  FieldElement(const Rational& r) : coeffs_{r} {}  // NOLINT
  FieldElement(DatumPtr datum, std::vector<Rational> coeffs);

  static FieldElement generator(const DatumPtr& datum);
  static FieldElement from_polynomial(const DatumPtr& datum, const Polynomial& p);

  const DatumPtr& datum() const { return datum_; }
  std::size_t degree() const { return datum_ ? datum_->degree() : 1; }
  /// Coordinates, padded to the datum's degree.
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Polynomial as_polynomial() const { return Polynomial(coeffs_); }
  bool is_rational() const;
  /// The rational value; requires is_rational().
  Rational rational_value() const;
  bool is_zero() const;
  FieldElement inverse() const;
  /// Same value attached to the given datum (rational or same datum only).
  FieldElement promoted(const DatumPtr& datum) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string str(const std::string& var = "t") const;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& x);

 private:
  static DatumPtr common_datum(const FieldElement& a, const FieldElement& b);
  DatumPtr datum_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
FieldElement pow(const FieldElement& x, long exponent);

/// sigma_i(x).
FieldElement apply_automorphism(std::size_t sigma, const FieldElement& x);
/// x^sigma = sigma^{-1}(x).
FieldElement right_action(std::size_t sigma, const FieldElement& x);
std::vector<FieldElement> right_action(std::size_t sigma, const std::vector<FieldElement>& v);

Polynomial minimal_polynomial(const FieldElement& x);
bool is_algebraic_unit(const FieldElement& x);
Rational trace(const FieldElement& x);
Rational norm(const FieldElement& x);

/// Real value of sigma_i(x) in the designated embedding, enclosed with width
/// <= precision. The budget bounds bisection steps (PrecisionUnreachable).
Interval conjugate_interval(const FieldElement& x, std::size_t sigma, const Rational& precision, long budget = 100'000);
/// Enclosure of |sigma_i(x)| with width <= precision.
Interval conjugate_modulus_interval(const FieldElement& x, std::size_t sigma, const Rational& precision,
                                    long budget = 100'000);
/// Sign of |sigma_i(x)| - 1, decided exactly. Undecidable if the budget runs out.
int compare_conjugate_modulus_to_one(const FieldElement& x, std::size_t sigma, long budget = 100'000);
/// Sign of sigma_i(x) - 1 in the designated embedding.
int compare_conjugate_to_one(const FieldElement& x, std::size_t sigma, long budget = 100'000);

/// Default search/refinement budget, overridable by ANOSOV_SEARCH_BUDGET.
long default_budget(long fallback);

}  // namespace nilform

#endif  // NILFORM_NUMFIELD_HPP
