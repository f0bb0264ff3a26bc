#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nasheq/interval.hpp"
#include "nasheq/unipoly.hpp"

namespace nasheq {

// A real algebraic number, represented exactly by its minimal polynomial
// (irreducible, primitive integer coefficients, positive leading
// coefficient) together with an isolating interval selecting one real root.
// The interval can be refined on demand; refinement is cached.
class AlgebraicNumber {
 public:
  static AlgebraicNumber from_rational(const Rat& value);
  // `irreducible` must be irreducible over the rationals and `isolating`
  // must isolate exactly one of its real roots.
  static AlgebraicNumber root_of(const UPoly& irreducible,
                                 const QInterval& isolating);

  int degree() const { return minpoly_.degree(); }
  const UPoly& minimal_polynomial() const { return minpoly_; }
  bool is_rational() const { return degree() == 1; }
  std::optional<Rat> as_rational() const;

  // Isolating interval refined to at most the requested width.
  QInterval refined(const Rat& max_width) const;
  QInterval isolating_interval() const { return interval_; }

  // Total order on the reals: -1, 0, +1.
  int compare(const AlgebraicNumber& other) const;
  bool operator==(const AlgebraicNumber& other) const {
    return compare(other) == 0;
  }

  double approx() const;

 private:
  AlgebraicNumber(UPoly minpoly, QInterval interval);

  UPoly minpoly_;
  mutable QInterval interval_;
};

// All real roots of a polynomial as exact algebraic numbers, sorted
// ascending, duplicates (from repeated factors) collapsed.
std::vector<AlgebraicNumber> real_roots_of(const UPoly& p);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// The field Q(theta) for a fixed real algebraic generator theta. Elements
// are polynomials in theta of degree below deg(theta).
class NumberField {
 public:
  // The rationals themselves, as the degree-1 field Q(0).
  static FieldPtr rationals();
  static FieldPtr adjoin(const AlgebraicNumber& generator);

  int degree() const { return generator_.degree(); }
  const AlgebraicNumber& generator() const { return generator_; }
  bool same_field(const NumberField& other) const;

 private:
  explicit NumberField(AlgebraicNumber generator)
      : generator_(std::move(generator)) {}

  AlgebraicNumber generator_;
};

// An element of a number field, stored as its representative polynomial in
// the generator, reduced modulo the minimal polynomial. All arithmetic is
// exact; sign queries refine the generator's isolating interval until the
// enclosure of the element excludes zero.
class NFElement {
 public:
  NFElement(FieldPtr field, UPoly representative);
  static NFElement from_rational(FieldPtr field, const Rat& value);
  static NFElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const UPoly& representative() const { return rep_; }

  NFElement operator+(const NFElement& other) const;
  NFElement operator-(const NFElement& other) const;
  NFElement operator-() const;
  NFElement operator*(const NFElement& other) const;
  NFElement operator/(const NFElement& other) const;
  NFElement inverse() const;

  bool is_zero() const { return rep_.is_zero(); }
  bool operator==(const NFElement& other) const;

  // Exact sign: -1, 0, +1. Terminates because a nonzero representative of
  // degree below the generator's cannot vanish at the generator.
  int sign() const;

  std::optional<Rat> as_rational() const;

  // Rational enclosure no wider than `max_width`.
  QInterval enclosure(const Rat& max_width) const;
  double approx() const;

  // The element as a standalone algebraic number: minimal polynomial (found
  // by linear algebra over the power basis) plus isolating interval.
  AlgebraicNumber algebraic_value() const;

  std::string to_string(const std::string& generator_name = "r") const;

 private:
  FieldPtr field_;
  UPoly rep_;
};

// p(x) for a rational-coefficient polynomial and a field element, computed
// exactly inside x's field.
NFElement evaluate_at(const UPoly& p, const NFElement& x);

inline int sign_of(const NFElement& a) { return a.sign(); }
inline bool is_rational(const NFElement& a) {
  return a.as_rational().has_value();
}
// Strict 0 < a < 1, decided exactly.
bool in_open_unit_interval(const NFElement& a);
// Correctly rounded decimal with `digits` fractional digits.
std::string approx_decimal(const NFElement& a, int digits);

void require_same_field(const NFElement& a, const NFElement& b);

// ---------------------------------------------------------------------
// Closed-form radical expressions (exact expression trees).
// ---------------------------------------------------------------------

class RadicalExpr {
 public:
  enum class Kind { Constant, Add, Sub, Mul, Div, Root };

  static RadicalExpr constant(const Rat& value);
  static RadicalExpr add(RadicalExpr lhs, RadicalExpr rhs);
  static RadicalExpr sub(RadicalExpr lhs, RadicalExpr rhs);
  static RadicalExpr mul(RadicalExpr lhs, RadicalExpr rhs);
  static RadicalExpr div(RadicalExpr lhs, RadicalExpr rhs);
  static RadicalExpr root(RadicalExpr radicand, int index);

  Kind kind() const { return kind_; }
  const Rat& value() const { return value_; }
  int root_index() const { return index_; }
  const std::vector<RadicalExpr>& children() const { return children_; }

  // Rational enclosure of the expression's value, at most `max_width` wide.
  QInterval enclose(const Rat& max_width) const;
  std::string to_string() const;

 private:
  RadicalExpr() = default;
  Kind kind_ = Kind::Constant;
  Rat value_ = Rat(0);
  int index_ = 2;
  std::vector<RadicalExpr> children_;
};

// Closed-form radical tree for elements whose minimal polynomial has degree
// at most 2; std::nullopt above that.
std::optional<RadicalExpr> to_radical(const NFElement& a);

}  // namespace nasheq
