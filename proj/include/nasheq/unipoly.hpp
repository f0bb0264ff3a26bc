#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nasheq/interval.hpp"
#include "nasheq/rational.hpp"

namespace nasheq {

// Dense univariate polynomial with exact rational coefficients, constant
// term first. The zero polynomial has an empty coefficient vector and
// degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coefficients);

  static UPoly zero() { return UPoly(); }
  static UPoly constant(const Rat& value);
  static UPoly identity();  // t
  // c[0] + c[1] t + ... with trailing zeros trimmed.
  static UPoly from_coefficients(std::vector<Rat> coefficients) {
    return UPoly(std::move(coefficients));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rat& coefficient(std::size_t k) const;
  const std::vector<Rat>& coefficients() const { return c_; }
  const Rat& leading_coefficient() const;

  UPoly operator+(const UPoly& other) const;
  UPoly operator-(const UPoly& other) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& other) const;
  UPoly scaled(const Rat& factor) const;
  bool operator==(const UPoly& other) const { return c_ == other.c_; }

  // Euclidean division over the rationals; divisor must be nonzero.
  std::pair<UPoly, UPoly> divrem(const UPoly& divisor) const;
  // Exact division; throws InternalError when the remainder is nonzero.
  UPoly divide_exact(const UPoly& divisor) const;

  UPoly derivative() const;
  UPoly monic() const;
  // Integer-coefficient form divided by content, leading coefficient > 0.
  UPoly primitive_integer_form() const;

  Rat evaluate(const Rat& x) const;
  int sign_at(const Rat& x) const { return sign_of(evaluate(x)); }
  QInterval evaluate_interval(const QInterval& x) const;
  double evaluate_double(double x) const;

  // p(a*t + b): composition with an affine map, used for root shifting.
  UPoly compose_affine(const Rat& a, const Rat& b) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Monic gcd over the rationals.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);

struct SquarefreeFactor {
  UPoly factor;  // monic
  int multiplicity;
};

// Yun's squarefree decomposition: p = lc * prod factor_i^multiplicity_i with
// the factors pairwise coprime and squarefree, listed by multiplicity.
// Factors equal to 1 are omitted.
std::vector<SquarefreeFactor> yun_squarefree(const UPoly& p);

UPoly squarefree_part(const UPoly& p);

// All rational roots with multiplicity stripped (each root listed once),
// sorted ascending. Uses the integer root bound on the primitive form.
std::vector<Rat> rational_roots(const UPoly& p);

struct IrreducibleFactor {
  UPoly factor;  // primitive integer form, positive leading coefficient
  int multiplicity;
};

// Complete factorization over the rationals into irreducible primitive
// integer polynomials. The product of factor^multiplicity times a rational
// unit reproduces the input. Deterministic: factors sorted by (degree,
// coefficient sequence).
std::vector<IrreducibleFactor> factor(const UPoly& p);

bool is_irreducible(const UPoly& p);

// Upper bound B with every real root in [-B, B].
Rat root_bound(const UPoly& p);

// Number of distinct real roots of a squarefree polynomial.
int count_real_roots(const UPoly& squarefree);
// Distinct real roots in the half-open interval (lo, hi].
int count_real_roots_in(const UPoly& squarefree, const Rat& lo, const Rat& hi);

// Disjoint isolating intervals for every real root of a squarefree
// polynomial, sorted ascending. A rational root is returned as a point
// interval; every other interval has non-root endpoints and a sign change
// across it.
std::vector<QInterval> isolate_real_roots(const UPoly& squarefree);

// Bisects an isolating interval until its width is at most `target_width`,
// preserving the invariant that it isolates the same single root. Point
// intervals pass through unchanged.
QInterval refine_interval(const UPoly& squarefree, QInterval interval,
                          const Rat& target_width);

// Resultant of two polynomials via the Sylvester matrix (exact).
Rat resultant(const UPoly& p, const UPoly& q);

// (-1)^(d(d-1)/2) * resultant(p, p') / lc(p) for d = deg p >= 1.
Rat discriminant(const UPoly& p);

}  // namespace nasheq
