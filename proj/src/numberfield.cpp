#include "nasheq/numberfield.hpp"

#include <algorithm>

#include "nasheq/errors.hpp"

namespace nasheq {

namespace {

// Minimal polynomial of the rational r: primitive form of (den*t - num).
UPoly rational_minpoly(const Rat& value) {
  return UPoly(std::vector<Rat>{-value, Rat(1)}).primitive_integer_form();
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(UPoly minpoly, QInterval interval)
    : minpoly_(std::move(minpoly)), interval_(std::move(interval)) {}

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& value) {
  return AlgebraicNumber(rational_minpoly(value), QInterval::point(value));
}

AlgebraicNumber AlgebraicNumber::root_of(const UPoly& irreducible,
                                         const QInterval& isolating) {
  if (irreducible.degree() < 1) {
    throw InternalError("algebraic number needs a nonconstant polynomial");
  }
  const UPoly p = irreducible.primitive_integer_form();
  if (p.degree() == 1) {
    return from_rational(-p.coefficient(0) / p.coefficient(1));
  }
  if (!is_irreducible(p)) {
    throw InternalError("algebraic number needs an irreducible polynomial");
  }
  if (isolating.is_point()) {
    throw InternalError(
        "an irreducible polynomial of degree >= 2 has no rational root");
  }
  if (p.sign_at(isolating.lo) * p.sign_at(isolating.hi) >= 0) {
    throw InternalError("interval does not bracket a root");
  }
  if (count_real_roots_in(p, isolating.lo, isolating.hi) != 1) {
    throw InternalError("interval does not isolate a single root");
  }
  return AlgebraicNumber(p, isolating);
}

std::optional<Rat> AlgebraicNumber::as_rational() const {
  if (degree() != 1) return std::nullopt;
  return -minpoly_.coefficient(0) / minpoly_.coefficient(1);
}

QInterval AlgebraicNumber::refined(const Rat& max_width) const {
  if (interval_.width() > max_width) {
    interval_ = refine_interval(minpoly_, interval_, max_width);
  }
  return interval_;
}

int AlgebraicNumber::compare(const AlgebraicNumber& other) const {
  if (minpoly_ == other.minpoly_) {
    if (degree() == 1) {
      const Rat a = *as_rational();
      const Rat b = *other.as_rational();
      return a < b ? -1 : (a == b ? 0 : 1);
    }
    while (true) {
      if (interval_.hi < other.interval_.lo) return -1;
      if (other.interval_.hi < interval_.lo) return 1;
      // Overlapping enclosures of roots of one squarefree polynomial: equal
      // exactly when the hull contains a single root. Hull endpoints come
      // from bracket intervals, hence are never roots.
      const Rat lo = std::min(interval_.lo, other.interval_.lo);
      const Rat hi = std::max(interval_.hi, other.interval_.hi);
      if (count_real_roots_in(minpoly_, lo, hi) == 1) return 0;
      refined(interval_.width() / 2);
      other.refined(other.interval_.width() / 2);
    }
  }
  // Distinct minimal polynomials never share a root: refine to disjointness.
  while (true) {
    if (interval_.hi < other.interval_.lo) return -1;
    if (other.interval_.hi < interval_.lo) return 1;
    const bool a_point = interval_.is_point();
    const bool b_point = other.interval_.is_point();
    if (a_point && b_point) {
      // Distinct rationals (equal ones share a minimal polynomial).
      return interval_.lo < other.interval_.lo ? -1 : 1;
    }
    if (!a_point) refined(interval_.width() / 4);
    if (!b_point) other.refined(other.interval_.width() / 4);
  }
}

double AlgebraicNumber::approx() const {
  return refined(Rat(1, 1000000000)).to_double();
}

std::vector<AlgebraicNumber> real_roots_of(const UPoly& p) {
  if (p.is_zero()) throw Error("zero polynomial has every number as a root");
  std::vector<AlgebraicNumber> roots;
  for (const auto& [factor_poly, multiplicity] : factor(p)) {
    for (const auto& interval : isolate_real_roots(factor_poly)) {
      if (interval.is_point()) {
        roots.push_back(AlgebraicNumber::from_rational(interval.lo));
      } else {
        roots.push_back(AlgebraicNumber::root_of(factor_poly, interval));
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
              return a.compare(b) < 0;
            });
  return roots;
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q(new NumberField(AlgebraicNumber::from_rational(Rat(0))));
  return q;
}

FieldPtr NumberField::adjoin(const AlgebraicNumber& generator) {
  return FieldPtr(new NumberField(generator));
}

bool NumberField::same_field(const NumberField& other) const {
  if (this == &other) return true;
  return generator_.minimal_polynomial() ==
             other.generator_.minimal_polynomial() &&
         generator_.compare(other.generator_) == 0;
}

void require_same_field(const NFElement& a, const NFElement& b) {
  if (!a.field()->same_field(*b.field())) {
    throw FieldMismatch("elements live in different number fields");
  }
}

NFElement::NFElement(FieldPtr field, UPoly representative)
    : field_(std::move(field)), rep_(std::move(representative)) {
  if (!field_) throw InternalError("field element without a field");
  if (rep_.degree() >= field_->degree()) {
    rep_ = rep_.divrem(field_->generator().minimal_polynomial()).second;
  }
}

NFElement NFElement::from_rational(FieldPtr field, const Rat& value) {
  return NFElement(std::move(field), UPoly::constant(value));
}

NFElement NFElement::generator(FieldPtr field) {
  return NFElement(std::move(field), UPoly::identity());
}

NFElement NFElement::operator+(const NFElement& other) const {
  require_same_field(*this, other);
  return NFElement(field_, rep_ + other.rep_);
}

NFElement NFElement::operator-(const NFElement& other) const {
  require_same_field(*this, other);
  return NFElement(field_, rep_ - other.rep_);
}

NFElement NFElement::operator-() const { return NFElement(field_, -rep_); }

NFElement NFElement::operator*(const NFElement& other) const {
  require_same_field(*this, other);
  return NFElement(field_, rep_ * other.rep_);
}

NFElement NFElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in a number field");
  // Extended Euclid: s*rep + t*minpoly = gcd = nonzero constant, because the
  // minimal polynomial is irreducible and deg rep < deg minpoly.
  const UPoly& m = field_->generator().minimal_polynomial();
  UPoly r0 = m, r1 = rep_;
  UPoly s0 = UPoly::zero(), s1 = UPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    UPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) {
    throw InternalError("reducible minimal polynomial detected in inverse");
  }
  return NFElement(field_, s0.scaled(Rat(1) / r0.coefficient(0)));
}

NFElement NFElement::operator/(const NFElement& other) const {
  require_same_field(*this, other);
  return *this * other.inverse();
}

bool NFElement::operator==(const NFElement& other) const {
  require_same_field(*this, other);
  return rep_ == other.rep_;
}

int NFElement::sign() const {
  if (rep_.is_zero()) return 0;
  if (rep_.degree() == 0) return sign_of(rep_.coefficient(0));
  Rat width = Rat(1, 16);
  while (true) {
    const int s = enclosure(width).certain_sign();
    if (s != 0) return s;
    width /= 1024;
  }
}

std::optional<Rat> NFElement::as_rational() const {
  if (rep_.is_zero()) return Rat(0);
  if (rep_.degree() == 0) return rep_.coefficient(0);
  return std::nullopt;
}

QInterval NFElement::enclosure(const Rat& max_width) const {
  if (rep_.degree() <= 0) {
    return QInterval::point(rep_.is_zero() ? Rat(0) : rep_.coefficient(0));
  }
  Rat generator_width = max_width;
  while (true) {
    const QInterval at = field_->generator().refined(generator_width);
    const QInterval image = rep_.evaluate_interval(at);
    if (image.width() <= max_width) return image;
    generator_width /= 1024;
  }
}

double NFElement::approx() const {
  return enclosure(Rat(1, 1000000000)).to_double();
}

AlgebraicNumber NFElement::algebraic_value() const {
  if (auto r = as_rational()) return AlgebraicNumber::from_rational(*r);
  const int d = field_->degree();
  // Power basis coordinates of 1, a, a^2, ... until linear dependence.
  // Gaussian elimination with an augmented history to read the relation off.
  std::vector<std::vector<Rat>> echelon;          // reduced rows
  std::vector<std::vector<Rat>> combos;           // same combo of inputs
  std::vector<std::optional<std::size_t>> pivot_row(static_cast<std::size_t>(d));
  NFElement power = NFElement::from_rational(field_, Rat(1));
  std::vector<std::vector<Rat>> input_rows;
  for (int k = 0;; ++k) {
    std::vector<Rat> row(static_cast<std::size_t>(d), Rat(0));
    for (int i = 0; i <= power.rep_.degree(); ++i) {
      row[static_cast<std::size_t>(i)] =
          power.rep_.coefficient(static_cast<std::size_t>(i));
    }
    input_rows.push_back(row);
    std::vector<Rat> combo(static_cast<std::size_t>(k) + 1, Rat(0));
    combo[static_cast<std::size_t>(k)] = Rat(1);
    // Reduce against existing echelon rows.
    for (std::size_t col = 0; col < static_cast<std::size_t>(d); ++col) {
      if (sgn(row[col]) == 0 || !pivot_row[col]) continue;
      const auto pr = *pivot_row[col];
      const Rat factor = row[col] / echelon[pr][col];
      for (std::size_t c = 0; c < static_cast<std::size_t>(d); ++c) {
        row[c] -= factor * echelon[pr][c];
      }
      for (std::size_t c = 0; c < combos[pr].size(); ++c) {
        combo[c] -= factor * combos[pr][c];
      }
    }
    const bool zero_row = std::all_of(row.begin(), row.end(),
                                      [](const Rat& v) { return sgn(v) == 0; });
    if (zero_row) {
      // combo gives sum_j combo[j] * a^j = 0 with combo[k] = 1: the minimal
      // polynomial (irreducible because it is minimal for an algebraic
      // element of a field).
      UPoly minpoly = UPoly(std::move(combo)).primitive_integer_form();
      // Locate the isolating interval containing this element.
      const auto intervals = isolate_real_roots(minpoly);
      Rat width(1, 16);
      while (true) {
        const QInterval enc = enclosure(width);
        for (const auto& iv : intervals) {
          if (iv.contains_interval(enc)) {
            return AlgebraicNumber::root_of(minpoly, iv);
          }
        }
        width /= 1024;
      }
    }
    std::size_t lead = 0;
    while (sgn(row[lead]) == 0) ++lead;
    pivot_row[lead] = echelon.size();
    echelon.push_back(std::move(row));
    combos.push_back(std::move(combo));
    power = power * *this;
  }
}

std::string NFElement::to_string(const std::string& generator_name) const {
  return rep_.to_string(generator_name);
}

NFElement evaluate_at(const UPoly& p, const NFElement& x) {
  NFElement acc = NFElement::from_rational(x.field(), Rat(0));
  for (std::size_t k = p.coefficients().size(); k > 0; --k) {
    acc = acc * x +
          NFElement::from_rational(x.field(), p.coefficient(k - 1));
  }
  return acc;
}

bool in_open_unit_interval(const NFElement& a) {
  if (a.sign() <= 0) return false;
  const NFElement one_minus =
      NFElement::from_rational(a.field(), Rat(1)) - a;
  return one_minus.sign() > 0;
}

std::string approx_decimal(const NFElement& a, int digits) {
  if (auto r = a.as_rational()) return decimal_string(*r, digits);
  Rat width = Rat(1, pow10(static_cast<unsigned>(digits + 2)));
  while (true) {
    const QInterval enc = a.enclosure(width);
    const std::string lo = decimal_string(enc.lo, digits);
    const std::string hi = decimal_string(enc.hi, digits);
    if (lo == hi) return lo;
    width /= 1024;
  }
}

}  // namespace nasheq
