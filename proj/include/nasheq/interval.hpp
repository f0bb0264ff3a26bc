#pragma once

#include <string>

#include "nasheq/rational.hpp"

namespace nasheq {

// Closed interval with exact rational endpoints. The workhorse for sign
// determination and decimal output: every real algebraic quantity in the
// library is tracked by an enclosure that can be refined on demand.
struct QInterval {
  Rat lo;
  Rat hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rat lo_, Rat hi_);
  static QInterval point(const Rat& value) { return QInterval(value, value); }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& value) const { return lo <= value && value <= hi; }
  bool contains_zero() const { return contains(Rat(0)); }
  bool is_point() const { return lo == hi; }

  // Sign of every point in the interval: +1, -1, or 0 when the enclosure
  // still straddles zero (undecided).
  int certain_sign() const;

  bool intersects(const QInterval& other) const {
    return lo <= other.hi && other.lo <= hi;
  }
  bool contains_interval(const QInterval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }

  double to_double() const { return mid().get_d(); }
  std::string to_string() const;
};

QInterval operator+(const QInterval& a, const QInterval& b);
QInterval operator-(const QInterval& a, const QInterval& b);
QInterval operator-(const QInterval& a);
QInterval operator*(const QInterval& a, const QInterval& b);
// Requires b to exclude zero.
QInterval interval_div(const QInterval& a, const QInterval& b);

// Enclosure of sqrt over a non-negative interval, outward-rounded so the
// result is wider than the true image by at most `slack` on each side.
QInterval interval_sqrt(const QInterval& a, const Rat& slack);

}  // namespace nasheq
