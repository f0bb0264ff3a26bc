#include "nasheq/interval.hpp"

#include <algorithm>

#include "nasheq/errors.hpp"

namespace nasheq {

QInterval::QInterval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  lo.canonicalize();  // two-argument Rat construction may skip this
  hi.canonicalize();
  if (lo > hi) throw InternalError("interval endpoints out of order");
}

int QInterval::certain_sign() const {
  if (sgn(lo) > 0) return 1;
  if (sgn(hi) < 0) return -1;
  if (sgn(lo) == 0 && sgn(hi) == 0) return 0;
  return 0;  // straddles zero: undecided, caller must refine
}

std::string QInterval::to_string() const {
  return "[" + rat_to_string(lo) + ", " + rat_to_string(hi) + "]";
}

QInterval operator+(const QInterval& a, const QInterval& b) {
  return QInterval(a.lo + b.lo, a.hi + b.hi);
}

QInterval operator-(const QInterval& a, const QInterval& b) {
  return QInterval(a.lo - b.hi, a.hi - b.lo);
}

QInterval operator-(const QInterval& a) { return QInterval(-a.hi, -a.lo); }

QInterval operator*(const QInterval& a, const QInterval& b) {
  const Rat p1 = a.lo * b.lo;
  const Rat p2 = a.lo * b.hi;
  const Rat p3 = a.hi * b.lo;
  const Rat p4 = a.hi * b.hi;
  return QInterval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

QInterval interval_div(const QInterval& a, const QInterval& b) {
  if (b.contains_zero()) {
    throw DivisionByZero("interval division by an enclosure of zero");
  }
  const Rat p1 = a.lo / b.lo;
  const Rat p2 = a.lo / b.hi;
  const Rat p3 = a.hi / b.lo;
  const Rat p4 = a.hi / b.hi;
  return QInterval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

namespace {

// Lower bound on sqrt(r) within `slack`, exact when r is a rational square.
Rat sqrt_lower(const Rat& r, const Rat& slack) {
  if (sgn(r) == 0) return Rat(0);
  // sqrt(p/q) = sqrt(p*q)/q; bracket sqrt(p*q) between consecutive integers
  // after scaling by 2^k until the bracket is tight enough.
  const Int p = r.get_num();
  const Int q = r.get_den();
  Int scale = 1;
  while (true) {
    Int target = p * q * scale * scale;
    Int root = isqrt_floor(target);
    Rat low(root, q * scale);
    low.canonicalize();
    Rat high(root + 1, q * scale);
    high.canonicalize();
    if (root * root == target) return low;  // exact
    if (high - low <= slack) return low;
    scale *= 16;
  }
}

}  // namespace

QInterval interval_sqrt(const QInterval& a, const Rat& slack) {
  if (sgn(a.lo) < 0) {
    throw InternalError("interval_sqrt of an interval with negative points");
  }
  if (sgn(slack) <= 0) throw InternalError("interval_sqrt needs positive slack");
  const Rat lo = sqrt_lower(a.lo, slack);
  // Upper bound: lower bound of sqrt(hi) plus the bracketing slack.
  Rat hi = sqrt_lower(a.hi, slack) + slack;
  // Tighten when hi is a perfect square (sqrt_lower was exact).
  if (is_rational_square(a.hi)) {
    hi = sqrt_lower(a.hi, slack);
  }
  return QInterval(lo, std::max(lo, hi));
}

}  // namespace nasheq
