#include <utility>

#include "nasheq/errors.hpp"
#include "nasheq/numberfield.hpp"

namespace nasheq {

RadicalExpr RadicalExpr::constant(const Rat& value) {
  RadicalExpr e;
  e.kind_ = Kind::Constant;
  e.value_ = value;
  e.value_.canonicalize();
  return e;
}

RadicalExpr RadicalExpr::add(RadicalExpr lhs, RadicalExpr rhs) {
  RadicalExpr e;
  e.kind_ = Kind::Add;
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

RadicalExpr RadicalExpr::sub(RadicalExpr lhs, RadicalExpr rhs) {
  RadicalExpr e;
  e.kind_ = Kind::Sub;
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

RadicalExpr RadicalExpr::mul(RadicalExpr lhs, RadicalExpr rhs) {
  RadicalExpr e;
  e.kind_ = Kind::Mul;
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

RadicalExpr RadicalExpr::div(RadicalExpr lhs, RadicalExpr rhs) {
  RadicalExpr e;
  e.kind_ = Kind::Div;
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

RadicalExpr RadicalExpr::root(RadicalExpr radicand, int index) {
  if (index < 2) throw InternalError("radical index must be at least 2");
  RadicalExpr e;
  e.kind_ = Kind::Root;
  e.index_ = index;
  e.children_.push_back(std::move(radicand));
  return e;
}

namespace {

QInterval enclose_at(const RadicalExpr& e, const Rat& slack) {
  switch (e.kind()) {
    case RadicalExpr::Kind::Constant:
      return QInterval::point(e.value());
    case RadicalExpr::Kind::Add:
      return enclose_at(e.children()[0], slack) +
             enclose_at(e.children()[1], slack);
    case RadicalExpr::Kind::Sub:
      return enclose_at(e.children()[0], slack) -
             enclose_at(e.children()[1], slack);
    case RadicalExpr::Kind::Mul:
      return enclose_at(e.children()[0], slack) *
             enclose_at(e.children()[1], slack);
    case RadicalExpr::Kind::Div:
      return interval_div(enclose_at(e.children()[0], slack),
                          enclose_at(e.children()[1], slack));
    case RadicalExpr::Kind::Root: {
      const QInterval inner = enclose_at(e.children()[0], slack);
      if (e.root_index() != 2) {
        throw InternalError("only square roots are evaluated");
      }
      return interval_sqrt(inner, slack);
    }
  }
  throw InternalError("unknown radical node");
}

int precedence(const RadicalExpr& e) {
  switch (e.kind()) {
    case RadicalExpr::Kind::Add:
    case RadicalExpr::Kind::Sub:
      return 1;
    case RadicalExpr::Kind::Mul:
    case RadicalExpr::Kind::Div:
      return 2;
    case RadicalExpr::Kind::Constant:
      return sgn(e.value()) < 0 ? 1 : 3;  // negatives need parentheses
    case RadicalExpr::Kind::Root:
      return 3;
  }
  return 3;
}

std::string render(const RadicalExpr& e, int parent_precedence) {
  std::string body;
  switch (e.kind()) {
    case RadicalExpr::Kind::Constant:
      body = rat_to_string(e.value());
      break;
    case RadicalExpr::Kind::Add:
      body = render(e.children()[0], 1) + " + " + render(e.children()[1], 1);
      break;
    case RadicalExpr::Kind::Sub:
      body = render(e.children()[0], 1) + " - " + render(e.children()[1], 2);
      break;
    case RadicalExpr::Kind::Mul:
      body = render(e.children()[0], 2) + "*" + render(e.children()[1], 2);
      break;
    case RadicalExpr::Kind::Div:
      body = render(e.children()[0], 2) + "/" + render(e.children()[1], 3);
      break;
    case RadicalExpr::Kind::Root:
      if (e.root_index() == 2) {
        body = "sqrt(" + render(e.children()[0], 0) + ")";
      } else {
        body = "root" + std::to_string(e.root_index()) + "(" +
               render(e.children()[0], 0) + ")";
      }
      return body;  // function syntax never needs parentheses
  }
  if (precedence(e) < parent_precedence) return "(" + body + ")";
  return body;
}

// Largest s with s^2 dividing n (trial division, then a perfect-square
// check on the remainder).
Int square_part(Int n) {
  Int s = 1;
  for (Int d = 2; d * d * d * d <= n && d < 100000; ++d) {
    while (n % (d * d) == 0) {
      n /= d * d;
      s *= d;
    }
  }
  if (auto r = exact_sqrt(n)) s *= *r;
  return s;
}

}  // namespace

QInterval RadicalExpr::enclose(const Rat& max_width) const {
  if (sgn(max_width) <= 0) {
    throw InternalError("enclosure width must be positive");
  }
  for (Rat slack = max_width;; slack /= 1024) {
    const QInterval out = enclose_at(*this, slack);
    if (out.width() <= max_width) return out;
  }
}

std::string RadicalExpr::to_string() const { return render(*this, 0); }

std::optional<RadicalExpr> to_radical(const NFElement& a) {
  if (auto r = a.as_rational()) return RadicalExpr::constant(*r);
  const AlgebraicNumber value = a.algebraic_value();
  if (value.degree() > 2) return std::nullopt;
  // A t^2 + B t + C with roots (-B +- sqrt(D)) / (2A), D = B^2 - 4AC > 0.
  const UPoly& m = value.minimal_polynomial();
  const Rat A = m.coefficient(2);
  const Rat B = m.coefficient(1);
  const Rat C = m.coefficient(0);
  const Rat Dq = B * B - A * C * 4;
  const Int D = Dq.get_num();  // minimal polynomial has integer coefficients
  if (D <= 0) throw InternalError("real quadratic with nonpositive discriminant");
  // D = s^2 * D0: pull the square part out of the radical.
  const Int s = square_part(D);
  const Int D0 = D / (s * s);
  Rat p = -B / (A * 2);
  Rat q = Rat(s) / (A.get_num() * 2);
  // Pick the branch agreeing with the element's isolating interval.
  const RadicalExpr root_node = RadicalExpr::root(
      RadicalExpr::constant(Rat(D0)), 2);
  for (Rat width(1, 1024);; width /= 1024) {
    const QInterval sq = root_node.enclose(width);
    const QInterval plus =
        QInterval::point(p) + QInterval::point(q) * sq;
    const QInterval minus =
        QInterval::point(p) - QInterval::point(q) * sq;
    const QInterval target = value.refined(width);
    const bool hit_plus = plus.intersects(target);
    const bool hit_minus = minus.intersects(target);
    if (hit_plus && !hit_minus) break;
    if (hit_minus && !hit_plus) {
      q = -q;
      break;
    }
  }
  // Assemble p + q*sqrt(D0) with small presentational simplifications.
  RadicalExpr radical_part =
      (abs(q) == 1) ? root_node
                    : RadicalExpr::mul(RadicalExpr::constant(abs(q)), root_node);
  if (sgn(p) == 0) {
    if (sgn(q) >= 0) return radical_part;
    return RadicalExpr::sub(RadicalExpr::constant(Rat(0)), radical_part);
  }
  if (sgn(q) >= 0) {
    return RadicalExpr::add(RadicalExpr::constant(p), radical_part);
  }
  return RadicalExpr::sub(RadicalExpr::constant(p), radical_part);
}

}  // namespace nasheq
