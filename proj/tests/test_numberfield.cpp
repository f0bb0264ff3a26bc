#include <doctest.h>

#include "nasheq/errors.hpp"
#include "nasheq/numberfield.hpp"

using namespace nasheq;

namespace {

UPoly upoly(std::vector<long> ints) {
  std::vector<Rat> c;
  c.reserve(ints.size());
  for (long v : ints) c.emplace_back(v);
  return UPoly(std::move(c));
}

// The positive root of t^2 - 2.
AlgebraicNumber sqrt2() {
  auto intervals = isolate_real_roots(upoly({-2, 0, 1}));
  REQUIRE(intervals.size() == 2);
  return AlgebraicNumber::root_of(upoly({-2, 0, 1}), intervals[1]);
}

}  // namespace

TEST_SUITE("numberfield") {
  TEST_CASE("algebraic numbers from rationals are degree one") {
    auto half = AlgebraicNumber::from_rational(Rat(1, 2));
    CHECK(half.degree() == 1);
    CHECK(half.is_rational());
    CHECK(half.as_rational() == Rat(1, 2));
    CHECK(half.minimal_polynomial() == upoly({-1, 2}));
  }

  TEST_CASE("root construction validates its inputs") {
    // Reducible polynomial is rejected.
    auto reducible = upoly({-1, 0, 1});  // (t-1)(t+1)
    CHECK_THROWS(AlgebraicNumber::root_of(reducible, QInterval(Rat(0), Rat(2))));
    // Interval without a bracketed root is rejected.
    CHECK_THROWS(
        AlgebraicNumber::root_of(upoly({-2, 0, 1}), QInterval(Rat(2), Rat(3))));
  }

  TEST_CASE("refinement narrows the isolating interval") {
    auto r = sqrt2();
    QInterval fine = r.refined(rat_from_string("1/1000000000000"));
    CHECK(fine.width() <= rat_from_string("1/1000000000000"));
    // 1.414213562373 < sqrt(2) < 1.414213562374
    CHECK(fine.lo < rat_from_string("1414213562374/1000000000000"));
    CHECK(fine.hi > rat_from_string("1414213562373/1000000000000"));
  }

  TEST_CASE("comparison across different minimal polynomials") {
    auto r2 = sqrt2();
    auto intervals = isolate_real_roots(upoly({-27, 27, 5}));
    auto pos = AlgebraicNumber::root_of(upoly({-27, 27, 5}), intervals[1]);
    // 0.8623... < 1.0 < 1.4142...
    CHECK(pos.compare(r2) < 0);
    CHECK(r2.compare(pos) > 0);
    auto one = AlgebraicNumber::from_rational(Rat(1));
    CHECK(pos.compare(one) < 0);
    CHECK(r2.compare(one) > 0);
    CHECK(r2.compare(sqrt2()) == 0);
    CHECK(r2 == sqrt2());
  }

  TEST_CASE("real roots of a mixed product come out sorted and exact") {
    // (t^2 - 2)(2t - 1)(t^2 + 1): real roots -sqrt2 < 1/2 < sqrt2.
    UPoly p = upoly({-2, 0, 1}) * upoly({-1, 2}) * upoly({1, 0, 1});
    auto roots = real_roots_of(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].compare(roots[1]) < 0);
    CHECK(roots[1].as_rational() == Rat(1, 2));
    CHECK(roots[2] == sqrt2());
  }

  TEST_CASE("field arithmetic in a quadratic extension") {
    auto field = NumberField::adjoin(sqrt2());
    NFElement r = NFElement::generator(field);  // sqrt(2)
    NFElement one = NFElement::from_rational(field, Rat(1));
    // (1 + sqrt2)(1 - sqrt2) = -1
    CHECK((one + r) * (one - r) == NFElement::from_rational(field, Rat(-1)));
    // sqrt2 * sqrt2 = 2
    CHECK(r * r == NFElement::from_rational(field, Rat(2)));
    // (1 + sqrt2)^-1 = sqrt2 - 1
    CHECK((one + r).inverse() == r - one);
    CHECK(((one + r) / (one + r)) == one);
    CHECK_THROWS_AS(one / (r * r - NFElement::from_rational(field, Rat(2))),
                    DivisionByZero);
  }

  TEST_CASE("field mismatch is detected") {
    auto f2 = NumberField::adjoin(sqrt2());
    auto intervals = isolate_real_roots(upoly({-3, 0, 1}));
    auto f3 = NumberField::adjoin(
        AlgebraicNumber::root_of(upoly({-3, 0, 1}), intervals[1]));
    CHECK_THROWS_AS(NFElement::generator(f2) + NFElement::generator(f3),
                    FieldMismatch);
  }

  TEST_CASE("signs are decided exactly") {
    auto field = NumberField::adjoin(sqrt2());
    NFElement r = NFElement::generator(field);
    // sqrt2 - 1414213/1000000 > 0, sqrt2 - 1414214/1000000 < 0
    CHECK((r - NFElement::from_rational(field, Rat(1414213, 1000000))).sign() == 1);
    CHECK((r - NFElement::from_rational(field, Rat(1414214, 1000000))).sign() == -1);
    CHECK((r - r).sign() == 0);
    CHECK(sign_of(r) == 1);
  }

  TEST_CASE("rationality inside an extension is structural") {
    auto field = NumberField::adjoin(sqrt2());
    NFElement r = NFElement::generator(field);
    CHECK_FALSE(is_rational(r));
    CHECK(is_rational(r * r));
    CHECK((r * r).as_rational() == Rat(2));
  }

  TEST_CASE("open unit interval membership") {
    auto field = NumberField::adjoin(sqrt2());
    NFElement r = NFElement::generator(field);
    NFElement one = NFElement::from_rational(field, Rat(1));
    CHECK(in_open_unit_interval(r - one));      // 0.414...
    CHECK_FALSE(in_open_unit_interval(r));      // 1.414...
    CHECK_FALSE(in_open_unit_interval(one - r));  // negative
    CHECK_FALSE(in_open_unit_interval(one));    // boundary is excluded
    CHECK_FALSE(in_open_unit_interval(one - one));
    CHECK(in_open_unit_interval(NFElement::from_rational(field, Rat(3, 5))));
  }

  TEST_CASE("decimal rendering is correctly rounded") {
    auto field = NumberField::adjoin(sqrt2());
    NFElement r = NFElement::generator(field);
    CHECK(approx_decimal(r, 6) == "1.414214");
    CHECK(approx_decimal(r, 4) == "1.4142");
    CHECK(approx_decimal(-r, 4) == "-1.4142");
    CHECK(approx_decimal(NFElement::from_rational(field, Rat(1, 3)), 5) ==
          "0.33333");
  }

  TEST_CASE("decimal rendering of the sample quadratic root") {
    // Positive root of 5t^2 + 27t - 27 is 0.8623026...
    UPoly p = upoly({-27, 27, 5});
    auto intervals = isolate_real_roots(p);
    auto field =
        NumberField::adjoin(AlgebraicNumber::root_of(p, intervals[1]));
    CHECK(approx_decimal(NFElement::generator(field), 4) == "0.8623");
  }

  TEST_CASE("minimal polynomial of a composite element") {
    auto field = NumberField::adjoin(sqrt2());
    NFElement r = NFElement::generator(field);
    NFElement one = NFElement::from_rational(field, Rat(1));
    // 1 + sqrt2 has minimal polynomial t^2 - 2t - 1.
    AlgebraicNumber v = (one + r).algebraic_value();
    CHECK(v.minimal_polynomial() == upoly({-1, -2, 1}));
    CHECK(v.degree() == 2);
    // A rational combination collapses to degree 1.
    AlgebraicNumber w = (r * r).algebraic_value();
    CHECK(w.degree() == 1);
    CHECK(w.as_rational() == Rat(2));
  }

  TEST_CASE("radical form of a quadratic irrational") {
    // Positive root of 15t^2 + 50t - 31 is (-25 + sqrt(1090)) / 15.
    UPoly p = upoly({-31, 50, 15});
    auto intervals = isolate_real_roots(p);
    REQUIRE(intervals.size() == 2);
    auto field = NumberField::adjoin(AlgebraicNumber::root_of(p, intervals[1]));
    NFElement theta = NFElement::generator(field);
    auto radical = to_radical(theta);
    REQUIRE(radical.has_value());
    CHECK(radical->to_string() == "-5/3 + 1/15*sqrt(1090)");
    // The tree's interval evaluation must land inside the element's own
    // refined isolating interval.
    const QInterval element_box =
        theta.algebraic_value().refined(rat_from_string("1/1000000000000"));
    QInterval tree_box = radical->enclose(rat_from_string("1/10000000000000"));
    for (Rat w = rat_from_string("1/10000000000000");
         !element_box.contains_interval(tree_box); w /= 1024) {
      tree_box = radical->enclose(w);
    }
    CHECK(element_box.contains_interval(tree_box));
  }

  TEST_CASE("radical form handles the negative branch and square parts") {
    // Negative root of t^2 - 8: -2*sqrt(2).
    UPoly p = upoly({-8, 0, 1});
    auto intervals = isolate_real_roots(p);
    auto field = NumberField::adjoin(AlgebraicNumber::root_of(p, intervals[0]));
    auto radical = to_radical(NFElement::generator(field));
    REQUIRE(radical.has_value());
    CHECK(radical->to_string() == "0 - 2*sqrt(2)");
    // Rational elements become plain constants.
    auto field2 = NumberField::adjoin(sqrt2());
    auto c = to_radical(NFElement::from_rational(field2, Rat(-31, 21)));
    REQUIRE(c.has_value());
    CHECK(c->to_string() == "-31/21");
  }

  TEST_CASE("radical form is refused beyond quadratics") {
    // Real root of t^3 - 2.
    UPoly p = upoly({-2, 0, 0, 1});
    auto intervals = isolate_real_roots(p);
    REQUIRE(intervals.size() == 1);
    auto field = NumberField::adjoin(AlgebraicNumber::root_of(p, intervals[0]));
    CHECK_FALSE(to_radical(NFElement::generator(field)).has_value());
  }

  TEST_CASE("radical interval evaluation is exact-driven") {
    RadicalExpr five = RadicalExpr::constant(Rat(5));
    RadicalExpr tree = RadicalExpr::div(
        RadicalExpr::add(RadicalExpr::constant(Rat(1)),
                         RadicalExpr::root(five, 2)),
        RadicalExpr::constant(Rat(2)));
    // Golden ratio: 1.6180339887...
    QInterval box = tree.enclose(rat_from_string("1/10000000000"));
    CHECK(box.lo < rat_from_string("16180339888/10000000000"));
    CHECK(box.hi > rat_from_string("16180339887/10000000000"));
    CHECK(box.width() <= rat_from_string("1/10000000000"));
    CHECK(tree.to_string() == "(1 + sqrt(5))/2");
  }
}
