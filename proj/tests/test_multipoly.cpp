#include <doctest.h>

#include <random>

#include "nasheq/errors.hpp"
#include "nasheq/multipoly.hpp"

using namespace nasheq;

namespace {

// Deterministic small random polynomial for property tests.
MPoly random_poly(const VarOrderPtr& order, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> nterms(1, 4);
  MPoly p = MPoly::zero(order);
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(order->size());
    for (auto& x : e) x = static_cast<std::uint32_t>(expo(rng));
    p = p + MPoly::from_terms(
                order, {Term{Monomial(std::move(e)), Rat(coeff(rng))}});
  }
  return p;
}

}  // namespace

TEST_SUITE("multipoly") {
  TEST_CASE("product of conjugates gives a difference of squares") {
    auto order = make_order({"x", "y"});
    MPoly x = MPoly::variable(order, 0);
    MPoly y = MPoly::variable(order, 1);
    MPoly product = (x + y) * (x - y);
    MPoly expected = x * x - y * y;
    CHECK(product == expected);
  }

  TEST_CASE("additive identity and self-subtraction") {
    auto order = make_order({"x", "y"});
    MPoly x = MPoly::variable(order, 0);
    MPoly y = MPoly::variable(order, 1);
    MPoly p = x * y - x.scaled(Rat(3)) + MPoly::constant(order, Rat(7));
    CHECK(p + MPoly::zero(order) == p);
    CHECK((p - p).is_zero());
    CHECK((p - p) == MPoly::zero(order));
  }

  TEST_CASE("lex ordering ranks monomials by the first differing exponent") {
    auto order = make_order({"x", "y"});
    Monomial x2 = Monomial({2, 0});
    Monomial xy = Monomial({1, 1});
    Monomial x = Monomial({1, 0});
    Monomial y2 = Monomial({0, 2});
    CHECK(x2.compare_lex(xy) > 0);
    CHECK(xy.compare_lex(x) > 0);
    CHECK(x.compare_lex(y2) > 0);
    CHECK(x2.compare_lex(x2) == 0);
  }

  TEST_CASE("leading term of an indifference-style polynomial") {
    // 2yz + 6y + 2z - 4 with y before z: leading term is 2yz.
    auto order = make_order({"y", "z"});
    MPoly y = MPoly::variable(order, 0);
    MPoly z = MPoly::variable(order, 1);
    MPoly p = (y * z).scaled(Rat(2)) + y.scaled(Rat(6)) + z.scaled(Rat(2)) -
              MPoly::constant(order, Rat(4));
    CHECK(p.leading_monomial() == Monomial({1, 1}));
    CHECK(p.leading_coefficient() == Rat(2));
    CHECK(p.total_degree() == 2);
    CHECK(p.to_string() == "2*y*z + 6*y + 2*z - 4");
  }

  TEST_CASE("ring axioms hold on pseudorandom inputs") {
    auto order = make_order({"x", "y", "z"});
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
      MPoly a = random_poly(order, rng);
      MPoly b = random_poly(order, rng);
      MPoly c = random_poly(order, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }

  TEST_CASE("evaluation is exact") {
    // xy - 3x - 3y + 3 vanishes at (3/5, 1/2)? No: check the exact value.
    auto order = make_order({"x", "y"});
    MPoly x = MPoly::variable(order, 0);
    MPoly y = MPoly::variable(order, 1);
    MPoly p = x * y - x.scaled(Rat(3)) - y.scaled(Rat(3)) + MPoly::constant(order, Rat(3));
    std::vector<Rat> at{Rat(3, 5), Rat(1, 2)};
    // (3/5)(1/2) - 9/5 - 3/2 + 3 = 3/10 - 18/10 - 15/10 + 30/10 = 0
    CHECK(p.evaluate_rational(at) == Rat(0));
    std::vector<Rat> at2{Rat(1), Rat(1)};
    CHECK(p.evaluate_rational(at2) == Rat(-2));
  }

  TEST_CASE("evaluation demands a full assignment") {
    auto order = make_order({"x", "y"});
    MPoly p = MPoly::variable(order, 0) + MPoly::variable(order, 1);
    std::vector<Rat> too_short{Rat(1)};
    CHECK_THROWS_AS(p.evaluate_rational(too_short), PartialAssignment);
  }

  TEST_CASE("collapse to univariate keeps exact coefficients") {
    // p = x^2 y + 2x + y + 5, collapse in x at y = 3: 3x^2 + 2x + 8.
    auto order = make_order({"x", "y"});
    MPoly x = MPoly::variable(order, 0);
    MPoly y = MPoly::variable(order, 1);
    MPoly p = x * x * y + x.scaled(Rat(2)) + y + MPoly::constant(order, Rat(5));
    std::vector<std::optional<Rat>> assign{std::nullopt, Rat(3)};
    auto coeffs = p.collapse_to_univariate<Rat>(
        0, assign, [](const Rat& r) { return r; });
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == Rat(8));
    CHECK(coeffs[1] == Rat(2));
    CHECK(coeffs[2] == Rat(3));
    // Missing assignment for a used variable is an error.
    std::vector<std::optional<Rat>> missing{std::nullopt, std::nullopt};
    CHECK_THROWS_AS(p.collapse_to_univariate<Rat>(
                        0, missing, [](const Rat& r) { return r; }),
                    PartialAssignment);
  }

  TEST_CASE("mixing variable orders is rejected") {
    auto o1 = make_order({"x", "y"});
    auto o2 = make_order({"y", "x"});
    MPoly a = MPoly::variable(o1, 0);
    MPoly b = MPoly::variable(o2, 0);
    CHECK_THROWS_AS(a + b, OrderMismatch);
  }

  TEST_CASE("substitution eliminates a variable") {
    // Replace y by 1 - x in xy: x(1 - x) = x - x^2.
    auto order = make_order({"x", "y"});
    MPoly x = MPoly::variable(order, 0);
    MPoly y = MPoly::variable(order, 1);
    MPoly replaced = (x * y).substitute(1, MPoly::constant(order, Rat(1)) - x);
    CHECK(replaced == x - x * x);
    CHECK_FALSE(replaced.uses_variable(1));
  }

  TEST_CASE("primitive part clears denominators and content") {
    auto order = make_order({"x"});
    MPoly x = MPoly::variable(order, 0);
    MPoly p = x.scaled(Rat(-4, 6)) + MPoly::constant(order, Rat(2, 3));
    MPoly prim = p.primitive_part();
    // -2/3 x + 2/3 -> x - 1 (positive leading coefficient, content 1)
    CHECK(prim == x - MPoly::constant(order, Rat(1)));
  }

  TEST_CASE("reorder embeds into a larger variable set") {
    auto small = make_order({"y", "z"});
    auto big = make_order({"x", "y", "z"});
    MPoly p = MPoly::variable(small, 0) * MPoly::variable(small, 1);
    MPoly q = p.reorder(big);
    CHECK(q.degree_in(0) == 0);
    CHECK(q.degree_in(1) == 1);
    CHECK(q.degree_in(2) == 1);
    CHECK(q.to_string() == "y*z");
  }
}
