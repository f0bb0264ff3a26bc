#include <doctest.h>

#include "nasheq/errors.hpp"
#include "nasheq/interval.hpp"
#include "nasheq/rational.hpp"

using namespace nasheq;

TEST_SUITE("rational") {
  TEST_CASE("parsing accepts integers and fractions") {
    CHECK(rat_from_string("5") == Rat(5));
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK(rat_from_string("3/2") == Rat(3, 2));
    CHECK(rat_from_string("-27/2") == Rat(-27, 2));
    CHECK(rat_from_string("6/4") == Rat(3, 2));  // canonicalized
  }

  TEST_CASE("parsing rejects malformed literals") {
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
    CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rat_from_string("a/b"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1e3"), ParseError);
  }

  TEST_CASE("rendering round-trips") {
    CHECK(rat_to_string(Rat(3, 2)) == "3/2");
    CHECK(rat_to_string(Rat(-4)) == "-4");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(rat_from_string(rat_to_string(Rat(-31, 21))) == Rat(-31, 21));
  }

  TEST_CASE("perfect squares are recognized") {
    CHECK(exact_sqrt(Int(81)) == Int(9));
    CHECK(exact_sqrt(Int(1269)) == std::nullopt);
    CHECK(exact_sqrt(Int(0)) == Int(0));
    CHECK(is_rational_square(Rat(9, 4)));
    CHECK_FALSE(is_rational_square(Rat(2)));
    CHECK_FALSE(is_rational_square(Rat(-4)));
    CHECK_FALSE(is_rational_square(Rat(141)));
  }

  TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(decimal_string(Rat(1, 3), 6) == "0.333333");
    CHECK(decimal_string(Rat(2, 3), 6) == "0.666667");
    CHECK(decimal_string(Rat(-1, 2), 1) == "-0.5");
    CHECK(decimal_string(Rat(1, 8), 2) == "0.13");
    CHECK(decimal_string(Rat(-1, 8), 2) == "-0.13");
    CHECK(decimal_string(Rat(3, 5), 6) == "0.600000");
    CHECK(decimal_string(Rat(12345, 1), 2) == "12345.00");
  }

  TEST_CASE("interval arithmetic brackets exact operations") {
    QInterval a(Rat(1), Rat(2));
    QInterval b(Rat(-1), Rat(3));
    QInterval sum = a + b;
    CHECK(sum.lo == Rat(0));
    CHECK(sum.hi == Rat(5));
    QInterval prod = a * b;
    CHECK(prod.lo == Rat(-2));
    CHECK(prod.hi == Rat(6));
    QInterval diff = a - a;
    CHECK(diff.contains_zero());
    CHECK(QInterval(Rat(2), Rat(3)).certain_sign() == 1);
    CHECK(QInterval(Rat(-3), Rat(-2)).certain_sign() == -1);
    CHECK(QInterval(Rat(-1), Rat(1)).certain_sign() == 0);
  }

  TEST_CASE("interval division requires a nonzero divisor") {
    QInterval a(Rat(1), Rat(2));
    CHECK_THROWS_AS(interval_div(a, QInterval(Rat(-1), Rat(1))),
                    DivisionByZero);
    QInterval q = interval_div(a, QInterval(Rat(2), Rat(4)));
    CHECK(q.lo == Rat(1, 4));
    CHECK(q.hi == Rat(1));
  }

  TEST_CASE("interval square root encloses sqrt(2)") {
    QInterval s = interval_sqrt(QInterval(Rat(2), Rat(2)), Rat(1, 1000000));
    // 1.414213 < sqrt(2) < 1.414214
    CHECK(s.lo < Rat(1414214, 1000000));
    CHECK(s.hi > Rat(1414213, 1000000));
    CHECK(s.width() <= Rat(2, 1000000));
    // Perfect squares come back exact.
    QInterval t = interval_sqrt(QInterval(Rat(9, 4), Rat(9, 4)), Rat(1, 1000));
    CHECK(t.lo == Rat(3, 2));
    CHECK(t.hi == Rat(3, 2));
  }
}
