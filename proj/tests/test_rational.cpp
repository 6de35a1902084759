#include <catch2/catch_amalgamated.hpp>

#include "gfrob/rational.hpp"

using gfrob::Rat;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(-6, 4) == Rat(-3, 2));
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(-6, -4) == Rat(3, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(0, -7).den() == 1);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("field operations") {
  Rat a(1, 6), b(1, 10);
  CHECK(a + b == Rat(4, 15));
  CHECK(a - b == Rat(1, 15));
  CHECK(a * b == Rat(1, 60));
  CHECK(a / b == Rat(5, 3));
  CHECK(-a == Rat(-1, 6));
  CHECK_THROWS_AS(a / Rat(0), std::domain_error);

  Rat c;
  c += Rat(2, 3);
  c *= Rat(9, 4);
  CHECK(c == Rat(3, 2));
  CHECK(c.is_zero() == false);
  CHECK(Rat(5, 5) == Rat(1));
}

TEST_CASE("comparisons avoid overflow via wide cross products") {
  Rat big(3037000499LL, 2);
  Rat big2(3037000499LL, 3);
  CHECK(big2 < big);
  CHECK(big > big2);
  CHECK(Rat(-1, 1000000007LL) < Rat(1, 1000000007LL));
}

TEST_CASE("string round trip") {
  CHECK(Rat(22, 7).str() == "22/7");
  CHECK(Rat(-5).str() == "-5");
  CHECK(Rat::parse("22/7") == Rat(22, 7));
  CHECK(Rat::parse("-3/9") == Rat(-1, 3));
  CHECK(Rat::parse("17") == Rat(17));
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("a/b"));
  CHECK_THROWS(Rat::parse(""));
}

TEST_CASE("overflow is an error, not silent wraparound") {
  Rat huge(4611686018427387904LL);  // 2^62
  CHECK_THROWS_AS(huge * Rat(4), gfrob::overflow_error);
  CHECK_THROWS_AS(huge + huge, gfrob::overflow_error);
  // products that cancel internally stay representable
  CHECK(huge * Rat(3, 4611686018427387904LL) == Rat(3));
}
