#include "doctest.h"
#include "field.hpp"

using namespace hopfo;

TEST_CASE("prime field arithmetic") {
  auto F = Field::prime(5);
  Scalar a = F->from_int(3), b = F->from_int(4);
  CHECK((a + b) == F->from_int(2));
  CHECK((a * b) == F->from_int(2));
  CHECK((a - b) == F->from_int(4));
  CHECK(a.inv() == F->from_int(2));
  CHECK((a / a).is_one());
  CHECK_THROWS_AS(F->zero().inv(), MathError);
  CHECK_THROWS_AS(Field::prime(6), MathError);
}

TEST_CASE("rational arithmetic stays reduced") {
  auto F = Field::rationals();
  Scalar h = F->from_mpq(mpq_class(1, 2));
  Scalar t = F->from_mpq(mpq_class(1, 3));
  Scalar s = h + t;
  CHECK(s.str() == "5/6");
  CHECK((h * t).str() == "1/6");
  CHECK((h - h).is_zero());
  CHECK(h.inv().str() == "2");
}

TEST_CASE("cyclotomic field basics") {
  auto F = Field::cyclotomic(4);  // Phi_4 = z^2 + 1
  Scalar z = F->zeta();
  CHECK((z * z) == -F->one());
  Scalar z4 = z * z * z * z;
  CHECK(z4.is_one());
  // Phi_4(zeta) = 0
  CHECK((z * z + F->one()).is_zero());
  Scalar inv = z.inv();
  CHECK((inv * z).is_one());
  CHECK(inv == -z);
}

TEST_CASE("cyclotomic relation holds for several n") {
  for (long n : {1, 2, 3, 5, 6, 8, 12}) {
    auto F = Field::cyclotomic(n);
    Scalar z = F->zeta();
    Scalar p = F->one();
    for (long k = 0; k < n; ++k) p = p * z;
    CHECK(p.is_one());
    // evaluate the stored relation at zeta
    Scalar acc = F->zero(), zp = F->one();
    for (const auto &c : F->relation()) {
      acc = acc + F->from_mpq(c) * zp;
      zp = zp * z;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("scalar formatting and parsing round-trips") {
  auto F = Field::cyclotomic(5);
  Scalar z = F->zeta();
  Scalar s = F->from_mpq(mpq_class(1, 2)) + F->from_mpq(mpq_class(-2, 3)) * z + z * z * z;
  Scalar back = F->parse(s.str());
  CHECK(back == s);
  CHECK(F->parse("1/2 + 1/3 z").str() == "1/2 + 1/3*z");
  auto Q = Field::rationals();
  CHECK(Q->parse("-3/4") == Q->from_mpq(mpq_class(-3, 4)));
  auto P = Field::prime(7);
  CHECK(P->parse("13") == P->from_int(6));
  CHECK_THROWS_AS(Q->parse("z"), MathError);
  CHECK_THROWS_AS(Q->parse(""), MathError);
}

TEST_CASE("inverse in a degree > 1 cyclotomic field") {
  auto F = Field::cyclotomic(7);
  Scalar z = F->zeta();
  Scalar x = F->one() + z + z * z * z;
  Scalar y = x.inv();
  CHECK((x * y).is_one());
}
