#include <doctest.h>

#include "nc/rational.hpp"

using namespace nc;

TEST_CASE("gaussian rational arithmetic is exact and canonical") {
  GaussianRational a(Rational(1, 2), Rational(3, 4));
  GaussianRational b(Rational(2, 4), Rational(6, 8));
  CHECK(a == b);  // mpq canonicalizes

  GaussianRational i = GaussianRational::unit_im();
  CHECK(i * i == GaussianRational(-1));
  CHECK((a * a.conj()).im == 0);
  CHECK((a * a.conj()).re == a.norm2());

  GaussianRational q = GaussianRational(Rational(15, 7)) / GaussianRational(3);
  CHECK(q == GaussianRational(Rational(5, 7)));
  CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
}

TEST_CASE("powers and string forms") {
  GaussianRational z(Rational(1), Rational(1));
  CHECK(z.pow(2) == GaussianRational(Rational(0), Rational(2)));
  CHECK(z.pow(0) == GaussianRational(1));
  CHECK(GaussianRational(Rational(-1, 2)).str() == "-1/2");
  CHECK(GaussianRational(Rational(0), Rational(1)).str() == "i");
  CHECK(GaussianRational(Rational(1), Rational(-2)).str() == "1-2*i");
}

TEST_CASE("extended values order with a single infinity") {
  ExtendedInt inf = ExtendedInt::infinity();
  ExtendedInt five(5);
  CHECK(five < inf);
  CHECK(!(inf < inf));
  CHECK(inf == inf);
  CHECK(min(inf, five) == five);
  CHECK(max(inf, five) == inf);
  CHECK(extended_ratio(ExtendedInt(14), 2) == ExtendedRat(Rational(7)));
  CHECK(extended_ratio(inf, 3).is_inf());
  CHECK_THROWS_AS(inf.value(), std::domain_error);
}
