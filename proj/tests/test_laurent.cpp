#include <doctest.h>

#include "trigrid/laurent.hpp"

using namespace trigrid;
using P = LaurentPolynomial;

TEST_CASE("arithmetic") {
  const P a = P::monomial(1, 2) + P::monomial(-1, -2);
  const P b = P::monomial(1, 2) - P::monomial(-1, -2);
  CHECK((a * b).to_string() == "A^4 - A^-4");
  CHECK((a - a).is_zero());
  CHECK(P(0).to_string() == "0");
  CHECK(loop_value() == P::monomial(-1, 2) + P::monomial(-1, -2));
  CHECK(loop_value().pow(0) == P(1));
  CHECK(loop_value().pow(2).coefficient(0) == 2);
  CHECK(P::monomial(-1, 3).pow(-2) == P::monomial(1, -6));
  CHECK(P::monomial(2, 5).mirrored() == P::monomial(2, -5));
  CHECK_THROWS(loop_value().pow(-1));
}
