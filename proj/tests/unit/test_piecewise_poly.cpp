#include <doctest.h>

#include <cmath>
#include <vector>

#include "vandal/errors.hpp"
#include "vandal/piecewise_poly.hpp"

using namespace vandal;

namespace {

// |x| on [-1, 1] as two linear pieces, and x^3 on [0, 2] as one piece.
PiecewisePoly abs_poly() { return PiecewisePoly({-1.0, 0.0, 1.0}, {{0.0, -1.0}, {0.0, 1.0}}); }
PiecewisePoly cubic() { return PiecewisePoly({0.0, 2.0}, {{0.0, 0.0, 0.0, 1.0}}); }

}  // namespace

TEST_CASE("evaluation inside and outside the support") {
  const auto p = abs_poly();
  CHECK(p(-0.5) == 0.5);
  CHECK(p(0.25) == 0.25);
  CHECK(p(1.0) == 1.0);
  CHECK(p(-1.0) == 1.0);
  CHECK(p(1.5) == 0.0);
  CHECK(p(-1.0000001) == 0.0);
  CHECK(p.lower() == -1.0);
  CHECK(p.upper() == 1.0);
  CHECK(p.pieces() == 2);
  CHECK(p.max_interior_jump() == 0.0);
  CHECK(p.evaluate_piece(1, -2.0) == -2.0);
}

TEST_CASE("derivatives are exact coefficient operations") {
  const auto c = cubic();
  const auto d1 = c.derivative();
  const auto d3 = c.derivative(3);
  const auto d4 = c.derivative(4);
  for (double x : {0.0, 0.3, 1.1, 2.0}) {
    CHECK(d1(x) == doctest::Approx(3 * x * x).epsilon(1e-15));
    CHECK(d3(x) == 6.0);
    CHECK(d4(x) == 0.0);
  }
  CHECK(d1(2.5) == 0.0);
  CHECK(c.derivative(0)(1.5) == c(1.5));
  CHECK(abs_poly().derivative().max_interior_jump() == 2.0);
}

TEST_CASE("malformed piecewise polynomials are rejected") {
  CHECK_THROWS_AS(PiecewisePoly({0.0}, {}), InvalidInput);
  CHECK_THROWS_AS(PiecewisePoly({0.0, 1.0}, {{1.0}, {2.0}}), InvalidInput);
  CHECK_THROWS_AS(PiecewisePoly({1.0, 0.0}, {{1.0}}), InvalidInput);
  CHECK_THROWS_AS(PiecewisePoly({0.0, 0.0, 1.0}, {{1.0}, {1.0}}), InvalidInput);
  CHECK_THROWS_AS(cubic().derivative(-1), InvalidInput);
}
