#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "vandal/errors.hpp"
#include "vandal/parallel.hpp"
#include "vandal/torus_nodes.hpp"

using namespace vandal;

namespace {

// Definition of the wrap-around distance: minimum over shifts r in {-1,0,1}^d of
// the max-norm of t - t' + r (coordinates in [0,1) make other shifts irrelevant).
double brute_force_distance(const std::vector<double>& t, const std::vector<double>& u) {
  const std::size_t d = t.size();
  std::size_t shifts = 1;
  for (std::size_t s = 0; s < d; ++s) shifts *= 3;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < shifts; ++k) {
    std::size_t code = k;
    double norm = 0.0;
    for (std::size_t s = 0; s < d; ++s) {
      const double r = static_cast<double>(code % 3) - 1.0;
      code /= 3;
      norm = std::max(norm, std::abs(t[s] - u[s] + r));
    }
    best = std::min(best, norm);
  }
  return best;
}

double brute_force_separation(const NodeSet& ns) {
  const auto pts = ns.points();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t l = 0; l < pts.size(); ++l) {
      if (j != l) best = std::min(best, brute_force_distance(pts[j], pts[l]));
    }
  }
  return best;
}

std::vector<double> random_point(Rng& rng, std::size_t d) {
  std::vector<double> t(d);
  for (auto& x : t) x = rng.uniform();
  return t;
}

}  // namespace

TEST_CASE("wrap_distance examples") {
  CHECK(wrap_distance(std::vector<double>{0.0}, std::vector<double>{0.0}) == 0.0);
  CHECK(wrap_distance(std::vector<double>{0.1}, std::vector<double>{0.9}) ==
        doctest::Approx(0.2).epsilon(1e-15));
  CHECK(wrap_distance(std::vector<double>{0.1, 0.4}, std::vector<double>{0.9, 0.5}) ==
        doctest::Approx(0.2).epsilon(1e-15));
  CHECK_THROWS_AS(wrap_distance(std::vector<double>{0.1}, std::vector<double>{0.1, 0.2}),
                  InvalidInput);
}

TEST_CASE("wrap_distance agrees with the shift enumeration") {
  Rng rng(7);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int k = 0; k < 500; ++k) {
      const auto t = random_point(rng, d);
      const auto u = random_point(rng, d);
      CHECK(wrap_distance(t, u) == doctest::Approx(brute_force_distance(t, u)).epsilon(1e-15));
    }
  }
}

TEST_CASE("wrap_distance is a metric bounded by one half") {
  Rng rng(11);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (int k = 0; k < 1000; ++k) {
      const auto a = random_point(rng, d);
      const auto b = random_point(rng, d);
      const auto c = random_point(rng, d);
      const double ab = wrap_distance(a, b);
      CHECK(ab == wrap_distance(b, a));
      CHECK(wrap_distance(a, a) == 0.0);
      CHECK(ab <= 0.5);
      CHECK(ab >= 0.0);
      CHECK(wrap_distance(a, c) <= ab + wrap_distance(b, c) + 1e-15);
      if (a != b) CHECK(ab > 0.0);
    }
  }
}

TEST_CASE("coordinates are reduced to [0, 1)") {
  const NodeSet ns(2, {1.25, -0.25, -1e-20, 3.0});
  CHECK(ns.node(0)[0] == doctest::Approx(0.25));
  CHECK(ns.node(0)[1] == doctest::Approx(0.75));
  for (double x : ns.coords()) {
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(reduce_to_torus(-1e-20) < 1.0);
}

TEST_CASE("NodeSet rejects malformed input") {
  CHECK_THROWS_AS(NodeSet(2, {0.1, 0.2, 0.3}), InvalidInput);
  CHECK_THROWS_AS(NodeSet(0, {}), InvalidInput);
  CHECK_THROWS_AS(NodeSet(1, {}), InvalidInput);
  CHECK_THROWS_AS(NodeSet(1, {0.25, 1.25}), InvalidInput);
  CHECK_THROWS_AS(NodeSet(2, {0.1, 0.2, 0.1, 0.2}), InvalidInput);
  CHECK_THROWS_AS(NodeSet(1, {std::numeric_limits<double>::quiet_NaN()}), InvalidInput);
  CHECK_THROWS_AS(NodeSet::from_points({{0.1, 0.2}, {0.3}}), InvalidInput);
}

TEST_CASE("separation matches the all-pairs definition") {
  const auto ns = NodeSet::from_points({{0.0, 0.0}, {0.5, 0.5}, {0.1, 0.45}});
  CHECK(separation(ns) == doctest::Approx(brute_force_separation(ns)).epsilon(1e-15));
  CHECK(separation(ns) == doctest::Approx(0.4).epsilon(1e-15));
  REQUIRE(ns.cached_separation().has_value());
  CHECK(std::abs(*ns.cached_separation() - separation(ns)) <= 1e-14);

  const NodeSet single(3, {0.1, 0.2, 0.3});
  CHECK_FALSE(single.cached_separation().has_value());
  CHECK_THROWS_AS(separation(single), InvalidInput);
}

TEST_CASE("equispaced grids") {
  const auto two = gen_equispaced(2, 1);
  CHECK(two.size() == 2);
  CHECK(two.node(1)[0] == 0.5);
  CHECK(separation(two) == 0.5);

  const auto nine = gen_equispaced(3, 2);
  CHECK(nine.size() == 9);
  CHECK(separation(nine) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  // lexicographic, last coordinate fastest
  CHECK(nine.node(1)[0] == 0.0);
  CHECK(nine.node(1)[1] == doctest::Approx(1.0 / 3.0));

  for (std::size_t m : {4u, 8u, 16u}) {
    const auto grid = gen_equispaced(m, 2);
    CHECK(separation(grid) == 1.0 / static_cast<double>(m));
    CHECK(*grid.cached_separation() == 1.0 / static_cast<double>(m));
  }
  for (std::size_t m = 1; m <= 9; ++m) {
    const auto grid = gen_equispaced(m, 1);
    if (m >= 2) {
      CHECK(std::abs(brute_force_separation(grid) - 1.0 / static_cast<double>(m)) <= 1e-15);
    }
  }
  CHECK_THROWS_AS(gen_equispaced(200, 3), ResourceError);
  CHECK_THROWS_AS(gen_equispaced(0, 1), InvalidInput);
}

TEST_CASE("random separated sets pass the separation oracle") {
  const auto ns = gen_random_separated(10, 2, 0.05, 42);
  CHECK(ns.size() == 10);
  CHECK(brute_force_separation(ns) >= 0.05);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t d = 1 + seed % 3;
    const double q = d == 1 ? 0.04 : 0.08;
    const auto set = gen_random_separated(8, d, q, seed);
    CHECK(brute_force_separation(set) >= q);
    CHECK(std::abs(*set.cached_separation() - brute_force_separation(set)) <= 1e-14);
  }
}

TEST_CASE("random separated sets are deterministic per seed") {
  const auto a = gen_random_separated(12, 3, 0.1, 99);
  const auto b = gen_random_separated(12, 3, 0.1, 99);
  const auto c = gen_random_separated(12, 3, 0.1, 100);
  CHECK(a.coords() == b.coords());
  CHECK(a.coords() != c.coords());
}

TEST_CASE("random separated edge cases") {
  const auto one = gen_random_separated(1, 2, 0.3, 5);
  CHECK(one.size() == 1);
  CHECK_FALSE(one.cached_separation().has_value());
  CHECK_THROWS_AS(gen_random_separated(100, 1, 0.2, 1), FeasibilityError);
  CHECK_THROWS_AS(gen_random_separated(3, 1, 0.6, 1), InvalidInput);
  CHECK_THROWS_AS(gen_random_separated(3, 1, 0.0, 1), InvalidInput);
  // density guard passes but the attempt budget runs out after the first node
  CHECK_THROWS_AS(gen_random_separated(2, 1, 0.1, 1, 1), FeasibilityError);
}

TEST_CASE("quasi-grids satisfy the equality condition") {
  const auto example = NodeSet::from_points({{0.0, 0.13}, {0.25, 0.57}, {0.5, 0.31}});
  CHECK(satisfies_equality_condition(example, 4));
  CHECK_FALSE(satisfies_equality_condition(gen_random_separated(5, 2, 0.05, 3), 4));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const std::size_t d = 2 + seed % 3;
    const auto ns = gen_quasi_grid(n, d, seed);
    CHECK(ns.size() == n);
    CHECK(satisfies_equality_condition(ns, n));
  }
  const auto partial = gen_quasi_grid(8, 2, 3, 5);
  CHECK(partial.size() == 5);
  CHECK(satisfies_equality_condition(partial, 8));
  CHECK_THROWS_AS(gen_quasi_grid(4, 1, 0), InvalidInput);
  CHECK_THROWS_AS(gen_quasi_grid(4, 2, 0, 5), InvalidInput);
}

TEST_CASE("equality condition ignores gaps that are multiples of the full period") {
  // N (t - t')_s = N is the same torus point along that axis
  const auto ns = NodeSet::from_points({{0.0, 0.0}, {0.0, 0.3}});
  CHECK_FALSE(satisfies_equality_condition(ns, 4));
}
