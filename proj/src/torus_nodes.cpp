#include "vandal/torus_nodes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "vandal/errors.hpp"
#include "vandal/parallel.hpp"

namespace vandal {

namespace {

double circular_gap(double a, double b) {
  const double delta = std::abs(a - b);
  return std::min(delta, 1.0 - delta);
}

double all_pairs_minimum(std::size_t dim, const std::vector<double>& coords) {
  const std::size_t m = coords.size() / dim;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    std::span<const double> tj{coords.data() + j * dim, dim};
    for (std::size_t l = j + 1; l < m; ++l) {
      best = std::min(best, wrap_distance(tj, {coords.data() + l * dim, dim}));
    }
  }
  return best;
}

}  // namespace

double reduce_to_torus(double x) {
  if (!std::isfinite(x)) throw InvalidInput("coordinate is not finite");
  double r = x - std::floor(x);
  // x slightly below an integer can round up to exactly 1
  if (r >= 1.0) r = 0.0;
  return r;
}

double wrap_distance(std::span<const double> t, std::span<const double> t_prime) {
  if (t.size() != t_prime.size()) {
    throw InvalidInput("wrap_distance: dimension mismatch (" + std::to_string(t.size()) +
                       " vs " + std::to_string(t_prime.size()) + ")");
  }
  double dist = 0.0;
  for (std::size_t s = 0; s < t.size(); ++s) {
    dist = std::max(dist, circular_gap(reduce_to_torus(t[s]), reduce_to_torus(t_prime[s])));
  }
  return dist;
}

NodeSet::NodeSet(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw InvalidInput("NodeSet: dimension must be positive");
  if (coords_.size() % dim_ != 0) {
    throw InvalidInput("NodeSet: coordinate count is not a multiple of the dimension");
  }
  if (coords_.empty()) throw InvalidInput("NodeSet: at least one node is required");
  for (double& c : coords_) c = reduce_to_torus(c);
  if (size() >= 2) {
    const double q = all_pairs_minimum(dim_, coords_);
    if (!(q > 0.0)) throw InvalidInput("NodeSet: nodes are not pairwise distinct");
    separation_ = q;
  }
}

NodeSet::NodeSet(Trusted, std::size_t dim, std::vector<double> coords,
                 std::optional<double> separation)
    : dim_(dim), coords_(std::move(coords)), separation_(separation) {}

NodeSet NodeSet::from_points(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw InvalidInput("NodeSet: at least one node is required");
  const std::size_t dim = points.front().size();
  std::vector<double> flat;
  flat.reserve(points.size() * dim);
  for (const auto& p : points) {
    if (p.size() != dim) throw InvalidInput("NodeSet: nodes have inconsistent dimensions");
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return NodeSet(dim, std::move(flat));
}

std::vector<std::vector<double>> NodeSet::points() const {
  std::vector<std::vector<double>> out;
  out.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) {
    auto n = node(j);
    out.emplace_back(n.begin(), n.end());
  }
  return out;
}

double separation(const NodeSet& nodes) {
  if (!nodes.cached_separation()) {
    throw InvalidInput("separation: undefined for fewer than two nodes");
  }
  return *nodes.cached_separation();
}

NodeSet gen_equispaced(std::size_t m, std::size_t d, std::size_t cardinality_cap) {
  if (m == 0 || d == 0) throw InvalidInput("gen_equispaced: M and d must be positive");
  std::size_t total = 1;
  for (std::size_t s = 0; s < d; ++s) {
    if (total > cardinality_cap / m) {
      throw ResourceError("gen_equispaced: M^d exceeds the cardinality cap of " +
                          std::to_string(cardinality_cap));
    }
    total *= m;
  }
  std::vector<double> coords(total * d);
  std::vector<std::size_t> index(d, 0);
  for (std::size_t j = 0; j < total; ++j) {
    for (std::size_t s = 0; s < d; ++s) {
      coords[j * d + s] = static_cast<double>(index[s]) / static_cast<double>(m);
    }
    // lexicographic, last coordinate fastest
    for (std::size_t s = d; s-- > 0;) {
      if (++index[s] < m) break;
      index[s] = 0;
    }
  }
  std::optional<double> q;
  if (total >= 2) q = 1.0 / static_cast<double>(m);
  return NodeSet(NodeSet::Trusted{}, d, std::move(coords), q);
}

NodeSet gen_quasi_grid(std::size_t n, std::size_t d, std::uint64_t layout_seed,
                       std::optional<std::size_t> count) {
  if (n == 0 || d == 0) throw InvalidInput("gen_quasi_grid: N and d must be positive");
  if (d < 2) throw InvalidInput("gen_quasi_grid: requires d >= 2");
  const std::size_t m = count.value_or(n);
  if (m == 0 || m > n) throw InvalidInput("gen_quasi_grid: count must lie in [1, N]");

  Rng rng(layout_seed);
  const auto axis = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(d) - 1));
  const double offset = rng.uniform() / static_cast<double>(n);

  std::vector<std::size_t> lattice(n);
  std::iota(lattice.begin(), lattice.end(), std::size_t{0});
  // partial Fisher-Yates: first m entries become a random subset
  for (std::size_t i = 0; i < m; ++i) {
    const auto k = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(i), static_cast<std::int64_t>(n) - 1));
    std::swap(lattice[i], lattice[k]);
  }

  std::vector<double> coords(m * d);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t s = 0; s < d; ++s) {
      coords[j * d + s] =
          s == axis ? reduce_to_torus(offset + static_cast<double>(lattice[j]) / static_cast<double>(n))
                    : rng.uniform();
    }
  }
  return NodeSet(d, std::move(coords));
}

NodeSet gen_random_separated(std::size_t m, std::size_t d, double q_target, std::uint64_t seed,
                             std::optional<std::size_t> max_attempts) {
  if (m == 0 || d == 0) throw InvalidInput("gen_random_separated: M and d must be positive");
  if (!(q_target > 0.0 && q_target <= 0.5)) {
    throw InvalidInput("gen_random_separated: q_target must lie in (0, 1/2]");
  }
  if (static_cast<double>(m) * std::pow(q_target, static_cast<double>(d)) > 0.5) {
    throw FeasibilityError("gen_random_separated: density guard M*q^d <= 1/2 violated");
  }
  const std::size_t budget = max_attempts.value_or(10'000 * m);

  Rng rng(seed);
  std::vector<double> coords;
  coords.reserve(m * d);
  std::vector<double> candidate(d);
  std::size_t attempts = 0;
  while (coords.size() < m * d) {
    if (attempts++ >= budget) {
      throw FeasibilityError("gen_random_separated: placed " + std::to_string(coords.size() / d) +
                             " of " + std::to_string(m) + " nodes after " +
                             std::to_string(budget) + " attempts");
    }
    for (double& c : candidate) c = rng.uniform();
    bool ok = true;
    for (std::size_t j = 0; ok && j < coords.size() / d; ++j) {
      ok = wrap_distance(candidate, {coords.data() + j * d, d}) >= q_target;
    }
    if (ok) coords.insert(coords.end(), candidate.begin(), candidate.end());
  }
  std::optional<double> q;
  if (m >= 2) q = all_pairs_minimum(d, coords);
  return NodeSet(NodeSet::Trusted{}, d, std::move(coords), q);
}

bool satisfies_equality_condition(const NodeSet& nodes, std::size_t n, double tol) {
  const std::size_t d = nodes.dim();
  const auto scale = static_cast<double>(n);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    for (std::size_t l = j + 1; l < nodes.size(); ++l) {
      bool found = false;
      for (std::size_t s = 0; s < d && !found; ++s) {
        const double x = scale * (nodes.node(j)[s] - nodes.node(l)[s]);
        const double k = std::round(x);
        // a multiple of N in the scaled difference means the same torus point
        // along this axis, which does not zero the Dirichlet factor
        const double kn = std::round(k / scale);
        found = std::abs(x - k) <= tol && std::abs(k - kn * scale) > 0.5;
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace vandal
