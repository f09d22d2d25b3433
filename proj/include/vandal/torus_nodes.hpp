#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vandal {

/// Upper limit on the number of nodes a generator may emit.
inline constexpr std::size_t kDefaultCardinalityCap = std::size_t{1} << 14;

/// Reduces x to its representative in [0, 1).
double reduce_to_torus(double x);

/// Wrap-around (max-norm) distance on the torus, a value in [0, 1/2].
double wrap_distance(std::span<const double> t, std::span<const double> t_prime);

/**
 * An immutable set of M pairwise distinct points on the d-dimensional torus.
 *
 * Coordinates are stored row-major (node j occupies [j*d, (j+1)*d)) and are
 * reduced to [0, 1) on construction. The minimal separation is computed once
 * at construction time; it is absent for a single node.
 */
class NodeSet {
 public:
  /// Builds from a flat coordinate list; throws InvalidInput on duplicates,
  /// non-finite coordinates or a length that is not a multiple of dim.
  NodeSet(std::size_t dim, std::vector<double> coords);

  static NodeSet from_points(const std::vector<std::vector<double>>& points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::span<const double> node(std::size_t j) const {
    return {coords_.data() + j * dim_, dim_};
  }
  const std::vector<double>& coords() const { return coords_; }
  std::vector<std::vector<double>> points() const;

  std::optional<double> cached_separation() const { return separation_; }

 private:
  struct Trusted {};
  NodeSet(Trusted, std::size_t dim, std::vector<double> coords,
          std::optional<double> separation);

  friend NodeSet gen_equispaced(std::size_t, std::size_t, std::size_t);
  friend NodeSet gen_random_separated(std::size_t, std::size_t, double, std::uint64_t,
                                      std::optional<std::size_t>);
  friend NodeSet gen_quasi_grid(std::size_t, std::size_t, std::uint64_t,
                                std::optional<std::size_t>);

  std::size_t dim_;
  std::vector<double> coords_;
  std::optional<double> separation_;
};

/// Minimal wrap-around distance between distinct nodes. Throws InvalidInput
/// when the set has fewer than two nodes.
double separation(const NodeSet& nodes);

/// The full grid (1/M){0,...,M-1}^d; its separation is exactly 1/M.
NodeSet gen_equispaced(std::size_t m, std::size_t d,
                       std::size_t cardinality_cap = kDefaultCardinalityCap);

/**
 * A node set whose Vandermonde matrix of degree n is perfectly conditioned.
 *
 * One coordinate axis (chosen by layout_seed when d >= 2) carries a shifted
 * lattice offset + k/n with distinct k, so every pair of nodes differs by a
 * nonzero multiple of 1/n along that axis; remaining coordinates are uniform.
 * `count` defaults to n and must not exceed n.
 */
NodeSet gen_quasi_grid(std::size_t n, std::size_t d, std::uint64_t layout_seed,
                       std::optional<std::size_t> count = std::nullopt);

/**
 * Seeded dart throwing of m nodes with separation >= q_target.
 *
 * Requires q_target in (0, 1/2] and m * q_target^d <= 1/2. Throws
 * FeasibilityError after max_attempts rejected candidates (default 10^4 * m).
 */
NodeSet gen_random_separated(std::size_t m, std::size_t d, double q_target, std::uint64_t seed,
                             std::optional<std::size_t> max_attempts = std::nullopt);

/// True when every pair of distinct nodes has a coordinate s with
/// n * (t - t')_s within tol of a nonzero integer.
bool satisfies_equality_condition(const NodeSet& nodes, std::size_t n, double tol = 1e-9);

}  // namespace vandal
