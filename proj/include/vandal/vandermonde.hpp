#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

#include "vandal/torus_nodes.hpp"

namespace vandal {

/// Largest M * N^d for which the explicit matrix may be materialized.
inline constexpr std::uint64_t kDefaultExplicitCap = 10'000'000;

/// Half-width of the band around integers where the Dirichlet kernel is summed directly.
inline constexpr double kDirichletGuard = 1e-9;

/// The Vandermonde matrix A_N(Omega) with rows exp(2 pi i nu . t_j), nu in {0..N-1}^d.
class VandermondeSpec {
 public:
  /// Throws InvalidInput for degree < 1 and ResourceError when N^d overflows.
  VandermondeSpec(NodeSet nodes, std::uint64_t degree);

  const NodeSet& nodes() const { return nodes_; }
  std::uint64_t degree() const { return degree_; }
  std::size_t rows() const { return nodes_.size(); }
  std::size_t dim() const { return nodes_.dim(); }
  /// N^d.
  std::uint64_t columns() const { return columns_; }

 private:
  NodeSet nodes_;
  std::uint64_t degree_;
  std::uint64_t columns_;
};

/// Explicit M x N^d matrix; multi-indices in lexicographic order, last coordinate fastest.
Eigen::MatrixXcd build_matrix(const VandermondeSpec& spec,
                              std::uint64_t explicit_cap = kDefaultExplicitCap);

/// Dirichlet kernel sum_{nu=0}^{N-1} exp(2 pi i nu tau).
std::complex<double> dirichlet(std::uint64_t n, double tau);

/// A A^* assembled from products of univariate Dirichlet kernels; exactly Hermitian.
Eigen::MatrixXcd gram_matrix(const VandermondeSpec& spec);

enum class SpectralPath { gram, explicit_matrix };

std::string_view to_string(SpectralPath path);

struct SpectrumOptions {
  SpectralPath path = SpectralPath::gram;
  /// Also run the other path and store the max relative discrepancy in `residual`.
  bool cross_check = false;
  std::uint64_t explicit_cap = kDefaultExplicitCap;
};

struct SpectralResult {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  /// sigma_max / sigma_min, +infinity when sigma_min == 0.
  double cond = 1.0;
  SpectralPath path = SpectralPath::gram;
  /// Eigen-residual ||G V - V L|| / ||G|| on the Gram path, the mismatch between
  /// sum sigma_i^2 and ||A||_F^2 on the explicit path, or the max relative
  /// dual-path discrepancy when cross-checking.
  double residual = 0.0;
  /// The dual-path comparison ran (requested and under the explicit cap).
  bool cross_checked = false;
  /// A negative rounding-level lambda_min was clamped to zero.
  bool clamped = false;

  bool cond_infinite() const;
};

/// Extremal singular values of A. Throws ComputationError when the eigensolver fails.
SpectralResult spectrum(const VandermondeSpec& spec, const SpectrumOptions& options = {});

}  // namespace vandal
