#include "vandal/vandermonde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "vandal/errors.hpp"
#include "vandal/parallel.hpp"

namespace vandal {

namespace {

// sin(pi x) and cos(pi x) with the argument reduced before multiplying by pi.
double sinpi(double x) {
  const double r = x - 2.0 * std::round(0.5 * x);
  return std::sin(std::numbers::pi * r);
}

double cospi(double x) {
  const double r = x - 2.0 * std::round(0.5 * x);
  return std::cos(std::numbers::pi * r);
}

std::complex<double> unit_phase(double turns) {
  // exp(2 pi i turns)
  return {cospi(2.0 * turns), sinpi(2.0 * turns)};
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

struct Extremes {
  double sigma_min;
  double sigma_max;
  double residual;
  bool clamped;
};

Extremes gram_extremes(const VandermondeSpec& spec) {
  const Eigen::MatrixXcd gram = gram_matrix(spec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
  if (solver.info() != Eigen::Success) {
    throw ComputationError("spectrum: Hermitian eigensolver did not converge for M=" +
                           std::to_string(spec.rows()) +
                           " (Eigen status " + std::to_string(static_cast<int>(solver.info())) + ")");
  }
  const Eigen::VectorXd& lambda = solver.eigenvalues();  // ascending
  const Eigen::MatrixXcd& vecs = solver.eigenvectors();
  const double lambda_max = lambda(lambda.size() - 1);
  double lambda_min = lambda(0);
  bool clamped = false;
  if (lambda_min < 0.0) {
    if (lambda_min < -1e-10 * lambda_max) {
      throw ComputationError("spectrum: Gram matrix has eigenvalue " + std::to_string(lambda_min) +
                             " below the rounding band");
    }
    lambda_min = 0.0;
    clamped = true;
  }
  const double norm = gram.norm();
  const double residual =
      norm == 0.0 ? 0.0 : (gram * vecs - vecs * lambda.asDiagonal()).norm() / norm;
  return {std::sqrt(lambda_min), std::sqrt(lambda_max), residual, clamped};
}

Extremes explicit_extremes(const VandermondeSpec& spec, std::uint64_t cap) {
  const Eigen::MatrixXcd a = build_matrix(spec, cap);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  if (svd.info() != Eigen::Success) {
    throw ComputationError("spectrum: SVD of the explicit matrix did not converge");
  }
  const Eigen::VectorXd& sv = svd.singularValues();  // descending
  const double sigma_max = sv(0);
  // with more rows than columns A A^* is singular
  const double sigma_min =
      spec.rows() > spec.columns() ? 0.0 : sv(static_cast<Eigen::Index>(spec.rows()) - 1);
  const double frob = static_cast<double>(spec.rows()) * static_cast<double>(spec.columns());
  const double residual = std::abs(sv.squaredNorm() - frob) / frob;
  return {sigma_min, sigma_max, residual, false};
}

}  // namespace

VandermondeSpec::VandermondeSpec(NodeSet nodes, std::uint64_t degree)
    : nodes_(std::move(nodes)), degree_(degree), columns_(1) {
  if (degree_ < 1) throw InvalidInput("VandermondeSpec: degree must be at least 1");
  for (std::size_t s = 0; s < nodes_.dim(); ++s) {
    if (columns_ > std::numeric_limits<std::uint64_t>::max() / degree_) {
      throw ResourceError("VandermondeSpec: column count N^d overflows 64 bits");
    }
    columns_ *= degree_;
  }
}

Eigen::MatrixXcd build_matrix(const VandermondeSpec& spec, std::uint64_t explicit_cap) {
  const std::uint64_t m = spec.rows();
  const std::uint64_t cols = spec.columns();
  if (cols > explicit_cap / m) {
    throw ResourceError("build_matrix: M*N^d = " + std::to_string(m) + "*" +
                        std::to_string(cols) + " exceeds the explicit cap of " +
                        std::to_string(explicit_cap) + "; use the Gram path");
  }
  const std::size_t d = spec.dim();
  const std::uint64_t n = spec.degree();
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(cols));

  std::vector<std::complex<double>> powers(d * n);
  std::vector<std::uint64_t> nu(d);
  for (std::size_t j = 0; j < m; ++j) {
    const auto t = spec.nodes().node(j);
    for (std::size_t s = 0; s < d; ++s) {
      for (std::uint64_t k = 0; k < n; ++k) {
        const double turns = static_cast<double>(k) * t[s];
        powers[s * n + k] = unit_phase(turns - std::floor(turns));
      }
    }
    std::fill(nu.begin(), nu.end(), 0);
    for (std::uint64_t c = 0; c < cols; ++c) {
      std::complex<double> entry{1.0, 0.0};
      for (std::size_t s = 0; s < d; ++s) entry *= powers[s * n + nu[s]];
      a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c)) = entry;
      for (std::size_t s = d; s-- > 0;) {
        if (++nu[s] < n) break;
        nu[s] = 0;
      }
    }
  }
  return a;
}

std::complex<double> dirichlet(std::uint64_t n, double tau) {
  // D_N is 1-periodic in tau
  const double t = tau - std::round(tau);
  const auto nd = static_cast<double>(n);
  if (t == 0.0) return {nd, 0.0};
  if (std::abs(t) < kDirichletGuard) {
    std::complex<double> sum{0.0, 0.0};
    for (std::uint64_t k = 0; k < n; ++k) sum += unit_phase(static_cast<double>(k) * t);
    return sum;
  }
  const double ratio = sinpi(nd * t) / sinpi(t);
  const double half_phase = (nd - 1.0) * t;
  return {ratio * cospi(half_phase), ratio * sinpi(half_phase)};
}

Eigen::MatrixXcd gram_matrix(const VandermondeSpec& spec) {
  const std::size_t m = spec.rows();
  const std::size_t d = spec.dim();
  const std::uint64_t n = spec.degree();
  const auto diag = static_cast<double>(spec.columns());
  Eigen::MatrixXcd gram(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  parallel_for(m, [&](std::size_t j) {
    const auto tj = spec.nodes().node(j);
    const auto row = static_cast<Eigen::Index>(j);
    gram(row, row) = {diag, 0.0};
    for (std::size_t l = j + 1; l < m; ++l) {
      const auto tl = spec.nodes().node(l);
      std::complex<double> entry{1.0, 0.0};
      for (std::size_t s = 0; s < d; ++s) entry *= dirichlet(n, tj[s] - tl[s]);
      gram(row, static_cast<Eigen::Index>(l)) = entry;
    }
  });
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = j + 1; l < m; ++l) {
      gram(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(j)) =
          std::conj(gram(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)));
    }
  }
  return gram;
}

std::string_view to_string(SpectralPath path) {
  return path == SpectralPath::gram ? "gram" : "explicit";
}

bool SpectralResult::cond_infinite() const { return std::isinf(cond); }

SpectralResult spectrum(const VandermondeSpec& spec, const SpectrumOptions& options) {
  const bool use_gram = options.path == SpectralPath::gram;
  const Extremes primary =
      use_gram ? gram_extremes(spec) : explicit_extremes(spec, options.explicit_cap);

  SpectralResult result;
  result.sigma_min = primary.sigma_min;
  result.sigma_max = primary.sigma_max;
  result.path = options.path;
  result.residual = primary.residual;
  result.clamped = primary.clamped;
  result.cond = result.sigma_min > 0.0 ? result.sigma_max / result.sigma_min
                                       : std::numeric_limits<double>::infinity();

  const bool under_cap = spec.columns() <= options.explicit_cap / spec.rows();
  if (options.cross_check && under_cap) {
    const Extremes other =
        use_gram ? explicit_extremes(spec, options.explicit_cap) : gram_extremes(spec);
    result.residual = std::max(relative_gap(primary.sigma_min, other.sigma_min),
                               relative_gap(primary.sigma_max, other.sigma_max));
    result.cross_checked = true;
  }
  return result;
}

}  // namespace vandal
