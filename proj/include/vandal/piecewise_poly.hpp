#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vandal {

/**
 * A piecewise polynomial on [breakpoints.front(), breakpoints.back()], zero outside.
 *
 * Piece i covers [breakpoints[i], breakpoints[i+1]) and stores coefficients of
 * x^0, x^1, ... in the global variable x. The last piece is closed on the right.
 */
class PiecewisePoly {
 public:
  PiecewisePoly(std::vector<double> breakpoints, std::vector<std::vector<double>> pieces);

  double operator()(double x) const;

  /// Exact term-by-term derivative of the given order.
  PiecewisePoly derivative(int order = 1) const;

  double lower() const { return breakpoints_.front(); }
  double upper() const { return breakpoints_.back(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  std::size_t pieces() const { return pieces_.size(); }
  std::span<const double> coefficients(std::size_t piece) const { return pieces_[piece]; }
  /// Value of piece `piece` extended beyond its interval.
  double evaluate_piece(std::size_t piece, double x) const;

  /// Largest jump between adjacent pieces at interior breakpoints.
  double max_interior_jump() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<std::vector<double>> pieces_;
};

}  // namespace vandal
