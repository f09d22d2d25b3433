#include "vandal/piecewise_poly.hpp"

#include <algorithm>
#include <cmath>

#include "vandal/errors.hpp"

namespace vandal {

PiecewisePoly::PiecewisePoly(std::vector<double> breakpoints,
                             std::vector<std::vector<double>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size()) {
    throw InvalidInput("PiecewisePoly: need one piece per interval");
  }
  if (std::adjacent_find(breakpoints_.begin(), breakpoints_.end(), std::greater_equal<>{}) !=
      breakpoints_.end()) {
    throw InvalidInput("PiecewisePoly: breakpoints must be strictly ascending");
  }
}

double PiecewisePoly::evaluate_piece(std::size_t piece, double x) const {
  const auto& c = pieces_[piece];
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double PiecewisePoly::operator()(double x) const {
  if (!(x >= lower() && x <= upper())) return 0.0;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  auto piece = static_cast<std::size_t>(std::distance(breakpoints_.begin(), it));
  piece = std::min(piece == 0 ? 0 : piece - 1, pieces_.size() - 1);
  return evaluate_piece(piece, x);
}

PiecewisePoly PiecewisePoly::derivative(int order) const {
  if (order < 0) throw InvalidInput("PiecewisePoly: derivative order must be nonnegative");
  std::vector<std::vector<double>> out = pieces_;
  for (int k = 0; k < order; ++k) {
    for (auto& c : out) {
      if (c.size() <= 1) {
        c.assign(1, 0.0);
        continue;
      }
      for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = static_cast<double>(i) * c[i];
      c.pop_back();
    }
  }
  return {breakpoints_, std::move(out)};
}

double PiecewisePoly::max_interior_jump() const {
  double jump = 0.0;
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    const double x = breakpoints_[i];
    jump = std::max(jump, std::abs(evaluate_piece(i - 1, x) - evaluate_piece(i, x)));
  }
  return jump;
}

}  // namespace vandal
