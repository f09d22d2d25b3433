#include "vandal/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "vandal/errors.hpp"

namespace vandal {

double factorial(int n) {
  if (n < 0 || n > 170) throw InvalidInput("factorial: argument out of range: " + std::to_string(n));
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double gamma_half_integer(int n) {
  if (n < 0 || n > 170) {
    throw InvalidInput("gamma_half_integer: argument out of range: " + std::to_string(n));
  }
  double g = std::sqrt(std::numbers::pi);
  for (int k = 1; k <= n; ++k) g *= (k - 0.5);
  return g;
}

double riemann_zeta(int s) {
  if (s < 3) throw InvalidInput("riemann_zeta: only integer s >= 3 is supported");
  static std::mutex mutex;
  static std::map<int, double> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(s); it != memo.end()) return it->second;
  }
  // tail sum_{k>K} k^-s < K^{1-s}/(s-1)
  const double exponent = 1.0 / (1.0 - s);
  const auto terms = static_cast<long long>(std::ceil(std::pow(1e-15 * (s - 1), exponent)));
  double sum = 0.0;
  for (long long k = terms; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  std::lock_guard lock(mutex);
  memo.emplace(s, sum);
  return sum;
}

}  // namespace vandal
