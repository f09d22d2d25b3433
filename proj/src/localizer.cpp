#include "vandal/localizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vandal/errors.hpp"
#include "vandal/special.hpp"

namespace vandal {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

std::vector<std::vector<cpp_int>> pascal(int n) {
  std::vector<std::vector<cpp_int>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (int k = 1; k < i; ++k) c[i][k] = c[i - 1][k - 1] + c[i - 1][k];
  }
  return c;
}

// Coefficients (ascending in u) of (1 - u^2)^r.
std::vector<cpp_int> bump_coefficients(int r, const std::vector<std::vector<cpp_int>>& binom) {
  std::vector<cpp_int> a(2 * r + 1, 0);
  for (int k = 0; k <= r; ++k) a[2 * k] = (k % 2 == 0 ? 1 : -1) * binom[r][k];
  return a;
}

/*
 * With Phi(u) = (1 - u^2)^r on [-1, 1], the autocorrelation on U in [0, 2] is
 *
 *   G(U) = int_{U-1}^{1} Phi(u) Phi(U - u) du.
 *
 * Expanding Phi(U - u) binomially groups the integrand as sum_n Q_n(U) u^n with
 * integer polynomials Q_n, and int_{U-1}^1 u^n du = (1 - (U - 1)^{n+1}) / (n + 1).
 * Everything stays exact until the final conversion to double.
 */
std::vector<double> normalized_autocorrelation(int r) {
  static std::mutex mutex;
  static std::map<int, std::vector<double>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
  }

  const int deg = 2 * r;
  const auto binom = pascal(2 * deg + 2);
  const auto alpha = bump_coefficients(r, binom);

  std::vector<std::vector<cpp_int>> q(2 * deg + 1, std::vector<cpp_int>(deg + 1, 0));
  for (int i = 0; i <= deg; i += 2) {
    for (int j = 0; j <= deg; j += 2) {
      const cpp_int aij = alpha[i] * alpha[j];
      for (int m = 0; m <= j; ++m) {
        q[i + m][j - m] += (m % 2 == 0 ? aij : -aij) * binom[j][m];
      }
    }
  }

  std::vector<cpp_rational> g(3 * deg + 2, 0);
  for (int n = 0; n <= 2 * deg; ++n) {
    // 1 - (U - 1)^{n+1}
    std::vector<cpp_int> p(n + 2, 0);
    for (int k = 0; k <= n + 1; ++k) {
      const bool negative = (n + 1 - k) % 2 != 0;
      p[k] = negative ? binom[n + 1][k] : cpp_int(-binom[n + 1][k]);
    }
    p[0] += 1;
    for (int a = 0; a <= deg; ++a) {
      if (q[n][a] == 0) continue;
      for (int k = 0; k <= n + 1; ++k) {
        if (p[k] == 0) continue;
        g[a + k] += cpp_rational(q[n][a] * p[k], n + 1);
      }
    }
  }
  while (g.size() > 1 && g.back() == 0) g.pop_back();

  std::vector<double> out;
  out.reserve(g.size());
  for (const auto& c : g) out.push_back(static_cast<double>(c));
  std::lock_guard lock(mutex);
  cache.emplace(r, out);
  return out;
}

// P^{(k)}(1) for P(u) = (1 - u^2)^r, k = 0..2r, exact integers converted to double.
std::vector<double> bump_derivatives_at_one(int r) {
  static std::mutex mutex;
  static std::map<int, std::vector<double>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
  }
  const auto binom = pascal(2 * r);
  const auto alpha = bump_coefficients(r, binom);
  std::vector<double> out(2 * r + 1);
  for (int k = 0; k <= 2 * r; ++k) {
    cpp_int acc = 0;
    for (int n = k; n <= 2 * r; ++n) {
      cpp_int falling = 1;
      for (int i = 0; i < k; ++i) falling *= (n - i);
      acc += alpha[n] * falling;
    }
    out[k] = static_cast<double>(acc);
  }
  std::lock_guard lock(mutex);
  cache.emplace(r, out);
  return out;
}

// F(w) = int_{-1}^{1} (1 - u^2)^r cos(w u) du, so that phi_hat(v) = (h/2) F(pi v h).
double bump_cosine_transform(double w, int r) {
  w = std::abs(w);
  if (w < kPi) {
    // Taylor branch: F = sum_m (-1)^m w^{2m}/(2m)! B_m, B_m = G(m+1/2) r! / G(m+r+3/2)
    double term = std::sqrt(kPi) * factorial(r) / gamma_half_integer(r + 1);
    double sum = term;
    const double w2 = w * w;
    for (int m = 0; m < 400; ++m) {
      term *= -w2 / ((2.0 * m + 1.0) * (2.0 * m + 2.0)) * (m + 0.5) / (m + r + 1.5);
      sum += term;
      if (std::abs(term) < 1e-17 && m > w) break;
    }
    return sum;
  }
  // Closed branch: integrate by parts 2r+1 times; P^{(k)}(-1) = (-1)^k P^{(k)}(1).
  const auto deriv = bump_derivatives_at_one(r);
  const double s = std::sin(w);
  const double c = std::cos(w);
  double sum = 0.0;
  double wpow = w;
  for (int k = 0; k <= 2 * r; ++k) {
    if (k % 2 == 0) {
      sum += deriv[k] * 2.0 * s * ((k / 2) % 2 == 0 ? 1.0 : -1.0) / wpow;
    } else {
      sum -= deriv[k] * 2.0 * c * (((k + 1) / 2) % 2 == 0 ? 1.0 : -1.0) / wpow;
    }
    wpow *= w;
  }
  return sum;
}

double int_pow(double x, int n) {
  double out = 1.0;
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

// g(0) = (h/2) int (1-y^2)^{2r} dy = h sqrt(pi) (2r)! / (2 G(2r + 3/2)).
double autocorrelation_at_zero(int r, double h) {
  return h * std::sqrt(kPi) * factorial(2 * r) / (2.0 * gamma_half_integer(2 * r + 1));
}

// phi_hat(0) = h sqrt(pi) r! / (2 G(r + 3/2)).
double phi_hat_at_zero(int r, double h) {
  return h * std::sqrt(kPi) * factorial(r) / (2.0 * gamma_half_integer(r + 1));
}

}  // namespace

void PsiParams::validate() const {
  if (dim < 1) throw InvalidInput("PsiParams: dimension must be positive");
  if (r < 1 || r > kMaxLocalizerOrder) {
    throw InvalidInput("PsiParams: r must lie in [1, " + std::to_string(kMaxLocalizerOrder) + "]");
  }
  if (!(b > 0.0) || !std::isfinite(b)) throw InvalidInput("PsiParams: b must be positive");
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidInput("PsiParams: h must be positive");
}

double PsiParams::positivity_constant(int p) { return (2.0 * p + 3.0) / (kE * kPi); }

bool PsiParams::positivity_guaranteed() const {
  return h > positivity_constant(p()) * std::pow(static_cast<double>(dim), 1.0 / p()) / b;
}

double phi(double x, int r, double h) {
  if (!(std::abs(x) < 0.5 * h)) return 0.0;
  const double u = 2.0 * x / h;
  return int_pow(1.0 - u * u, r);
}

PiecewisePoly phi_autocorrelation(int r, double h) {
  if (r < 1 || r > kMaxLocalizerOrder) throw InvalidInput("phi_autocorrelation: r out of range");
  if (!(h > 0.0)) throw InvalidInput("phi_autocorrelation: h must be positive");
  const auto normalized = normalized_autocorrelation(r);
  // g(x) = (h/2) G(2x/h); G even
  std::vector<double> right(normalized.size());
  std::vector<double> left(normalized.size());
  double scale = 0.5 * h;
  for (std::size_t k = 0; k < normalized.size(); ++k) {
    right[k] = normalized[k] * scale;
    left[k] = k % 2 == 0 ? right[k] : -right[k];
    scale *= 2.0 / h;
  }
  return PiecewisePoly({-h, 0.0, h}, {std::move(left), std::move(right)});
}

Localizer::Localizer(const PsiParams& params)
    : params_(params),
      g_(phi_autocorrelation(params.r, params.h)),
      gp_(g_.derivative(params.p())) {
  params_.validate();
}

double Localizer::operator()(std::span<const double> x) const {
  const int d = params_.dim;
  if (static_cast<int>(x.size()) != d) throw InvalidInput("psi: dimension mismatch");
  for (double xs : x) {
    if (!(std::abs(xs) < params_.h)) return 0.0;
  }
  std::vector<double> gv(d);
  std::vector<double> gpv(d);
  for (int s = 0; s < d; ++s) {
    gv[s] = g_(x[s]);
    gpv[s] = gp_(x[s]);
  }
  double product = 1.0;
  for (double v : gv) product *= v;
  double derivative_sum = 0.0;
  for (int s = 0; s < d; ++s) {
    double term = gpv[s];
    for (int l = 0; l < d; ++l) {
      if (l != s) term *= gv[l];
    }
    derivative_sum += term;
  }
  const double sign = params_.r % 2 == 0 ? 1.0 : -1.0;  // (-1)^r
  return int_pow(2.0 * kPi * params_.b, params_.p()) * product - sign * derivative_sum;
}

double psi_eval(std::span<const double> x, const PsiParams& params) {
  return Localizer(params)(x);
}

double phi_hat(double v, int r, double h) {
  if (r < 1 || r > kMaxLocalizerOrder) throw InvalidInput("phi_hat: r out of range");
  if (!(h > 0.0)) throw InvalidInput("phi_hat: h must be positive");
  return 0.5 * h * bump_cosine_transform(kPi * v * h, r);
}

double psi_hat(std::span<const double> v, const PsiParams& params) {
  params.validate();
  if (static_cast<int>(v.size()) != params.dim) throw InvalidInput("psi_hat: dimension mismatch");
  const int p = params.p();
  double first = int_pow(2.0 * kPi * params.b, p);
  double product = 1.0;
  for (double vs : v) {
    first -= int_pow(2.0 * kPi * vs, p);
    const double f = phi_hat(vs, params.r, params.h);
    product *= f * f;
  }
  return first * product;
}

double psi_at_zero(const PsiParams& params) {
  params.validate();
  const int r = params.r;
  const int d = params.dim;
  const double h = params.h;
  const double a = autocorrelation_at_zero(r, h);
  const double derivative_term = d * int_pow(4.0, 2 * r) * int_pow(factorial(r), 2) /
                                 ((2.0 * r + 1.0) * int_pow(h, 2 * r - 1));
  return int_pow(a, d) * int_pow(2.0 * kPi * params.b, 2 * r) - int_pow(a, d - 1) * derivative_term;
}

double psi_hat_at_zero(const PsiParams& params) {
  params.validate();
  return int_pow(2.0 * kPi * params.b, params.p()) *
         int_pow(phi_hat_at_zero(params.r, params.h), 2 * params.dim);
}

double ratio_bracket(const PsiParams& params) {
  params.validate();
  const int r = params.r;
  const double hpb = params.h * kPi * params.b;
  return 1.0 - params.dim * int_pow(2.0, 2 * r + 1) * gamma_half_integer(2 * r + 1) *
                   int_pow(factorial(r), 2) /
                   (factorial(2 * r) * int_pow(hpb, 2 * r) * std::sqrt(kPi) * (2.0 * r + 1.0));
}

RatioValue ratio_closed_form(const PsiParams& params) {
  params.validate();
  const int r = params.r;
  const double g = gamma_half_integer(r + 1);
  const double first = 2.0 * factorial(2 * r) * g * g /
                       (gamma_half_integer(2 * r + 1) * params.h * std::sqrt(kPi) *
                        int_pow(factorial(r), 2));
  const double value = int_pow(first, params.dim) * ratio_bracket(params);
  return {value, !(value > 0.0)};
}

double general_bracket(const PsiParams& params) {
  params.validate();
  const int r = params.r;
  const double base = 2.0 * r / (kPi * kE * params.b * params.h);
  return 1.0 - params.dim * (2.0 * kE * kE / std::sqrt(kPi)) * std::sqrt(static_cast<double>(r)) *
                   int_pow(base, 2 * r);
}

double h_of_p_bracket(int r) {
  if (r < 1) throw InvalidInput("h_of_p_bracket: r must be positive");
  return 1.0 - (2.0 * kE * kE / std::sqrt(kPi)) * std::sqrt(static_cast<double>(r)) *
                   std::pow(2.0 * r / (4.0 * r + 3.0), 2 * r);
}

double h_for_p_rule(int r, int d, double b) {
  const int p = 2 * r;
  return PsiParams::positivity_constant(p) * std::pow(static_cast<double>(d), 1.0 / p) / b;
}

int r_for_log_d(int d) {
  if (d < 1) throw InvalidInput("r_for_log_d: d must be positive");
  return std::max(1, static_cast<int>(std::ceil(std::log(static_cast<double>(d)))));
}

double ratio_lower_bounds(const PsiParams& params, RatioRegime regime) {
  params.validate();
  const int r = params.r;
  const int d = params.dim;
  const double b = params.b;
  if (regime == RatioRegime::general) {
    return int_pow(std::sqrt(2.0 / kPi) * std::sqrt(static_cast<double>(r)) / params.h, d) *
           general_bracket(params);
  }
  const double h_rule = h_for_p_rule(r, d, b);
  if (std::abs(params.h - h_rule) > 1e-12 * h_rule) {
    throw InvalidInput("ratio_lower_bounds: h does not follow the p-rule (expected " +
                       std::to_string(h_rule) + ")");
  }
  if (regime == RatioRegime::h_of_p) {
    const double p = params.p();
    return 0.5 * int_pow(4.0 / 3.0 * b / (std::sqrt(p) * std::pow(static_cast<double>(d), 1.0 / p)), d);
  }
  if (r != r_for_log_d(d)) {
    throw InvalidInput("ratio_lower_bounds: log-d regime requires r = " +
                       std::to_string(r_for_log_d(d)));
  }
  const double logd = std::log(static_cast<double>(d));
  return 0.5 * int_pow(4.0 / (3.0 * std::sqrt(2.0) * kE * kE) * b / std::sqrt(logd + 1.0), d);
}

int default_poisson_truncation(const PsiParams& params) {
  params.validate();
  const int r = params.r;
  // env(T)/phi_hat(0) = 2^{r+1} G(r+3/2) / (sqrt(pi) (pi T h)^{r+1}) < 1e-4
  const double lead = int_pow(2.0, r + 1) * gamma_half_integer(r + 1) / std::sqrt(kPi);
  const double t = std::pow(lead / 1e-4, 1.0 / (r + 1)) / (kPi * params.h);
  return std::max(1, static_cast<int>(std::ceil(t)));
}

PoissonDiagnostic poisson_check(const VandermondeSpec& spec, const PsiParams& params,
                                std::span<const std::complex<double>> u,
                                std::optional<int> truncation) {
  params.validate();
  const std::size_t m = spec.rows();
  const auto d = static_cast<std::size_t>(params.dim);
  if (spec.dim() != d) throw InvalidInput("poisson_check: dimension mismatch");
  if (u.size() != m) throw InvalidInput("poisson_check: u must have one entry per node");
  if (params.h > 0.5 + 1e-12) {
    throw PreconditionError("poisson_check: h must not exceed 1/2");
  }
  if (m >= 2 && separation(spec.nodes()) < params.h) {
    throw PreconditionError("poisson_check: node set is not h-separated (separation " +
                            std::to_string(separation(spec.nodes())) + " < h = " +
                            std::to_string(params.h) + ")");
  }
  const int t = truncation.value_or(default_poisson_truncation(params));
  if (t < 0) throw InvalidInput("poisson_check: truncation must be nonnegative");
  const std::size_t width = 2 * static_cast<std::size_t>(t) + 1;
  double box = 1.0;
  for (std::size_t s = 0; s < d; ++s) box *= static_cast<double>(width);
  if (box > 1e9) throw ResourceError("poisson_check: (2T+1)^d exceeds 10^9 terms");

  PoissonDiagnostic out;
  out.truncation = t;

  // LHS over the frequency box, with per-axis tables.
  const int p = params.p();
  std::vector<double> phat2(width);
  std::vector<double> freq_power(width);
  for (std::size_t i = 0; i < width; ++i) {
    const double nu = static_cast<double>(i) - t;
    const double f = phi_hat(nu, params.r, params.h);
    phat2[i] = f * f;
    freq_power[i] = int_pow(2.0 * kPi * nu, p);
  }
  std::vector<std::complex<double>> phase(m * d * width);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t s = 0; s < d; ++s) {
      const double ts = spec.nodes().node(j)[s];
      for (std::size_t i = 0; i < width; ++i) {
        const double turns = (static_cast<double>(i) - t) * ts;
        const double frac = turns - std::floor(turns);
        phase[(j * d + s) * width + i] = std::polar(1.0, 2.0 * kPi * frac);
      }
    }
  }
  const double ball = int_pow(2.0 * kPi * params.b, p);
  std::vector<std::size_t> idx(d, 0);
  double sum = 0.0;
  double compensation = 0.0;
  const auto total = static_cast<std::size_t>(box);
  for (std::size_t c = 0; c < total; ++c) {
    double weight = ball;
    double product = 1.0;
    for (std::size_t s = 0; s < d; ++s) {
      weight -= freq_power[idx[s]];
      product *= phat2[idx[s]];
    }
    std::complex<double> trig{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) {
      std::complex<double> e = u[j];
      for (std::size_t s = 0; s < d; ++s) e *= phase[(j * d + s) * width + idx[s]];
      trig += e;
    }
    const double term = weight * product * std::norm(trig);
    // Neumaier summation keeps the long sum order-stable
    const double next = sum + term;
    compensation += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
    sum = next;
    for (std::size_t s = d; s-- > 0;) {
      if (++idx[s] < width) break;
      idx[s] = 0;
    }
  }
  out.lhs = sum + compensation;

  // MID over nodes and shifts r in {-1,0,1}^d.
  const Localizer psi(params);
  std::size_t shifts = 1;
  for (std::size_t s = 0; s < d; ++s) shifts *= 3;
  std::vector<double> x(d);
  std::complex<double> mid{0.0, 0.0};
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < m; ++l) {
      double periodized = 0.0;
      for (std::size_t k = 0; k < shifts; ++k) {
        std::size_t code = k;
        for (std::size_t s = 0; s < d; ++s) {
          const double shift = static_cast<double>(code % 3) - 1.0;
          code /= 3;
          x[s] = spec.nodes().node(j)[s] - spec.nodes().node(l)[s] + shift;
        }
        periodized += psi(x);
      }
      mid += u[j] * std::conj(u[l]) * periodized;
    }
  }
  out.mid = mid.real();

  double norm2 = 0.0;
  for (const auto& uj : u) norm2 += std::norm(uj);
  out.rhs = psi_at_zero(params) * norm2;

  // sum over nu in {-c..N-1-c}^d of |sum_j u_j e^{2 pi i nu.t_j}|^2, c = ceil((N-1)/2)
  const std::uint64_t n = spec.degree();
  const double c = std::ceil((static_cast<double>(n) - 1.0) / 2.0);
  std::complex<double> energy{0.0, 0.0};
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < m; ++l) {
      std::complex<double> kernel{1.0, 0.0};
      for (std::size_t s = 0; s < d; ++s) {
        const double tau = spec.nodes().node(j)[s] - spec.nodes().node(l)[s];
        const double turns = -c * tau;
        kernel *= std::polar(1.0, 2.0 * kPi * (turns - std::floor(turns))) * dirichlet(n, tau);
      }
      energy += u[j] * std::conj(u[l]) * kernel;
    }
  }
  out.sandwich = psi_hat_at_zero(params) * energy.real();
  return out;
}

}  // namespace vandal
