#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "vandal/piecewise_poly.hpp"
#include "vandal/special.hpp"
#include "vandal/vandermonde.hpp"

namespace vandal {

/**
 * Parameters of the localizing function
 *
 *   psi = ((2 pi b)^p - (-1)^r sum_s d^p/dx_s^p) (phi * phi)^{(x) d},   p = 2r,
 *
 * where phi(x) = (1 - (2x/h)^2)^r on |x| < h/2. psi is supported on [-h, h]^d and
 * its Fourier transform is nonnegative on the l^p ball of radius b.
 */
struct PsiParams {
  int dim = 1;
  int r = 1;
  double b = 1.0;
  double h = 1.0;

  int p() const { return 2 * r; }

  /// Throws InvalidInput unless d >= 1, 1 <= r <= kMaxLocalizerOrder and b, h > 0.
  void validate() const;

  /// C_p = (2p + 3) / (e pi).
  static double positivity_constant(int p);

  /// h > C_p d^{1/p} / b, which guarantees psi(0) > 0.
  bool positivity_guaranteed() const;
};

/// (1 - (2x/h)^2)^r for |x| < h/2, else 0.
double phi(double x, int r, double h);

/// phi * phi as an exact piecewise polynomial of degree 4r+1 on {-h, 0, h}.
PiecewisePoly phi_autocorrelation(int r, double h);

/// Evaluator that caches phi * phi and its p-th derivative for one parameter set.
class Localizer {
 public:
  explicit Localizer(const PsiParams& params);

  const PsiParams& params() const { return params_; }
  const PiecewisePoly& autocorrelation() const { return g_; }
  const PiecewisePoly& autocorrelation_derivative() const { return gp_; }

  /// psi(x); exactly zero when some |x_s| >= h.
  double operator()(std::span<const double> x) const;

 private:
  PsiParams params_;
  PiecewisePoly g_;
  PiecewisePoly gp_;
};

double psi_eval(std::span<const double> x, const PsiParams& params);

/// Fourier transform of phi at frequency v (convention int f(x) e^{-2 pi i v x} dx).
double phi_hat(double v, int r, double h);

/// ((2 pi b)^p - sum_s (2 pi v_s)^p) prod_l phi_hat(v_l)^2.
double psi_hat(std::span<const double> v, const PsiParams& params);

/// Closed form of psi(0) with exact half-integer Gamma values.
double psi_at_zero(const PsiParams& params);

/// Closed form of psi_hat(0) = max_v psi_hat(v).
double psi_hat_at_zero(const PsiParams& params);

struct RatioValue {
  double value = 0.0;
  /// The parameters violate positivity and the ratio is <= 0.
  bool nonpositive = false;
};

/// psi(0) / psi_hat(0) from the factored closed form.
RatioValue ratio_closed_form(const PsiParams& params);

/// Second factor of the factored ratio: 1 - d 2^{2r+1} G(2r+3/2)(r!)^2 / ((2r)! (h pi b)^{2r} sqrt(pi) (2r+1)).
double ratio_bracket(const PsiParams& params);

enum class RatioRegime { general, h_of_p, log_d };

/**
 * Lower bounds on psi(0)/psi_hat(0).
 *
 * general: any parameters. h_of_p: h must equal h_for_p_rule(r, d, b) to 1e-12
 * relative. log_d: additionally r must equal r_for_log_d(d). Violations throw
 * InvalidInput.
 */
double ratio_lower_bounds(const PsiParams& params, RatioRegime regime);

/// Bracket of the general lower bound, 1 - d (2e^2/sqrt(pi)) sqrt(r) (2r/(pi e b h))^{2r}.
double general_bracket(const PsiParams& params);

/// The general bracket after substituting h = h_for_p_rule; independent of d and b.
double h_of_p_bracket(int r);

/// h = (2p + 3)/(e pi) d^{1/p} / b.
double h_for_p_rule(int r, int d, double b);

/// max(1, ceil(ln d)).
int r_for_log_d(int d);

struct PoissonDiagnostic {
  /// Truncated sum over nu in {-T..T}^d of psi_hat(nu) |sum_j u_j e^{2 pi i nu.t_j}|^2.
  double lhs = 0.0;
  /// sum_{j,l} u_j conj(u_l) sum_{r in {-1,0,1}^d} psi(t_j - t_l + r).
  double mid = 0.0;
  /// psi(0) ||u||^2 with the closed-form psi(0).
  double rhs = 0.0;
  /// psi_hat(0) sum over the centered index box of |sum_j u_j e^{2 pi i nu.t_j}|^2.
  double sandwich = 0.0;
  int truncation = 0;
};

/// Smallest T with (2 pi b)^p env(T)^2 phi_hat(0)^{2(d-1)} < 1e-8 psi_hat(0), env the
/// envelope (h/2) r! 2^{r+1} (pi T h)^{-r-1} of |phi_hat|.
int default_poisson_truncation(const PsiParams& params);

/**
 * Evaluates the three members of the Poisson-summation identity for one vector u.
 *
 * Requires h <= 1/2 (+1e-12) and, for M >= 2, separation >= h; otherwise throws
 * PreconditionError. Throws ResourceError when (2T+1)^d exceeds 10^9.
 */
PoissonDiagnostic poisson_check(const VandermondeSpec& spec, const PsiParams& params,
                                std::span<const std::complex<double>> u,
                                std::optional<int> truncation = std::nullopt);

}  // namespace vandal
