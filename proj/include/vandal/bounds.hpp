#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vandal {

enum class TheoremId {
  trivial,
  separated_d1_min,
  separated_max,
  equispaced_exact,
  ingham,
  small_r,
  cluster_specialization,
  kernel,
  kernel_zeta,
};

std::string_view to_string(TheoremId id);
/// Throws InvalidInput for unknown names.
TheoremId theorem_from_string(std::string_view name);

/// Which extremal singular value a bound constrains, and from which side.
enum class BoundTarget { sigma_min_lower, sigma_min_upper, sigma_max_upper, sigma_max_lower };

std::string_view to_string(BoundTarget target);

/// Whether the separation hypothesis compares q*N or q*(N-1) with its threshold.
enum class ConditionForm { q_times_n, q_times_n_minus_1, none };

std::string_view to_string(ConditionForm form);

struct BoundReport {
  TheoremId theorem = TheoremId::trivial;
  BoundTarget target = BoundTarget::sigma_min_lower;
  ConditionForm form = ConditionForm::none;
  bool strict = false;
  bool applicable = false;
  double condition_lhs = 0.0;
  double condition_rhs = 0.0;
  /// Present iff applicable.
  std::optional<double> bound;
  /// bound / (N-1)^{d/2} or bound / N^{d/2}, following the theorem's normalization.
  std::optional<double> normalized;
  /// Localizer order for small_r rows, 0 otherwise.
  int r = 0;
};

struct TrivialBounds {
  double sigma_min_upper;
  double sigma_max_lower;
};

/// sigma_min <= N^{d/2} <= sigma_max.
TrivialBounds trivial_bounds(int n, int d);

struct SeparatedBounds {
  /// (N - 1/q)^{1/2} <= sigma_min, reported only for d = 1.
  BoundReport sigma_min;
  /// sigma_max <= (N + 1/q)^{d/2}.
  BoundReport sigma_max;
};

/// Both apply iff qN > 1. Requires q in (0, 1/2].
SeparatedBounds separated_bounds(int n, double q, int d);

struct EquispacedSpectrum {
  double sigma_min;
  double sigma_max;
};

/// Exact extremal singular values for the grid (1/M){0..M-1}^d; nullopt when N/M < 1.
std::optional<EquispacedSpectrum> equispaced_exact(int n, int m, int d);

/// q(N-1) >= (8 ln d + 14)/pi  =>  sigma_min >= 2^{-1/2} (sqrt(2)/(3e^2) / sqrt(ln d + 1))^{d/2} (N-1)^{d/2}.
BoundReport ingham_bound(int n, double q, int d);

/// h*b from the optimized small-r choices, r in {1,2,3}.
double small_r_hb(int r, int d);
/// b^{-d} psi(0)/psi_hat(0) at the optimized h*b, r in {1,2,3}.
double small_r_ratio(int r, int d);

/// Condition q(N-1) >= 2 h b; bound sqrt(small_r_ratio * ((N-1)/2)^d). Throws
/// InvalidInput for r outside {1,2,3} or N < 2.
BoundReport small_r_bound(int n, double q, int d, int r);

/// qN > 6d and N > max(M, 2(d+2)^2)  =>  sigma_min >= N^{d/2} / (3 d^{d/4}).
BoundReport cluster_specialization_bound(int n, double q, int d, int m);

/// d >= 2, N even, qN > 4d  =>  sigma_min > 0.9 N^{d/2}.
BoundReport kernel_bound(int n, double q, int d);

/// Same hypothesis; sigma_min^2 >= N^d (1 - 2 zeta(d+1) (2 pi)^{-d-1})^d (1 - 2^{-d-1}).
BoundReport kernel_zeta_bound(int n, double q, int d);

/// sigma_min of the equispaced grid with the same separation: N^{d/2} (floor(Nq)/(Nq))^{d/2}.
/// nullopt when Nq < 1.
std::optional<double> sharpness_upper(int n, double q, int d);

/// sharpness_upper packaged as a report (target sigma_min_upper, theorem equispaced_exact).
BoundReport sharpness_report(int n, double q, int d);

/// Every evaluator at (N, q, d, M): trivial (both sides), separated pair, ingham,
/// small_r for r = 1,2,3, cluster, kernel, kernel_zeta, equispaced sharpness.
std::vector<BoundReport> all_bounds(int n, double q, int d, int m);

/// Evaluators for one theorem id (small_r expands to r = 1,2,3 unless r is given).
std::vector<BoundReport> bounds_for(TheoremId id, int n, double q, int d, int m,
                                    std::optional<int> r = std::nullopt);

struct Table1Row {
  std::string label;
  ConditionForm form = ConditionForm::q_times_n_minus_1;
  /// Exact threshold; nullopt for rows only quoted from prior work.
  std::optional<double> threshold;
  /// Exact normalized bound; nullopt when not evaluable.
  std::optional<double> normalized;
  std::string quoted_threshold;
  std::string quoted_bound;
  bool evaluable = true;
  std::string note;
};

/// The comparison table of separation conditions and normalized bounds at dimension d.
std::vector<Table1Row> table1(int d);

struct Table2 {
  /// [r-1][d-1], rounded up to 3 decimals.
  std::array<std::array<double, 3>, 3> condition{};
  /// [r-1][d-1], rounded down to 3 decimals.
  std::array<std::array<double, 3>, 3> bound{};
  std::array<std::array<double, 3>, 3> condition_exact{};
  std::array<std::array<double, 3>, 3> bound_exact{};
};

Table2 table2();

}  // namespace vandal
