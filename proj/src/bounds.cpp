#include "vandal/bounds.hpp"

#include <cmath>
#include <numbers>

#include "vandal/errors.hpp"
#include "vandal/special.hpp"

namespace vandal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

double half_power(double base, int d) { return std::pow(base, 0.5 * d); }

void require_positive(int n, int d, const char* who) {
  if (n < 1 || d < 1) throw InvalidInput(std::string(who) + ": N and d must be positive");
}

void require_separation(double q, const char* who) {
  if (!(q > 0.0 && q <= 0.5)) throw InvalidInput(std::string(who) + ": q must lie in (0, 1/2]");
}

BoundReport make_report(TheoremId id, BoundTarget target, ConditionForm form, bool strict,
                        double lhs, double rhs, bool extra_hypotheses) {
  BoundReport rep;
  rep.theorem = id;
  rep.target = target;
  rep.form = form;
  rep.strict = strict;
  rep.condition_lhs = lhs;
  rep.condition_rhs = rhs;
  rep.applicable = extra_hypotheses && (strict ? lhs > rhs : lhs >= rhs);
  return rep;
}

void set_bound(BoundReport& rep, double bound, double normalizer) {
  if (!rep.applicable) return;
  rep.bound = bound;
  rep.normalized = bound / normalizer;
}

double ingham_threshold(int d) { return (8.0 * std::log(static_cast<double>(d)) + 14.0) / kPi; }

double ingham_normalized(int d) {
  const double inner = std::sqrt(2.0) / (3.0 * kE * kE) / std::sqrt(std::log(static_cast<double>(d)) + 1.0);
  return half_power(inner, d) / std::sqrt(2.0);
}

double kernel_zeta_factor(int d) {
  const double z = 1.0 - 2.0 * riemann_zeta(d + 1) * std::pow(2.0 * kPi, -(d + 1.0));
  return std::sqrt(std::pow(z, d) * (1.0 - std::pow(2.0, -(d + 1.0))));
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::trivial: return "trivial";
    case TheoremId::separated_d1_min: return "separated_d1_min";
    case TheoremId::separated_max: return "separated_max";
    case TheoremId::equispaced_exact: return "equispaced_exact";
    case TheoremId::ingham: return "ingham";
    case TheoremId::small_r: return "small_r";
    case TheoremId::cluster_specialization: return "cluster_specialization";
    case TheoremId::kernel: return "kernel";
    case TheoremId::kernel_zeta: return "kernel_zeta";
  }
  return "unknown";
}

TheoremId theorem_from_string(std::string_view name) {
  for (auto id : {TheoremId::trivial, TheoremId::separated_d1_min, TheoremId::separated_max,
                  TheoremId::equispaced_exact, TheoremId::ingham, TheoremId::small_r,
                  TheoremId::cluster_specialization, TheoremId::kernel, TheoremId::kernel_zeta}) {
    if (to_string(id) == name) return id;
  }
  throw InvalidInput("unknown theorem id: " + std::string(name));
}

std::string_view to_string(BoundTarget target) {
  switch (target) {
    case BoundTarget::sigma_min_lower: return "sigma_min_lower";
    case BoundTarget::sigma_min_upper: return "sigma_min_upper";
    case BoundTarget::sigma_max_upper: return "sigma_max_upper";
    case BoundTarget::sigma_max_lower: return "sigma_max_lower";
  }
  return "unknown";
}

std::string_view to_string(ConditionForm form) {
  switch (form) {
    case ConditionForm::q_times_n: return "qN";
    case ConditionForm::q_times_n_minus_1: return "q(N-1)";
    case ConditionForm::none: return "none";
  }
  return "unknown";
}

TrivialBounds trivial_bounds(int n, int d) {
  require_positive(n, d, "trivial_bounds");
  const double v = half_power(n, d);
  return {v, v};
}

SeparatedBounds separated_bounds(int n, double q, int d) {
  require_positive(n, d, "separated_bounds");
  require_separation(q, "separated_bounds");
  const double qn = q * n;
  SeparatedBounds out;
  out.sigma_min = make_report(TheoremId::separated_d1_min, BoundTarget::sigma_min_lower,
                              ConditionForm::q_times_n, true, qn, 1.0, d == 1);
  set_bound(out.sigma_min, std::sqrt(n - 1.0 / q), std::sqrt(static_cast<double>(n)));
  out.sigma_max = make_report(TheoremId::separated_max, BoundTarget::sigma_max_upper,
                              ConditionForm::q_times_n, true, qn, 1.0, true);
  set_bound(out.sigma_max, half_power(n + 1.0 / q, d), half_power(n, d));
  return out;
}

std::optional<EquispacedSpectrum> equispaced_exact(int n, int m, int d) {
  require_positive(n, d, "equispaced_exact");
  if (m < 1) throw InvalidInput("equispaced_exact: M must be positive");
  if (n < m) return std::nullopt;
  // Nq = N/M; floor and ceil taken on the exact integer ratio
  const double nq = static_cast<double>(n) / m;
  const double lo = static_cast<double>(n / m);
  const double hi = static_cast<double>((n + m - 1) / m);
  return EquispacedSpectrum{half_power(n, d) * half_power(lo / nq, d),
                            half_power(n, d) * half_power(hi / nq, d)};
}

BoundReport ingham_bound(int n, double q, int d) {
  require_positive(n, d, "ingham_bound");
  require_separation(q, "ingham_bound");
  if (n < 2) throw InvalidInput("ingham_bound: requires N >= 2");
  auto rep = make_report(TheoremId::ingham, BoundTarget::sigma_min_lower,
                         ConditionForm::q_times_n_minus_1, false, q * (n - 1), ingham_threshold(d), true);
  const double scale = half_power(n - 1.0, d);
  set_bound(rep, ingham_normalized(d) * scale, scale);
  return rep;
}

double small_r_hb(int r, int d) {
  const double dd = d;
  switch (r) {
    case 1: return std::sqrt(5.0) / (std::sqrt(2.0) * kPi) * std::sqrt(dd + 2.0);
    case 2: return std::sqrt(3.0) / kPi * std::pow(3.5, 0.25) * std::pow(dd + 4.0, 0.25);
    case 3:
      return std::sqrt(3.0) * std::pow(143.0, 1.0 / 6.0) / (std::cbrt(2.0) * kPi) *
             std::pow(dd + 6.0, 1.0 / 6.0);
    default: throw InvalidInput("small_r: r must be 1, 2 or 3");
  }
}

double small_r_ratio(int r, int d) {
  const double dd = d;
  switch (r) {
    case 1:
      return std::pow(2.0, 1.5 * dd + 1.0) * std::pow(5.0, -1.5 * dd) *
             std::pow(dd + 2.0, -0.5 * dd - 1.0) * std::pow(3.0 * kPi, dd);
    case 2:
      return std::pow(2.0, 1.25 * dd + 2.0) * std::pow(3.0, -0.5 * dd) * std::pow(7.0, -1.25 * dd) *
             std::pow(dd + 4.0, -0.25 * dd - 1.0) * std::pow(5.0 * kPi, dd);
    case 3:
      return std::pow(2.0, 7.0 * dd / 3.0 + 1.0) * std::pow(3.0, 1.0 - 1.5 * dd) *
             std::pow(143.0, -7.0 * dd / 6.0) * std::pow(dd + 6.0, -dd / 6.0 - 1.0) *
             std::pow(175.0 * kPi, dd);
    default: throw InvalidInput("small_r: r must be 1, 2 or 3");
  }
}

BoundReport small_r_bound(int n, double q, int d, int r) {
  require_positive(n, d, "small_r_bound");
  require_separation(q, "small_r_bound");
  if (n < 2) throw InvalidInput("small_r_bound: requires N >= 2");
  const double hb = small_r_hb(r, d);
  auto rep = make_report(TheoremId::small_r, BoundTarget::sigma_min_lower,
                         ConditionForm::q_times_n_minus_1, false, q * (n - 1), 2.0 * hb, true);
  rep.r = r;
  const double b = 0.5 * (n - 1);
  set_bound(rep, std::sqrt(small_r_ratio(r, d) * std::pow(b, d)), half_power(n - 1.0, d));
  return rep;
}

BoundReport cluster_specialization_bound(int n, double q, int d, int m) {
  require_positive(n, d, "cluster_specialization_bound");
  require_separation(q, "cluster_specialization_bound");
  const double degree_floor = std::max<double>(m, 2.0 * (d + 2.0) * (d + 2.0));
  auto rep = make_report(TheoremId::cluster_specialization, BoundTarget::sigma_min_lower,
                         ConditionForm::q_times_n, true, q * n, 6.0 * d, n > degree_floor);
  const double scale = half_power(n, d);
  set_bound(rep, scale / (3.0 * std::pow(static_cast<double>(d), 0.25 * d)), scale);
  return rep;
}

BoundReport kernel_bound(int n, double q, int d) {
  require_positive(n, d, "kernel_bound");
  require_separation(q, "kernel_bound");
  auto rep = make_report(TheoremId::kernel, BoundTarget::sigma_min_lower, ConditionForm::q_times_n,
                         true, q * n, 4.0 * d, d >= 2 && n % 2 == 0);
  const double scale = half_power(n, d);
  set_bound(rep, 0.9 * scale, scale);
  return rep;
}

BoundReport kernel_zeta_bound(int n, double q, int d) {
  require_positive(n, d, "kernel_zeta_bound");
  require_separation(q, "kernel_zeta_bound");
  auto rep = make_report(TheoremId::kernel_zeta, BoundTarget::sigma_min_lower,
                         ConditionForm::q_times_n, true, q * n, 4.0 * d, d >= 2 && n % 2 == 0);
  if (rep.applicable) {
    const double scale = half_power(n, d);
    set_bound(rep, kernel_zeta_factor(d) * scale, scale);
  }
  return rep;
}

std::optional<double> sharpness_upper(int n, double q, int d) {
  require_positive(n, d, "sharpness_upper");
  require_separation(q, "sharpness_upper");
  const double nq = n * q;
  if (nq < 1.0) return std::nullopt;
  return half_power(n, d) * half_power(std::floor(nq) / nq, d);
}

BoundReport sharpness_report(int n, double q, int d) {
  auto rep = make_report(TheoremId::equispaced_exact, BoundTarget::sigma_min_upper,
                         ConditionForm::q_times_n, false, q * n, 1.0, true);
  if (auto v = sharpness_upper(n, q, d)) set_bound(rep, *v, half_power(n, d));
  return rep;
}

std::vector<BoundReport> bounds_for(TheoremId id, int n, double q, int d, int m,
                                    std::optional<int> r) {
  switch (id) {
    case TheoremId::trivial: {
      const auto t = trivial_bounds(n, d);
      BoundReport lo = make_report(id, BoundTarget::sigma_min_upper, ConditionForm::none, false, 0, 0, true);
      set_bound(lo, t.sigma_min_upper, half_power(n, d));
      BoundReport hi = make_report(id, BoundTarget::sigma_max_lower, ConditionForm::none, false, 0, 0, true);
      set_bound(hi, t.sigma_max_lower, half_power(n, d));
      return {lo, hi};
    }
    case TheoremId::separated_d1_min: return {separated_bounds(n, q, d).sigma_min};
    case TheoremId::separated_max: return {separated_bounds(n, q, d).sigma_max};
    case TheoremId::equispaced_exact: return {sharpness_report(n, q, d)};
    case TheoremId::ingham: return {ingham_bound(n, q, d)};
    case TheoremId::small_r: {
      if (r) return {small_r_bound(n, q, d, *r)};
      return {small_r_bound(n, q, d, 1), small_r_bound(n, q, d, 2), small_r_bound(n, q, d, 3)};
    }
    case TheoremId::cluster_specialization: return {cluster_specialization_bound(n, q, d, m)};
    case TheoremId::kernel: return {kernel_bound(n, q, d)};
    case TheoremId::kernel_zeta: return {kernel_zeta_bound(n, q, d)};
  }
  return {};
}

std::vector<BoundReport> all_bounds(int n, double q, int d, int m) {
  std::vector<BoundReport> out;
  for (auto id : {TheoremId::trivial, TheoremId::separated_d1_min, TheoremId::separated_max,
                  TheoremId::ingham, TheoremId::small_r, TheoremId::cluster_specialization,
                  TheoremId::kernel, TheoremId::kernel_zeta, TheoremId::equispaced_exact}) {
    auto rows = bounds_for(id, n, q, d, m);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

std::vector<Table1Row> table1(int d) {
  if (d < 1) throw InvalidInput("table1: d must be positive");
  const double dd = d;
  std::vector<Table1Row> rows;

  Table1Row kernel;
  kernel.label = "kernel (B-spline kernel, Gershgorin)";
  kernel.form = ConditionForm::q_times_n;
  kernel.threshold = 4.0 * dd;
  kernel.quoted_threshold = "4d";
  kernel.quoted_bound = "0.9";
  kernel.evaluable = d >= 2;
  if (kernel.evaluable) kernel.normalized = 0.9;
  kernel.note = "theorem states qN > 4d (table header reads q(N-1)); requires d >= 2 and N even; "
                "normalized by N^{d/2}";
  rows.push_back(kernel);

  Table1Row cluster;
  cluster.label = "cluster_specialization";
  cluster.form = ConditionForm::q_times_n;
  cluster.threshold = 6.0 * dd;
  cluster.normalized = std::pow(dd, -0.25 * dd) / 3.0;
  cluster.quoted_threshold = "6d";
  cluster.quoted_bound = "(1/3) d^{-d/4}";
  cluster.note = "theorem states qN > 6d with N > max(M, 2(d+2)^2); normalized by N^{d/2}";
  rows.push_back(cluster);

  Table1Row sqrt_d;
  sqrt_d.label = "prior work: sqrt(d) separation";
  sqrt_d.quoted_threshold = "sqrt(d)";
  sqrt_d.quoted_bound = "is positive";
  sqrt_d.evaluable = false;
  sqrt_d.note = "quoted constant only";
  rows.push_back(sqrt_d);

  Table1Row small_r;
  small_r.label = "small_r (r=1)";
  small_r.threshold = 2.0 * small_r_hb(1, d);
  small_r.normalized = std::sqrt(small_r_ratio(1, d) * std::pow(0.5, dd));
  small_r.quoted_threshold = "1.01 sqrt(d+2)";
  small_r.quoted_bound = "(1/2) d^{-d/4}";
  rows.push_back(small_r);

  Table1Row log_d;
  log_d.label = "prior work: logarithmic separation";
  log_d.quoted_threshold = "3 + 2 log d";
  log_d.quoted_bound = "is positive";
  log_d.evaluable = false;
  log_d.note = "quoted constant only";
  rows.push_back(log_d);

  Table1Row ingham;
  ingham.label = "ingham";
  ingham.threshold = ingham_threshold(d);
  ingham.normalized = ingham_normalized(d);
  ingham.quoted_threshold = "4.5 + 2.6 log d";
  ingham.quoted_bound = "5.6^{-d} (1 + log d)^{-d/4}";
  rows.push_back(ingham);

  return rows;
}

Table2 table2() {
  Table2 t;
  for (int r = 1; r <= 3; ++r) {
    for (int d = 1; d <= 3; ++d) {
      const double cond = 2.0 * small_r_hb(r, d);
      const double bound = std::sqrt(small_r_ratio(r, d) * std::pow(0.5, d));
      t.condition_exact[r - 1][d - 1] = cond;
      t.bound_exact[r - 1][d - 1] = bound;
      // thresholds round up and bounds round down, so the printed table stays valid
      t.condition[r - 1][d - 1] = std::ceil(cond * 1000.0) / 1000.0;
      t.bound[r - 1][d - 1] = std::floor(bound * 1000.0) / 1000.0;
    }
  }
  return t;
}

}  // namespace vandal
