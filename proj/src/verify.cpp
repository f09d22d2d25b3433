#include "vandal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "vandal/errors.hpp"
#include "vandal/localizer.hpp"
#include "vandal/parallel.hpp"
#include "vandal/vandermonde.hpp"

namespace vandal {

namespace {

constexpr int kMaxDegree = 64;
constexpr int kMaxNodes = 12;

double relative_error(double value, double reference) {
  const double scale = std::max(std::abs(reference), std::numeric_limits<double>::min());
  return std::abs(value - reference) / scale;
}

// Records one check. margin >= 0 passes.
void record(SuiteReport& report, double margin, const char* check, const Json& instance) {
  ++report.checks;
  if (report.checks == 1 || margin < report.worst_margin) report.worst_margin = margin;
  if (!(margin >= 0.0)) {
    ++report.violations;
    Json failure;
    failure["check"] = check;
    failure["margin"] = margin;
    failure["instance"] = instance;
    report.failures.push_back(std::move(failure));
  }
}

// Margin of a tolerance check err <= tol, scaled to tolerance units.
double tolerance_margin(double err, double tol) { return 1.0 - err / tol; }

struct Plan {
  int d_lo = 1;
  int d_hi = 3;
  bool even_n = false;
};

Plan plan_for(TheoremId theorem) {
  switch (theorem) {
    case TheoremId::separated_d1_min: return {1, 1, false};
    case TheoremId::kernel:
    case TheoremId::kernel_zeta: return {2, 3, true};
    default: return {1, 3, false};
  }
}

BoundReport evaluate(TheoremId theorem, int r, int n, double q, int d, int m) {
  switch (theorem) {
    case TheoremId::separated_d1_min: return separated_bounds(n, q, d).sigma_min;
    case TheoremId::separated_max: return separated_bounds(n, q, d).sigma_max;
    case TheoremId::ingham: return ingham_bound(n, q, d);
    case TheoremId::small_r: return small_r_bound(n, q, d, r);
    case TheoremId::cluster_specialization: return cluster_specialization_bound(n, q, d, m);
    case TheoremId::kernel: return kernel_bound(n, q, d);
    case TheoremId::kernel_zeta: return kernel_zeta_bound(n, q, d);
    default: throw InvalidInput("soundness sweep has no node-based hypothesis for " +
                                std::string(to_string(theorem)));
  }
}

// Smallest q making the hypothesis hold at (N, d), before the 1/2 cap.
double minimal_separation(TheoremId theorem, int r, int n, int d) {
  const BoundReport probe = evaluate(theorem, r, n, 0.5, d, 2);
  const double scale = probe.form == ConditionForm::q_times_n_minus_1 ? n - 1.0 : n;
  const double q = probe.condition_rhs / scale;
  return probe.strict ? q * (1.0 + 1e-9) : q;
}

Json instance_json(const SoundnessInstance& inst) {
  Json j;
  j["theorem"] = std::string(to_string(inst.theorem));
  if (inst.theorem == TheoremId::small_r) j["r"] = inst.r;
  j["n"] = inst.n;
  j["d"] = inst.d;
  j["m"] = inst.nodes.size();
  j["seed"] = inst.seed;
  j["nodes"] = to_json(inst.nodes);
  return j;
}

}  // namespace

void SuiteReport::merge(const SuiteReport& other) {
  if (other.checks == 0) return;
  worst_margin = checks == 0 ? other.worst_margin : std::min(worst_margin, other.worst_margin);
  checks += other.checks;
  violations += other.violations;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

Json to_json(const SuiteReport& report) {
  Json j;
  j["suite"] = report.name;
  j["checks"] = report.checks;
  j["violations"] = report.violations;
  j["worst_margin"] = report.worst_margin;
  j["passed"] = report.passed();
  j["failures"] = report.failures;
  return j;
}

SoundnessInstance soundness_instance(TheoremId theorem, int r, std::uint64_t seed) {
  const Plan plan = plan_for(theorem);
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int d = static_cast<int>(rng.uniform_int(plan.d_lo, plan.d_hi));
    // densest set we may draw has two nodes
    const double q_cap = std::min(0.5, std::pow(0.25, 1.0 / d));
    int n_lo = 2;
    while (n_lo <= kMaxDegree && minimal_separation(theorem, r, n_lo, d) > q_cap) ++n_lo;
    if (theorem == TheoremId::cluster_specialization) {
      n_lo = std::max(n_lo, 2 * (d + 2) * (d + 2) + 1);
    }
    if (n_lo > kMaxDegree) continue;
    int n = static_cast<int>(rng.uniform_int(n_lo, kMaxDegree));
    if (plan.even_n && n % 2 != 0) n = n + 1 <= kMaxDegree ? n + 1 : n - 1;
    const double q_min = minimal_separation(theorem, r, n, d);
    if (q_min > q_cap) continue;
    const double q_target = q_min + rng.uniform() * (std::min(q_cap, 2.0 * q_min) - q_min);

    int m_hi = static_cast<int>(std::floor(0.5 / std::pow(q_target, d)));
    m_hi = std::min(m_hi, kMaxNodes);
    if (theorem == TheoremId::cluster_specialization) m_hi = std::min(m_hi, n - 1);
    if (m_hi < 2) continue;
    int m = static_cast<int>(rng.uniform_int(2, m_hi));
    const std::uint64_t node_seed = rng.next();
    for (; m >= 2; --m) {
      try {
        NodeSet nodes = gen_random_separated(static_cast<std::size_t>(m), static_cast<std::size_t>(d),
                                             q_target, node_seed);
        BoundReport report = evaluate(theorem, r, n, separation(nodes), d, m);
        if (!report.applicable) break;
        return {theorem, r, n, d, seed, std::move(nodes), std::move(report)};
      } catch (const FeasibilityError&) {
      }
    }
  }
  throw FeasibilityError("soundness_instance: no admissible instance for " +
                         std::string(to_string(theorem)));
}

SuiteReport soundness_sweep(TheoremId theorem, int r, std::size_t instances, std::uint64_t seed,
                            double tolerance) {
  struct Outcome {
    double margin = 0.0;
    Json instance;
  };
  const auto stream = static_cast<std::uint64_t>(theorem) * 16 + static_cast<std::uint64_t>(r);
  std::vector<Outcome> outcomes(instances);
  parallel_for(instances, [&](std::size_t i) {
    const std::uint64_t s = derive_seed(derive_seed(seed, stream), i);
    SoundnessInstance inst = soundness_instance(theorem, r, s);
    const SpectralResult sp = spectrum(VandermondeSpec(inst.nodes, static_cast<std::uint64_t>(inst.n)));
    const double bound = *inst.report.bound;
    double margin = 0.0;
    if (inst.report.target == BoundTarget::sigma_max_upper) {
      margin = (bound * (1.0 + tolerance) - sp.sigma_max) / bound;
    } else {
      margin = (sp.sigma_min - bound * (1.0 - tolerance)) / bound;
    }
    Json j = instance_json(inst);
    j["bound"] = bound;
    j["sigma_min"] = sp.sigma_min;
    j["sigma_max"] = sp.sigma_max;
    outcomes[i] = {margin, std::move(j)};
  });
  SuiteReport report;
  report.name = std::string(to_string(theorem));
  if (theorem == TheoremId::small_r) report.name += "_r" + std::to_string(r);
  for (const auto& o : outcomes) record(report, o.margin, "soundness", o.instance);
  return report;
}

SuiteReport verify_spectral(const VerifyOptions& options) {
  SuiteReport report;
  report.name = "spectral";

  struct Outcome {
    std::vector<std::pair<const char*, double>> margins;
    Json instance;
  };
  std::vector<Outcome> outcomes(options.instances);
  parallel_for(options.instances, [&](std::size_t i) {
    Rng rng(derive_seed(derive_seed(options.seed, 101), i));
    const int d = static_cast<int>(rng.uniform_int(1, 3));
    const int n = static_cast<int>(rng.uniform_int(1, 8));
    // at most N^d nodes, so the matrix has full row rank
    const int cap = static_cast<int>(std::min(20.0, std::pow(n, d)));
    const int m = static_cast<int>(rng.uniform_int(1, cap));
    const double q_target = std::min(0.5, 0.5 * std::pow(0.5 / m, 1.0 / d));
    const NodeSet nodes = gen_random_separated(static_cast<std::size_t>(m), static_cast<std::size_t>(d),
                                               q_target, rng.next());
    const VandermondeSpec spec(nodes, static_cast<std::uint64_t>(n));
    SpectrumOptions opts;
    opts.cross_check = true;
    const SpectralResult sp = spectrum(spec, opts);

    Outcome out;
    out.instance["n"] = n;
    out.instance["nodes"] = to_json(nodes);
    out.instance["sigma_min"] = sp.sigma_min;
    out.instance["sigma_max"] = sp.sigma_max;
    out.margins.emplace_back("dual_path", tolerance_margin(sp.residual, options.dual_path_tolerance));
    const double flat = std::pow(n, 0.5 * d);
    out.margins.emplace_back("trivial_min", (flat * (1.0 + 1e-10) - sp.sigma_min) / flat);
    out.margins.emplace_back("trivial_max", (sp.sigma_max - flat * (1.0 - 1e-10)) / flat);
    if (m >= 2) {
      const auto sep = separated_bounds(n, separation(nodes), d);
      if (sep.sigma_max.applicable) {
        const double b = *sep.sigma_max.bound;
        out.margins.emplace_back("separated_max", (b * (1.0 + 1e-10) - sp.sigma_max) / b);
      }
      if (sep.sigma_min.applicable) {
        const double b = *sep.sigma_min.bound;
        out.margins.emplace_back("separated_min", (sp.sigma_min - b * (1.0 - 1e-10)) / b);
      }
    }
    outcomes[i] = std::move(out);
  });
  for (const auto& o : outcomes) {
    for (const auto& [check, margin] : o.margins) record(report, margin, check, o.instance);
  }

  for (int d = 1; d <= 3; ++d) {
    for (int m = 1; m <= 4; ++m) {
      for (int n = m; n <= 8; ++n) {
        const auto exact = equispaced_exact(n, m, d);
        const SpectralResult sp =
            spectrum(VandermondeSpec(gen_equispaced(static_cast<std::size_t>(m), static_cast<std::size_t>(d)),
                                     static_cast<std::uint64_t>(n)));
        Json inst;
        inst["m"] = m;
        inst["n"] = n;
        inst["d"] = d;
        const double err = std::max(relative_error(sp.sigma_min, exact->sigma_min),
                                    relative_error(sp.sigma_max, exact->sigma_max));
        record(report, tolerance_margin(err, 1e-10), "equispaced_exact", inst);
      }
    }
  }

  for (std::uint64_t k = 0; k < 10; ++k) {
    const std::size_t n = 3 + k % 6;
    const std::size_t d = 2 + k % 2;
    const NodeSet nodes = gen_quasi_grid(n, d, derive_seed(options.seed, 500 + k));
    const SpectralResult sp = spectrum(VandermondeSpec(nodes, n));
    Json inst;
    inst["n"] = n;
    inst["nodes"] = to_json(nodes);
    record(report, tolerance_margin(sp.cond - 1.0, 1e-10), "quasi_grid_cond", inst);
  }
  return report;
}

SuiteReport verify_psi(const VerifyOptions& options) {
  SuiteReport report;
  report.name = "psi";
  constexpr int kSamples = 1000;

  for (int r = 1; r <= 3; ++r) {
    for (int d = 1; d <= 4; ++d) {
      for (int regime = 0; regime < 2; ++regime) {
        PsiParams params{d, r, 1.0, 0.0};
        params.h = h_for_p_rule(r, d, params.b) * (regime == 0 ? 1.0 : 1.5);
        Json inst;
        inst["r"] = r;
        inst["d"] = d;
        inst["b"] = params.b;
        inst["h"] = params.h;

        const Localizer psi(params);
        const std::vector<double> zero(static_cast<std::size_t>(d), 0.0);
        const double p0 = psi_at_zero(params);
        const double ph0 = psi_hat_at_zero(params);
        record(report, tolerance_margin(relative_error(psi(zero), p0), 1e-9), "psi_at_zero", inst);
        record(report, tolerance_margin(relative_error(psi_hat(zero, params), ph0), 1e-9),
               "psi_hat_at_zero", inst);
        record(report,
               tolerance_margin(relative_error(ratio_closed_form(params).value, p0 / ph0), 1e-12),
               "ratio_closed_form", inst);

        Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(1000 + 100 * r + 10 * d + regime)));
        double sign_margin = std::numeric_limits<double>::infinity();
        double max_margin = std::numeric_limits<double>::infinity();
        double sym_margin = std::numeric_limits<double>::infinity();
        std::vector<double> v(static_cast<std::size_t>(d));
        std::vector<double> x(static_cast<std::size_t>(d));
        std::vector<double> minus_x(static_cast<std::size_t>(d));
        const int p = params.p();
        for (int k = 0; k < kSamples; ++k) {
          // frequencies up to twice the ball radius, so both sides are sampled
          double norm_p = 0.0;
          for (auto& vs : v) {
            vs = (2.0 * rng.uniform() - 1.0) * 2.0 * params.b;
            norm_p += std::pow(std::abs(vs), p);
          }
          norm_p = std::pow(norm_p, 1.0 / p);
          const double value = psi_hat(v, params) / ph0;
          if (norm_p <= params.b) {
            sign_margin = std::min(sign_margin, value + 1e-12);
          } else {
            sign_margin = std::min(sign_margin, 1e-12 - value);
          }
          max_margin = std::min(max_margin, 1.0 + 1e-12 - value);
          for (std::size_t s = 0; s < x.size(); ++s) {
            x[s] = (2.0 * rng.uniform() - 1.0) * params.h;
            minus_x[s] = -x[s];
          }
          sym_margin = std::min(sym_margin,
                                tolerance_margin(std::abs(psi(x) - psi(minus_x)) / std::abs(p0), 1e-12));
        }
        record(report, sign_margin, "psi_hat_sign_pattern", inst);
        record(report, max_margin, "psi_hat_maximality", inst);
        record(report, sym_margin, "psi_symmetry", inst);
      }
    }
  }

  // Poisson identity on h-separated nodes. With b <= T + 1 for the smallest T every
  // term dropped by truncation has ||nu||_p > b, hence psi_hat(nu) <= 0.
  for (int r = 1; r <= 2; ++r) {
    for (int d = 1; d <= 2; ++d) {
      PsiParams params{d, r, 0.0, 0.0};
      params.b = 3.0;
      params.h = std::min(h_for_p_rule(r, d, params.b), 0.45);
      // shifted 2^d grid with separation 1/2
      Rng shift(derive_seed(options.seed, 2000 + 10 * r + d));
      const NodeSet grid = gen_equispaced(2, static_cast<std::size_t>(d));
      std::vector<double> coords = grid.coords();
      std::vector<double> offset(static_cast<std::size_t>(d));
      for (auto& o : offset) o = shift.uniform();
      for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += offset[i % offset.size()];
      const NodeSet nodes(static_cast<std::size_t>(d), std::move(coords));
      const std::size_t m = nodes.size();
      const VandermondeSpec spec(nodes, 8);
      Rng rng(derive_seed(options.seed, 3000 + 10 * r + d));
      std::vector<std::complex<double>> u(m);
      for (auto& uj : u) uj = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
      Json inst;
      inst["r"] = r;
      inst["d"] = d;
      inst["b"] = params.b;
      inst["h"] = params.h;
      inst["nodes"] = to_json(nodes);

      double previous = std::numeric_limits<double>::infinity();
      double monotone_margin = std::numeric_limits<double>::infinity();
      double identity_margin = std::numeric_limits<double>::infinity();
      for (int t : {2, 4, 8}) {
        const PoissonDiagnostic diag = poisson_check(spec, params, u, t);
        identity_margin = std::min(identity_margin,
                                   tolerance_margin(relative_error(diag.mid, diag.rhs), 1e-10));
        const double gap = std::abs(diag.lhs - diag.mid);
        monotone_margin = std::min(monotone_margin, (previous - gap) / std::abs(diag.rhs));
        previous = gap;
      }
      record(report, identity_margin, "poisson_mid_equals_rhs", inst);
      record(report, monotone_margin, "poisson_truncation_monotone", inst);
    }
  }
  return report;
}

SuiteReport verify_bounds(const VerifyOptions& options) {
  SuiteReport report;
  report.name = "bounds";
  struct Case {
    TheoremId theorem;
    int r;
  };
  const Case cases[] = {
      {TheoremId::separated_d1_min, 0}, {TheoremId::separated_max, 0},
      {TheoremId::ingham, 0},           {TheoremId::small_r, 1},
      {TheoremId::small_r, 2},          {TheoremId::small_r, 3},
      {TheoremId::cluster_specialization, 0}, {TheoremId::kernel, 0},
      {TheoremId::kernel_zeta, 0},
  };
  for (const auto& c : cases) {
    report.merge(soundness_sweep(c.theorem, c.r, options.instances, options.seed,
                                 options.soundness_tolerance));
  }
  return report;
}

std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options) {
  if (name == "spectral") return {verify_spectral(options)};
  if (name == "psi") return {verify_psi(options)};
  if (name == "bounds") return {verify_bounds(options)};
  if (name == "all") return {verify_spectral(options), verify_psi(options), verify_bounds(options)};
  throw InvalidInput("unknown suite: " + std::string(name));
}

}  // namespace vandal
