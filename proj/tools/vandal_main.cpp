// vandal: conditioning of multivariate Vandermonde matrices with nodes on the torus.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vandal/bounds.hpp"
#include "vandal/errors.hpp"
#include "vandal/localizer.hpp"
#include "vandal/parallel.hpp"
#include "vandal/serialize.hpp"
#include "vandal/torus_nodes.hpp"
#include "vandal/vandermonde.hpp"
#include "vandal/verify.hpp"

namespace {

using vandal::Json;

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResource = 3 };

struct Global {
  std::uint64_t seed = 1;
  std::string format = "auto";
  std::uint64_t explicit_cap = vandal::kDefaultExplicitCap;
  std::string out;
  int csv_digits = 6;
};

std::string resolved_format(const Global& g, const char* fallback) {
  return g.format == "auto" ? fallback : g.format;
}

// ---- tabular output -------------------------------------------------------

std::string csv_field(const Json& v, int digits) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return vandal::format_number(v.get<double>(), digits);
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  if (v.is_structured()) return csv_field(Json(vandal::dump_json(v, -1)), digits);
  return v.dump();
}

std::string render_csv(const std::vector<Json>& rows, int digits) {
  if (rows.empty()) return "";
  std::vector<std::string> header;
  for (const auto& row : rows) {
    for (const auto& [key, value] : row.items()) {
      if (std::find(header.begin(), header.end(), key) == header.end()) header.push_back(key);
    }
  }
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    out += (i ? "," : "") + csv_field(Json(header[i]), digits);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out += ',';
      if (row.contains(header[i])) out += csv_field(row[header[i]], digits);
    }
    out += '\n';
  }
  return out;
}

std::string render_text(const std::vector<Json>& rows) {
  std::string out;
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& [key, value] : row.items()) {
      out += first ? "" : "  ";
      first = false;
      out += key + "=";
      if (value.is_null()) {
        out += "-";
      } else if (value.is_number_float()) {
        out += vandal::format_number(value.get<double>(), 10);
      } else if (value.is_string()) {
        out += value.get<std::string>();
      } else {
        out += vandal::dump_json(value, -1);
      }
    }
    out += '\n';
  }
  return out;
}

std::string render(const Global& g, const char* fallback, const Json& document,
                   const std::vector<Json>& rows) {
  const std::string fmt = resolved_format(g, fallback);
  if (fmt == "json") return vandal::dump_json(document) + "\n";
  if (fmt == "csv") return render_csv(rows, g.csv_digits);
  return render_text(rows);
}

void write_output(const Global& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw vandal::InvalidInput("cannot open output file: " + g.out);
  file << text;
}

vandal::NodeSet load_nodes(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return vandal::parse_nodeset(text);
  }
  return vandal::read_nodeset_file(path);
}

std::optional<double> separation_or_none(const vandal::NodeSet& nodes) {
  if (nodes.size() < 2) return std::nullopt;
  return vandal::separation(nodes);
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t m = 0;
  std::size_t d = 1;
  std::size_t n = 0;
  double q = 0.0;
  std::optional<std::size_t> count;
  std::optional<std::size_t> max_attempts;
  std::size_t cardinality_cap = vandal::kDefaultCardinalityCap;
};

int run_gen(const Global& g, const GenArgs& a) {
  std::optional<vandal::NodeSet> nodes;
  if (a.kind == "equispaced") {
    if (a.m == 0) throw vandal::InvalidInput("gen equispaced needs --m");
    nodes = vandal::gen_equispaced(a.m, a.d, a.cardinality_cap);
  } else if (a.kind == "quasi-grid") {
    if (a.n == 0) throw vandal::InvalidInput("gen quasi-grid needs --n");
    nodes = vandal::gen_quasi_grid(a.n, a.d, g.seed, a.count);
  } else {
    if (a.m == 0 || !(a.q > 0.0)) throw vandal::InvalidInput("gen random needs --m and --q");
    nodes = vandal::gen_random_separated(a.m, a.d, a.q, g.seed, a.max_attempts);
  }

  const std::string fmt = resolved_format(g, "json");
  std::string text;
  if (fmt == "json") {
    text = vandal::dump_json(vandal::to_json(*nodes)) + "\n";
  } else if (fmt == "csv") {
    for (std::size_t s = 0; s < nodes->dim(); ++s) text += (s ? ",t" : "t") + std::to_string(s + 1);
    text += '\n';
    for (std::size_t j = 0; j < nodes->size(); ++j) {
      auto t = nodes->node(j);
      for (std::size_t s = 0; s < t.size(); ++s) {
        text += (s ? "," : "") + vandal::format_number(t[s], 17);
      }
      text += '\n';
    }
  } else {
    text = vandal::nodeset_to_text(*nodes);
  }
  write_output(g, text);

  const auto q = nodes->cached_separation();
  std::ostream& echo = g.out.empty() || g.out == "-" ? std::cerr : std::cout;
  echo << "nodes=" << nodes->size() << " separation="
       << (q ? vandal::format_number(*q, 17) : std::string("n/a")) << "\n";
  return kOk;
}

// ---- spectrum -------------------------------------------------------------

struct SpectrumArgs {
  std::string nodes;
  std::uint64_t n = 0;
  std::string path = "gram";
  bool cross_check = false;
};

int run_spectrum(const Global& g, const SpectrumArgs& a) {
  const vandal::NodeSet nodes = load_nodes(a.nodes);
  vandal::SpectrumOptions opts;
  opts.path = a.path == "explicit" ? vandal::SpectralPath::explicit_matrix : vandal::SpectralPath::gram;
  opts.cross_check = a.cross_check;
  opts.explicit_cap = g.explicit_cap;
  const vandal::VandermondeSpec spec(nodes, a.n);
  const vandal::SpectralResult result = vandal::spectrum(spec, opts);

  Json doc = vandal::to_json(result);
  Json row;
  row["m"] = nodes.size();
  row["d"] = nodes.dim();
  row["n"] = a.n;
  const auto q = separation_or_none(nodes);
  row["q"] = q ? Json(*q) : Json(nullptr);
  for (const auto& [key, value] : doc.items()) row[key] = value;
  write_output(g, render(g, "json", doc, {row}));
  return kOk;
}

// ---- bound ----------------------------------------------------------------

struct BoundArgs {
  std::string nodes;
  int n = 0;
  std::optional<double> q;
  std::optional<int> d;
  std::optional<int> m;
  std::string theorem = "all";
  std::optional<int> r;
};

int run_bound(const Global& g, const BoundArgs& a) {
  double q = 0.0;
  int d = 0;
  int m = 0;
  if (!a.nodes.empty()) {
    const vandal::NodeSet nodes = load_nodes(a.nodes);
    if (nodes.size() < 2) throw vandal::InvalidInput("bound: the node set needs at least two nodes");
    q = vandal::separation(nodes);
    d = static_cast<int>(nodes.dim());
    m = static_cast<int>(nodes.size());
  } else {
    if (!a.q || !a.d) throw vandal::InvalidInput("bound: give a node file or both --q and --d");
    q = *a.q;
    d = *a.d;
    m = a.m.value_or(2);
  }

  std::vector<vandal::BoundReport> reports;
  if (a.theorem == "all") {
    if (a.r) {
      for (const auto& rep : vandal::all_bounds(a.n, q, d, m)) {
        if (rep.theorem != vandal::TheoremId::small_r || rep.r == *a.r) reports.push_back(rep);
      }
    } else {
      reports = vandal::all_bounds(a.n, q, d, m);
    }
  } else {
    reports = vandal::bounds_for(vandal::theorem_from_string(a.theorem), a.n, q, d, m, a.r);
  }

  Json doc;
  doc["n"] = a.n;
  doc["q"] = q;
  doc["d"] = d;
  doc["m"] = m;
  Json list = Json::array();
  std::vector<Json> rows;
  for (const auto& rep : reports) {
    Json j = vandal::to_json(rep);
    list.push_back(j);
    Json row;
    row["n"] = a.n;
    row["q"] = q;
    row["d"] = d;
    row["m"] = m;
    for (const auto& [key, value] : j.items()) row[key] = value;
    if (!row.contains("r")) row["r"] = nullptr;
    rows.push_back(std::move(row));
  }
  doc["bounds"] = std::move(list);
  write_output(g, render(g, "json", doc, rows));
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::size_t instances = 200;
  double soundness_tolerance = 1e-9;
  double dual_path_tolerance = 1e-8;
};

int run_verify(const Global& g, const VerifyArgs& a) {
  vandal::VerifyOptions opts;
  opts.instances = a.instances;
  opts.seed = g.seed;
  opts.soundness_tolerance = a.soundness_tolerance;
  opts.dual_path_tolerance = a.dual_path_tolerance;
  const auto reports = vandal::run_suites(a.suite, opts);

  bool passed = true;
  Json doc;
  Json suites = Json::array();
  std::vector<Json> rows;
  for (const auto& rep : reports) {
    passed = passed && rep.passed();
    suites.push_back(vandal::to_json(rep));
    Json row;
    row["suite"] = rep.name;
    row["checks"] = rep.checks;
    row["violations"] = rep.violations;
    row["worst_margin"] = rep.worst_margin;
    row["passed"] = rep.passed();
    rows.push_back(std::move(row));
  }
  doc["seed"] = g.seed;
  doc["instances"] = a.instances;
  doc["passed"] = passed;
  doc["suites"] = std::move(suites);
  const std::string fmt = resolved_format(g, "json");
  write_output(g, render(g, "json", doc, rows));
  if (fmt != "json") {
    // offending instances go to stderr so they can be replayed
    for (const auto& rep : reports) {
      for (const auto& f : rep.failures) std::cerr << vandal::dump_json(f, -1) << "\n";
    }
  }
  return passed ? kOk : kVerificationFailed;
}

// ---- tables ---------------------------------------------------------------

struct TablesArgs {
  int which = 2;
  std::vector<int> dims{1, 2, 3, 4, 5};
};

int run_tables(const Global& g, const TablesArgs& a) {
  Json doc;
  std::vector<Json> rows;
  if (a.which == 2) {
    const auto t = vandal::table2();
    Json grid = Json::array();
    for (int r = 1; r <= 3; ++r) {
      Json row;
      row["r"] = r;
      for (int d = 1; d <= 3; ++d) {
        row["q(N-1) >= d=" + std::to_string(d)] = t.condition[r - 1][d - 1];
      }
      for (int d = 1; d <= 3; ++d) {
        row["sigma_min(A)(N-1)^(-d/2) >= d=" + std::to_string(d)] = t.bound[r - 1][d - 1];
      }
      rows.push_back(row);
      Json exact;
      exact["r"] = r;
      exact["condition"] = std::vector<double>(t.condition[r - 1].begin(), t.condition[r - 1].end());
      exact["bound"] = std::vector<double>(t.bound[r - 1].begin(), t.bound[r - 1].end());
      exact["condition_exact"] =
          std::vector<double>(t.condition_exact[r - 1].begin(), t.condition_exact[r - 1].end());
      exact["bound_exact"] = std::vector<double>(t.bound_exact[r - 1].begin(), t.bound_exact[r - 1].end());
      grid.push_back(std::move(exact));
    }
    doc["table"] = 2;
    doc["rows"] = std::move(grid);
  } else if (a.which == 1) {
    Json list = Json::array();
    for (int d : a.dims) {
      for (const auto& entry : vandal::table1(d)) {
        Json row;
        row["d"] = d;
        row["row"] = entry.label;
        row["q(N-1) >="] = entry.quoted_threshold;
        row["sigma_min(A)(N-1)^(-d/2) >="] = entry.quoted_bound;
        row["condition_form"] = std::string(vandal::to_string(entry.form));
        row["threshold"] = entry.threshold ? Json(*entry.threshold) : Json(nullptr);
        row["normalized"] = entry.normalized ? Json(*entry.normalized) : Json(nullptr);
        row["evaluable"] = entry.evaluable;
        row["note"] = entry.note;
        list.push_back(row);
        rows.push_back(std::move(row));
      }
    }
    doc["table"] = 1;
    doc["rows"] = std::move(list);
  } else {
    throw vandal::InvalidInput("tables: --which must be 1 or 2");
  }
  write_output(g, render(g, "csv", doc, rows));
  return kOk;
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
  std::string vary;
  double from = 0.0;
  double to = 0.0;
  int steps = 10;
  std::vector<double> values;
  std::string nodes;
  int n = 64;
  int d = 1;
  int m = 4;
  double q = 0.05;
};

std::vector<double> sweep_values(const SweepArgs& a) {
  if (!a.values.empty()) return a.values;
  if (a.steps < 1) throw vandal::InvalidInput("sweep: --steps must be positive");
  std::vector<double> v;
  for (int i = 0; i < a.steps; ++i) {
    v.push_back(a.steps == 1 ? a.from : a.from + (a.to - a.from) * i / (a.steps - 1));
  }
  if (a.vary != "q") {
    for (double& x : v) x = std::round(x);
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return v;
}

Json sweep_row(const std::string& vary, double value, const vandal::NodeSet& nodes, int n) {
  const int d = static_cast<int>(nodes.dim());
  const int m = static_cast<int>(nodes.size());
  const vandal::SpectralResult sp = vandal::spectrum(vandal::VandermondeSpec(nodes, static_cast<std::uint64_t>(n)));
  Json row;
  row[vary] = value;
  row["n"] = n;
  row["d"] = d;
  row["m"] = m;
  const auto q = separation_or_none(nodes);
  row["q"] = q ? Json(*q) : Json(nullptr);
  row["sigma_min"] = sp.sigma_min;
  row["sigma_max"] = sp.sigma_max;
  row["cond"] = sp.cond_infinite() ? Json(nullptr) : Json(sp.cond);
  if (!q) return row;
  for (const auto& rep : vandal::all_bounds(n, *q, d, m)) {
    if (rep.theorem == vandal::TheoremId::trivial) continue;
    std::string key(vandal::to_string(rep.theorem));
    if (rep.theorem == vandal::TheoremId::small_r) key += "_r" + std::to_string(rep.r);
    row[key] = rep.bound ? Json(*rep.bound) : Json(nullptr);
  }
  return row;
}

// Random set whose closest pair is exactly q apart: M-1 darts at separation
// >= q, then one node placed at distance q from the first along an axis.
vandal::NodeSet nodes_with_separation(int m, int d, double q, std::uint64_t seed) {
  const auto dim = static_cast<std::size_t>(d);
  if (m < 2) return vandal::gen_random_separated(static_cast<std::size_t>(m), dim, q, seed);
  if (m * std::pow(q, d) > 0.5) {
    throw vandal::FeasibilityError("sweep: density guard M*q^d <= 1/2 violated");
  }
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    const auto base = vandal::gen_random_separated(static_cast<std::size_t>(m - 1), dim, q,
                                                   vandal::derive_seed(seed, attempt));
    for (std::size_t axis = 0; axis < dim; ++axis) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> extra(base.node(0).begin(), base.node(0).end());
        extra[axis] = vandal::reduce_to_torus(extra[axis] + sign * q);
        bool clear = true;
        for (std::size_t j = 1; j < base.size() && clear; ++j) {
          clear = vandal::wrap_distance(extra, base.node(j)) >= q;
        }
        if (!clear) continue;
        std::vector<double> coords = base.coords();
        coords.insert(coords.end(), extra.begin(), extra.end());
        return vandal::NodeSet(dim, std::move(coords));
      }
    }
  }
  throw vandal::FeasibilityError("sweep: no node set with separation exactly q found");
}

int run_sweep(const Global& g, const SweepArgs& a) {
  const auto values = sweep_values(a);
  std::vector<Json> rows;
  if (a.vary == "q") {
    for (double q : values) {
      const auto nodes = nodes_with_separation(a.m, a.d, q, g.seed);
      rows.push_back(sweep_row("q_target", q, nodes, a.n));
    }
  } else if (a.vary == "n") {
    const vandal::NodeSet nodes =
        a.nodes.empty() ? nodes_with_separation(a.m, a.d, a.q, g.seed) : load_nodes(a.nodes);
    for (double n : values) {
      if (n < 1) throw vandal::InvalidInput("sweep: degrees must be positive");
      rows.push_back(sweep_row("degree", n, nodes, static_cast<int>(n)));
    }
  } else {
    for (double d : values) {
      if (d < 1) throw vandal::InvalidInput("sweep: dimensions must be positive");
      const auto nodes = nodes_with_separation(a.m, static_cast<int>(d), a.q, g.seed);
      rows.push_back(sweep_row("dimension", d, nodes, a.n));
    }
  }
  Json doc;
  doc["vary"] = a.vary;
  doc["rows"] = rows;
  write_output(g, render(g, "csv", doc, rows));
  return kOk;
}

// ---- psi ------------------------------------------------------------------

struct PsiArgs {
  int d = 1;
  int r = 1;
  double b = 1.0;
  std::optional<double> h;
  std::string regime = "p-rule";
  std::string nodes;
  std::uint64_t n = 8;
  std::optional<int> truncation;
};

int run_psi(const Global& g, const PsiArgs& a) {
  vandal::PsiParams params{a.d, a.r, a.b, 0.0};
  if (a.regime == "explicit") {
    if (!a.h) throw vandal::InvalidInput("psi: --h-regime explicit needs --h");
    params.h = *a.h;
  } else {
    if (a.regime == "log-d-rule") params.r = vandal::r_for_log_d(a.d);
    params.h = vandal::h_for_p_rule(params.r, params.dim, params.b);
  }
  params.validate();

  Json doc;
  doc["d"] = params.dim;
  doc["r"] = params.r;
  doc["b"] = params.b;
  doc["h"] = params.h;
  doc["positivity_guaranteed"] = params.positivity_guaranteed();
  doc["psi_at_zero"] = vandal::psi_at_zero(params);
  doc["psi_hat_at_zero"] = vandal::psi_hat_at_zero(params);
  const auto ratio = vandal::ratio_closed_form(params);
  doc["ratio"] = ratio.value;
  doc["ratio_nonpositive"] = ratio.nonpositive;
  doc["lower_bound_general"] = vandal::ratio_lower_bounds(params, vandal::RatioRegime::general);
  if (a.regime != "explicit") {
    doc["lower_bound_h_of_p"] = vandal::ratio_lower_bounds(params, vandal::RatioRegime::h_of_p);
  }
  if (a.regime == "log-d-rule") {
    doc["lower_bound_log_d"] = vandal::ratio_lower_bounds(params, vandal::RatioRegime::log_d);
  }
  if (!a.nodes.empty()) {
    const vandal::NodeSet nodes = load_nodes(a.nodes);
    const vandal::VandermondeSpec spec(nodes, a.n);
    vandal::Rng rng(g.seed);
    std::vector<std::complex<double>> u(nodes.size());
    for (auto& uj : u) uj = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
    doc["poisson"] = vandal::to_json(vandal::poisson_check(spec, params, u, a.truncation));
  }
  Json row;
  for (const auto& [key, value] : doc.items()) {
    if (key == "poisson") {
      for (const auto& [k2, v2] : value.items()) row["poisson_" + k2] = v2;
    } else {
      row[key] = value;
    }
  }
  write_output(g, render(g, "json", doc, {row}));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditioning of multivariate Vandermonde matrices with nodes on the torus"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a TOML/INI run configuration");
  bool save_config = false;
  app.add_flag("--save-config", save_config, "Print the effective run configuration and exit")
      ->configurable(false);

  Global g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"auto", "json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--explicit-cap", g.explicit_cap, "Largest M*N^d for the explicit matrix")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.add_option("--csv-digits", g.csv_digits, "Significant digits in CSV output")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a node set")->configurable();
  gen_cmd->add_option("kind", gen.kind, "equispaced, quasi-grid or random")
      ->required()
      ->check(CLI::IsMember({"equispaced", "quasi-grid", "random"}));
  gen_cmd->add_option("--m", gen.m, "Nodes per axis (equispaced) or node count (random)");
  gen_cmd->add_option("--d", gen.d, "Dimension")->check(CLI::PositiveNumber)->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Degree the quasi-grid is built for");
  gen_cmd->add_option("--q", gen.q, "Target separation (random)");
  gen_cmd->add_option("--count", gen.count, "Number of quasi-grid nodes (at most N)");
  gen_cmd->add_option("--max-attempts", gen.max_attempts, "Dart-throwing attempt cap");
  gen_cmd->add_option("--cardinality-cap", gen.cardinality_cap, "Largest equispaced grid")
      ->capture_default_str();

  SpectrumArgs spec;
  auto* spec_cmd = app.add_subcommand("spectrum", "Extremal singular values of A_N")->configurable();
  spec_cmd->add_option("nodes", spec.nodes, "Node file (JSON or text, - for stdin)")->required();
  spec_cmd->add_option("--n", spec.n, "Degree N")->required()->check(CLI::PositiveNumber);
  spec_cmd->add_option("--path", spec.path, "Spectral path")
      ->check(CLI::IsMember({"gram", "explicit"}))
      ->capture_default_str();
  spec_cmd->add_flag("--cross-check", spec.cross_check, "Also run the other path and report the gap");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate singular value bounds")->configurable();
  bound_cmd->add_option("nodes", bound.nodes, "Node file; separation, d and M are taken from it");
  bound_cmd->add_option("--n", bound.n, "Degree N")->required()->check(CLI::PositiveNumber);
  bound_cmd->add_option("--q", bound.q, "Separation (synthetic evaluation)");
  bound_cmd->add_option("--d", bound.d, "Dimension (synthetic evaluation)");
  bound_cmd->add_option("--m", bound.m, "Node count (synthetic evaluation)");
  bound_cmd->add_option("--theorem", bound.theorem, "all or a theorem id")->capture_default_str();
  bound_cmd->add_option("--r", bound.r, "Localizer order for small_r")->check(CLI::Range(1, 3));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites")->configurable();
  verify_cmd->add_option("--suite", verify.suite, "Suite to run")
      ->check(CLI::IsMember({"spectral", "psi", "bounds", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--instances", verify.instances, "Random instances per theorem")
      ->capture_default_str();
  verify_cmd->add_option("--soundness-tol", verify.soundness_tolerance, "Relative slack on bounds")
      ->capture_default_str();
  verify_cmd->add_option("--dual-path-tol", verify.dual_path_tolerance, "Gram/explicit tolerance")
      ->capture_default_str();

  TablesArgs tables;
  auto* tables_cmd = app.add_subcommand("tables", "Reproduce the comparison tables")->configurable();
  tables_cmd->add_option("--which", tables.which, "Table 1 or 2")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  tables_cmd->add_option("--d", tables.dims, "Dimensions for table 1")->capture_default_str();

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Bound-versus-spectrum curves")->configurable();
  sweep_cmd->add_option("--vary", sweep.vary, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"q", "n", "d"}));
  sweep_cmd->add_option("--from", sweep.from, "First value");
  sweep_cmd->add_option("--to", sweep.to, "Last value");
  sweep_cmd->add_option("--steps", sweep.steps, "Number of values")->capture_default_str();
  sweep_cmd->add_option("--values", sweep.values, "Explicit list of values");
  sweep_cmd->add_option("--nodes", sweep.nodes, "Fixed node file (vary n)");
  sweep_cmd->add_option("--n", sweep.n, "Degree N")->capture_default_str();
  sweep_cmd->add_option("--d", sweep.d, "Dimension")->capture_default_str();
  sweep_cmd->add_option("--m", sweep.m, "Node count")->capture_default_str();
  sweep_cmd->add_option("--q", sweep.q, "Separation of the closest pair")->capture_default_str();

  PsiArgs psi;
  auto* psi_cmd = app.add_subcommand("psi", "Localizer closed forms and Poisson diagnostic")->configurable();
  // -h would clash with --h
  psi_cmd->set_help_flag("--help", "Print this help message and exit");
  psi_cmd->add_option("--d", psi.d, "Dimension")->check(CLI::PositiveNumber)->capture_default_str();
  psi_cmd->add_option("--r", psi.r, "Order r (p = 2r)")->capture_default_str();
  psi_cmd->add_option("--b", psi.b, "Frequency radius")->capture_default_str();
  psi_cmd->add_option("--h", psi.h, "Support width of phi (explicit regime)");
  psi_cmd->add_option("--h-regime", psi.regime, "How h is chosen")
      ->check(CLI::IsMember({"explicit", "p-rule", "log-d-rule"}))
      ->capture_default_str();
  psi_cmd->add_option("--nodes", psi.nodes, "Node file for the Poisson diagnostic");
  psi_cmd->add_option("--n", psi.n, "Degree for the sandwich term")->capture_default_str();
  psi_cmd->add_option("--truncation", psi.truncation, "Frequency box half-width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (save_config) {
    std::cout << app.config_to_str(false, true);
    return kOk;
  }

  try {
    if (*gen_cmd) return run_gen(g, gen);
    if (*spec_cmd) return run_spectrum(g, spec);
    if (*bound_cmd) return run_bound(g, bound);
    if (*verify_cmd) return run_verify(g, verify);
    if (*tables_cmd) return run_tables(g, tables);
    if (*sweep_cmd) return run_sweep(g, sweep);
    if (*psi_cmd) return run_psi(g, psi);
  } catch (const vandal::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const vandal::FeasibilityError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kResource;
  } catch (const vandal::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const vandal::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kUsage;
  } catch (const vandal::ComputationError& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsage;
}
