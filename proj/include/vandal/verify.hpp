#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vandal/bounds.hpp"
#include "vandal/serialize.hpp"
#include "vandal/torus_nodes.hpp"

namespace vandal {

struct VerifyOptions {
  /// Random instances per theorem (bounds) or per suite (spectral).
  std::size_t instances = 200;
  std::uint64_t seed = 1;
  /// Relative slack granted to every bound in the soundness sweep.
  double soundness_tolerance = 1e-9;
  /// Largest accepted Gram/explicit discrepancy in the spectral suite.
  double dual_path_tolerance = 1e-8;
};

/**
 * Outcome of one property suite. A margin is positive when a check passes with
 * room to spare and negative on a violation; worst_margin is the smallest seen.
 * Every failure carries enough data to replay the instance.
 */
struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;
  std::vector<Json> failures;

  bool passed() const { return violations == 0; }
  void merge(const SuiteReport& other);
};

Json to_json(const SuiteReport& report);

/// A random node set drawn so that one theorem's hypotheses hold.
struct SoundnessInstance {
  TheoremId theorem;
  int r = 0;
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  NodeSet nodes;
  BoundReport report;
};

/**
 * Draws d in {1,2,3} (restricted by the theorem), N <= 64 and M <= 12, then a
 * separated node set whose separation makes the theorem applicable. A failed
 * dart throw is retried with one node fewer.
 */
SoundnessInstance soundness_instance(TheoremId theorem, int r, std::uint64_t seed);

/// Compares each instance's bound with the Gram-path spectrum.
SuiteReport soundness_sweep(TheoremId theorem, int r, std::size_t instances, std::uint64_t seed,
                            double tolerance = 1e-9);

/// Dual-path agreement, trivial and separated bounds, equispaced closed forms, quasi-grids.
SuiteReport verify_spectral(const VerifyOptions& options);

/// Closed forms of psi(0) and psi_hat(0), sign pattern, maximality, symmetry, Poisson identity.
SuiteReport verify_psi(const VerifyOptions& options);

/// Soundness sweep of every lower and upper bound evaluator.
SuiteReport verify_bounds(const VerifyOptions& options);

/// name is spectral, psi, bounds or all; throws InvalidInput otherwise.
std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options);

}  // namespace vandal
