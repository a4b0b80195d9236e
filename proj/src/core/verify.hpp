#pragma once
// Self-verification: closed form against the sector-exact reference, plus the
// structural identities (su(2) algebra, excitation conservation, block
// diagonalization, power formulas). Failures are report content, not errors.

#include <string>
#include <vector>

#include "core/decomposition.hpp"

namespace tc {

struct VerifyOptions {
  std::vector<int> atoms = {1, 2, 3, 4};
  std::vector<double> taus = {0.1, 1.0, 5.0};
  int nmax = 16;
  double tol = 1e-10;  // applies to the oracle and unitarity sweeps
};

struct CheckResult {
  std::string name;
  std::string params;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string location;  // basis labels for oracle mismatches, else empty
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct DecompositionCheck {
  double off_block_residual = 0.0;
  double block_deviation = 0.0;  // blocks vs spin-ladder construction
  bool spins_match = false;
};

// Runs on an explicit decomposition so tests can inject a corrupted transform.
DecompositionCheck check_decomposition(const SpinDecomposition& dec, int nmax);

VerifyReport run_verification(const VerifyOptions& options);

std::string report_json(const VerifyReport& report, const VerifyOptions& options);

}  // namespace tc
