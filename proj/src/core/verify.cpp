#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "core/closed_form.hpp"
#include "core/oracle.hpp"
#include "core/operators.hpp"

namespace tc {
namespace {

constexpr double kBlockTol = 1e-13;
constexpr double kPowerTol = 1e-12;
constexpr double kAlgebraTol = 1e-13;

std::string fmt(int n) { return "n=" + std::to_string(n); }

std::vector<double> expected_spins(int n) {
  switch (n) {
    case 1: return {0.5};
    case 2: return {0.0, 1.0};
    case 3: return {0.5, 0.5, 1.5};
    case 4: return {0.0, 1.0, 0.0, 1.0, 1.0, 2.0};
    default: return {};
  }
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

DecompositionCheck check_decomposition(const SpinDecomposition& dec, int nmax) {
  DecompositionCheck out;
  const Matrix a = interaction(dec.n_atoms, nmax);
  const BlockDiagonalization bd = block_diagonalize(a, dec, nmax);
  out.off_block_residual = bd.off_block_residual;
  for (size_t i = 0; i < dec.blocks.size(); ++i) {
    const Matrix expected = spin_block_interaction(dec.blocks[i].spin, nmax);
    out.block_deviation = std::max(out.block_deviation, max_abs(bd.blocks[i] - expected));
  }
  const auto spins = expected_spins(dec.n_atoms);
  out.spins_match = spins.size() == dec.blocks.size();
  for (size_t i = 0; out.spins_match && i < spins.size(); ++i)
    out.spins_match = dec.blocks[i].spin == spins[i];
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  auto add = [&](CheckResult c) { report.checks.push_back(std::move(c)); };

  for (int n : options.atoms) {
    // su(2) relations hold exactly in floating point (dyadic entries).
    {
      const CollectiveSpin s = collective_spin(n);
      const double dev = std::max({max_abs(s.z * s.plus - s.plus * s.z - s.plus),
                                   max_abs(s.z * s.minus - s.minus * s.z + s.minus),
                                   max_abs(s.plus * s.minus - s.minus * s.plus - 2.0 * s.z)});
      add({"su2_relations", fmt(n), dev, 0.0, dev == 0.0, ""});
    }
    // [A, E] away from the photon cutoff edge.
    {
      const Matrix a = interaction(n, options.nmax);
      const Matrix e = excitation(n, options.nmax);
      const Matrix c = a * e - e * a;
      double dev = 0.0;
      for (Eigen::Index r = 0; r < c.rows(); ++r)
        for (Eigen::Index cc = 0; cc < c.cols(); ++cc)
          if (r % (options.nmax + 1) < options.nmax && cc % (options.nmax + 1) < options.nmax)
            dev = std::max(dev, std::abs(c(r, cc)));
      add({"excitation_commutator", fmt(n), dev, kAlgebraTol, dev < kAlgebraTol, ""});
    }
    if (n >= 2) {
      const DecompositionCheck dc = check_decomposition(spin_decomposition(n), options.nmax);
      add({"block_residual", fmt(n), dc.off_block_residual, kBlockTol,
           dc.off_block_residual < kBlockTol, ""});
      add({"block_match", fmt(n), dc.block_deviation, kBlockTol,
           dc.block_deviation < kBlockTol, ""});
      add({"spin_multiset", fmt(n), dc.spins_match ? 0.0 : 1.0, 0.5, dc.spins_match, ""});
    }
    for (double tau : options.taus) {
      std::ostringstream ps;
      ps << "n=" << n << " tau=" << tau;
      const Deviation dev = compare_propagators(n, tau, 1.0, options.nmax);
      add({"oracle_equivalence", ps.str(), dev.value, options.tol, dev.value < options.tol,
           dev.describe(n, options.nmax)});

      ModelParams params{n, 1.0, 1.0, 1.0, options.nmax};
      const double udev =
          masked_unitarity_deviation(evolution_operator(params, tau), n, options.nmax);
      add({"unitarity", ps.str(), udev, options.tol, udev < options.tol, ""});
    }
  }

  for (int p = 2; p <= 7; ++p) {
    const int nm = std::max(options.nmax, p + 2);
    const double dev1 = power_formula_deviation(1.0, p, nm);
    add({"power_formula_spin1", "p=" + std::to_string(p), dev1, kPowerTol, dev1 < kPowerTol, ""});
    const double dev32 = power_formula_deviation(1.5, p, nm);
    add({"power_formula_spin32", "p=" + std::to_string(p), dev32, kPowerTol, dev32 < kPowerTol,
         ""});
  }

  return report;
}

std::string report_json(const VerifyReport& report, const VerifyOptions& options) {
  nlohmann::json j;
  j["options"] = {{"atoms", options.atoms},
                  {"taus", options.taus},
                  {"nmax", options.nmax},
                  {"tol", options.tol}};
  j["checks"] = nlohmann::json::array();
  int failures = 0;
  for (const auto& c : report.checks) {
    nlohmann::json jc = {{"name", c.name},
                         {"params", c.params},
                         {"deviation", c.deviation},
                         {"tolerance", c.tolerance},
                         {"passed", c.passed}};
    if (!c.location.empty()) jc["location"] = c.location;
    j["checks"].push_back(std::move(jc));
    if (!c.passed) ++failures;
  }
  j["failures"] = failures;
  j["all_passed"] = report.all_passed();
  return j.dump(2);
}

}  // namespace tc
