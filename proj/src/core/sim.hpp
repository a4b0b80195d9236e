#pragma once
// State preparation, observable time series, and the evolve entry point used
// by the CLI. The closed form is exact in t, so every grid point is evaluated
// directly from t = 0 rather than by composing steps.

#include <string>
#include <vector>

#include "core/operators.hpp"

namespace tc {

struct FieldSpec {
  enum class Kind { Fock, Coherent };
  Kind kind = Kind::Fock;
  int fock_n = 0;
  double alpha = 0.0;  // real, >= 0

  // "fock:<m>" or "coherent:<alpha>"; throws std::invalid_argument.
  static FieldSpec parse(const std::string& text);
};

struct InitialState {
  std::string atoms;  // one of {u,d} per atom, atom 1 first
  FieldSpec field;
};

struct TimeGrid {
  double start = 0.0;
  double end = 1.0;
  double dt = 0.1;
  bool in_inverse_g = false;  // grid values are multiples of 1/g
};

struct SimConfig {
  ModelParams params;
  TimeGrid grid;
  InitialState init;
  bool auto_extend_nmax = true;  // raise nmax until the coherent tail fits
};

inline constexpr double kCoherentTailTol = 1e-10;

// Smallest cutoff >= nmax whose truncated coherent tail is below tol.
int required_nmax(double alpha, int nmax, double tol = kCoherentTailTol);

// Normalized product state; throws TruncationError if the coherent tail above
// nmax exceeds the tolerance and std::invalid_argument on a bad atom string.
Vector initial_state(const InitialState& init, int n, int nmax);

struct TimeSeriesRecord {
  double t = 0.0;
  double spin_z = 0.0;                // <S3>
  double photons = 0.0;               // <N>
  std::vector<double> populations;    // per atomic basis state, photon-summed
  double norm_deficit = 0.0;          // | ||psi|| - 1 |
};

struct EvolveResult {
  std::vector<TimeSeriesRecord> records;
  ModelParams params;  // includes the cutoff actually used
};

// Requires resonance (delta == omega). May raise nmax for coherent fields
// when cfg.auto_extend_nmax is set; the params actually used are returned.
EvolveResult evolve(const SimConfig& cfg);

TimeSeriesRecord observe(const Vector& psi, double t, int n, int nmax);

}  // namespace tc
