#pragma once
// Scalar spectral functions behind the closed-form block propagators.
//
// Every propagator coefficient is assembled from three entire functions of
// lambda, with tau = t*g a fixed parameter:
//
//   cos_sqrt(l)   = cos(tau*sqrt(l))           (cosh branch for l < 0)
//   sinc_sqrt(l)  = sin(tau*sqrt(l))/sqrt(l)   (-> tau at l = 0, sinh branch for l < 0)
//   cosm1_over(l) = (cos(tau*sqrt(l)) - 1)/l   (-> -tau^2/2 at l = 0)
//
// The eigenvalue functions lambda±(N) cross zero and turn negative at the
// bottom of the spectrum (for example lambda-(1) = 0 and lambda-(0) = -3 in
// the spin-3/2 family). Routing every evaluation through these kernels keeps
// all coefficients finite, and the weight functions vanish exactly on any
// hyperbolic branch that a physical state can reach, so the results stay real.
// The *_c mirrors evaluate the same expressions in complex arithmetic with the
// principal square root; they back the self-check that imaginary parts cancel
// below 1e-12.

#include <string_view>

#include "core/types.hpp"

namespace tc::spectral {

double cos_sqrt(double lambda, double tau);
double sinc_sqrt(double lambda, double tau);
double cosm1_over(double lambda, double tau);

cplx cos_sqrt_c(double lambda, double tau);
cplx sinc_sqrt_c(double lambda, double tau);
cplx cosm1_over_c(double lambda, double tau);

// Eigenvalue and weight functions of the spin-3/2 block. Arguments may be
// negative at the corner of the spectrum; d(N) >= 9 throughout.
struct SpinThreeHalf {
  static double d(int n) { return 16.0 * n * n + 9.0; }
  static double lambda_plus(int n) { return 5.0 * n + std::sqrt(d(n)); }
  static double lambda_minus(int n) { return 5.0 * n - std::sqrt(d(n)); }
  static double v_plus(int n) { return -2.0 * n - 3.0 + std::sqrt(d(n)); }
  static double v_minus(int n) { return -2.0 * n - 3.0 - std::sqrt(d(n)); }
  static double w_plus(int n) { return 2.0 * n - 3.0 + std::sqrt(d(n)); }
  static double w_minus(int n) { return 2.0 * n - 3.0 - std::sqrt(d(n)); }
};

// Eigenvalue and weight functions of the spin-2 block; d(N) = (2N+1)^2 + 8.
struct SpinTwo {
  static double d(int n) { return 4.0 * n * n + 4.0 * n + 9.0; }
  static double lambda_plus(int n) { return 10.0 * n + 5.0 + 3.0 * std::sqrt(d(n)); }
  static double lambda_minus(int n) { return 10.0 * n + 5.0 - 3.0 * std::sqrt(d(n)); }
  static double u_plus(int n) { return 0.5 * (-3.0 + std::sqrt(d(n))); }
  static double u_minus(int n) { return 0.5 * (-3.0 - std::sqrt(d(n))); }
  static double v_plus(int n) { return std::sqrt(1.5) * (2.0 * n - 1.0 + std::sqrt(d(n))); }
  static double v_minus(int n) { return std::sqrt(1.5) * (2.0 * n - 1.0 - std::sqrt(d(n))); }
  static double w_plus(int n) { return std::sqrt(1.5) * (2.0 * n + 3.0 + std::sqrt(d(n))); }
  static double w_minus(int n) { return std::sqrt(1.5) * (2.0 * n + 3.0 - std::sqrt(d(n))); }
};

// Named coefficient families of the four block propagators. "Cap" families
// are the sine-type coefficients riding with an explicit -i prefactor in the
// propagator entries; all families below are real valued.
enum class Family {
  One,  // constant 1 (identity blocks)
  // spin 1/2
  HalfCos,   // cos(tau sqrt(N))
  HalfSinc,  // sin(tau sqrt(N))/sqrt(N)
  // spin 1, built on f(N) = (cos(tau sqrt(2(2N+1))) - 1)/2 and
  // h(N) = sin(tau sqrt(2(2N+1)))/sqrt(2N+1)
  OneF,
  OneH,
  OneDiagTop,     // 1 + (2N+2)/(2N+3) f(N+1)
  OneDiagMid,     // 1 + 2 f(N)
  OneDiagBot,     // 1 + 2N/(2N-1) f(N-1)
  OneCornerTop,   // 2/(2N+3) f(N+1)
  OneCornerBot,   // 2/(2N-1) f(N-1)
  // spin 3/2
  ThreeHalfF2,
  ThreeHalfF1,
  ThreeHalfF0,
  ThreeHalfFm1,
  ThreeHalfH1,
  ThreeHalfCapF1,
  ThreeHalfCapF0,
  ThreeHalfCapH1,
  ThreeHalfCapH0,
  // spin 2
  TwoF2,
  TwoF1,
  TwoF0,
  TwoFm1,
  TwoFm2,
  TwoH1,
  TwoH0,
  TwoHm1,
  TwoK0,
  TwoCapF1,
  TwoCapFm1,
  TwoCapH1,
  TwoCapH0,
  TwoCapHm1,
};

double family_eval(Family f, int n, double tau);
// Same expression with complex kernels; imaginary parts must cancel.
cplx family_eval_complex(Family f, int n, double tau);
std::string_view family_name(Family f);

// Closed-form coefficients of integer powers of the spin-3/2 block:
// even powers B^{2q} carry alpha..delta plus xi, odd powers B^{2q+1} carry
// beta, gamma and xi at shifted indices.
struct PowerCoefficients {
  static double alpha(int q, int n);
  static double beta(int q, int n);
  static double gamma(int q, int n);
  static double delta(int q, int n);
  static double xi(int q, int n);
};

}  // namespace tc::spectral
