#pragma once
// Closed-form block propagators exp(-i tau B_j) for j = 1/2, 1, 3/2, 2, the
// power-formula identities they rest on, and the assembled evolution operator
// on the full product space.

#include "core/decomposition.hpp"
#include "core/ladder_ops.hpp"
#include "core/operators.hpp"

namespace tc {

OperatorValuedMatrix propagator_spin_half(double tau);
OperatorValuedMatrix propagator_spin_one(double tau);
OperatorValuedMatrix propagator_spin_three_half(double tau);
OperatorValuedMatrix propagator_spin_two(double tau);

// Dispatch on j in {0, 1/2, 1, 3/2, 2}; j = 0 gives the 1x1 identity entry.
OperatorValuedMatrix block_propagator(double j, double tau);

// Closed-form powers used to validate the propagator derivations:
// spin 1 via B^3 = D B (D the operator-valued diagonal), spin 3/2 via the
// alpha..xi coefficient matrices. Returns the dense materialization of B^p.
Matrix spin_one_power_closed(int p, int nmax);
Matrix spin_three_half_power_closed(int p, int nmax);

// Max deviation between the closed-form power and the direct matrix power,
// on columns at least p photon levels below the cutoff, scaled by the largest
// entry of the direct power. j in {1, 1.5}, p <= 7, nmax >= p+2.
double power_formula_deviation(double j, int p, int nmax);

// exp(-i t g (S+(x)a + S-(x)a†)): block propagators assembled in block order
// and conjugated back by the field-extended transform.
Matrix interaction_propagator(int n, double t, double g, int nmax);

// Full resonance evolution operator
//   U(t) = (exp(-i t w S3) (x) exp(-i t w N)) exp(-i t g A_n).
// Throws OffResonanceError unless p.delta == p.omega.
Matrix evolution_operator(const ModelParams& p, double t);

// U(t) psi computed blockwise, without forming the dense operator.
Vector apply_evolution(const ModelParams& p, double t, const Vector& psi);

}  // namespace tc
