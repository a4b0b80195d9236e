#pragma once
// Truncated Fock-space and multi-atom spin operators.
//
// Basis conventions used everywhere in this library:
//  * Single atom: |u> = (1,0) (upper level), |d> = (0,1) (lower level), so
//    sigma_3 = diag(1,-1) and sigma_+ maps |d> -> |u>.
//  * n atoms: the atomic index is the big-endian bit pattern of the sites,
//    atom 1 in the most significant bit, bit value 0 = u and 1 = d.
//    Index 0 is |uu...u>, index 2^n-1 is |dd...d>.
//  * Field: photon numbers 0..nmax; a and a† are truncated at nmax, so
//    a a† = N+1 fails only in the (nmax,nmax) corner.
//  * Product space: index = atomic_index * (nmax+1) + photon (photon fastest).
//
// All constructors are pure and the returned matrices are immutable values.

#include "core/types.hpp"

namespace tc {

struct ModelParams {
  int n_atoms = 1;
  double omega = 1.0;  // field frequency (hbar = 1)
  double delta = 1.0;  // two-level splitting
  double g = 1.0;      // coupling
  int nmax = 16;       // photon cutoff
};

// Throws std::invalid_argument on out-of-range parameters.
void validate(const ModelParams& p);

inline int atomic_dim(int n) { return 1 << n; }
inline int field_dim(int nmax) { return nmax + 1; }
inline int product_dim(int n, int nmax) { return atomic_dim(n) * field_dim(nmax); }
inline int product_index(int atomic, int photon, int nmax) {
  return atomic * (nmax + 1) + photon;
}

// Number of atoms in the upper level for a given atomic index.
int excited_count(int atomic_index, int n);
// S3 eigenvalue of an atomic basis state: (#u - #d)/2.
double spin_z_value(int atomic_index, int n);
// Conserved excitation, normalized to an integer: #excited + photons.
inline int excitation_index(int atomic, int photon, int n) {
  return excited_count(atomic, n) + photon;
}

enum class LadderKind { Annihilate, Create, Number };
Matrix ladder(LadderKind kind, int nmax);

enum class PauliKind { Plus, Minus, Three };
Matrix pauli(PauliKind s);                          // single-site 2x2
Matrix site_pauli(int n, int site, PauliKind s);    // site in [1, n]

struct CollectiveSpin {
  Matrix plus;   // sum of site sigma_+
  Matrix minus;  // sum of site sigma_-
  Matrix z;      // half the sum of site sigma_3
};
CollectiveSpin collective_spin(int n);

// S+ (x) a + S- (x) a† on the product space. Hermitian.
Matrix interaction(int n, int nmax);

// omega 1(x)a†a + delta S3(x)1 + g (S+(x)a + S-(x)a†).
Matrix hamiltonian(const ModelParams& p);

// S3 (x) 1 + 1 (x) N; diagonal in the product basis.
Matrix excitation(int n, int nmax);

}  // namespace tc
