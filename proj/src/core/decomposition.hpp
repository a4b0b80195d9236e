#pragma once
// Explicit block diagonalization of the collective interaction operator.
//
// For n atoms the orthogonal matrix T acting on the atomic factor splits
// S+(x)a + S-(x)a† into a direct sum of irreducible spin blocks
// B_j = J+(x)a + J-(x)a†. The block order is fixed:
//   n=1: (1/2)
//   n=2: (0, 1)
//   n=3: (1/2, 1/2, 3/2)
//   n=4: (0, 1, 0, 1, 1, 2)

#include <utility>
#include <vector>

#include "core/types.hpp"

namespace tc {

struct SpinBlock {
  double spin = 0.0;  // j (half-integers allowed)
  int dim = 1;        // 2j+1
  int offset = 0;     // first column of T belonging to this block
};

struct SpinDecomposition {
  int n_atoms = 1;
  RealMatrix transform;           // 2^n x 2^n, orthogonal
  std::vector<SpinBlock> blocks;  // fixed block order (see header comment)
};

// The explicit transform for n in [1,4] (identity for n = 1).
// Throws std::invalid_argument for unsupported n.
RealMatrix transform_matrix(int n);

SpinDecomposition spin_decomposition(int n);

// Irreducible ladder matrices (J+, J-) of dimension 2j+1, highest weight
// first; entry sqrt(j(j+1) - m(m+1)) on the superdiagonal of J+.
std::pair<RealMatrix, RealMatrix> spin_ladder(double j);

// J+ (x) a + J- (x) a† for one spin-j block; the j = 0 block is the
// (nmax+1)-dimensional zero matrix.
Matrix spin_block_interaction(double j, int nmax);

struct BlockDiagonalization {
  std::vector<Matrix> blocks;      // diagonal blocks of (T(x)1)† A (T(x)1)
  double off_block_residual = 0.0; // max |entry| outside those blocks
};

// Conjugates A (the full interaction operator for dec.n_atoms) by the
// field-extended transform and slices out the declared blocks.
BlockDiagonalization block_diagonalize(const Matrix& A, const SpinDecomposition& dec,
                                       int nmax);

}  // namespace tc
