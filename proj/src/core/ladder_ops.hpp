#pragma once
// Operator-valued matrices: r x r arrays whose entries are normal-ordered
// terms  prefactor * phi(N + offset) * a^k  (or (a†)^p for negative shift).
//
// Materialization on the truncated Fock basis follows
//   phi(N+c) a^k |m>   = phi(m-k+c) sqrt(m!/(m-k)!) |m-k>     (k >= 0, m >= k)
//   phi(N+c) (a†)^p |m> = phi(m+p+c) sqrt((m+p)!/m!) |m+p>     (m+p <= nmax)
// so the coefficient function is always evaluated at the output photon number
// plus the printed displacement. Targets past the cutoff are dropped.

#include <functional>
#include <vector>

#include "core/spectral.hpp"
#include "core/types.hpp"

namespace tc {

struct LadderMonomial {
  int shift = 0;            // +k: a^k, -p: (a†)^p, 0: diagonal in N
  int offset = 0;           // displacement c in phi(N+c)
  cplx prefactor{1.0, 0.0};
  spectral::Family family = spectral::Family::One;
};

class OperatorValuedMatrix {
 public:
  OperatorValuedMatrix(int dim, double spin, double tau);

  int dim() const { return dim_; }
  double spin() const { return spin_; }
  double tau() const { return tau_; }

  void set(int row, int col, LadderMonomial mono);
  const std::vector<LadderMonomial>& at(int row, int col) const;

  // Dense matrix on dim*(nmax+1) product space (block row-major, photon fastest).
  Matrix materialize(int nmax) const;
  // y = M x without forming the dense matrix.
  Vector apply(const Vector& x, int nmax) const;

 private:
  int dim_;
  double spin_;
  double tau_;
  std::vector<std::vector<LadderMonomial>> entries_;
};

// Adds phi-weighted ladder contributions of one term to a dense matrix block.
// Shared by the propagators and the closed-form power checks.
void add_ladder_term(Matrix& m, int block_row, int block_col, int nmax, int shift,
                     int offset, cplx prefactor, const std::function<double(int)>& coeff);

// Every (family, argument) pair touched when materializing at this cutoff.
struct ReachedEvaluation {
  spectral::Family family;
  int argument;
};
std::vector<ReachedEvaluation> reached_evaluations(const OperatorValuedMatrix& m, int nmax);

}  // namespace tc
