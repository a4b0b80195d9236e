#include "core/operators.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace tc {

void validate(const ModelParams& p) {
  if (p.n_atoms < 1 || p.n_atoms > 4)
    throw std::invalid_argument("n_atoms must be in [1,4], got " + std::to_string(p.n_atoms));
  if (p.nmax < 0)
    throw std::invalid_argument("nmax must be >= 0, got " + std::to_string(p.nmax));
  if (!(p.omega >= 0.0))
    throw std::invalid_argument("omega must be >= 0");
  if (!std::isfinite(p.delta) || !std::isfinite(p.g))
    throw std::invalid_argument("delta and g must be finite");
}

int excited_count(int atomic_index, int n) {
  return n - std::popcount(static_cast<unsigned>(atomic_index));
}

double spin_z_value(int atomic_index, int n) {
  return 0.5 * (n - 2 * std::popcount(static_cast<unsigned>(atomic_index)));
}

Matrix ladder(LadderKind kind, int nmax) {
  if (nmax < 0) throw std::invalid_argument("ladder: nmax must be >= 0");
  const int dim = nmax + 1;
  Matrix m = Matrix::Zero(dim, dim);
  switch (kind) {
    case LadderKind::Annihilate:
      for (int k = 1; k <= nmax; ++k) m(k - 1, k) = std::sqrt(double(k));
      break;
    case LadderKind::Create:
      for (int k = 1; k <= nmax; ++k) m(k, k - 1) = std::sqrt(double(k));
      break;
    case LadderKind::Number:
      for (int k = 0; k <= nmax; ++k) m(k, k) = double(k);
      break;
  }
  return m;
}

Matrix pauli(PauliKind s) {
  Matrix m = Matrix::Zero(2, 2);
  switch (s) {
    case PauliKind::Plus: m(0, 1) = 1.0; break;
    case PauliKind::Minus: m(1, 0) = 1.0; break;
    case PauliKind::Three: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
  }
  return m;
}

Matrix site_pauli(int n, int site, PauliKind s) {
  if (n < 1 || n > 4 || site < 1 || site > n)
    throw std::invalid_argument("site_pauli: need 1 <= site <= n <= 4");
  Matrix m = Matrix::Identity(1, 1);
  for (int i = 1; i <= n; ++i)
    m = kron(m, i == site ? pauli(s) : Matrix::Identity(2, 2));
  return m;
}

CollectiveSpin collective_spin(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("collective_spin: n must be in [1,4]");
  const int dim = atomic_dim(n);
  CollectiveSpin s{Matrix::Zero(dim, dim), Matrix::Zero(dim, dim), Matrix::Zero(dim, dim)};
  for (int i = 1; i <= n; ++i) {
    s.plus += site_pauli(n, i, PauliKind::Plus);
    s.minus += site_pauli(n, i, PauliKind::Minus);
    s.z += 0.5 * site_pauli(n, i, PauliKind::Three);
  }
  return s;
}

Matrix interaction(int n, int nmax) {
  const CollectiveSpin s = collective_spin(n);
  return kron(s.plus, ladder(LadderKind::Annihilate, nmax)) +
         kron(s.minus, ladder(LadderKind::Create, nmax));
}

Matrix hamiltonian(const ModelParams& p) {
  validate(p);
  const int dim_a = atomic_dim(p.n_atoms);
  const int dim_f = field_dim(p.nmax);
  const CollectiveSpin s = collective_spin(p.n_atoms);
  Matrix h = p.omega * kron(Matrix::Identity(dim_a, dim_a), ladder(LadderKind::Number, p.nmax));
  h += p.delta * kron(s.z, Matrix::Identity(dim_f, dim_f));
  h += p.g * interaction(p.n_atoms, p.nmax);
  return h;
}

Matrix excitation(int n, int nmax) {
  const int dim = product_dim(n, nmax);
  Matrix e = Matrix::Zero(dim, dim);
  for (int b = 0; b < atomic_dim(n); ++b)
    for (int m = 0; m <= nmax; ++m)
      e(product_index(b, m, nmax), product_index(b, m, nmax)) = spin_z_value(b, n) + m;
  return e;
}

}  // namespace tc
