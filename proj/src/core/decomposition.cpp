#include "core/decomposition.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "core/operators.hpp"

namespace tc {
namespace {

// Rows of the explicit transforms, written with one token per entry so the
// surd values stay reviewable. Tokens: h = 1/2, s2 = 1/sqrt(2), s3 = 1/sqrt(3),
// s6 = 1/sqrt(6), q = 1/(2 sqrt(3)), r = sqrt(2/3), w = sqrt(3)/2.
constexpr const char* kRows2[4] = {
    "0 1 0 0",
    "s2 0 s2 0",
    "-s2 0 s2 0",
    "0 0 0 1",
};

constexpr const char* kRows3[8] = {
    "0 0 0 0 1 0 0 0",
    "s2 0 s6 0 0 s3 0 0",
    "-s2 0 s6 0 0 s3 0 0",
    "0 0 0 r 0 0 s3 0",
    "0 0 -r 0 0 s3 0 0",
    "0 s2 0 -s6 0 0 s3 0",
    "0 -s2 0 -s6 0 0 s3 0",
    "0 0 0 0 0 0 0 1",
};

constexpr const char* kRows4[16] = {
    "0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0",
    "0 s2 0 0 0 s6 0 0 q 0 0 0 h 0 0 0",
    "0 -s2 0 0 0 s6 0 0 q 0 0 0 h 0 0 0",
    "0 0 0 0 s3 0 s3 0 0 s6 0 0 0 s6 0 0",
    "0 0 0 0 0 -r 0 0 q 0 0 0 h 0 0 0",
    "h 0 h 0 -q 0 -q 0 0 s6 0 0 0 s6 0 0",
    "-h 0 -h 0 -q 0 -q 0 0 s6 0 0 0 s6 0 0",
    "0 0 0 0 0 0 0 0 0 0 w 0 0 0 h 0",
    "0 0 0 0 0 0 0 0 -w 0 0 0 h 0 0 0",
    "-h 0 h 0 -q 0 q 0 0 -s6 0 0 0 s6 0 0",
    "h 0 -h 0 -q 0 q 0 0 -s6 0 0 0 s6 0 0",
    "0 0 0 0 0 0 0 r 0 0 -q 0 0 0 h 0",
    "0 0 0 0 s3 0 -s3 0 0 -s6 0 0 0 s6 0 0",
    "0 0 0 s2 0 0 0 -s6 0 0 -q 0 0 0 h 0",
    "0 0 0 -s2 0 0 0 -s6 0 0 -q 0 0 0 h 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1",
};

double token_value(const std::string& tok) {
  static const std::map<std::string, double> values = {
      {"0", 0.0},
      {"1", 1.0},
      {"h", 0.5},
      {"s2", 1.0 / std::sqrt(2.0)},
      {"s3", 1.0 / std::sqrt(3.0)},
      {"s6", 1.0 / std::sqrt(6.0)},
      {"q", 0.5 / std::sqrt(3.0)},
      {"r", std::sqrt(2.0 / 3.0)},
      {"w", 0.5 * std::sqrt(3.0)},
  };
  const bool neg = !tok.empty() && tok.front() == '-';
  const auto it = values.find(neg ? tok.substr(1) : tok);
  if (it == values.end()) throw std::logic_error("transform_matrix: bad token " + tok);
  return neg ? -it->second : it->second;
}

RealMatrix parse_rows(const char* const* rows, int dim) {
  RealMatrix t(dim, dim);
  for (int i = 0; i < dim; ++i) {
    std::istringstream line(rows[i]);
    for (int j = 0; j < dim; ++j) {
      std::string tok;
      line >> tok;
      t(i, j) = token_value(tok);
    }
  }
  return t;
}

}  // namespace

RealMatrix transform_matrix(int n) {
  switch (n) {
    case 1: return RealMatrix::Identity(2, 2);
    case 2: return parse_rows(kRows2, 4);
    case 3: return parse_rows(kRows3, 8);
    case 4: return parse_rows(kRows4, 16);
    default:
      throw std::invalid_argument("transform_matrix: n must be in [1,4], got " +
                                  std::to_string(n));
  }
}

SpinDecomposition spin_decomposition(int n) {
  SpinDecomposition dec;
  dec.n_atoms = n;
  dec.transform = transform_matrix(n);
  std::vector<double> spins;
  switch (n) {
    case 1: spins = {0.5}; break;
    case 2: spins = {0.0, 1.0}; break;
    case 3: spins = {0.5, 0.5, 1.5}; break;
    case 4: spins = {0.0, 1.0, 0.0, 1.0, 1.0, 2.0}; break;
    default: throw std::invalid_argument("spin_decomposition: n must be in [1,4]");
  }
  int offset = 0;
  for (double j : spins) {
    const int dim = static_cast<int>(std::lround(2.0 * j)) + 1;
    dec.blocks.push_back({j, dim, offset});
    offset += dim;
  }
  return dec;
}

std::pair<RealMatrix, RealMatrix> spin_ladder(double j) {
  const int two_j = static_cast<int>(std::lround(2.0 * j));
  if (two_j < 0 || std::abs(2.0 * j - two_j) > 1e-12 || j > 2.0)
    throw std::invalid_argument("spin_ladder: j must be a half-integer <= 2");
  const int dim = two_j + 1;
  RealMatrix jp = RealMatrix::Zero(dim, dim);
  for (int r = 1; r < dim; ++r) {
    const double m = j - r;  // weight of the source state (row r)
    jp(r - 1, r) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  return {jp, jp.transpose()};
}

Matrix spin_block_interaction(double j, int nmax) {
  const int dim_f = field_dim(nmax);
  if (j == 0.0) return Matrix::Zero(dim_f, dim_f);
  const auto [jp, jm] = spin_ladder(j);
  return kron(jp.cast<cplx>(), ladder(LadderKind::Annihilate, nmax)) +
         kron(jm.cast<cplx>(), ladder(LadderKind::Create, nmax));
}

BlockDiagonalization block_diagonalize(const Matrix& A, const SpinDecomposition& dec,
                                       int nmax) {
  const int dim_f = field_dim(nmax);
  const int dim_a = atomic_dim(dec.n_atoms);
  if (A.rows() != dim_a * dim_f || A.cols() != A.rows())
    throw std::invalid_argument("block_diagonalize: dimension mismatch");

  const Matrix t_full = kron(dec.transform.cast<cplx>(), Matrix::Identity(dim_f, dim_f));
  const Matrix rotated = t_full.adjoint() * A * t_full;

  BlockDiagonalization out;
  out.blocks.reserve(dec.blocks.size());
  for (const auto& blk : dec.blocks) {
    const int size = blk.dim * dim_f;
    out.blocks.push_back(rotated.block(blk.offset * dim_f, blk.offset * dim_f, size, size));
  }

  // Residual: largest entry whose row and column fall in different blocks.
  auto block_of = [&](Eigen::Index idx) {
    const int col = static_cast<int>(idx) / dim_f;
    for (size_t b = 0; b < dec.blocks.size(); ++b)
      if (col < dec.blocks[b].offset + dec.blocks[b].dim) return b;
    return dec.blocks.size();
  };
  double residual = 0.0;
  for (Eigen::Index r = 0; r < rotated.rows(); ++r)
    for (Eigen::Index c = 0; c < rotated.cols(); ++c)
      if (block_of(r) != block_of(c)) residual = std::max(residual, std::abs(rotated(r, c)));
  out.off_block_residual = residual;
  return out;
}

}  // namespace tc
