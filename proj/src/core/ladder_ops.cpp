#include "core/ladder_ops.hpp"

#include <cmath>
#include <functional>
#include <set>

namespace tc {

OperatorValuedMatrix::OperatorValuedMatrix(int dim, double spin, double tau)
    : dim_(dim), spin_(spin), tau_(tau), entries_(dim * dim) {
  if (dim < 1) throw std::invalid_argument("OperatorValuedMatrix: dim must be >= 1");
}

void OperatorValuedMatrix::set(int row, int col, LadderMonomial mono) {
  entries_.at(row * dim_ + col).push_back(mono);
}

const std::vector<LadderMonomial>& OperatorValuedMatrix::at(int row, int col) const {
  return entries_.at(row * dim_ + col);
}

void add_ladder_term(Matrix& m, int block_row, int block_col, int nmax, int shift,
                     int offset, cplx prefactor, const std::function<double(int)>& coeff) {
  const int f = nmax + 1;
  if (shift >= 0) {
    for (int ph = shift; ph <= nmax; ++ph) {
      double amp = 1.0;
      for (int i = 0; i < shift; ++i) amp *= double(ph - i);
      m(block_row * f + (ph - shift), block_col * f + ph) +=
          prefactor * coeff(ph - shift + offset) * std::sqrt(amp);
    }
  } else {
    const int p = -shift;
    for (int ph = 0; ph + p <= nmax; ++ph) {
      double amp = 1.0;
      for (int i = 1; i <= p; ++i) amp *= double(ph + i);
      m(block_row * f + (ph + p), block_col * f + ph) +=
          prefactor * coeff(ph + p + offset) * std::sqrt(amp);
    }
  }
}

Matrix OperatorValuedMatrix::materialize(int nmax) const {
  const int f = nmax + 1;
  Matrix m = Matrix::Zero(dim_ * f, dim_ * f);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      for (const auto& mono : at(r, c))
        add_ladder_term(m, r, c, nmax, mono.shift, mono.offset, mono.prefactor,
                        [&](int arg) { return spectral::family_eval(mono.family, arg, tau_); });
  return m;
}

Vector OperatorValuedMatrix::apply(const Vector& x, int nmax) const {
  const int f = nmax + 1;
  if (x.size() != dim_ * f)
    throw std::invalid_argument("OperatorValuedMatrix::apply: dimension mismatch");
  Vector y = Vector::Zero(dim_ * f);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      for (const auto& mono : at(r, c)) {
        if (mono.shift >= 0) {
          for (int ph = mono.shift; ph <= nmax; ++ph) {
            double amp = 1.0;
            for (int i = 0; i < mono.shift; ++i) amp *= double(ph - i);
            y(r * f + ph - mono.shift) +=
                mono.prefactor *
                spectral::family_eval(mono.family, ph - mono.shift + mono.offset, tau_) *
                std::sqrt(amp) * x(c * f + ph);
          }
        } else {
          const int p = -mono.shift;
          for (int ph = 0; ph + p <= nmax; ++ph) {
            double amp = 1.0;
            for (int i = 1; i <= p; ++i) amp *= double(ph + i);
            y(r * f + ph + p) +=
                mono.prefactor *
                spectral::family_eval(mono.family, ph + p + mono.offset, tau_) *
                std::sqrt(amp) * x(c * f + ph);
          }
        }
      }
    }
  }
  return y;
}

std::vector<ReachedEvaluation> reached_evaluations(const OperatorValuedMatrix& m, int nmax) {
  std::set<std::pair<int, int>> seen;  // (family as int, argument)
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      for (const auto& mono : m.at(r, c)) {
        if (mono.shift >= 0) {
          for (int ph = mono.shift; ph <= nmax; ++ph)
            seen.insert({int(mono.family), ph - mono.shift + mono.offset});
        } else {
          for (int ph = 0; ph - mono.shift <= nmax; ++ph)
            seen.insert({int(mono.family), ph - mono.shift + mono.offset});
        }
      }
    }
  }
  std::vector<ReachedEvaluation> out;
  out.reserve(seen.size());
  for (const auto& [fam, arg] : seen)
    out.push_back({static_cast<spectral::Family>(fam), arg});
  return out;
}

}  // namespace tc
