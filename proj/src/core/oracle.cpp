#include "core/oracle.hpp"

#include <cmath>
#include <sstream>

#include "core/closed_form.hpp"
#include "core/operators.hpp"

namespace tc {

std::vector<ExcitationSector> enumerate_sectors(int n, int emax) {
  if (n < 1 || n > 4 || emax < 0)
    throw std::invalid_argument("enumerate_sectors: need n in [1,4] and emax >= 0");
  std::vector<ExcitationSector> sectors;
  sectors.reserve(emax + 1);
  for (int e = 0; e <= emax; ++e) {
    ExcitationSector s;
    s.excitation = e;
    for (int m = 0; m <= e; ++m) {
      const int excited = e - m;
      if (excited > n) continue;
      for (int b = 0; b < atomic_dim(n); ++b)
        if (excited_count(b, n) == excited) s.basis.emplace_back(b, m);
    }
    sectors.push_back(std::move(s));
  }
  return sectors;
}

RealMatrix sector_interaction(const ExcitationSector& sector, int n) {
  const CollectiveSpin s = collective_spin(n);
  const int dim = static_cast<int>(sector.basis.size());
  RealMatrix a = RealMatrix::Zero(dim, dim);
  for (int c = 0; c < dim; ++c) {
    const auto [b, m] = sector.basis[c];
    for (int r = 0; r < dim; ++r) {
      const auto [b2, m2] = sector.basis[r];
      if (m2 == m - 1)
        a(r, c) += s.plus(b2, b).real() * std::sqrt(double(m));
      else if (m2 == m + 1)
        a(r, c) += s.minus(b2, b).real() * std::sqrt(double(m + 1));
    }
  }
  return a;
}

Matrix sector_propagator(const ExcitationSector& sector, int n, double t, double g) {
  const int sector_dim = static_cast<int>(sector.basis.size());
  if (t * g == 0.0) return Matrix::Identity(sector_dim, sector_dim);
  const RealMatrix a = sector_interaction(sector, n);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(a);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("sector_propagator: eigendecomposition failed");
  const int dim = static_cast<int>(a.rows());
  Vector phases(dim);
  for (int k = 0; k < dim; ++k)
    phases(k) = std::exp(cplx(0.0, -t * g * es.eigenvalues()(k)));
  const Matrix v = es.eigenvectors().cast<cplx>();
  return v * phases.asDiagonal() * v.adjoint();
}

Matrix oracle_propagator(int n, double t, double g, int nmax) {
  const int dim = product_dim(n, nmax);
  Matrix u = Matrix::Zero(dim, dim);
  for (const auto& sector : enumerate_sectors(n, nmax)) {
    const Matrix us = sector_propagator(sector, n, t, g);
    for (size_t c = 0; c < sector.basis.size(); ++c)
      for (size_t r = 0; r < sector.basis.size(); ++r)
        u(product_index(sector.basis[r].first, sector.basis[r].second, nmax),
          product_index(sector.basis[c].first, sector.basis[c].second, nmax)) = us(r, c);
  }
  return u;
}

Matrix dense_eig_propagator(int n, double t, double g, int nmax) {
  const RealMatrix a = interaction(n, nmax).real();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(a);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("dense_eig_propagator: eigendecomposition failed");
  Vector phases(a.rows());
  for (Eigen::Index k = 0; k < a.rows(); ++k)
    phases(k) = std::exp(cplx(0.0, -t * g * es.eigenvalues()(k)));
  const Matrix v = es.eigenvectors().cast<cplx>();
  return v * phases.asDiagonal() * v.adjoint();
}

bool column_in_contained_sector(int col, int n, int nmax) {
  const int b = col / (nmax + 1);
  const int m = col % (nmax + 1);
  return excitation_index(b, m, n) <= nmax;
}

std::string Deviation::describe(int n, int nmax) const {
  if (row < 0 || col < 0) return "";
  auto label = [&](int idx) {
    const int b = idx / (nmax + 1);
    const int m = idx % (nmax + 1);
    std::string atoms;
    for (int i = 0; i < n; ++i) atoms += ((b >> (n - 1 - i)) & 1) ? 'd' : 'u';
    std::ostringstream os;
    os << atoms << ",ph=" << m;
    return os.str();
  };
  return label(col) + " -> " + label(row);
}

Deviation masked_deviation(const Matrix& x, const Matrix& y, int n, int nmax,
                           bool mask_rows) {
  Deviation dev;
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    if (!column_in_contained_sector(static_cast<int>(c), n, nmax)) continue;
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      if (mask_rows && !column_in_contained_sector(static_cast<int>(r), n, nmax)) continue;
      const double d = std::abs(x(r, c) - y(r, c));
      if (d > dev.value) dev = {d, static_cast<int>(r), static_cast<int>(c)};
    }
  }
  return dev;
}

double masked_unitarity_deviation(const Matrix& u, int n, int nmax) {
  const Matrix gram = u.adjoint() * u;
  double dev = 0.0;
  for (Eigen::Index r = 0; r < gram.rows(); ++r) {
    if (!column_in_contained_sector(static_cast<int>(r), n, nmax)) continue;
    for (Eigen::Index c = 0; c < gram.cols(); ++c) {
      if (!column_in_contained_sector(static_cast<int>(c), n, nmax)) continue;
      const double expected = (r == c) ? 1.0 : 0.0;
      dev = std::max(dev, std::abs(gram(r, c) - expected));
    }
  }
  return dev;
}

Deviation compare_propagators(int n, double t, double g, int nmax) {
  const Matrix closed = interaction_propagator(n, t, g, nmax);
  const Matrix reference = oracle_propagator(n, t, g, nmax);
  return masked_deviation(closed, reference, n, nmax, /*mask_rows=*/false);
}

}  // namespace tc
