#include "core/closed_form.hpp"

#include <cmath>

namespace tc {

using spectral::Family;

namespace {
const cplx kI{0.0, 1.0};
}

OperatorValuedMatrix propagator_spin_half(double tau) {
  OperatorValuedMatrix m(2, 0.5, tau);
  m.set(0, 0, {0, +1, 1.0, Family::HalfCos});
  m.set(0, 1, {+1, +1, -kI, Family::HalfSinc});
  m.set(1, 0, {-1, 0, -kI, Family::HalfSinc});
  m.set(1, 1, {0, 0, 1.0, Family::HalfCos});
  return m;
}

OperatorValuedMatrix propagator_spin_one(double tau) {
  OperatorValuedMatrix m(3, 1.0, tau);
  m.set(0, 0, {0, 0, 1.0, Family::OneDiagTop});
  m.set(0, 1, {+1, +1, -kI, Family::OneH});
  m.set(0, 2, {+2, 0, 1.0, Family::OneCornerTop});
  m.set(1, 0, {-1, 0, -kI, Family::OneH});
  m.set(1, 1, {0, 0, 1.0, Family::OneDiagMid});
  m.set(1, 2, {+1, 0, -kI, Family::OneH});
  m.set(2, 0, {-2, 0, 1.0, Family::OneCornerBot});
  m.set(2, 1, {-1, -1, -kI, Family::OneH});
  m.set(2, 2, {0, 0, 1.0, Family::OneDiagBot});
  return m;
}

OperatorValuedMatrix propagator_spin_three_half(double tau) {
  const double s3 = std::sqrt(3.0);
  OperatorValuedMatrix m(4, 1.5, tau);
  m.set(0, 0, {0, +2, 1.0, Family::ThreeHalfF2});
  m.set(0, 1, {+1, +2, -s3 * kI, Family::ThreeHalfCapF1});
  m.set(0, 2, {+2, +2, 2.0 * s3, Family::ThreeHalfH1});
  m.set(0, 3, {+3, +2, -6.0 * kI, Family::ThreeHalfCapH0});
  m.set(1, 0, {-1, +1, -s3 * kI, Family::ThreeHalfCapF1});
  m.set(1, 1, {0, +1, 1.0, Family::ThreeHalfF1});
  m.set(1, 2, {+1, +1, -2.0 * kI, Family::ThreeHalfCapH1});
  m.set(1, 3, {+2, +1, 2.0 * s3, Family::ThreeHalfH1});
  m.set(2, 0, {-2, 0, 2.0 * s3, Family::ThreeHalfH1});
  m.set(2, 1, {-1, 0, -2.0 * kI, Family::ThreeHalfCapH1});
  m.set(2, 2, {0, 0, 1.0, Family::ThreeHalfF0});
  m.set(2, 3, {+1, 0, -s3 * kI, Family::ThreeHalfCapF0});
  m.set(3, 0, {-3, -1, -6.0 * kI, Family::ThreeHalfCapH0});
  m.set(3, 1, {-2, -1, 2.0 * s3, Family::ThreeHalfH1});
  m.set(3, 2, {-1, -1, -s3 * kI, Family::ThreeHalfCapF0});
  m.set(3, 3, {0, -1, 1.0, Family::ThreeHalfFm1});
  return m;
}

OperatorValuedMatrix propagator_spin_two(double tau) {
  OperatorValuedMatrix m(5, 2.0, tau);
  // cosine part
  m.set(0, 0, {0, +2, 1.0, Family::TwoF2});
  m.set(0, 2, {+2, +2, 1.0, Family::TwoH1});
  m.set(0, 4, {+4, +2, 1.0, Family::TwoK0});
  m.set(1, 1, {0, +1, 1.0, Family::TwoF1});
  m.set(1, 3, {+2, +1, 1.0, Family::TwoH0});
  m.set(2, 0, {-2, 0, 1.0, Family::TwoH1});
  m.set(2, 2, {0, 0, 1.0, Family::TwoF0});
  m.set(2, 4, {+2, 0, 1.0, Family::TwoHm1});
  m.set(3, 1, {-2, -1, 1.0, Family::TwoH0});
  m.set(3, 3, {0, -1, 1.0, Family::TwoFm1});
  m.set(4, 0, {-4, -2, 1.0, Family::TwoK0});
  m.set(4, 2, {-2, -2, 1.0, Family::TwoHm1});
  m.set(4, 4, {0, -2, 1.0, Family::TwoFm2});
  // sine part
  m.set(0, 1, {+1, +2, -2.0 * kI, Family::TwoCapF1});
  m.set(0, 3, {+3, +2, -2.0 * kI, Family::TwoCapH0});
  m.set(1, 0, {-1, +1, -2.0 * kI, Family::TwoCapF1});
  m.set(1, 2, {+1, +1, -0.5 * kI, Family::TwoCapH1});
  m.set(1, 4, {+3, +1, -2.0 * kI, Family::TwoCapH0});
  m.set(2, 1, {-1, 0, -0.5 * kI, Family::TwoCapH1});
  m.set(2, 3, {+1, 0, -0.5 * kI, Family::TwoCapHm1});
  m.set(3, 0, {-3, -1, -2.0 * kI, Family::TwoCapH0});
  m.set(3, 2, {-1, -1, -0.5 * kI, Family::TwoCapHm1});
  m.set(3, 4, {+1, -1, -2.0 * kI, Family::TwoCapFm1});
  m.set(4, 1, {-3, -2, -2.0 * kI, Family::TwoCapH0});
  m.set(4, 3, {-1, -2, -2.0 * kI, Family::TwoCapFm1});
  return m;
}

OperatorValuedMatrix block_propagator(double j, double tau) {
  if (j == 0.0) {
    OperatorValuedMatrix m(1, 0.0, tau);
    m.set(0, 0, {0, 0, 1.0, Family::One});
    return m;
  }
  if (j == 0.5) return propagator_spin_half(tau);
  if (j == 1.0) return propagator_spin_one(tau);
  if (j == 1.5) return propagator_spin_three_half(tau);
  if (j == 2.0) return propagator_spin_two(tau);
  throw std::invalid_argument("block_propagator: no closed form for this spin");
}

Matrix spin_one_power_closed(int p, int nmax) {
  if (p < 0) throw std::invalid_argument("spin_one_power_closed: p must be >= 0");
  const int f = nmax + 1;
  if (p == 0) return Matrix::Identity(3 * f, 3 * f);

  // D = diag(2(2N+3), 2(2N+1), 2(2N-1)), diagonal in the photon number.
  Matrix d = Matrix::Zero(3 * f, 3 * f);
  for (int ph = 0; ph <= nmax; ++ph) {
    d(0 * f + ph, 0 * f + ph) = 2.0 * (2.0 * ph + 3.0);
    d(1 * f + ph, 1 * f + ph) = 2.0 * (2.0 * ph + 1.0);
    d(2 * f + ph, 2 * f + ph) = 2.0 * (2.0 * ph - 1.0);
  }

  Matrix base;
  int reps;
  if (p % 2 == 1) {
    base = spin_block_interaction(1.0, nmax);  // B^{2q+1} = D^q B
    reps = (p - 1) / 2;
  } else {
    // B^2 = [[2(N+1), 0, 2a^2], [0, 2(2N+1), 0], [2(a†)^2, 0, 2N]]
    base = Matrix::Zero(3 * f, 3 * f);
    add_ladder_term(base, 0, 0, nmax, 0, 0, 1.0, [](int x) { return 2.0 * (x + 1.0); });
    add_ladder_term(base, 0, 2, nmax, +2, 0, 1.0, [](int) { return 2.0; });
    add_ladder_term(base, 1, 1, nmax, 0, 0, 1.0, [](int x) { return 2.0 * (2.0 * x + 1.0); });
    add_ladder_term(base, 2, 0, nmax, -2, 0, 1.0, [](int) { return 2.0; });
    add_ladder_term(base, 2, 2, nmax, 0, 0, 1.0, [](int x) { return 2.0 * x; });
    reps = p / 2 - 1;
  }
  Matrix out = base;
  for (int i = 0; i < reps; ++i) out = d * out;
  return out;
}

Matrix spin_three_half_power_closed(int p, int nmax) {
  if (p < 0) throw std::invalid_argument("spin_three_half_power_closed: p must be >= 0");
  using PC = spectral::PowerCoefficients;
  const int f = nmax + 1;
  Matrix out = Matrix::Zero(4 * f, 4 * f);
  const double s3 = std::sqrt(3.0);
  if (p % 2 == 0) {
    const int q = p / 2;
    add_ladder_term(out, 0, 0, nmax, 0, +2, 1.0, [&](int x) { return PC::alpha(q, x); });
    add_ladder_term(out, 1, 1, nmax, 0, +1, 1.0, [&](int x) { return PC::beta(q, x); });
    add_ladder_term(out, 2, 2, nmax, 0, 0, 1.0, [&](int x) { return PC::gamma(q, x); });
    add_ladder_term(out, 3, 3, nmax, 0, -1, 1.0, [&](int x) { return PC::delta(q, x); });
    add_ladder_term(out, 0, 2, nmax, +2, +2, 2.0 * s3, [&](int x) { return PC::xi(q, x); });
    add_ladder_term(out, 1, 3, nmax, +2, +1, 2.0 * s3, [&](int x) { return PC::xi(q, x); });
    add_ladder_term(out, 2, 0, nmax, -2, 0, 2.0 * s3, [&](int x) { return PC::xi(q, x); });
    add_ladder_term(out, 3, 1, nmax, -2, -1, 2.0 * s3, [&](int x) { return PC::xi(q, x); });
  } else {
    const int q = (p - 1) / 2;
    add_ladder_term(out, 0, 1, nmax, +1, +2, s3, [&](int x) { return PC::beta(q, x); });
    add_ladder_term(out, 1, 0, nmax, -1, +1, s3, [&](int x) { return PC::beta(q, x); });
    add_ladder_term(out, 1, 2, nmax, +1, +1, 2.0, [&](int x) { return PC::xi(q + 1, x); });
    add_ladder_term(out, 2, 1, nmax, -1, 0, 2.0, [&](int x) { return PC::xi(q + 1, x); });
    add_ladder_term(out, 2, 3, nmax, +1, 0, s3, [&](int x) { return PC::gamma(q, x); });
    add_ladder_term(out, 3, 2, nmax, -1, -1, s3, [&](int x) { return PC::gamma(q, x); });
    add_ladder_term(out, 0, 3, nmax, +3, +2, 6.0, [&](int x) { return PC::xi(q, x); });
    add_ladder_term(out, 3, 0, nmax, -3, -1, 6.0, [&](int x) { return PC::xi(q, x); });
  }
  return out;
}

double power_formula_deviation(double j, int p, int nmax) {
  if (p < 0 || p > 7) throw std::invalid_argument("power_formula_deviation: p must be in [0,7]");
  if (nmax < p + 2) throw std::invalid_argument("power_formula_deviation: need nmax >= p+2");
  Matrix closed;
  int rows;
  if (j == 1.0) {
    closed = spin_one_power_closed(p, nmax);
    rows = 3;
  } else if (j == 1.5) {
    closed = spin_three_half_power_closed(p, nmax);
    rows = 4;
  } else {
    throw std::invalid_argument("power_formula_deviation: j must be 1 or 3/2");
  }
  const Matrix b = spin_block_interaction(j, nmax);
  Matrix direct = Matrix::Identity(b.rows(), b.cols());
  for (int i = 0; i < p; ++i) direct = b * direct;

  const int f = nmax + 1;
  double scale = 1.0, dev = 0.0;
  for (int cc = 0; cc < rows; ++cc)
    for (int ph = 0; ph + p <= nmax; ++ph)
      for (int r = 0; r < rows * f; ++r) {
        const int col = cc * f + ph;
        scale = std::max(scale, std::abs(direct(r, col)));
        dev = std::max(dev, std::abs(closed(r, col) - direct(r, col)));
      }
  return dev / scale;
}

Matrix interaction_propagator(int n, double t, double g, int nmax) {
  const SpinDecomposition dec = spin_decomposition(n);
  const int f = nmax + 1;
  const double tau = t * g;
  if (tau == 0.0) return Matrix::Identity(product_dim(n, nmax), product_dim(n, nmax));
  Matrix block_diag = Matrix::Zero(product_dim(n, nmax), product_dim(n, nmax));
  for (const auto& blk : dec.blocks) {
    const Matrix u = block_propagator(blk.spin, tau).materialize(nmax);
    block_diag.block(blk.offset * f, blk.offset * f, u.rows(), u.cols()) = u;
  }
  const Matrix t_full = kron(dec.transform.cast<cplx>(), Matrix::Identity(f, f));
  return t_full * block_diag * t_full.adjoint();
}

Matrix evolution_operator(const ModelParams& p, double t) {
  validate(p);
  if (p.delta != p.omega)
    throw OffResonanceError("evolution_operator: closed form requires delta == omega");
  Matrix u = interaction_propagator(p.n_atoms, t, p.g, p.nmax);
  // free phases exp(-i t w (S3 + N)), diagonal in the product basis
  for (int b = 0; b < atomic_dim(p.n_atoms); ++b) {
    for (int m = 0; m <= p.nmax; ++m) {
      const cplx phase = std::exp(cplx(0.0, -t * p.omega * (spin_z_value(b, p.n_atoms) + m)));
      u.row(product_index(b, m, p.nmax)) *= phase;
    }
  }
  return u;
}

Vector apply_evolution(const ModelParams& p, double t, const Vector& psi) {
  validate(p);
  if (p.delta != p.omega)
    throw OffResonanceError("apply_evolution: closed form requires delta == omega");
  const int f = p.nmax + 1;
  const int la = atomic_dim(p.n_atoms);
  if (psi.size() != la * f)
    throw std::invalid_argument("apply_evolution: state dimension mismatch");

  const SpinDecomposition dec = spin_decomposition(p.n_atoms);
  const double tau = t * p.g;

  // Rotate the atomic factor into the block basis: X -> T^T X (photon slices).
  Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      slices(psi.data(), la, f);
  Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rotated =
      dec.transform.transpose().cast<cplx>() * slices;

  // Apply each block propagator on its rows.
  Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> evolved(la, f);
  for (const auto& blk : dec.blocks) {
    Vector x(blk.dim * f);
    for (int r = 0; r < blk.dim; ++r) x.segment(r * f, f) = rotated.row(blk.offset + r);
    const Vector y = block_propagator(blk.spin, tau).apply(x, p.nmax);
    for (int r = 0; r < blk.dim; ++r) evolved.row(blk.offset + r) = y.segment(r * f, f);
  }

  // Rotate back and attach the free phases.
  Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> back =
      dec.transform.cast<cplx>() * evolved;
  Vector out(la * f);
  for (int b = 0; b < la; ++b)
    for (int m = 0; m < f; ++m)
      out(b * f + m) = back(b, m) *
                       std::exp(cplx(0.0, -t * p.omega * (spin_z_value(b, p.n_atoms) + m)));
  return out;
}

}  // namespace tc
