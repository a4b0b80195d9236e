#include <doctest.h>

#include <cmath>

#include "core/closed_form.hpp"
#include "core/oracle.hpp"
#include "core/spectral.hpp"

using namespace tc;

namespace {

// Reference exponential of one materialized block, by eigendecomposition.
Matrix block_exp_reference(double j, double tau, int nmax) {
  const RealMatrix b = spin_block_interaction(j, nmax).real();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(b);
  Vector phases(b.rows());
  for (Eigen::Index k = 0; k < b.rows(); ++k)
    phases(k) = std::exp(cplx(0.0, -tau * es.eigenvalues()(k)));
  return es.eigenvectors().cast<cplx>() * phases.asDiagonal() *
         es.eigenvectors().transpose().cast<cplx>();
}

// Columns whose spin-block sector fits under the cutoff are exact on both
// sides; everything closer than ceil(2j) photon levels to the edge is skipped.
double block_deviation(const Matrix& closed, const Matrix& reference, double j, int nmax) {
  const int f = nmax + 1;
  const int rows = static_cast<int>(std::lround(2.0 * j)) + 1;
  const int margin = static_cast<int>(std::lround(std::ceil(2.0 * j)));
  double dev = 0.0;
  for (int c = 0; c < rows; ++c)
    for (int ph = 0; ph + margin <= nmax; ++ph)
      for (int r = 0; r < rows * f; ++r)
        dev = std::max(dev, std::abs(closed(r, c * f + ph) - reference(r, c * f + ph)));
  return dev;
}

}  // namespace

TEST_CASE("all block propagators reduce to the identity at tau = 0") {
  const int nmax = 6;
  for (double j : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const Matrix u = block_propagator(j, 0.0).materialize(nmax);
    CHECK(max_abs(u - Matrix::Identity(u.rows(), u.cols())) < 1e-15);
  }
}

TEST_CASE("spin-1/2 block propagator") {
  const double tau = 0.7;
  const int nmax = 10;
  const Matrix u = propagator_spin_half(tau).materialize(nmax);
  // top-left diagonal carries cos(tau sqrt(m+1))
  for (int m = 0; m <= nmax; ++m)
    CHECK(std::abs(u(m, m) - std::cos(tau * std::sqrt(m + 1.0))) < 1e-14);
  CHECK(block_deviation(u, block_exp_reference(0.5, tau, nmax), 0.5, nmax) < 1e-12);
}

TEST_CASE("spin-1/2 and spin-1 propagators match the per-sector spectral identity") {
  const double tau = 1.1;
  const int nmax = 12;
  const int f = nmax + 1;
  {
    const Matrix u = propagator_spin_half(tau).materialize(nmax);
    for (int k = 1; k <= nmax; ++k) {
      // sector {(up, k-1), (down, k)}: exp(-i tau B) = cos(tau mu) - i sin(tau mu) B/mu
      const double mu = std::sqrt(double(k));
      CHECK(std::abs(u(0 * f + k - 1, 0 * f + k - 1) - std::cos(tau * mu)) < 1e-13);
      CHECK(std::abs(u(0 * f + k - 1, 1 * f + k) - cplx(0, -1) * std::sin(tau * mu)) < 1e-13);
      CHECK(std::abs(u(1 * f + k, 1 * f + k) - std::cos(tau * mu)) < 1e-13);
    }
  }
  {
    const Matrix u = propagator_spin_one(tau).materialize(nmax);
    for (int k = 0; k + 2 <= nmax; ++k) {
      // sector photons (k, k+1, k+2); B has eigenvalues 0, ±mu
      Matrix b = Matrix::Zero(3, 3);
      b(0, 1) = b(1, 0) = std::sqrt(2.0 * (k + 1.0));
      b(1, 2) = b(2, 1) = std::sqrt(2.0 * (k + 2.0));
      const double mu = std::sqrt(2.0 * (2.0 * k + 3.0));
      const Matrix expected = Matrix::Identity(3, 3) +
                              (std::cos(tau * mu) - 1.0) / (mu * mu) * b * b -
                              cplx(0, 1) * std::sin(tau * mu) / mu * b;
      const int cols[3] = {0 * f + k, 1 * f + k + 1, 2 * f + k + 2};
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          CHECK(std::abs(u(cols[r], cols[c]) - expected(r, c)) < 1e-13);
    }
  }
}

TEST_CASE("spin-1 block propagator against the block reference") {
  const double tau = 1.3;
  const int nmax = 12;
  const Matrix u = propagator_spin_one(tau).materialize(nmax);
  // middle diagonal entry at photon m equals cos(tau sqrt(2(2m+1)))
  const int f = nmax + 1;
  for (int m = 0; m <= nmax; ++m)
    CHECK(std::abs(u(f + m, f + m) - std::cos(tau * std::sqrt(2.0 * (2.0 * m + 1.0)))) <
          1e-13);
  CHECK(block_deviation(u, block_exp_reference(1.0, tau, nmax), 1.0, nmax) < 1e-11);
}

TEST_CASE("spin-3/2 block propagator against the block reference") {
  for (double tau : {0.4, 0.9, 2.7}) {
    const int nmax = 12;
    const Matrix u = propagator_spin_three_half(tau).materialize(nmax);
    CHECK(block_deviation(u, block_exp_reference(1.5, tau, nmax), 1.5, nmax) < 1e-11);
  }
}

TEST_CASE("spin-2 block propagator against the block reference") {
  for (double tau : {0.5, 1.7}) {
    const int nmax = 16;
    const Matrix u = propagator_spin_two(tau).materialize(nmax);
    CHECK(block_deviation(u, block_exp_reference(2.0, tau, nmax), 2.0, nmax) < 1e-10);
  }
}

TEST_CASE("spin-2 published coefficient variants fail against the sector exponential") {
  // Regression for ERRATA.md: the corrected f0 and F-1 agree with the exact
  // 5x5 sector exponentials, the published forms do not.
  using S2 = spectral::SpinTwo;
  const double tau = 1.0;
  auto f0_published = [&](int n) {
    return 1.0 + 2.0 *
                     (S2::v_plus(n) * S2::w_plus(n) *
                          spectral::cosm1_over(S2::lambda_plus(n), tau) -
                      S2::v_minus(n) * S2::w_minus(n) *
                          spectral::cosm1_over(S2::lambda_minus(n), tau)) /
                     std::sqrt(S2::d(n));
  };
  for (int n : {2, 4, 6}) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(5, 5);
    const double jp[4] = {2.0, std::sqrt(6.0), std::sqrt(6.0), 2.0};
    for (int r = 0; r < 4; ++r) {
      const double c = jp[r] * std::sqrt(double(n - 2 + r + 1));
      b(r, r + 1) = b(r + 1, r) = c;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    Vector phases(5);
    for (int k = 0; k < 5; ++k) phases(k) = std::exp(cplx(0.0, -tau * es.eigenvalues()(k)));
    const Matrix u = es.eigenvectors().cast<cplx>() * phases.asDiagonal() *
                     es.eigenvectors().transpose().cast<cplx>();

    CHECK(std::abs(u(2, 2) - spectral::family_eval(spectral::Family::TwoF0, n, tau)) < 1e-12);
    CHECK(std::abs(u(2, 2) - f0_published(n)) > 1e-2);

    const cplx fm1_ref = u(3, 4) / (cplx(0.0, -2.0) * std::sqrt(double(n + 2)));
    CHECK(std::abs(fm1_ref - spectral::family_eval(spectral::Family::TwoCapFm1, n, tau)) <
          1e-12);
  }
}

TEST_CASE("cubic power identity for the spin-1 block") {
  const int nmax = 10;
  const Matrix b = spin_block_interaction(1.0, nmax);
  const Matrix direct = b * b * b;
  const Matrix closed = spin_one_power_closed(3, nmax);
  const int f = nmax + 1;
  double dev = 0.0;
  for (int c = 0; c < 3; ++c)
    for (int ph = 0; ph + 3 <= nmax; ++ph)
      for (int r = 0; r < 3 * f; ++r)
        dev = std::max(dev, std::abs(direct(r, c * f + ph) - closed(r, c * f + ph)));
  CHECK(dev < 1e-12);
}

TEST_CASE("squared spin-3/2 block entries") {
  const int nmax = 9;
  const Matrix sq = spin_three_half_power_closed(2, nmax);
  const int f = nmax + 1;
  for (int m = 0; m <= nmax; ++m) {
    CHECK(std::abs(sq(0 * f + m, 0 * f + m) - (3.0 * m + 3.0)) < 1e-12);
    CHECK(std::abs(sq(1 * f + m, 1 * f + m) - (7.0 * m + 4.0)) < 1e-12);
    CHECK(std::abs(sq(2 * f + m, 2 * f + m) - (7.0 * m + 3.0)) < 1e-12);
    CHECK(std::abs(sq(3 * f + m, 3 * f + m) - (3.0 * m)) < 1e-12);
  }
  // a^2 corners carry 2 sqrt(3)
  CHECK(std::abs(sq(0 * f + 0, 2 * f + 2) - 2.0 * std::sqrt(3.0) * std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("power formulas reproduce direct matrix powers") {
  for (int p : {2, 3, 5, 7}) {
    CHECK(power_formula_deviation(1.0, p, p + 2) < 1e-12);
    CHECK(power_formula_deviation(1.5, p, p + 2) < 1e-12);
    CHECK(power_formula_deviation(1.0, p, 16) < 1e-12);
    CHECK(power_formula_deviation(1.5, p, 16) < 1e-12);
  }
  CHECK_THROWS_AS(power_formula_deviation(1.0, 8, 16), std::invalid_argument);
  CHECK_THROWS_AS(power_formula_deviation(2.0, 3, 16), std::invalid_argument);
}

TEST_CASE("assembled interaction propagator") {
  // identity at t = 0
  for (int n = 1; n <= 4; ++n) {
    const Matrix u = interaction_propagator(n, 0.0, 1.0, 5);
    CHECK(max_abs(u - Matrix::Identity(u.rows(), u.cols())) < 1e-14);
  }
  // oracle agreement
  CHECK(compare_propagators(2, 2.0, 1.0, 20).value < 1e-11);
  // excitation conservation: contained columns stay inside their sector
  const int nmax = 10;
  const Matrix u = interaction_propagator(3, 0.9, 1.0, nmax);
  for (int b = 0; b < 8; ++b) {
    for (int m = 0; m <= nmax; ++m) {
      if (excitation_index(b, m, 3) > nmax) continue;
      for (int b2 = 0; b2 < 8; ++b2)
        for (int m2 = 0; m2 <= nmax; ++m2)
          if (excitation_index(b2, m2, 3) != excitation_index(b, m, 3))
            CHECK(std::abs(u(product_index(b2, m2, nmax), product_index(b, m, nmax))) <
                  1e-12);
    }
  }
}

TEST_CASE("evolution operator requires resonance and factorizes correctly") {
  CHECK_THROWS_AS(evolution_operator(ModelParams{1, 1.0, 0.9, 1.0, 4}, 0.5),
                  OffResonanceError);

  // omega = 0 reduces to the pure interaction propagator
  ModelParams p0{2, 0.0, 0.0, 0.8, 8};
  CHECK(max_abs(evolution_operator(p0, 1.2) - interaction_propagator(2, 1.2, 0.8, 8)) <
        1e-14);

  // masked unitarity
  ModelParams p{3, 1.0, 1.0, 1.0, 10};
  CHECK(masked_unitarity_deviation(evolution_operator(p, 1.7), 3, 10) < 1e-11);
}

TEST_CASE("group law and adjoint symmetry on contained sectors") {
  for (int n = 1; n <= 4; ++n) {
    ModelParams p{n, 1.0, 1.0, 1.0, 10};
    const Matrix u1 = evolution_operator(p, 0.4);
    const Matrix u2 = evolution_operator(p, 0.9);
    const Matrix u12 = evolution_operator(p, 1.3);
    CHECK(masked_deviation(u1 * u2, u12, n, 10).value < 1e-9);

    const Matrix ut = evolution_operator(p, 1.3);
    const Matrix umt = evolution_operator(p, -1.3);
    CHECK(masked_deviation(umt, ut.adjoint(), n, 10, /*mask_rows=*/true).value < 1e-12);
  }
}

TEST_CASE("blockwise state application matches the dense operator") {
  for (int n : {1, 2, 4}) {
    ModelParams p{n, 1.1, 1.1, 0.7, 8};
    const int dim = product_dim(n, 8);
    Vector psi = Vector::Zero(dim);
    // a spread-out, non-symmetric test state
    for (int i = 0; i < dim; ++i)
      psi(i) = cplx(std::sin(0.3 * i + 0.1), std::cos(0.2 * i));
    psi.normalize();
    const Vector direct = evolution_operator(p, 0.9) * psi;
    const Vector fast = apply_evolution(p, 0.9, psi);
    CHECK((direct - fast).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("coefficient reality and reached arguments at the working cutoff") {
  const int nmax = 32;
  for (double tau : {0.1, 1.0, 5.0}) {
    for (double j : {0.5, 1.0, 1.5, 2.0}) {
      const OperatorValuedMatrix m = block_propagator(j, tau);
      for (const auto& [family, arg] : reached_evaluations(m, nmax)) {
        const cplx z = spectral::family_eval_complex(family, arg, tau);
        INFO("family ", spectral::family_name(family), " arg ", arg, " tau ", tau);
        CHECK(std::isfinite(z.real()));
        CHECK(std::abs(z.imag()) < 1e-12);
      }
    }
  }
  // the quartic-ladder coefficient is never evaluated below argument 2
  int k0_min = 1000;
  for (const auto& [family, arg] : reached_evaluations(block_propagator(2.0, 1.0), nmax))
    if (family == spectral::Family::TwoK0) k0_min = std::min(k0_min, arg);
  CHECK(k0_min == 2);
}
