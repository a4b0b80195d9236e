#include <doctest.h>

#include <algorithm>

#include "core/operators.hpp"
#include "core/oracle.hpp"

using namespace tc;

TEST_CASE("ladder matrices on the truncated space") {
  const Matrix a1 = ladder(LadderKind::Annihilate, 1);
  CHECK(max_abs(a1 - (Matrix(2, 2) << 0, 1, 0, 0).finished()) == 0.0);

  const Matrix n2 = ladder(LadderKind::Number, 2);
  CHECK(n2(0, 0) == cplx(0.0));
  CHECK(n2(1, 1) == cplx(1.0));
  CHECK(n2(2, 2) == cplx(2.0));

  // a†a equals N under truncation; aa† differs only in the corner.
  const int nmax = 7;
  const Matrix a = ladder(LadderKind::Annihilate, nmax);
  const Matrix ad = ladder(LadderKind::Create, nmax);
  CHECK(max_abs(ad * a - ladder(LadderKind::Number, nmax)) < 1e-14);
  Matrix aad = a * ad;
  const Matrix n_plus_1 =
      ladder(LadderKind::Number, nmax) + Matrix::Identity(nmax + 1, nmax + 1);
  CHECK(std::abs(aad(nmax, nmax) - n_plus_1(nmax, nmax)) == nmax + 1.0);
  aad(nmax, nmax) += nmax + 1.0;
  CHECK(max_abs(aad - n_plus_1) < 1e-14);

  CHECK(max_abs(ad - a.adjoint()) == 0.0);
  CHECK_THROWS_AS(ladder(LadderKind::Number, -1), std::invalid_argument);
}

TEST_CASE("site pauli operators") {
  CHECK(max_abs(site_pauli(1, 1, PauliKind::Plus) - pauli(PauliKind::Plus)) == 0.0);

  const Matrix s3 = site_pauli(2, 2, PauliKind::Three);
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << 1, -1, 1, -1;
  CHECK(max_abs(s3 - expected) == 0.0);

  // sigma+_1 sigma+_2 maps |dd> straight to |uu>: single entry at (0,3).
  const Matrix p = site_pauli(2, 1, PauliKind::Plus) * site_pauli(2, 2, PauliKind::Plus);
  CHECK(p(0, 3) == cplx(1.0));
  CHECK(p.cwiseAbs().sum() == 1.0);

  CHECK_THROWS_AS(site_pauli(2, 3, PauliKind::Plus), std::invalid_argument);
  CHECK_THROWS_AS(site_pauli(5, 1, PauliKind::Plus), std::invalid_argument);
}

TEST_CASE("collective spin su(2) relations hold exactly") {
  for (int n = 1; n <= 4; ++n) {
    const CollectiveSpin s = collective_spin(n);
    CHECK(max_abs(s.z * s.plus - s.plus * s.z - s.plus) == 0.0);
    CHECK(max_abs(s.z * s.minus - s.minus * s.z + s.minus) == 0.0);
    CHECK(max_abs(s.plus * s.minus - s.minus * s.plus - 2.0 * s.z) == 0.0);
  }
  const CollectiveSpin s1 = collective_spin(1);
  CHECK(max_abs(s1.plus - pauli(PauliKind::Plus)) == 0.0);
  CHECK(max_abs(s1.z - 0.5 * pauli(PauliKind::Three)) == 0.0);

  const CollectiveSpin s4 = collective_spin(4);
  CHECK(s4.z.trace() == cplx(0.0));
  CHECK(s4.z(0, 0) == cplx(2.0));     // |uuuu>
  CHECK(s4.z(15, 15) == cplx(-2.0));  // |dddd>
}

TEST_CASE("collective spin representation is reducible for n >= 2") {
  for (int n = 2; n <= 4; ++n) {
    const CollectiveSpin s = collective_spin(n);
    const Matrix casimir = s.plus * s.minus + s.minus * s.plus + 2.0 * s.z * s.z;
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(casimir.real());
    int distinct = 1;
    for (Eigen::Index i = 1; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()(i) - es.eigenvalues()(i - 1) > 1e-8) ++distinct;
    CHECK(distinct > 1);
  }
}

TEST_CASE("interaction operator structure") {
  // one atom: [[0, a], [a†, 0]] in 2x2 block form
  const int nmax = 5;
  const Matrix a1 = interaction(1, nmax);
  const int f = nmax + 1;
  CHECK(max_abs(a1.block(0, 0, f, f)) == 0.0);
  CHECK(max_abs(a1.block(0, f, f, f) - ladder(LadderKind::Annihilate, nmax)) == 0.0);
  CHECK(max_abs(a1.block(f, 0, f, f) - ladder(LadderKind::Create, nmax)) == 0.0);

  for (int n = 1; n <= 4; ++n) {
    const Matrix a = interaction(n, 4);
    CHECK(max_abs(a - a.adjoint()) < 1e-14);
  }

  // nmax = 0: a annihilates everything, only creation entries survive
  const Matrix a20 = interaction(2, 0);
  for (int b = 0; b < 4; ++b)
    for (int b2 = 0; b2 < 4; ++b2)
      if (excited_count(b2, 2) >= excited_count(b, 2)) CHECK(a20(b2, b) == cplx(0.0));
}

TEST_CASE("three-atom interaction reproduces the 8x8 block pattern") {
  // annihilation-block positions (row, col) in the atomic grid; creation
  // entries sit at the transposed positions
  const std::vector<std::pair<int, int>> a_pos = {
      {0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 6},
      {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
  const int nmax = 3;
  const Matrix a = interaction(3, nmax);
  const Matrix low = ladder(LadderKind::Annihilate, nmax);
  const Matrix raise = ladder(LadderKind::Create, nmax);
  const int f = nmax + 1;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const Matrix blk = a.block(r * f, c * f, f, f);
      const bool is_a =
          std::find(a_pos.begin(), a_pos.end(), std::make_pair(r, c)) != a_pos.end();
      const bool is_ad =
          std::find(a_pos.begin(), a_pos.end(), std::make_pair(c, r)) != a_pos.end();
      if (is_a)
        CHECK(max_abs(blk - low) == 0.0);
      else if (is_ad)
        CHECK(max_abs(blk - raise) == 0.0);
      else
        CHECK(max_abs(blk) == 0.0);
    }
  }
}

TEST_CASE("hamiltonian limits") {
  ModelParams p{2, 0.9, 0.0, 0.0, 4};
  const Matrix h_free = hamiltonian(p);
  for (int b = 0; b < 4; ++b)
    for (int m = 0; m <= 4; ++m)
      CHECK(h_free(product_index(b, m, 4), product_index(b, m, 4)) == cplx(0.9 * m));
  CHECK(max_abs(h_free - Matrix(h_free.diagonal().asDiagonal())) == 0.0);

  ModelParams pure{1, 0.0, 0.0, 1.0, 6};
  CHECK(max_abs(hamiltonian(pure) - interaction(1, 6)) == 0.0);

  for (int n : {1, 3}) {
    ModelParams res{n, 1.3, 1.3, 0.7, 8};
    CHECK(max_abs(hamiltonian(res) - hamiltonian(res).adjoint()) < 1e-14);
  }

  CHECK_THROWS_AS(hamiltonian(ModelParams{0, 1, 1, 1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(hamiltonian(ModelParams{2, 1, 1, 1, -1}), std::invalid_argument);
}

TEST_CASE("excitation operator and conservation") {
  const int nmax = 6;
  const Matrix e1 = excitation(1, nmax);
  CHECK(e1(product_index(0, 0, nmax), product_index(0, 0, nmax)) == cplx(0.5));
  const Matrix e4 = excitation(4, nmax);
  CHECK(e4(product_index(15, 3, nmax), product_index(15, 3, nmax)) == cplx(1.0));

  auto masked_commutator = [&](const Matrix& x, const Matrix& y) {
    const Matrix c = x * y - y * x;
    double dev = 0.0;
    for (Eigen::Index r = 0; r < c.rows(); ++r)
      for (Eigen::Index cc = 0; cc < c.cols(); ++cc)
        if (r % (nmax + 1) < nmax && cc % (nmax + 1) < nmax)
          dev = std::max(dev, std::abs(c(r, cc)));
    return dev;
  };

  // [E, A] vanishes away from the photon cutoff edge, [E, H] at resonance too.
  for (int n = 1; n <= 4; ++n)
    CHECK(masked_commutator(excitation(n, nmax), interaction(n, nmax)) < 1e-13);
  ModelParams p{3, 1.1, 1.1, 0.6, nmax};
  CHECK(masked_commutator(excitation(3, nmax), hamiltonian(p)) < 1e-13);
}

TEST_CASE("interaction maps contained excitation sectors into themselves") {
  const int nmax = 8;
  for (int n = 1; n <= 4; ++n) {
    const Matrix a = interaction(n, nmax);
    for (const auto& sector : enumerate_sectors(n, nmax - 1)) {
      for (const auto& [b, m] : sector.basis) {
        const int col = product_index(b, m, nmax);
        for (int b2 = 0; b2 < atomic_dim(n); ++b2)
          for (int m2 = 0; m2 <= nmax; ++m2)
            if (excitation_index(b2, m2, n) != sector.excitation)
              CHECK(std::abs(a(product_index(b2, m2, nmax), col)) < 1e-14);
      }
    }
  }
}
