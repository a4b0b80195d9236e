#pragma once
// Formula-free reference propagator. The interaction operator conserves the
// excitation S3 + N, so the dynamics splits into finite sectors (dimension at
// most 2^n) that can be exponentiated exactly by eigendecomposition. Sector
// restriction uses exact matrix elements, so there is no truncation error on
// any sector whose photon content fits under the cutoff.

#include <string>
#include <utility>
#include <vector>

#include "core/types.hpp"

namespace tc {

struct ExcitationSector {
  int excitation = 0;                        // #excited atoms + photons
  std::vector<std::pair<int, int>> basis;    // (atomic index, photon), photon ascending
};

// Sectors for excitation 0..emax.
std::vector<ExcitationSector> enumerate_sectors(int n, int emax);

// Exact restriction of S+(x)a + S-(x)a† to one sector; real symmetric.
RealMatrix sector_interaction(const ExcitationSector& sector, int n);

// exp(-i t g A) on the sector, via eigendecomposition.
Matrix sector_propagator(const ExcitationSector& sector, int n, double t, double g);

// Sector propagators (excitation <= nmax) embedded in the dense product basis;
// columns outside those sectors are left zero.
Matrix oracle_propagator(int n, double t, double g, int nmax);

// Independent second path: eigendecomposition of the full truncated
// interaction matrix. Agrees with the sector oracle on contained sectors.
Matrix dense_eig_propagator(int n, double t, double g, int nmax);

// True when the product-basis column lies in a sector fully below the cutoff.
bool column_in_contained_sector(int col, int n, int nmax);

struct Deviation {
  double value = 0.0;
  int row = -1;
  int col = -1;
  std::string describe(int n, int nmax) const;  // decoded basis labels
};

// Entrywise comparison of the closed-form propagator against the sector
// oracle on all fully contained columns.
Deviation compare_propagators(int n, double t, double g, int nmax);

// Max |X - Y| over contained columns (and, optionally, contained rows only).
Deviation masked_deviation(const Matrix& x, const Matrix& y, int n, int nmax,
                           bool mask_rows = false);

// Max |U†U - 1| over contained rows and columns.
double masked_unitarity_deviation(const Matrix& u, int n, int nmax);

}  // namespace tc
