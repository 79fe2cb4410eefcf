#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zsqm/models.h"
#include "zsqm/realization.h"

namespace zsqm {

struct EnergyCluster {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

struct SpectrumReport {
  ModelSpec model;
  std::string realization;  // "fock:N=8" or "grid:P=801,h=0.02,x0=-8,W=x^3"
  std::vector<EnergyCluster> clusters;  // ascending
  std::size_t zero_modes = 0;   // clifford dim x (dim ker A + dim ker A^dag)
  std::size_t near_zero = 0;    // eigenvalues of the matrix within tolerance of 0
  std::size_t excluded = 0;     // eigenvalues dropped at the truncation edge
  double tolerance = 0.0;
  std::size_t total_dim = 0;
};

struct SpectrumOptions {
  // Grid spectra keep only this many lowest clusters; the upper part of a
  // finite-difference spectrum is discretization artefact.
  std::size_t grid_clusters = 12;
};

inline constexpr std::size_t kSpectrumDimCap = std::size_t{1} << 20;

// Eigenvalues of H = 1 (x) realize(H_sqm). The Clifford factor of H is the
// identity, so the realized block is diagonalized once and every
// multiplicity is scaled by the Clifford dimension.
//
// Fock: levels at or above the cutoff N are excluded (the lower block's top
// level has no partner).
// Grid: the blocks come from factorized_grid_blocks, so zero clusters line
// up with ground_state_pair.
SpectrumReport spectrum(const Model& model, const NumericRealization& r, SpectrumOptions opts = {});

struct SpectrumExpectation {
  bool pass = true;
  std::vector<std::string> notes;
};

// Fock: ground level 0 with multiplicity dim/2, levels 1..N-1 with
// multiplicity dim, all within tolerance of integers.
// Any realization: zero modes either absent or dim/2 of them, and the
// spectrum's zero cluster agrees with that count.
SpectrumExpectation check_spectrum_expectation(const Model& model, const SpectrumReport& report,
                                               const NumericRealization& r);

}  // namespace zsqm
