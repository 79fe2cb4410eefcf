#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <variant>

#include "zsqm/sqm_block.h"
#include "zsqm/superpotential.h"

namespace zsqm {

struct FockSettings {
  int cutoff = 8;  // levels 0..cutoff, W(x) = x
};

struct GridSettings {
  int points = 801;
  double spacing = 0.02;
  // Left-most grid node; unset means the grid is centred on x = 0.
  std::optional<double> x_min;
  Superpotential w;

  double origin() const { return x_min ? *x_min : -0.5 * (points - 1) * spacing; }
  double node(int i) const { return origin() + i * spacing; }
};

/// Concrete matrices for A and A^dagger.
///
/// Fock: harmonic ladder on levels 0..N. Each word is evaluated on a space
/// long enough that no letter hits the truncation, then projected back onto
/// levels 0..N, so single words are exact (A^dag A = diag(0..N),
/// A A^dag = diag(1..N+1)). Sums of products of realized blocks still feel
/// the cut at level N.
///
/// Grid: A = (d/dx + W)/sqrt(2) with the central first difference and
/// Dirichlet boundaries; A^dagger is its transpose.
class NumericRealization {
 public:
  static NumericRealization fock(int cutoff);
  static NumericRealization grid(GridSettings settings);

  bool is_fock() const { return std::holds_alternative<FockSettings>(settings_); }
  const FockSettings& fock_settings() const { return std::get<FockSettings>(settings_); }
  const GridSettings& grid_settings() const { return std::get<GridSettings>(settings_); }

  // Dimension of the space A and A^dagger act on.
  std::size_t levels() const;
  // Spectral tolerance used when clustering eigenvalues (relative).
  double cluster_tolerance() const { return is_fock() ? 1e-9 : 1e-6; }

  Eigen::MatrixXcd lowering() const;  // A
  Eigen::MatrixXcd raising() const;   // A^dagger
  Eigen::MatrixXcd word(const LadderWord& w) const;

 private:
  explicit NumericRealization(std::variant<FockSettings, GridSettings> s);
  Eigen::MatrixXcd ladder(std::size_t levels, Letter l) const;

  std::variant<FockSettings, GridSettings> settings_;
  Eigen::MatrixXcd grid_a_;
};

// Substitutes the realized A, A^dagger into every word of `block`;
// result is 2*levels square, upper-left block = entry (0,0).
Eigen::MatrixXcd realize(const SqmBlock& block, const NumericRealization& r);

// Grid-only: 1/2 (p^2 + W^2) -/+ 1/2 W' with the three-point Laplacian;
// upper block takes -W'/2, lower +W'/2.
Eigen::MatrixXd discrete_hamiltonian(const NumericRealization& r);

struct KernelPair {
  Eigen::MatrixXcd kernel_a;     // columns span ker A
  Eigen::MatrixXcd kernel_adag;  // columns span ker A^dagger
  std::size_t dim_a() const { return static_cast<std::size_t>(kernel_a.cols()); }
  std::size_t dim_adag() const { return static_cast<std::size_t>(kernel_adag.cols()); }
};

// Normalizable solutions of A psi = 0 and A^dagger phi = 0.
//
// Fock: A is the exact lowering map on levels 0..N and A^dagger the exact
// raising map into levels 0..N+1, so nothing is lost at the cut.
// Grid: each first-order equation is discretized with the compact two-point
// stencil on the P+1 cell midpoints with Dirichlet ends. A solution that does
// not decay at both ends cannot meet the boundary conditions and leaves a
// residual. A singular value below 1e-8 * (largest) counts as a kernel vector.
KernelPair ground_state_pair(const NumericRealization& r);

inline constexpr double kKernelRelativeTolerance = 1e-8;

// Grid-only: the two diagonal blocks B_+^T B_+ and B_-^T B_- on the nodes,
// where B_+/- is the compact stencil of (+/- d/dx + W)/sqrt(2) used by
// ground_state_pair. Their null spaces are exactly the detected kernels;
// the central-difference A of realize() doubles every level instead.
struct GridBlocks {
  Eigen::MatrixXd upper;  // A^dag A
  Eigen::MatrixXd lower;  // A A^dag
};
GridBlocks factorized_grid_blocks(const NumericRealization& r);

}  // namespace zsqm
