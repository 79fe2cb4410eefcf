#include "zsqm/spectrum.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zsqm/error.h"

namespace zsqm {

namespace {

std::string describe(const NumericRealization& r) {
  std::ostringstream out;
  if (r.is_fock()) {
    out << "fock:N=" << r.fock_settings().cutoff;
  } else {
    const auto& g = r.grid_settings();
    out << "grid:P=" << g.points << ",h=" << g.spacing << ",x0=" << g.origin() << ",W=" << g.w.label();
  }
  return out.str();
}

}  // namespace

SpectrumReport spectrum(const Model& model, const NumericRealization& r, SpectrumOptions opts) {
  if (!model.hamiltonian.clifford.is_identity()) {
    throw std::invalid_argument("Hamiltonian must act as the identity on the Clifford factor");
  }
  const std::size_t cdim = model.clifford_dim();
  const std::size_t block_dim = 2 * r.levels();
  if (block_dim > kSpectrumDimCap || cdim > kSpectrumDimCap / block_dim) {
    throw CapacityError("spectrum dimension " + std::to_string(cdim) + " x " + std::to_string(block_dim) +
                        " exceeds 2^20");
  }

  SpectrumReport report;
  report.model = model.spec;
  report.realization = describe(r);
  report.tolerance = r.cluster_tolerance();
  report.total_dim = cdim * block_dim;

  Eigen::VectorXd ev;
  if (r.is_fock()) {
    const Eigen::MatrixXcd h = realize(model.hamiltonian.sqm, r);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver failed");
    ev = solver.eigenvalues();
  } else {
    const GridBlocks blocks = factorized_grid_blocks(r);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> up(blocks.upper, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> down(blocks.lower, Eigen::EigenvaluesOnly);
    if (up.info() != Eigen::Success || down.info() != Eigen::Success) {
      throw std::runtime_error("eigenvalue solver failed");
    }
    ev.resize(up.eigenvalues().size() + down.eigenvalues().size());
    ev << up.eigenvalues(), down.eigenvalues();
    std::sort(ev.begin(), ev.end());
  }

  const double tol = report.tolerance;
  const double edge = r.is_fock() ? r.fock_settings().cutoff - 0.5 : 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double e = ev(i);
    if (std::abs(e) <= tol) report.near_zero += cdim;
    if (r.is_fock() && e >= edge) {
      report.excluded += cdim;
      continue;
    }
    auto& cl = report.clusters;
    if (!cl.empty() && std::abs(e - cl.back().value) <= tol * std::max(1.0, std::abs(e))) {
      cl.back().multiplicity += cdim;
      continue;
    }
    if (!r.is_fock() && cl.size() == opts.grid_clusters) {
      report.excluded += cdim;
      continue;
    }
    cl.push_back({e, cdim});
  }

  const KernelPair kernels = ground_state_pair(r);
  report.zero_modes = cdim * (kernels.dim_a() + kernels.dim_adag());
  return report;
}

SpectrumExpectation check_spectrum_expectation(const Model& model, const SpectrumReport& report,
                                               const NumericRealization& r) {
  SpectrumExpectation out;
  const std::size_t dim = model.clifford_dim() * 2;
  auto fail = [&](std::string note) {
    out.pass = false;
    out.notes.push_back(std::move(note));
  };
  if (report.zero_modes != 0 && report.zero_modes != dim / 2) {
    fail("zero modes " + std::to_string(report.zero_modes) + ", expected 0 or " + std::to_string(dim / 2));
  }
  if (report.near_zero != report.zero_modes) {
    fail("zero cluster holds " + std::to_string(report.near_zero) + " states but " +
         std::to_string(report.zero_modes) + " zero modes were found");
  }
  if (r.is_fock()) {
    const int n = r.fock_settings().cutoff;
    if (report.clusters.size() != static_cast<std::size_t>(n)) {
      fail("expected " + std::to_string(n) + " levels below the cutoff, found " +
           std::to_string(report.clusters.size()));
    }
    for (std::size_t k = 0; k < report.clusters.size(); ++k) {
      const auto& c = report.clusters[k];
      const std::size_t want = k == 0 ? dim / 2 : dim;
      if (std::abs(c.value - static_cast<double>(k)) > report.tolerance * std::max(1.0, c.value)) {
        fail("level " + std::to_string(k) + " at " + std::to_string(c.value));
      }
      if (c.multiplicity != want) {
        fail("level " + std::to_string(k) + " multiplicity " + std::to_string(c.multiplicity) +
             ", expected " + std::to_string(want));
      }
    }
    if (report.zero_modes != dim / 2) {
      fail("harmonic ground level needs " + std::to_string(dim / 2) + " zero modes");
    }
  }
  return out;
}

}  // namespace zsqm
