#include "zsqm/realization.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace zsqm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void validate_grid(const GridSettings& g) {
  if (g.points < 3) throw std::invalid_argument("grid needs at least 3 points");
  if (!(g.spacing > 0.0) || !std::isfinite(g.spacing)) {
    throw std::invalid_argument("grid spacing must be positive and finite");
  }
  // nodes, cell midpoints and W' at the nodes are all used somewhere
  for (int i = 0; i <= g.points; ++i) {
    std::vector<double> values{g.w.value(g.node(i) - 0.5 * g.spacing)};
    if (i < g.points) {
      values.push_back(g.w.value(g.node(i)));
      values.push_back(g.w.derivative(g.node(i), g.spacing));
    }
    for (double v : values) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("superpotential " + g.w.label() + " is not finite near x = " +
                                    std::to_string(g.node(i)));
      }
    }
  }
}

Eigen::MatrixXcd kernel_basis(const Eigen::MatrixXd& m) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double largest = s.size() ? s(0) : 0.0;
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    const double sigma = k < s.size() ? s(k) : 0.0;
    if (sigma < kKernelRelativeTolerance * largest) null_cols.push_back(k);
  }
  Eigen::MatrixXcd basis(m.cols(), static_cast<Eigen::Index>(null_cols.size()));
  for (std::size_t c = 0; c < null_cols.size(); ++c) {
    basis.col(static_cast<Eigen::Index>(c)) = svd.matrixV().col(null_cols[c]).cast<std::complex<double>>();
  }
  return basis;
}

// Two-point midpoint stencil of (sign * d/dx + W) / sqrt(2): rows are the
// P+1 cell midpoints, columns the P nodes, ghost nodes held at zero.
Eigen::MatrixXd compact_first_order(const GridSettings& g, double sign) {
  const int p = g.points;
  const double h = g.spacing;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p + 1, p);
  for (int row = 0; row <= p; ++row) {
    const double xm = g.node(row) - 0.5 * h;
    const double w = g.w.value(xm);
    const int left = row - 1;
    const int right = row;
    if (left >= 0) m(row, left) = kInvSqrt2 * (-sign / h + 0.5 * w);
    if (right < p) m(row, right) = kInvSqrt2 * (sign / h + 0.5 * w);
  }
  return m;
}

}  // namespace

NumericRealization::NumericRealization(std::variant<FockSettings, GridSettings> s)
    : settings_(std::move(s)) {}

NumericRealization NumericRealization::fock(int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("Fock cutoff must be >= 1");
  if (cutoff > 1 << 14) throw std::invalid_argument("Fock cutoff too large");
  return NumericRealization(FockSettings{cutoff});
}

NumericRealization NumericRealization::grid(GridSettings settings) {
  validate_grid(settings);
  NumericRealization r(settings);
  const int p = settings.points;
  const double h = settings.spacing;
  r.grid_a_ = Eigen::MatrixXcd::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    r.grid_a_(i, i) = kInvSqrt2 * settings.w.value(settings.node(i));
    if (i + 1 < p) r.grid_a_(i, i + 1) = kInvSqrt2 / (2.0 * h);
    if (i > 0) r.grid_a_(i, i - 1) = -kInvSqrt2 / (2.0 * h);
  }
  return r;
}

std::size_t NumericRealization::levels() const {
  if (is_fock()) return static_cast<std::size_t>(fock_settings().cutoff) + 1;
  return static_cast<std::size_t>(grid_settings().points);
}

Eigen::MatrixXcd NumericRealization::ladder(std::size_t n, Letter l) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 1; k < n; ++k) {
    const double v = std::sqrt(static_cast<double>(k));
    const auto a = static_cast<Eigen::Index>(k);
    if (l == Letter::a) {
      m(a - 1, a) = v;
    } else {
      m(a, a - 1) = v;
    }
  }
  return m;
}

Eigen::MatrixXcd NumericRealization::lowering() const {
  if (is_fock()) return ladder(levels(), Letter::a);
  return grid_a_;
}

Eigen::MatrixXcd NumericRealization::raising() const {
  if (is_fock()) return ladder(levels(), Letter::adag);
  return grid_a_.adjoint();
}

Eigen::MatrixXcd NumericRealization::word(const LadderWord& w) const {
  const auto n = static_cast<Eigen::Index>(levels());
  if (!is_fock()) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd a = grid_a_;
    const Eigen::MatrixXcd ad = grid_a_.adjoint();
    for (int i = 0; i < w.length(); ++i) acc = acc * (w.at(i) == Letter::a ? a : ad);
    return acc;
  }
  const std::size_t big = levels() + static_cast<std::size_t>(w.length());
  const Eigen::MatrixXcd a = ladder(big, Letter::a);
  const Eigen::MatrixXcd ad = ladder(big, Letter::adag);
  const auto nb = static_cast<Eigen::Index>(big);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(nb, nb);
  for (int i = 0; i < w.length(); ++i) acc = acc * (w.at(i) == Letter::a ? a : ad);
  return acc.topLeftCorner(n, n);
}

Eigen::MatrixXcd realize(const SqmBlock& block, const NumericRealization& r) {
  const auto n = static_cast<Eigen::Index>(r.levels());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 2; ++col) {
      for (const auto& [w, c] : block.at(row, col).terms()) {
        const std::complex<double> coeff(static_cast<double>(c.re), static_cast<double>(c.im));
        out.block(row * n, col * n, n, n) += coeff * r.word(w);
      }
    }
  }
  return out;
}

Eigen::MatrixXd discrete_hamiltonian(const NumericRealization& r) {
  if (r.is_fock()) throw std::invalid_argument("discrete_hamiltonian needs a grid realization");
  const auto& g = r.grid_settings();
  const int p = g.points;
  const double h = g.spacing;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * p, 2 * p);
  for (int i = 0; i < p; ++i) {
    const double x = g.node(i);
    const double w = g.w.value(x);
    const double dw = g.w.derivative(x, h);
    const double diag = 0.5 * (2.0 / (h * h) + w * w);
    out(i, i) = diag - 0.5 * dw;
    out(p + i, p + i) = diag + 0.5 * dw;
    if (i + 1 < p) {
      const double off = -0.5 / (h * h);
      out(i, i + 1) = out(i + 1, i) = off;
      out(p + i, p + i + 1) = out(p + i + 1, p + i) = off;
    }
  }
  return out;
}

KernelPair ground_state_pair(const NumericRealization& r) {
  KernelPair out;
  if (r.is_fock()) {
    const int n = r.fock_settings().cutoff + 1;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(n + 1, n);
    for (int k = 0; k < n; ++k) {
      if (k > 0) a(k - 1, k) = std::sqrt(static_cast<double>(k));
      ad(k + 1, k) = std::sqrt(static_cast<double>(k + 1));
    }
    out.kernel_a = kernel_basis(a);
    out.kernel_adag = kernel_basis(ad);
    return out;
  }
  const auto& g = r.grid_settings();
  out.kernel_a = kernel_basis(compact_first_order(g, +1.0));
  out.kernel_adag = kernel_basis(compact_first_order(g, -1.0));
  return out;
}

GridBlocks factorized_grid_blocks(const NumericRealization& r) {
  if (r.is_fock()) throw std::invalid_argument("factorized_grid_blocks needs a grid realization");
  const auto& g = r.grid_settings();
  const Eigen::MatrixXd plus = compact_first_order(g, +1.0);
  const Eigen::MatrixXd minus = compact_first_order(g, -1.0);
  return {plus.transpose() * plus, minus.transpose() * minus};
}

}  // namespace zsqm
