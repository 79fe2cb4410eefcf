#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "zsqm/realization.h"
#include "zsqm/superpotential.h"

using zsqm::GridSettings;
using zsqm::NumericRealization;
using zsqm::Superpotential;

namespace {

GridSettings grid_with(const std::string& w, int points = 801, double spacing = 0.02) {
  GridSettings g;
  g.points = points;
  g.spacing = spacing;
  g.w = Superpotential::parse(w);
  return g;
}

// Second eigenvalue of the upper block of the three-point Hamiltonian.
double first_excited(double spacing) {
  const int points = static_cast<int>(std::lround(16.0 / spacing)) + 1;
  const auto r = NumericRealization::grid(grid_with("x", points, spacing));
  const Eigen::MatrixXd h = zsqm::discrete_hamiltonian(r).topLeftCorner(points, points);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(1);
}

}  // namespace

TEST_CASE("superpotential expressions and exact derivatives") {
  const auto cubic = Superpotential::parse("x^3");
  CHECK(cubic.value(2.0) == Catch::Approx(8.0));
  CHECK(cubic.derivative(2.0, 0.1) == Catch::Approx(12.0));
  CHECK(cubic.has_analytic_derivative());

  const auto mixed = Superpotential::parse("-2*x + 0.5*x^3");
  CHECK(mixed.value(1.0) == Catch::Approx(-1.5));
  CHECK(mixed.derivative(1.0, 0.1) == Catch::Approx(-0.5));

  const auto t = Superpotential::parse("tanh(x) + exp(-x*x/2)");
  const double x = 0.7;
  CHECK(t.value(x) == Catch::Approx(std::tanh(x) + std::exp(-x * x / 2)));
  CHECK(t.derivative(x, 0.1) ==
        Catch::Approx(1 - std::tanh(x) * std::tanh(x) - x * std::exp(-x * x / 2)));

  CHECK(Superpotential().value(3.0) == 3.0);
  CHECK_THROWS(Superpotential::parse("x^"));
  CHECK_THROWS(Superpotential::parse("foo(x)"));
  CHECK_THROWS(Superpotential::parse("x^x"));
  CHECK_THROWS(Superpotential::parse("(x"));
}

TEST_CASE("tabulated superpotential interpolates") {
  const auto path = std::filesystem::temp_directory_path() / "zsqm_w_table.txt";
  {
    std::ofstream out(path);
    out << "# x W\n-1 -1\n0 0\n1 2\n";
  }
  const auto w = Superpotential::from_table(path.string());
  CHECK(w.value(0.5) == Catch::Approx(1.0));
  CHECK(w.value(-0.5) == Catch::Approx(-0.5));
  CHECK(std::isnan(w.value(2.0)));
  CHECK_FALSE(w.has_analytic_derivative());
  CHECK(w.derivative(0.5, 0.1) == Catch::Approx(2.0));
  std::filesystem::remove(path);
  CHECK_THROWS(Superpotential::from_table("/nonexistent/table"));
}

TEST_CASE("fock realization of single words is exact") {
  const auto r = NumericRealization::fock(4);
  const auto& b = zsqm::canonical_blocks();
  const Eigen::MatrixXcd h = zsqm::realize(b.h, r);
  Eigen::VectorXd want(10);
  want << 0, 1, 2, 3, 4, 1, 2, 3, 4, 5;
  CHECK((h - Eigen::MatrixXcd(want.cast<std::complex<double>>().asDiagonal())).cwiseAbs().maxCoeff() < 1e-12);

  const Eigen::MatrixXcd q = zsqm::realize(b.q, r);
  CHECK((q - q.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  // off the truncation edge, realize(Q)^2 agrees with realize(H)
  const Eigen::MatrixXcd q2 = q * q;
  for (int k = 0; k < 4; ++k) CHECK(std::abs(q2(k, k) - h(k, k)) < 1e-12);

  CHECK(r.levels() == 5);
  CHECK(r.cluster_tolerance() == 1e-9);
  CHECK_THROWS(NumericRealization::fock(0));
}

TEST_CASE("fock kernels") {
  const auto k = zsqm::ground_state_pair(NumericRealization::fock(8));
  CHECK(k.dim_a() == 1);
  CHECK(k.dim_adag() == 0);
  CHECK(std::abs(std::abs(k.kernel_a(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("grid kernels follow normalizability of exp(-W integral)") {
  // W = x^3: exp(-x^4/4) is normalizable, exp(+x^4/4) is not
  auto k = zsqm::ground_state_pair(NumericRealization::grid(grid_with("x^3")));
  CHECK(k.dim_a() == 1);
  CHECK(k.dim_adag() == 0);

  k = zsqm::ground_state_pair(NumericRealization::grid(grid_with("-x^3")));
  CHECK(k.dim_a() == 0);
  CHECK(k.dim_adag() == 1);

  // W = x^2: neither solution decays at both ends
  k = zsqm::ground_state_pair(NumericRealization::grid(grid_with("x^2")));
  CHECK(k.dim_a() == 0);
  CHECK(k.dim_adag() == 0);

  k = zsqm::ground_state_pair(NumericRealization::grid(grid_with("x", 401, 0.04)));
  CHECK(k.dim_a() == 1);
  CHECK(k.dim_adag() == 0);
}

TEST_CASE("grid kernel vector is the discretized ground state") {
  const auto g = grid_with("x", 401, 0.04);
  const auto k = zsqm::ground_state_pair(NumericRealization::grid(g));
  REQUIRE(k.dim_a() == 1);
  Eigen::VectorXd want(g.points);
  for (int i = 0; i < g.points; ++i) want(i) = std::exp(-0.5 * g.node(i) * g.node(i));
  want.normalize();
  const Eigen::VectorXd got = k.kernel_a.col(0).real();
  const double overlap = std::abs(got.dot(want)) / got.norm();
  CHECK(overlap > 1 - 1e-5);
}

TEST_CASE("grid validation") {
  CHECK_THROWS(NumericRealization::grid(grid_with("x", 2)));
  CHECK_THROWS(NumericRealization::grid(grid_with("x", 11, -0.1)));
  CHECK_THROWS(NumericRealization::grid(grid_with("exp(1000*x)")));
  GridSettings shifted = grid_with("x", 11, 0.5);
  shifted.x_min = 1.0;
  CHECK(shifted.node(0) == 1.0);
  CHECK(shifted.node(10) == 6.0);
  CHECK(grid_with("x", 11, 0.5).node(5) == 0.0);
}

TEST_CASE("three-point Hamiltonian converges at second order") {
  // W = x: upper block is the number operator, first excited level 1
  const double e1 = std::abs(first_excited(0.1) - 1.0);
  const double e2 = std::abs(first_excited(0.05) - 1.0);
  const double ratio = e1 / e2;
  CHECK(ratio > 3.6);
  CHECK(ratio < 4.4);
  CHECK_THROWS(zsqm::discrete_hamiltonian(NumericRealization::fock(3)));
}

TEST_CASE("factorized grid blocks share their nonzero spectrum up to discretization") {
  const auto r = NumericRealization::grid(grid_with("x", 321, 0.05));
  const auto blocks = zsqm::factorized_grid_blocks(r);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> up(blocks.upper, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> down(blocks.lower, Eigen::EigenvaluesOnly);
  CHECK(std::abs(up.eigenvalues()(0)) < 1e-9);
  for (int k = 1; k < 5; ++k) {
    CHECK(up.eigenvalues()(k) == Catch::Approx(k).epsilon(1e-2));
    CHECK(down.eigenvalues()(k - 1) == Catch::Approx(k).epsilon(1e-2));
  }
}
