#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace zsqm {

/// Scalar superpotential W(x) for the grid realization.
///
/// Expressions ("x", "x^3", "-2*x + 0.5*x^3", "tanh(x)") are parsed once and
/// evaluated with forward-mode dual numbers, so W' is exact for them. Tabulated
/// potentials are linearly interpolated and have no analytic derivative.
class Superpotential {
 public:
  using Fn = std::function<double(double)>;

  Superpotential();  // W(x) = x
  Superpotential(std::string label, Fn value, Fn derivative = {});

  static Superpotential parse(std::string_view expression);
  // Whitespace separated "x W" rows; '#' starts a comment.
  static Superpotential from_table(const std::string& path);

  const std::string& label() const { return label_; }
  double value(double x) const { return value_(x); }
  bool has_analytic_derivative() const { return static_cast<bool>(derivative_); }
  // Analytic W'(x) when known, otherwise a central difference with step h.
  double derivative(double x, double h) const;

 private:
  std::string label_;
  Fn value_;
  Fn derivative_;
};

}  // namespace zsqm
