#include "zsqm/superpotential.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zsqm {

namespace {

struct Dual {
  double v;
  double d;
};

Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
Dual operator/(Dual a, Dual b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }

Dual power(Dual base, Dual exponent) {
  if (exponent.d != 0.0) throw std::invalid_argument("exponent must not depend on x");
  const double e = exponent.v;
  if (e == std::round(e) && std::abs(e) <= 64) {
    const int k = static_cast<int>(e);
    Dual acc{1.0, 0.0};
    for (int i = 0; i < std::abs(k); ++i) acc = acc * base;
    return k >= 0 ? acc : Dual{1.0, 0.0} / acc;
  }
  const double p = std::pow(base.v, e);
  return {p, e * std::pow(base.v, e - 1.0) * base.d};
}

using Node = std::function<Dual(Dual)>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node n = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("superpotential '" + std::string(text_) + "': " + msg +
                                " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Node expr() {
    Node lhs = term();
    for (;;) {
      if (accept('+')) {
        Node rhs = term();
        lhs = [lhs, rhs](Dual x) { return lhs(x) + rhs(x); };
      } else if (accept('-')) {
        Node rhs = term();
        lhs = [lhs, rhs](Dual x) { return lhs(x) - rhs(x); };
      } else {
        return lhs;
      }
    }
  }

  Node term() {
    Node lhs = unary();
    for (;;) {
      if (accept('*')) {
        Node rhs = unary();
        lhs = [lhs, rhs](Dual x) { return lhs(x) * rhs(x); };
      } else if (accept('/')) {
        Node rhs = unary();
        lhs = [lhs, rhs](Dual x) { return lhs(x) / rhs(x); };
      } else {
        return lhs;
      }
    }
  }

  Node unary() {
    if (accept('-')) {
      Node inner = unary();
      return [inner](Dual x) { return Dual{0.0, 0.0} - inner(x); };
    }
    if (accept('+')) return unary();
    return pow();
  }

  Node pow() {
    Node base = primary();
    if (accept('^')) {
      Node exponent = unary();
      if (exponent(Dual{0.5, 1.0}).d != 0.0) {
        throw std::invalid_argument("exponent must not depend on x");
      }
      return [base, exponent](Dual x) { return power(base(x), exponent(x)); };
    }
    return base;
  }

  Node primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (accept('(')) {
      Node inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t used = 0;
      const double v = std::stod(std::string(text_.substr(pos_)), &used);
      pos_ += used;
      return [v](Dual) { return Dual{v, 0.0}; };
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "x") return [](Dual x) { return x; };
      if (!accept('(')) fail("unknown symbol '" + name + "'");
      Node arg = expr();
      if (!accept(')')) fail("missing ')'");
      return function(name, arg);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Node function(const std::string& name, Node arg) {
    if (name == "exp") {
      return [arg](Dual x) {
        const Dual a = arg(x);
        const double e = std::exp(a.v);
        return Dual{e, e * a.d};
      };
    }
    if (name == "sin") {
      return [arg](Dual x) {
        const Dual a = arg(x);
        return Dual{std::sin(a.v), std::cos(a.v) * a.d};
      };
    }
    if (name == "cos") {
      return [arg](Dual x) {
        const Dual a = arg(x);
        return Dual{std::cos(a.v), -std::sin(a.v) * a.d};
      };
    }
    if (name == "tanh") {
      return [arg](Dual x) {
        const Dual a = arg(x);
        const double t = std::tanh(a.v);
        return Dual{t, (1.0 - t * t) * a.d};
      };
    }
    if (name == "sinh") {
      return [arg](Dual x) {
        const Dual a = arg(x);
        return Dual{std::sinh(a.v), std::cosh(a.v) * a.d};
      };
    }
    if (name == "cosh") {
      return [arg](Dual x) {
        const Dual a = arg(x);
        return Dual{std::cosh(a.v), std::sinh(a.v) * a.d};
      };
    }
    fail("unknown function '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Superpotential::Superpotential()
    : Superpotential("x", [](double x) { return x; }, [](double) { return 1.0; }) {}

Superpotential::Superpotential(std::string label, Fn value, Fn derivative)
    : label_(std::move(label)), value_(std::move(value)), derivative_(std::move(derivative)) {
  if (!value_) throw std::invalid_argument("superpotential needs a value function");
}

Superpotential Superpotential::parse(std::string_view expression) {
  auto node = std::make_shared<Node>(Parser(expression).parse());
  return Superpotential(
      std::string(expression), [node](double x) { return (*node)(Dual{x, 0.0}).v; },
      [node](double x) { return (*node)(Dual{x, 1.0}).d; });
}

Superpotential Superpotential::from_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open superpotential table '" + path + "'");
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double x = 0;
    double w = 0;
    if (!(ls >> x)) continue;
    if (!(ls >> w)) throw std::invalid_argument("malformed row in '" + path + "': " + line);
    rows.emplace_back(x, w);
  }
  if (rows.size() < 2) throw std::invalid_argument("superpotential table needs >= 2 rows");
  std::sort(rows.begin(), rows.end());
  auto table = std::make_shared<const std::vector<std::pair<double, double>>>(std::move(rows));
  return Superpotential("table:" + path, [table](double x) {
    const auto& t = *table;
    if (x < t.front().first || x > t.back().first) return std::nan("");
    auto hi = std::lower_bound(t.begin(), t.end(), std::make_pair(x, -HUGE_VAL));
    if (hi == t.begin()) return hi->second;
    auto lo = std::prev(hi);
    const double s = (x - lo->first) / (hi->first - lo->first);
    return lo->second + s * (hi->second - lo->second);
  });
}

double Superpotential::derivative(double x, double h) const {
  if (derivative_) return derivative_(x);
  return (value_(x + h) - value_(x - h)) / (2.0 * h);
}

}  // namespace zsqm
