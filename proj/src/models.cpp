#include "zsqm/models.h"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "zsqm/error.h"

namespace zsqm {

namespace {

const CanonicalBlocks& blocks() { return canonical_blocks(); }

struct FixedTable {
  Family family;
  int n;
  int pairs;
  std::vector<std::string> words;
};

const std::vector<std::string>& n4_common() {
  static const std::vector<std::string> w{"g1", "g2", "g3", "g4", "G1 G2 G3 g5"};
  return w;
}

const std::vector<std::string>& n5_common() {
  static const std::vector<std::string> w{
      "g1",
      "g2",
      "g3",
      "g4",
      "g5",
      "G1 G2 G3 g6",
      "G1 G2 G4 g7",
      "G1 G2 G5 g8",
      "G1 G3 G4 G8 g9",
      "G1 G3 G5 G7 g10",
      "G1 G4 G5 G6 g11",
      "G2 G3 G4 G8 G10 G11 g12",
      "G2 G3 G5 G7 G9 G11 g13",
  };
  return w;
}

FixedTable fixed_table(Family f) {
  FixedTable t{f, 0, 0, {}};
  switch (f) {
    case Family::n4cl12:
      t.n = 4;
      t.pairs = 6;
      t.words = n4_common();
      t.words.insert(t.words.end(), {"G1 G2 G4 g6", "G2 G5 G6", "g1 t2 t3 t4"});
      break;
    case Family::n4cl10:
      t.n = 4;
      t.pairs = 5;
      t.words = n4_common();
      t.words.insert(t.words.end(), {"G3 G5", "t1 g2 t3 t4", "i g2 g3 g4"});
      break;
    case Family::n5cl28:
      t.n = 5;
      t.pairs = 14;
      t.words = n5_common();
      t.words.insert(t.words.end(), {"G2 G4 G5 G6 G9 G10 g14", "G1 G2 G9 G10 G11 G12 G13 G14",
                                     "t1 t2 t3 t4 t5 g6 g7 g8"});
      break;
    case Family::n5cl26:
      t.n = 5;
      t.pairs = 13;
      t.words = n5_common();
      t.words.insert(t.words.end(), {"G1 G3 G7 G8 G11 G12 G13", "g3 g4 g5 t12 t13",
                                     "t1 t2 t3 t4 t5 g6 g7 g8"});
      break;
    default:
      throw std::logic_error("not a fixed-table family");
  }
  return t;
}

bool is_fixed_table(Family f) {
  return f == Family::n4cl12 || f == Family::n4cl10 || f == Family::n5cl28 || f == Family::n5cl26;
}

int family_rank(Family f) {
  switch (f) {
    case Family::n4cl12:
    case Family::n4cl10:
      return 4;
    case Family::n5cl28:
    case Family::n5cl26:
      return 5;
    default:
      return 0;
  }
}

void check_generators(const Model& m) {
  for (std::size_t k = 0; k < m.generators.size(); ++k) {
    const auto& g = m.generators[k];
    if (!g.is_hermitian() || !g.is_involution()) {
      throw std::logic_error(m.spec.selector() + ": generator " + m.generator_symbol +
                             std::to_string(k + 1) + " is not hermitian and idempotent");
    }
  }
}

GradedOperator make_op(MonomialOperator c, SqmBlock s, DegreeVector d, Role role, int k = -1,
                       int l = -1) {
  return GradedOperator{std::move(c), std::move(s), d, role, k, l};
}

// Product gamma_1^{a_1} ... gamma_len^{a_len} in Cl(2 * pairs).
MonomialOperator ordered_gamma_product(const DegreeVector& a, int len, int pairs) {
  auto out = MonomialOperator::identity(std::size_t{1} << pairs);
  for (int j = 1; j <= len; ++j) {
    if (a.component(j)) out = out * gamma(j, pairs);
  }
  return out;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::minimal:
      return "minimal";
    case Family::next:
      return "next";
    case Family::maximal:
      return "maximal";
    case Family::n4cl12:
      return "n4cl12";
    case Family::n4cl10:
      return "n4cl10";
    case Family::n5cl28:
      return "n5cl28";
    case Family::n5cl26:
      return "n5cl26";
  }
  return "?";
}

ModelSpec ModelSpec::parse(std::string_view selector) {
  ModelSpec spec;
  const auto colon = selector.find(':');
  const std::string head(selector.substr(0, colon));
  bool found = false;
  for (Family f : {Family::minimal, Family::next, Family::maximal, Family::n4cl12, Family::n4cl10,
                   Family::n5cl28, Family::n5cl26}) {
    if (family_name(f) == head) {
      spec.family = f;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown model family '" + head + "'");
  if (is_fixed_table(spec.family)) {
    if (colon != std::string_view::npos) {
      throw std::invalid_argument("model '" + head + "' takes no parameters");
    }
    spec.n = family_rank(spec.family);
  } else {
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("model '" + head + "' needs a rank, e.g. " + head + ":n=3");
    }
    const auto param = selector.substr(colon + 1);
    if (param.substr(0, 2) != "n=") {
      throw std::invalid_argument("expected 'n=<rank>' after '" + head + ":'");
    }
    const auto digits = param.substr(2);
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("bad rank in model selector '" + std::string(selector) + "'");
    }
    spec.n = n;
  }
  spec.validate();
  return spec;
}

std::string ModelSpec::selector() const {
  if (is_fixed_table(family)) return family_name(family);
  return family_name(family) + ":n=" + std::to_string(n);
}

int ModelSpec::clifford_pairs() const {
  switch (family) {
    case Family::minimal:
      return n - 1;
    case Family::next:
      return n;
    case Family::maximal:
      return (1 << (n - 1)) - 1;
    default:
      return fixed_table(family).pairs;
  }
}

void ModelSpec::validate() const {
  if (is_fixed_table(family)) {
    if (n != family_rank(family)) {
      throw std::invalid_argument(family_name(family) + " is defined only for n=" +
                                  std::to_string(family_rank(family)));
    }
    if (!ordering.empty() && ordering != enumerate_odd_degrees(n)) {
      throw std::invalid_argument(family_name(family) +
                                  " uses a fixed generator table; its degree ordering cannot change");
    }
    return;
  }
  const int cap = family == Family::maximal ? kMaximalRankCap : kRankCap;
  if (n < 2 || n > cap) {
    throw CapacityError(family_name(family) + " model needs 2 <= n <= " + std::to_string(cap) +
                        ", got n=" + std::to_string(n));
  }
  if (!ordering.empty() && !is_odd_degree_ordering(n, ordering)) {
    throw std::invalid_argument("ordering is not a permutation of the parity-1 degrees");
  }
}

std::vector<DegreeVector> ModelSpec::effective_ordering() const {
  return ordering.empty() ? enumerate_odd_degrees(n) : ordering;
}

std::size_t Model::central_index(int k, int l) const {
  const int m = static_cast<int>(supercharges.size());
  if (k < 0 || l <= k || l >= m) throw std::out_of_range("central index needs 0 <= k < l < M");
  // rows 0..k-1 hold (m-1) + (m-2) + ... entries
  return static_cast<std::size_t>(k * m - k * (k + 1) / 2 + (l - k - 1));
}

GradedOperator Model::central_any(int k, int l) const {
  if (k == l) throw std::invalid_argument("Z_aa is identically zero");
  if (k < l) return central(k, l);
  GradedOperator z = central(l, k);
  // Z_ba = -(-1)^{a.b} Z_ab
  z.clifford = z.clifford.scaled(dot(degrees[k], degrees[l]) ? 0 : 2);
  z.first = k;
  z.second = l;
  return z;
}

std::string Model::supercharge_label(int k) const { return "Q_" + degrees[k].to_string(); }

std::string Model::central_label(int k, int l) const {
  return "Z_" + std::to_string(k + 1) + "," + std::to_string(l + 1) + "(" +
         degrees[k].to_string() + "," + degrees[l].to_string() + ")";
}

int phase_h_minimal(const DegreeVector& a) {
  if (a.parity() != 1) throw std::invalid_argument("h(a) needs a parity-1 degree");
  const int w = a.weight() - a.component(a.rank());
  return (w * (w - 1) / 2) % 4;
}

int phase_h_next(const DegreeVector& a) {
  const int w = a.weight();
  return (w * (w - 1) / 2) % 4;
}

MonomialOperator clifford_word(std::string_view text, int pairs) {
  auto out = MonomialOperator::identity(std::size_t{1} << pairs);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "i") {
      out = out.scaled(1);
      continue;
    }
    int j = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), j);
    if (tok.size() < 2 || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad Clifford token '" + tok + "'");
    }
    switch (tok[0]) {
      case 'g':
        out = out * gamma(j, pairs);
        break;
      case 't':
        out = out * gamma_tilde(j, pairs);
        break;
      case 'G':
        out = out * big_gamma(j, pairs);
        break;
      default:
        throw std::invalid_argument("bad Clifford token '" + tok + "'");
    }
  }
  return out;
}

std::vector<MonomialOperator> family_generators(const ModelSpec& spec) {
  spec.validate();
  const auto degrees = spec.effective_ordering();
  const int pairs = spec.clifford_pairs();
  const int n = spec.n;
  std::vector<MonomialOperator> gens;
  switch (spec.family) {
    case Family::minimal:
      for (const auto& a : degrees) {
        gens.push_back(ordered_gamma_product(a, n - 1, pairs).scaled(phase_h_minimal(a)));
      }
      break;
    case Family::next:
      for (const auto& a : degrees) {
        if (a.is_ones()) {
          gens.push_back(MonomialOperator::identity(std::size_t{1} << pairs));
        } else {
          gens.push_back(ordered_gamma_product(a, n, pairs).scaled(phase_h_next(a)));
        }
      }
      break;
    case Family::maximal: {
      const int m_count = static_cast<int>(degrees.size());
      for (int m = 1; m <= m_count; ++m) {
        auto g = MonomialOperator::identity(std::size_t{1} << pairs);
        if (m < m_count) {
          for (int j = 1; j < m; ++j) {
            if (dot(degrees[j - 1], degrees[m - 1])) g = g * big_gamma(j, pairs);
          }
          g = g * gamma(m, pairs);
        } else {
          for (int j = 1; j < m_count; ++j) {
            if (!dot(degrees[j - 1], degrees[m_count - 1])) g = g * big_gamma(j, pairs);
          }
        }
        gens.push_back(std::move(g));
      }
      break;
    }
    default:
      for (const auto& w : fixed_table(spec.family).words) gens.push_back(clifford_word(w, pairs));
      break;
  }
  return gens;
}

Model assemble(const ModelSpec& spec, std::vector<MonomialOperator> generators) {
  spec.validate();
  Model m;
  m.spec = spec;
  m.degrees = spec.effective_ordering();
  const int count = static_cast<int>(m.degrees.size());
  if (static_cast<int>(generators.size()) != count) {
    throw DimensionError("need one generator per parity-1 degree");
  }
  const std::size_t cdim = spec.clifford_dim();
  for (const auto& g : generators) {
    if (g.dim() != cdim) throw DimensionError("generator has the wrong Clifford dimension");
  }
  m.generators = std::move(generators);
  m.generator_symbol = spec.family == Family::minimal ? "X" : spec.family == Family::next ? "Y" : "G";

  const auto& b = blocks();
  const SqmBlock qs_i = (b.q * b.s).scaled_unit(1);  // i Q S
  const SqmBlock hs = b.h * b.s;
  const DegreeVector zero = DegreeVector::zero(spec.n);
  m.hamiltonian = make_op(MonomialOperator::identity(cdim), b.h, zero, Role::hamiltonian);

  const int n = spec.n;
  for (int k = 0; k < count; ++k) {
    const auto& a = m.degrees[k];
    SqmBlock s = b.q;
    if (spec.family == Family::minimal && a.component(n) == 0) s = qs_i;
    m.supercharges.push_back(make_op(m.generators[k], s, a, Role::supercharge, k));
  }

  m.centrals.reserve(static_cast<std::size_t>(count) * (count - 1) / 2);
  for (int k = 0; k < count; ++k) {
    for (int l = k + 1; l < count; ++l) {
      const auto& a = m.degrees[k];
      const auto& bb = m.degrees[l];
      const int ab = dot(a, bb);
      const MonomialOperator prod = m.generators[k] * m.generators[l];
      MonomialOperator c;
      SqmBlock s = b.h;
      if (spec.family == Family::minimal && a.component(n) != bb.component(n)) {
        // (-1)^{b_n} i^{a.b} X_a X_b (x) H S
        c = prod.scaled(2 * bb.component(n) + ab);
        s = hs;
      } else if (spec.family == Family::next && (a.is_ones() || bb.is_ones())) {
        // Z_{a1} = Z_{1a} = Y_a (x) H
        c = a.is_ones() ? m.generators[l] : m.generators[k];
      } else {
        // (-i)^{1-a.b} G_k G_l (x) H
        c = prod.scaled(3 * (1 - ab));
      }
      m.centrals.push_back(make_op(std::move(c), std::move(s), a + bb, Role::central, k, l));
    }
  }
  return m;
}

Model build_model(const ModelSpec& spec) {
  Model m = assemble(spec, family_generators(spec));
  check_generators(m);
  return m;
}

Model build_minimal(int n, std::vector<DegreeVector> ordering) {
  return build_model({Family::minimal, n, std::move(ordering)});
}

Model build_next(int n, std::vector<DegreeVector> ordering) {
  return build_model({Family::next, n, std::move(ordering)});
}

Model build_maximal(int n, std::vector<DegreeVector> ordering) {
  return build_model({Family::maximal, n, std::move(ordering)});
}

Model build_n4_cl12() { return build_model({Family::n4cl12, 4, {}}); }
Model build_n4_cl10() { return build_model({Family::n4cl10, 4, {}}); }
Model build_n5_cl28() { return build_model({Family::n5cl28, 5, {}}); }
Model build_n5_cl26() { return build_model({Family::n5cl26, 5, {}}); }

}  // namespace zsqm
