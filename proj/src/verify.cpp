#include "zsqm/verify.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "zsqm/error.h"
#include "zsqm/parallel.h"
#include "zsqm/tensor_check.h"

namespace zsqm {

namespace {

std::string bracket_label(const std::string& x, const std::string& y, const DegreeVector& a,
                          const DegreeVector& b) {
  return bracket_kind(a, b) == Bracket::anticommutator ? "{" + x + "," + y + "}"
                                                       : "[" + x + "," + y + "]";
}

// Terms of [[X, Y]] = XY - (-1)^{a.b} YX, appended to `out`.
void append_bracket(const GradedOperator& x, const GradedOperator& y, SqmTable& table,
                    std::vector<TensorTerm>& out) {
  const int sx = table.intern(x.sqm);
  const int sy = table.intern(y.sqm);
  const Gaussian minus_sign{-bracket_sign(x.degree, y.degree), 0};
  out.push_back({x.clifford * y.clifford, table.product(sx, sy), {1, 0}});
  out.push_back({y.clifford * x.clifford, table.product(sy, sx), minus_sign});
}

// Stable per-worker tables; one shared table would need locking.
struct Workspace {
  explicit Workspace(int jobs) : tables(static_cast<std::size_t>(std::max(1, jobs))) {}
  std::vector<SqmTable> tables;
};

CheckResult vanishing_bracket(const GradedOperator& x, const std::string& xl,
                              const GradedOperator& y, const std::string& yl, SqmTable& table) {
  std::vector<TensorTerm> terms;
  append_bracket(x, y, table, terms);
  auto z = tensor_sum_is_zero(terms, table);
  return {bracket_label(xl, yl, x.degree, y.degree), z.zero, z.residual};
}

std::string hamiltonian_label() { return "H"; }

}  // namespace

void RelationReport::recompute_overall() {
  overall = central_pair_failures.empty();
  for (const auto& r : pair_results) overall = overall && r.pass;
  for (const auto& r : centrality_results) overall = overall && r.pass;
}

RelationReport check_defining_relations(const Model& model, int jobs) {
  RelationReport report;
  report.model = model.spec;
  const int count = static_cast<int>(model.num_supercharges());
  const auto total = static_cast<std::size_t>(count) * static_cast<std::size_t>(count);
  report.pair_results.resize(total);
  Workspace ws(jobs);
  parallel_for(total, jobs, [&](std::size_t idx, std::size_t worker) {
    SqmTable& table = ws.tables[worker];
    const int k = static_cast<int>(idx) / count;
    const int l = static_cast<int>(idx) % count;
    const auto& qa = model.supercharges[static_cast<std::size_t>(k)];
    const auto& qb = model.supercharges[static_cast<std::size_t>(l)];
    std::vector<TensorTerm> terms;
    append_bracket(qa, qb, table, terms);
    if (k == l) {
      terms.push_back({model.hamiltonian.clifford, table.intern(model.hamiltonian.sqm), {-2, 0}});
    } else {
      // 2 i^{1-a.b} Z_ab moved to the left-hand side
      const GradedOperator z = model.central_any(k, l);
      const int ab = dot(qa.degree, qb.degree);
      Gaussian c = Gaussian::unit(1 - ab) * Gaussian{-2, 0};
      terms.push_back({z.clifford, table.intern(z.sqm), c});
    }
    auto res = tensor_sum_is_zero(terms, table);
    report.pair_results[idx] = {bracket_label(model.supercharge_label(k), model.supercharge_label(l),
                                              qa.degree, qb.degree),
                                res.zero, res.residual};
  });
  report.recompute_overall();
  return report;
}

RelationReport check_centrality(const Model& model, int jobs) {
  RelationReport report;
  report.model = model.spec;
  const int count = static_cast<int>(model.num_supercharges());
  const std::size_t nz = model.centrals.size();
  Workspace ws(jobs);

  // Z with Q, then H with Q, then H with Z
  const std::size_t zq = nz * static_cast<std::size_t>(count);
  const std::size_t total = zq + static_cast<std::size_t>(count) + nz;
  report.centrality_results.resize(total);
  parallel_for(total, jobs, [&](std::size_t idx, std::size_t worker) {
    SqmTable& table = ws.tables[worker];
    if (idx < zq) {
      const auto& z = model.centrals[idx / static_cast<std::size_t>(count)];
      const int c = static_cast<int>(idx % static_cast<std::size_t>(count));
      report.centrality_results[idx] =
          vanishing_bracket(z, model.central_label(z.first, z.second),
                            model.supercharges[static_cast<std::size_t>(c)], model.supercharge_label(c), table);
    } else if (idx < zq + static_cast<std::size_t>(count)) {
      const int c = static_cast<int>(idx - zq);
      report.centrality_results[idx] =
          vanishing_bracket(model.hamiltonian, hamiltonian_label(),
                            model.supercharges[static_cast<std::size_t>(c)], model.supercharge_label(c), table);
    } else {
      const auto& z = model.centrals[idx - zq - static_cast<std::size_t>(count)];
      report.centrality_results[idx] = vanishing_bracket(
          model.hamiltonian, hamiltonian_label(), z, model.central_label(z.first, z.second), table);
    }
  });

  // Z with Z', i < j
  const std::size_t zz = nz * (nz == 0 ? 0 : nz - 1) / 2;
  std::vector<std::vector<CheckResult>> failures(ws.tables.size());
  parallel_for(nz, jobs, [&](std::size_t i, std::size_t worker) {
    SqmTable& table = ws.tables[worker];
    const auto& zi = model.centrals[i];
    for (std::size_t j = i + 1; j < nz; ++j) {
      const auto& zj = model.centrals[j];
      auto r = vanishing_bracket(zi, model.central_label(zi.first, zi.second), zj,
                                 model.central_label(zj.first, zj.second), table);
      if (!r.pass) failures[worker].push_back(std::move(r));
    }
  });
  report.central_pairs_checked = zz;
  for (auto& f : failures) {
    for (auto& r : f) report.central_pair_failures.push_back(std::move(r));
  }
  std::sort(report.central_pair_failures.begin(), report.central_pair_failures.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.label < b.label; });
  report.recompute_overall();
  return report;
}

RelationReport check_all_relations(const Model& model, int jobs) {
  RelationReport out = check_defining_relations(model, jobs);
  RelationReport c = check_centrality(model, jobs);
  out.centrality_results = std::move(c.centrality_results);
  out.central_pairs_checked = c.central_pairs_checked;
  out.central_pair_failures = std::move(c.central_pair_failures);
  out.recompute_overall();
  return out;
}

LemmaReport check_commutation_lemma(const Model& model) {
  LemmaReport report;
  const bool minimal = model.spec.family == Family::minimal;
  report.rule = minimal ? "minimal" : model.spec.family == Family::next ? "next" : "general";
  const int n = model.spec.n;
  const auto count = model.generators.size();
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t l = k + 1; l < count; ++l) {
      const auto& a = model.degrees[k];
      const auto& b = model.degrees[l];
      const int ab = dot(a, b);
      bool expect_commute = ab == 1;
      if (minimal) {
        const bool same_last = a.component(n) == b.component(n);
        expect_commute = (ab == 0 && !same_last) || (ab == 1 && same_last);
      }
      const auto& x = model.generators[k];
      const auto& y = model.generators[l];
      const bool ok = expect_commute ? commutes(x, y) : anticommutes(x, y);
      ++report.pairs_checked;
      if (!ok) {
        report.failures.push_back(model.generator_symbol + "_" + a.to_string() + ", " +
                                  model.generator_symbol + "_" + b.to_string() + " should " +
                                  (expect_commute ? "commute" : "anticommute"));
      }
    }
  }
  return report;
}

// ---- rank ----

namespace {

using boost::multiprecision::cpp_rational;

struct ExactComplex {
  cpp_rational re;
  cpp_rational im;
  bool is_zero() const { return re == 0 && im == 0; }
};

ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) { return {a.re - b.re, a.im - b.im}; }
ExactComplex inverse(const ExactComplex& a) {
  const cpp_rational norm = a.re * a.re + a.im * a.im;
  return {a.re / norm, -a.im / norm};
}

// Hilbert-Schmidt product <x, y> = tr(x^dag y) of two monomial operators.
Gaussian monomial_inner(const MonomialOperator& x, const MonomialOperator& y) {
  Gaussian acc;
  for (std::size_t r = 0; r < x.dim(); ++r) {
    if (x.col(r) == y.col(r)) acc += Gaussian::unit(y.phase(r) - x.phase(r));
  }
  return acc;
}

// Coefficient-wise inner product, treating words as an orthonormal basis.
Gaussian block_inner(const SqmBlock& x, const SqmBlock& y) {
  Gaussian acc;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const auto& ty = y.at(r, c).terms();
      for (const auto& [w, cx] : x.at(r, c).terms()) {
        auto it = ty.find(w);
        if (it != ty.end()) acc += cx.conj() * it->second;
      }
    }
  }
  return acc;
}

// Rank of a Hermitian Gram matrix by exact elimination.
std::size_t gram_rank(std::vector<std::vector<ExactComplex>> m) {
  const std::size_t n = m.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[rank]);
    const ExactComplex inv = inverse(m[rank][col]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const ExactComplex f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t RankReport::total_rank() const {
  std::size_t t = 0;
  for (const auto& d : degrees) t += d.rank;
  return t;
}

const DegreeRank* RankReport::find(const DegreeVector& d) const {
  for (const auto& g : degrees) {
    if (g.degree == d) return &g;
  }
  return nullptr;
}

RankReport central_rank(const Model& model) {
  RankReport report;
  report.model = model.spec;
  std::map<std::uint64_t, std::vector<const GradedOperator*>> groups;
  for (const auto& z : model.centrals) groups[z.degree.bits()].push_back(&z);

  for (const auto& [bits, members] : groups) {
    DegreeRank dr;
    dr.degree = members.front()->degree;
    for (const auto* z : members) dr.members.push_back(model.central_label(z->first, z->second));

    // proportionality classes of the full tensor operators
    std::vector<std::size_t> rep;  // representative member of each class
    bool all_sqm_aligned = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto* z = members[i];
      if (!proportional(z->sqm, members.front()->sqm)) all_sqm_aligned = false;
      bool placed = false;
      for (std::size_t c = 0; c < rep.size(); ++c) {
        const auto* r = members[rep[c]];
        auto kc = proportional(z->clifford, r->clifford);
        auto ks = proportional(z->sqm, r->sqm);
        if (kc && ks) {
          dr.classes[c].push_back(dr.members[i]);
          placed = true;
          break;
        }
      }
      if (!placed) {
        rep.push_back(i);
        dr.classes.push_back({dr.members[i]});
      }
    }

    bool orthogonal = all_sqm_aligned;
    for (std::size_t x = 0; x < rep.size() && orthogonal; ++x) {
      for (std::size_t y = x + 1; y < rep.size() && orthogonal; ++y) {
        if (!monomial_inner(members[rep[x]]->clifford, members[rep[y]]->clifford).is_zero()) {
          orthogonal = false;
        }
      }
    }
    if (orthogonal) {
      dr.rank = rep.size();
      dr.method = "classes";
    } else {
      const std::size_t k = members.size();
      std::vector<std::vector<ExactComplex>> gram(k, std::vector<ExactComplex>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          const Gaussian g = monomial_inner(members[i]->clifford, members[j]->clifford) *
                             block_inner(members[i]->sqm, members[j]->sqm);
          gram[i][j] = {cpp_rational(g.re), cpp_rational(g.im)};
        }
      }
      dr.rank = gram_rank(std::move(gram));
      dr.method = "gram";
    }
    report.degrees.push_back(std::move(dr));
  }
  return report;
}

RankExpectation check_rank_expectation(const Model& model, const RankReport& report) {
  RankExpectation out;
  const int n = model.spec.n;
  const std::size_t full = std::size_t{1} << (n - 2);
  auto expect_all = [&](std::size_t want, const std::string& why) {
    for (const auto& d : report.degrees) {
      if (d.rank != want) {
        out.pass = false;
        out.notes.push_back("degree " + d.degree.to_string() + ": rank " + std::to_string(d.rank) +
                            ", expected " + std::to_string(want) + " (" + why + ")");
      }
    }
  };
  switch (model.spec.family) {
    case Family::minimal:
      expect_all(1, "one operator per degree");
      break;
    case Family::next:
      if (n % 2 == 0) {
        expect_all(1, "all central elements of a degree proportional");
      } else {
        expect_all(2, "Z_ab and Z_c1 independent");
      }
      break;
    case Family::n4cl10: {
      const auto d = DegreeVector::parse("1100");
      const auto* g = report.find(d);
      const std::string z34 = model.central_label(2, 3);
      const std::string z28 = model.central_label(1, 7);
      bool together = false;
      if (g) {
        for (const auto& cls : g->classes) {
          const bool has34 = std::find(cls.begin(), cls.end(), z34) != cls.end();
          const bool has28 = std::find(cls.begin(), cls.end(), z28) != cls.end();
          together = together || (has34 && has28);
        }
      }
      if (!g || g->rank >= full || !together) {
        out.pass = false;
        out.notes.push_back("degree 1100 should contain the dependent pair " + z34 + ", " + z28);
      } else {
        out.notes.push_back("dependent pair " + z34 + " ~ " + z28 + " in degree 1100, rank " +
                            std::to_string(g->rank));
      }
      break;
    }
    default:
      expect_all(full, "all central elements independent");
      break;
  }
  if (report.degrees.size() != (std::size_t{1} << (n - 1)) - 1) {
    out.pass = false;
    out.notes.push_back("expected " + std::to_string((std::size_t{1} << (n - 1)) - 1) +
                        " nonzero even degrees, found " + std::to_string(report.degrees.size()));
  }
  return out;
}

// ---- orbits ----

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::uint32_t> parent;
};

}  // namespace

std::vector<std::size_t> OrbitReport::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& o : orbits) s.push_back(o.size());
  std::sort(s.rbegin(), s.rend());
  return s;
}

OrbitReport orbit_decomposition(const Model& model) {
  OrbitReport report;
  report.model = model.spec;
  const std::size_t cdim = model.clifford_dim();
  if (2 * cdim > (std::size_t{1} << 31)) throw CapacityError("index set too large for orbit search");
  DisjointSets sets(2 * cdim);
  for (const auto& q : model.supercharges) {
    const auto pattern = q.sqm.pattern();
    for (std::size_t r = 0; r < cdim; ++r) {
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          if (!pattern[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]) continue;
          sets.unite(static_cast<std::uint32_t>(2 * r + static_cast<std::size_t>(s)),
                     static_cast<std::uint32_t>(2 * q.clifford.col(r) + static_cast<std::size_t>(t)));
        }
      }
    }
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_root;
  for (std::uint32_t i = 0; i < 2 * cdim; ++i) by_root[sets.find(i)].push_back(i);
  for (auto& [root, members] : by_root) report.orbits.push_back(std::move(members));
  return report;
}

// ---- generated operators ----

namespace {

// A, A^dagger -> 1 turns each SQM factor into a 2x2 matrix with entries in Z[i].
MonomialOperator sqm_shadow(const SqmBlock& b) {
  std::vector<std::uint32_t> cols(2);
  std::vector<Phase> phases(2);
  for (int r = 0; r < 2; ++r) {
    int found = -1;
    for (int c = 0; c < 2; ++c) {
      Gaussian sum;
      for (const auto& [w, coeff] : b.at(r, c).terms()) sum += coeff;
      if (sum.is_zero()) continue;
      int k = -1;
      for (int p = 0; p < 4; ++p) {
        if (Gaussian::unit(p) == sum) k = p;
      }
      if (k < 0 || found >= 0) throw std::invalid_argument("SQM factor is not monomial: " + b.to_string());
      found = c;
      cols[static_cast<std::size_t>(r)] = static_cast<std::uint32_t>(c);
      phases[static_cast<std::size_t>(r)] = static_cast<Phase>(k);
    }
    if (found < 0) throw std::invalid_argument("SQM factor is singular: " + b.to_string());
  }
  return MonomialOperator(std::move(cols), std::move(phases));
}

struct MonomialKey {
  std::vector<std::uint32_t> cols;
  std::vector<Phase> phases;
  bool operator==(const MonomialKey&) const = default;
};

struct MonomialKeyHash {
  std::size_t operator()(const MonomialKey& k) const {
    std::size_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < k.cols.size(); ++i) {
      h = (h ^ (static_cast<std::size_t>(k.cols[i]) * 4 + k.phases[i])) * 1099511628211ULL;
    }
    return h;
  }
};

// Representative of the class {i^k x}: row 0 carries phase 0.
MonomialKey normalized(const MonomialOperator& x) {
  const MonomialOperator y = x.scaled(4 - x.phase(0));
  return {std::vector<std::uint32_t>(y.columns().begin(), y.columns().end()),
          std::vector<Phase>(y.phases().begin(), y.phases().end())};
}

}  // namespace

std::size_t count_generated_operators(const Model& model) {
  std::vector<MonomialOperator> gens;
  for (const auto& q : model.supercharges) gens.push_back(kron(q.clifford, sqm_shadow(q.sqm)));
  if (gens.empty()) return 0;
  const std::size_t dim = gens.front().dim();

  std::unordered_set<MonomialKey, MonomialKeyHash> seen;
  std::vector<MonomialOperator> frontier;
  for (const auto& g : gens) {
    if (seen.insert(normalized(g)).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<MonomialOperator> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        MonomialOperator y = x * g;
        if (seen.insert(normalized(y)).second) {
          if (seen.size() > kClosureCap || seen.size() * dim > kClosureMemoryCap) {
            throw CapacityError("operator closure exceeds " + std::to_string(seen.size()) +
                                " elements of dimension " + std::to_string(dim));
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace zsqm
