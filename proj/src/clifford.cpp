#include "zsqm/clifford.h"

#include <sstream>
#include <stdexcept>

#include "zsqm/error.h"

namespace zsqm {

namespace {

constexpr int kMaxPairs = 24;

void require_same_dim(const MonomialOperator& x, const MonomialOperator& y) {
  if (x.dim() != y.dim()) {
    throw DimensionError("monomial dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                         std::to_string(y.dim()));
  }
}

void require_generator_index(int j, int pairs) {
  if (pairs < 1 || pairs > kMaxPairs) {
    throw std::out_of_range("Clifford pair count out of range: " + std::to_string(pairs));
  }
  if (j < 1 || j > pairs) {
    throw std::out_of_range("gamma index " + std::to_string(j) + " outside 1.." +
                            std::to_string(pairs));
  }
}

}  // namespace

MonomialOperator::MonomialOperator(std::vector<std::uint32_t> columns, std::vector<Phase> phases)
    : columns_(std::move(columns)), phases_(std::move(phases)) {
  if (columns_.size() != phases_.size()) {
    throw DimensionError("monomial columns and phases differ in length");
  }
  std::vector<bool> hit(columns_.size(), false);
  for (std::size_t r = 0; r < columns_.size(); ++r) {
    const auto c = columns_[r];
    if (c >= columns_.size() || hit[c]) {
      throw std::invalid_argument("monomial column map is not a permutation");
    }
    hit[c] = true;
    phases_[r] &= 3U;
  }
}

MonomialOperator MonomialOperator::identity(std::size_t dim) {
  std::vector<std::uint32_t> cols(dim);
  for (std::size_t r = 0; r < dim; ++r) cols[r] = static_cast<std::uint32_t>(r);
  return MonomialOperator(std::move(cols), std::vector<Phase>(dim, 0));
}

MonomialOperator MonomialOperator::diagonal(std::vector<Phase> phases) {
  auto id = identity(phases.size());
  return MonomialOperator(std::vector<std::uint32_t>(id.columns_), std::move(phases));
}

MonomialOperator MonomialOperator::adjoint() const {
  MonomialOperator out;
  out.columns_.resize(dim());
  out.phases_.resize(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    const auto c = columns_[r];
    out.columns_[c] = static_cast<std::uint32_t>(r);
    out.phases_[c] = phase_add(0, -phases_[r]);
  }
  return out;
}

MonomialOperator MonomialOperator::scaled(int k) const {
  MonomialOperator out = *this;
  for (auto& p : out.phases_) p = phase_add(p, k);
  return out;
}

MonomialOperator MonomialOperator::with_row_phase_shift(std::size_t row, int k) const {
  if (row >= dim()) throw std::out_of_range("row outside monomial operator");
  MonomialOperator out = *this;
  out.phases_[row] = phase_add(out.phases_[row], k);
  return out;
}

bool MonomialOperator::is_diagonal() const {
  for (std::size_t r = 0; r < dim(); ++r) {
    if (columns_[r] != r) return false;
  }
  return true;
}

bool MonomialOperator::is_identity() const {
  auto s = scalar_value();
  return s && *s == 0;
}

std::optional<int> MonomialOperator::scalar_value() const {
  if (dim() == 0 || !is_diagonal()) return std::nullopt;
  for (auto p : phases_) {
    if (p != phases_[0]) return std::nullopt;
  }
  return phases_[0];
}

bool MonomialOperator::is_hermitian() const { return *this == adjoint(); }

bool MonomialOperator::is_involution() const { return (*this * *this).is_identity(); }

std::vector<MonomialOperator::Entry> MonomialOperator::entries() const {
  std::vector<Entry> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    out.push_back({static_cast<std::uint32_t>(r), columns_[r], phases_[r]});
  }
  return out;
}

std::string MonomialOperator::debug_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < dim(); ++r) {
    if (r) os << ", ";
    os << '(' << r << ',' << columns_[r] << ',' << static_cast<int>(phases_[r]) << ')';
  }
  os << ']';
  return os.str();
}

MonomialOperator operator*(const MonomialOperator& x, const MonomialOperator& y) {
  require_same_dim(x, y);
  const std::size_t n = x.dim();
  std::vector<std::uint32_t> cols(n);
  std::vector<Phase> phases(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto mid = x.columns_[r];
    cols[r] = y.columns_[mid];
    phases[r] = static_cast<Phase>((x.phases_[r] + y.phases_[mid]) & 3U);
  }
  MonomialOperator out;
  out.columns_ = std::move(cols);
  out.phases_ = std::move(phases);
  return out;
}

MonomialOperator mul(const MonomialOperator& x, const MonomialOperator& y) { return x * y; }

std::optional<int> proportional(const MonomialOperator& x, const MonomialOperator& y) {
  require_same_dim(x, y);
  if (x.dim() == 0) return 0;
  const int k = phase_add(x.phase(0), -y.phase(0));
  for (std::size_t r = 0; r < x.dim(); ++r) {
    if (x.col(r) != y.col(r)) return std::nullopt;
    if (phase_add(x.phase(r), -y.phase(r)) != k) return std::nullopt;
  }
  return k;
}

bool commutes(const MonomialOperator& x, const MonomialOperator& y) { return x * y == y * x; }

bool anticommutes(const MonomialOperator& x, const MonomialOperator& y) {
  return x * y == (y * x).scaled(2);
}

MonomialOperator kron(const MonomialOperator& a, const MonomialOperator& b) {
  const std::size_t db = b.dim();
  std::vector<std::uint32_t> cols(a.dim() * db);
  std::vector<Phase> phases(a.dim() * db);
  for (std::size_t ra = 0; ra < a.dim(); ++ra) {
    for (std::size_t rb = 0; rb < db; ++rb) {
      const std::size_t r = ra * db + rb;
      cols[r] = static_cast<std::uint32_t>(a.col(ra) * db + b.col(rb));
      phases[r] = phase_add(a.phase(ra), b.phase(rb));
    }
  }
  return MonomialOperator(std::move(cols), std::move(phases));
}

MonomialOperator pauli(Pauli p) {
  switch (p) {
    case Pauli::identity:
      return MonomialOperator({0, 1}, {0, 0});
    case Pauli::x:
      return MonomialOperator({1, 0}, {0, 0});
    case Pauli::y:
      // [[0, -i], [i, 0]]
      return MonomialOperator({1, 0}, {3, 1});
    case Pauli::z:
      return MonomialOperator({0, 1}, {0, 2});
  }
  throw std::invalid_argument("unknown Pauli matrix");
}

MonomialOperator pauli_string(std::span<const Pauli> factors) {
  const std::size_t m = factors.size();
  if (m > 31) throw CapacityError("Pauli string too long");
  const std::size_t dim = std::size_t{1} << m;
  std::vector<std::uint32_t> cols(dim);
  std::vector<Phase> phases(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    std::uint32_t c = 0;
    int ph = 0;
    for (std::size_t f = 0; f < m; ++f) {
      const std::size_t shift = m - 1 - f;
      const unsigned bit = (r >> shift) & 1U;
      unsigned out = bit;
      switch (factors[f]) {
        case Pauli::identity:
          break;
        case Pauli::x:
          out ^= 1U;
          break;
        case Pauli::y:
          out ^= 1U;
          ph += bit ? 1 : 3;
          break;
        case Pauli::z:
          ph += bit ? 2 : 0;
          break;
      }
      c |= out << shift;
    }
    cols[r] = c;
    phases[r] = static_cast<Phase>(ph & 3);
  }
  return MonomialOperator(std::move(cols), std::move(phases));
}

MonomialOperator gamma(int j, int pairs) {
  require_generator_index(j, pairs);
  std::vector<Pauli> f;
  if (j == 1) {
    f.assign(pairs, Pauli::x);
  } else {
    f.assign(pairs - j + 1, Pauli::x);
    f.push_back(Pauli::z);
    f.insert(f.end(), j - 2, Pauli::identity);
  }
  return pauli_string(f);
}

MonomialOperator gamma_tilde(int j, int pairs) {
  require_generator_index(j, pairs);
  std::vector<Pauli> f(pairs - j, Pauli::x);
  f.push_back(Pauli::y);
  f.insert(f.end(), j - 1, Pauli::identity);
  return pauli_string(f);
}

MonomialOperator big_gamma(int j, int pairs) {
  return (gamma(j, pairs) * gamma_tilde(j, pairs)).scaled(1);
}

}  // namespace zsqm
