#include "raagpal/matrix.hpp"

#include <algorithm>
#include <cstdlib>

#include "raagpal/error.hpp"

namespace raagpal {

namespace {

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer matrix entry overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer matrix entry overflow");
  return r;
}

[[noreturn]] void not_in_theta(const std::string& why) { throw Error(ErrorCode::NotInTheta, why); }

// Reduces a working matrix to the identity by right multiplication with
// Z_c (negate column c) and S_sc^q (column c += 2q * column s).
class ColumnReducer {
 public:
  explicit ColumnReducer(IntMatrix m) : w_(std::move(m)) {}

  void add_column(std::size_t src, std::size_t dst, long long q) {
    if (q == 0) return;
    const long long twice = checked_mul(2, q);
    for (std::size_t r = 0; r < w_.size(); ++r) {
      if (w_.at(r, src) != 0) w_.at(r, dst) = checked_add(w_.at(r, dst), checked_mul(twice, w_.at(r, src)));
    }
    const auto count = static_cast<std::size_t>(q < 0 ? -q : q);
    for (std::size_t k = 0; k < count; ++k) ops_.push_back(ThetaSymbol::s(src, dst, q < 0));
  }

  void negate_column(std::size_t c) {
    for (std::size_t r = 0; r < w_.size(); ++r) w_.at(r, c) = -w_.at(r, c);
    ops_.push_back(ThetaSymbol::z(c));
  }

  // Reduces the principal block on `idx` (one domination class) to the
  // identity, assuming those columns vanish outside the block rows.
  void reduce_block(const std::vector<std::size_t>& idx) {
    const std::size_t k = idx.size();
    for (std::size_t p = 0; p < k; ++p) {
      const std::size_t row = idx[p];
      while (true) {
        std::size_t largest = k;
        for (std::size_t c = p; c < k; ++c) {
          const long long x = std::llabs(w_.at(row, idx[c]));
          if (largest == k || x > std::llabs(w_.at(row, idx[largest]))) largest = c;
        }
        std::size_t partner = k;
        for (std::size_t c = p; c < k; ++c) {
          const long long x = std::llabs(w_.at(row, idx[c]));
          if (c == largest || x == 0) continue;
          if (partner == k || x < std::llabs(w_.at(row, idx[partner]))) partner = c;
        }
        if (partner == k) break;
        const long long xl = w_.at(row, idx[largest]);
        const long long xa = w_.at(row, idx[partner]);
        if (std::llabs(xa) >= std::llabs(xl)) not_in_theta("row reduction stalled");
        // Nearest integer to xl / (2 xa).
        const long long den = 2 * xa;
        long long q = xl / den;
        const long long rem = xl - q * den;
        if (2 * std::llabs(rem) > std::llabs(den)) q += ((rem < 0) == (den < 0)) ? 1 : -1;
        if (q == 0) not_in_theta("row reduction stalled");
        add_column(idx[partner], idx[largest], -q);
      }
      for (std::size_t c = p + 1; c < k; ++c) {
        if (w_.at(row, idx[c]) != 0) not_in_theta("diagonal block is not unimodular");
      }
      const long long pivot = w_.at(row, idx[p]);
      if (pivot == -1) {
        negate_column(idx[p]);
      } else if (pivot != 1) {
        not_in_theta("diagonal block is not unimodular");
      }
    }
    // The block is now lower unitriangular; clear it from the right.
    for (std::size_t p = k; p-- > 0;) {
      for (std::size_t q = p + 1; q < k; ++q) clear_entry(idx[q], idx[p]);
    }
  }

  // Clears entry (r, c) using column r, which must already be e_r.
  void clear_entry(std::size_t r, std::size_t c) {
    const long long x = w_.at(r, c);
    if (x == 0) return;
    if (x % 2 != 0) not_in_theta("odd off-diagonal entry");
    add_column(r, c, -x / 2);
  }

  const IntMatrix& working() const { return w_; }

  ThetaWord result() const {
    ThetaWord out;
    out.reserve(ops_.size());
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) out.push_back(it->inverted());
    return out;
  }

 private:
  IntMatrix w_;
  ThetaWord ops_;
};

std::vector<std::size_t> class_indices(VertexSet cls) {
  std::vector<std::size_t> out;
  for (Vertex v : cls) out.push_back(v);
  return out;
}

ThetaWord commutator(const ThetaSymbol& a, const ThetaSymbol& b) { return {a, b, a.inverted(), b.inverted()}; }

ThetaWord square(ThetaWord w) {
  ThetaWord out = w;
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

bool IntBlock::is_zero() const {
  for (const auto& row : entries) {
    for (long long x : row) {
      if (x != 0) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw Error(ErrorCode::ParseError, "matrix must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<long long>> IntMatrix::rows() const {
  std::vector<std::vector<long long>> out(n_, std::vector<long long>(n_));
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) out[r][c] = at(r, c);
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw Error(ErrorCode::PreconditionFailed, "matrix dimensions differ");
  IntMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t k = 0; k < n_; ++k) {
      const long long x = at(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < n_; ++c) {
        out.at(r, c) = checked_add(out.at(r, c), checked_mul(x, rhs.at(k, c)));
      }
    }
  }
  return out;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

bool IntMatrix::congruent_identity_mod2() const {
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if ((at(r, c) % 2 != 0) != (r == c)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::submatrix(std::span<const Vertex> indices) const {
  IntMatrix out(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    for (std::size_t c = 0; c < indices.size(); ++c) out.at(r, c) = at(indices[r], indices[c]);
  }
  return out;
}

Mod2Matrix Mod2Matrix::identity(std::size_t n) {
  Mod2Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = std::uint64_t{1} << i;
  return m;
}

void Mod2Matrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << c;
  rows_[r] = value ? (rows_[r] | bit) : (rows_[r] & ~bit);
}

Mod2Matrix Mod2Matrix::operator*(const Mod2Matrix& rhs) const {
  Mod2Matrix out(size());
  for (std::size_t r = 0; r < size(); ++r) {
    std::uint64_t acc = 0;
    std::uint64_t bits = rows_[r];
    while (bits != 0) {
      acc ^= rhs.rows_[static_cast<std::size_t>(std::countr_zero(bits))];
      bits &= bits - 1;
    }
    out.rows_[r] = acc;
  }
  return out;
}

IntMatrix phi(const Automorphism& a) {
  const std::size_t n = a.graph().size();
  IntMatrix m(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto e = exponent_vector(a.image(v));
    for (std::size_t u = 0; u < n; ++u) m.at(u, v) = e[u];
  }
  return m;
}

Mod2Matrix reduce_mod2(const IntMatrix& m) {
  Mod2Matrix out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) out.set(r, c, m.at(r, c) % 2 != 0);
  }
  return out;
}

Mod2Matrix phi2(const Automorphism& a) { return reduce_mod2(phi(a)); }

IntMatrix s_matrix(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n || i == j) throw Error(ErrorCode::PreconditionFailed, "S_ij needs distinct indices below n");
  IntMatrix m = IntMatrix::identity(n);
  m.at(i, j) = 2;
  return m;
}

IntMatrix z_matrix(std::size_t n, std::size_t i) {
  if (i >= n) throw Error(ErrorCode::PreconditionFailed, "Z_i needs an index below n");
  IntMatrix m = IntMatrix::identity(n);
  m.at(i, i) = -1;
  return m;
}

IntMatrix evaluate(std::size_t n, std::span<const ThetaSymbol> word) {
  IntMatrix acc = IntMatrix::identity(n);
  for (const auto& s : word) {
    if (s.kind == ThetaSymbol::Kind::Z) {
      acc = acc * z_matrix(n, s.i);
    } else {
      IntMatrix m = s_matrix(n, s.i, s.j);
      if (s.inverse) m.at(s.i, s.j) = -2;
      acc = acc * m;
    }
  }
  return acc;
}

std::string format_theta(std::span<const ThetaSymbol> word) {
  std::string out;
  for (const auto& s : word) {
    if (!out.empty()) out += ' ';
    if (s.kind == ThetaSymbol::Kind::Z) {
      out += "Z" + std::to_string(s.i + 1);
    } else {
      out += "S" + std::to_string(s.i + 1) + "," + std::to_string(s.j + 1);
      if (s.inverse) out += "^-1";
    }
  }
  return out;
}

bool theta_symbol_allowed(const Graph& g, const ThetaSymbol& s) {
  if (s.i >= g.size() || s.j >= g.size()) return false;
  if (s.kind == ThetaSymbol::Kind::Z) return true;
  return s.i != s.j && g.dominated_by(static_cast<Vertex>(s.j), static_cast<Vertex>(s.i));
}

GeneratorSymbol lift_symbol(const ThetaSymbol& s) {
  if (s.kind == ThetaSymbol::Kind::Z) return GeneratorSymbol::inversion(static_cast<Vertex>(s.i));
  return GeneratorSymbol::elem_palindromic(static_cast<Vertex>(s.j), static_cast<Vertex>(s.i), s.inverse);
}

SymbolWord lift_word(std::span<const ThetaSymbol> word) {
  SymbolWord out;
  out.reserve(word.size());
  for (const auto& s : word) out.push_back(lift_symbol(s));
  return out;
}

std::string Relator::name() const {
  std::string out = "R" + std::to_string(family) + "(";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(indices[k] + 1);
  }
  return out + ")";
}

std::vector<Relator> relator_suite(std::size_t n) {
  using T = ThetaSymbol;
  std::vector<Relator> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({1, {i}, {T::z(i), T::z(i)}});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out.push_back({2, {i, j}, commutator(T::z(i), T::z(j))});
      out.push_back({3, {i, j}, square({T::z(i), T::s(i, j)})});
      out.push_back({4, {i, j}, square({T::z(j), T::s(i, j)})});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        out.push_back({5, {i, j, k}, commutator(T::z(i), T::s(j, k))});
        out.push_back({6, {i, j, k}, commutator(T::s(k, i), T::s(k, j))});
        out.push_back({8, {i, j, k}, commutator(T::s(j, i), T::s(k, i))});
        ThetaWord r9 = commutator(T::s(k, j), T::s(j, i));
        r9.push_back(T::s(k, i, true));
        r9.push_back(T::s(k, i, true));
        out.push_back({9, {i, j, k}, r9});
        out.push_back({10, {i, j, k},
                       square({T::s(i, j), T::s(i, k, true), T::s(k, i), T::s(j, i), T::s(j, k), T::s(k, j, true)})});
        for (std::size_t l = 0; l < n; ++l) {
          if (l == i || l == j || l == k) continue;
          out.push_back({7, {i, j, k, l}, commutator(T::s(i, j), T::s(k, l))});
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Relator& a, const Relator& b) { return a.family < b.family; });
  return out;
}

std::vector<Relator> relator_suite(const Graph& g) {
  std::vector<Relator> out;
  for (auto& r : relator_suite(g.size())) {
    const bool keep = std::all_of(r.word.begin(), r.word.end(),
                                  [&](const ThetaSymbol& s) { return theta_symbol_allowed(g, s); });
    if (keep) out.push_back(std::move(r));
  }
  return out;
}

BlockDecomposition block_decompose(const IntMatrix& m, const Graph& g) {
  const auto& dd = g.domination();
  const std::size_t k = dd.classes.size();
  BlockDecomposition bd;
  for (VertexSet cls : dd.classes) {
    bd.class_starts.push_back(cls.front());
    bd.class_sizes.push_back(cls.size());
  }
  bd.allowed.assign(k, std::vector<bool>(k, false));
  for (std::size_t I = 0; I < k; ++I) {
    for (std::size_t J = 0; J <= I; ++J) {
      bd.allowed[I][J] = g.dominated_by(dd.classes[J].front(), dd.classes[I].front());
    }
  }
  for (std::size_t I = 0; I < k; ++I) {
    const auto rows = dd.classes[I].to_vector();
    bd.diagonal_blocks.push_back(m.submatrix(rows));
    for (std::size_t J = 0; J < I; ++J) {
      const auto cols = dd.classes[J].to_vector();
      IntBlock block;
      block.entries.assign(rows.size(), std::vector<long long>(cols.size()));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) block.entries[r][c] = m.at(rows[r], cols[c]);
      }
      bd.below_diagonal.emplace(std::make_pair(I, J), std::move(block));
    }
  }
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      const std::size_t I = dd.class_of[r];
      const std::size_t J = dd.class_of[c];
      if (I == J || m.at(r, c) == 0) continue;
      if (J > I || !bd.allowed[I][J]) bd.violations.push_back({r, c, m.at(r, c), J > I});
    }
  }
  return bd;
}

bool free_block_check(const IntMatrix& m, const Graph& g) {
  const auto& dd = g.domination();
  for (std::size_t I = 0; I < dd.classes.size(); ++I) {
    if (dd.class_kind[I] != ClassKind::Free) continue;
    const auto idx = dd.classes[I].to_vector();
    for (Vertex a : idx) {
      std::size_t odd_in_row = 0;
      std::size_t odd_in_col = 0;
      for (Vertex b : idx) {
        odd_in_row += (m.at(a, b) % 2 != 0) ? 1 : 0;
        odd_in_col += (m.at(b, a) % 2 != 0) ? 1 : 0;
      }
      if (odd_in_row != 1 || odd_in_col != 1) return false;
    }
  }
  return true;
}

ThetaWord factor_theta(const IntMatrix& m, const Graph& g) {
  if (m.size() != g.size()) throw Error(ErrorCode::PreconditionFailed, "matrix size differs from the vertex count");
  if (!m.congruent_identity_mod2()) not_in_theta("matrix is not congruent to I mod 2");
  const auto bd = block_decompose(m, g);
  if (!bd.violations.empty()) {
    const auto& v = bd.violations.front();
    not_in_theta("nonzero entry at (" + g.name(static_cast<Vertex>(v.row)) + "," +
                 g.name(static_cast<Vertex>(v.col)) + ") is not allowed by domination");
  }
  const auto& classes = g.domination().classes;
  ColumnReducer red(m);
  for (std::size_t K = classes.size(); K-- > 0;) {
    red.reduce_block(class_indices(classes[K]));
    for (Vertex r : classes[K]) {
      for (std::size_t c = 0; c < classes[K].front(); ++c) {
        if (red.working().at(r, c) != 0 && !g.dominated_by(static_cast<Vertex>(c), r)) {
          not_in_theta("entry not allowed by domination");
        }
        red.clear_entry(r, c);
      }
    }
  }
  if (!red.working().is_identity()) not_in_theta("reduction did not reach the identity");
  return red.result();
}

ThetaWord factor_lambda(const IntMatrix& m) {
  if (!m.congruent_identity_mod2()) not_in_theta("matrix is not congruent to I mod 2");
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  ColumnReducer red(m);
  red.reduce_block(idx);
  if (!red.working().is_identity()) not_in_theta("reduction did not reach the identity");
  return red.result();
}

}  // namespace raagpal
