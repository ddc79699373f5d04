#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "raagpal/automorphism.hpp"
#include "raagpal/graph.hpp"

namespace raagpal {

/// Dense square integer matrix. Arithmetic is overflow checked and throws
/// Error(Overflow).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t size() const { return n_; }
  long long& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  long long at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  std::vector<std::vector<long long>> rows() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix&) const = default;
  bool is_identity() const;
  /// Entry-wise congruence to the identity mod 2.
  bool congruent_identity_mod2() const;
  /// Principal submatrix on the given (sorted) indices.
  IntMatrix submatrix(std::span<const Vertex> indices) const;

 private:
  std::size_t n_ = 0;
  std::vector<long long> a_;
};

/// Square matrix over Z/2 with at most 64 rows, one bitmask per row.
class Mod2Matrix {
 public:
  Mod2Matrix() = default;
  explicit Mod2Matrix(std::size_t n) : rows_(n, 0) {}
  static Mod2Matrix identity(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  bool at(std::size_t r, std::size_t c) const { return (rows_[r] >> c) & 1U; }
  void set(std::size_t r, std::size_t c, bool value);
  const std::vector<std::uint64_t>& row_bits() const { return rows_; }

  Mod2Matrix operator*(const Mod2Matrix& rhs) const;
  bool operator==(const Mod2Matrix&) const = default;
  auto operator<=>(const Mod2Matrix&) const = default;
  bool is_identity() const { return *this == identity(size()); }

 private:
  std::vector<std::uint64_t> rows_;
};

/// Column v of phi(a) is the exponent vector of a(v).
IntMatrix phi(const Automorphism& a);
Mod2Matrix phi2(const Automorphism& a);
Mod2Matrix reduce_mod2(const IntMatrix& m);

/// S_ij = I + 2E_ij (0-based indices).
IntMatrix s_matrix(std::size_t n, std::size_t i, std::size_t j);
/// Z_i = I - 2E_ii.
IntMatrix z_matrix(std::size_t n, std::size_t i);

/// Z_i, or S_ij raised to +1 or -1.
struct ThetaSymbol {
  enum class Kind { Z, S };
  Kind kind = Kind::Z;
  std::size_t i = 0;
  std::size_t j = 0;
  bool inverse = false;

  static ThetaSymbol z(std::size_t i) { return {Kind::Z, i, i, false}; }
  static ThetaSymbol s(std::size_t i, std::size_t j, bool inverse = false) { return {Kind::S, i, j, inverse}; }
  ThetaSymbol inverted() const { return kind == Kind::Z ? *this : ThetaSymbol{kind, i, j, !inverse}; }
  bool operator==(const ThetaSymbol&) const = default;
};

using ThetaWord = std::vector<ThetaSymbol>;

IntMatrix evaluate(std::size_t n, std::span<const ThetaSymbol> word);
std::string format_theta(std::span<const ThetaSymbol> word);
/// S_ij is available on the graph when v_j <= v_i (it is the image of P_ji).
bool theta_symbol_allowed(const Graph& g, const ThetaSymbol& s);
/// Z_i -> inv(v_i), S_ij -> P(v_j, v_i).
GeneratorSymbol lift_symbol(const ThetaSymbol& s);
SymbolWord lift_word(std::span<const ThetaSymbol> word);

struct Relator {
  int family = 0;
  std::vector<std::size_t> indices;
  ThetaWord word;
  std::string name() const;
};

/// Every instance of the ten relator families of the level 2 congruence
/// subgroup over pairwise distinct 0-based indices.
std::vector<Relator> relator_suite(std::size_t n);
/// Instances over the graph's vertices keeping only words whose symbols
/// are allowed on the graph.
std::vector<Relator> relator_suite(const Graph& g);

struct BlockViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  long long value = 0;
  bool above_diagonal = false;
};

/// Rectangular block of an integer matrix, row-major.
struct IntBlock {
  std::vector<std::vector<long long>> entries;
  bool is_zero() const;
};

struct BlockDecomposition {
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> class_starts;
  std::vector<IntMatrix> diagonal_blocks;
  /// (row class, column class) -> block, for column class < row class.
  std::map<std::pair<std::size_t, std::size_t>, IntBlock> below_diagonal;
  /// allowed[I][J]: entries of block (I,J) may be nonzero.
  std::vector<std::vector<bool>> allowed;
  std::vector<BlockViolation> violations;
};

BlockDecomposition block_decompose(const IntMatrix& m, const Graph& g);
/// Each Free diagonal block has exactly one odd entry in every row and column.
bool free_block_check(const IntMatrix& m, const Graph& g);

/// Word in {Z_i, S_ij allowed on g} whose product is m; NotInTheta if m is
/// not reachable by the column reduction.
ThetaWord factor_theta(const IntMatrix& m, const Graph& g);
/// Same reduction for a bare level 2 matrix with every symbol allowed.
ThetaWord factor_lambda(const IntMatrix& m);

}  // namespace raagpal
