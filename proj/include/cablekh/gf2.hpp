#pragma once

// Matrices over the two-element field.

#include <cstdint>
#include <span>
#include <vector>

namespace cablekh {

/// Dense matrix with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row_ptr(r)[c >> 6] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    auto& w = row_ptr(r)[c >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) {
    row_ptr(r)[c >> 6] ^= std::uint64_t{1} << (c & 63);
  }

  bool is_zero() const;

  /// this * other over GF(2).
  BitMatrix operator*(const BitMatrix& other) const;

 private:
  friend std::size_t rank_gf2(BitMatrix m);

  std::uint64_t* row_ptr(std::size_t r) { return words_.data() + r * stride_; }
  const std::uint64_t* row_ptr(std::size_t r) const { return words_.data() + r * stride_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Rank by row elimination on packed words. Consumes its argument.
std::size_t rank_gf2(BitMatrix m);

/// Column-sparse matrix: each column lists its nonzero row indices, sorted.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::uint32_t>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  /// Flips entry (r, c); keeps the column sorted.
  void toggle(std::uint32_t r, std::uint32_t c);
  std::size_t nonzeros() const;
  BitMatrix to_dense() const;
};

/// Rank of a sparse matrix via column reduction on sorted index lists.
std::size_t rank_gf2(const SparseMatrix& m);

/// a * b over GF(2); both column-sparse.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace cablekh
