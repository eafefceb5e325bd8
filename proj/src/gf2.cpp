#include "cablekh/gf2.hpp"

#include <algorithm>
#include <unordered_map>

#include "cablekh/errors.hpp"

namespace cablekh {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t k) {
  BitMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.set(i, i);
  return m;
}

bool BitMatrix::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  if (cols_ != other.rows_) throw InvariantError("BitMatrix product shape mismatch");
  BitMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* dst = out.row_ptr(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const std::uint64_t* src = other.row_ptr(k);
      for (std::size_t w = 0; w < out.stride_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

std::size_t rank_gf2(BitMatrix m) {
  std::size_t rank = 0;
  const std::size_t stride = m.stride_;
  for (std::size_t col = 0; col < m.cols_ && rank < m.rows_; ++col) {
    const std::size_t word = col >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (col & 63);
    std::size_t pivot = rank;
    while (pivot < m.rows_ && !(m.row_ptr(pivot)[word] & bit)) ++pivot;
    if (pivot == m.rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(m.row_ptr(pivot), m.row_ptr(pivot) + stride, m.row_ptr(rank));
    }
    const std::uint64_t* prow = m.row_ptr(rank);
    for (std::size_t r = rank + 1; r < m.rows_; ++r) {
      std::uint64_t* row = m.row_ptr(r);
      if (!(row[word] & bit)) continue;
      // columns left of `word` are already clear below the pivot
      for (std::size_t w = word; w < stride; ++w) row[w] ^= prow[w];
    }
    ++rank;
  }
  return rank;
}

void SparseMatrix::toggle(std::uint32_t r, std::uint32_t c) {
  auto& col = columns.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r);
  if (it != col.end() && *it == r) {
    col.erase(it);
  } else {
    col.insert(it, r);
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

BitMatrix SparseMatrix::to_dense() const {
  BitMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::uint32_t r : columns[c]) m.set(r, c);
  }
  return m;
}

std::size_t rank_gf2(const SparseMatrix& m) {
  // Reduce columns by their largest row index (standard persistence-style
  // reduction); each surviving pivot is a distinct lowest entry.
  std::unordered_map<std::uint32_t, std::size_t> pivot_of_low;
  std::vector<std::vector<std::uint32_t>> reduced;
  reduced.reserve(m.cols);
  std::vector<std::uint32_t> scratch;
  for (const auto& input : m.columns) {
    std::vector<std::uint32_t> col = input;
    while (!col.empty()) {
      auto it = pivot_of_low.find(col.back());
      if (it == pivot_of_low.end()) break;
      const auto& other = reduced[it->second];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      pivot_of_low.emplace(col.back(), reduced.size());
      reduced.push_back(std::move(col));
    }
  }
  return reduced.size();
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw InvariantError("SparseMatrix product shape mismatch");
  SparseMatrix out(a.rows, b.cols);
  std::vector<std::uint8_t> acc(a.rows, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t c = 0; c < b.cols; ++c) {
    touched.clear();
    for (std::uint32_t k : b.columns[c]) {
      for (std::uint32_t r : a.columns[k]) {
        if (!acc[r]) touched.push_back(r);
        acc[r] ^= 1;
      }
    }
    auto& col = out.columns[c];
    for (std::uint32_t r : touched) {
      if (acc[r]) col.push_back(r);
      acc[r] = 0;
    }
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
  }
  return out;
}

}  // namespace cablekh
