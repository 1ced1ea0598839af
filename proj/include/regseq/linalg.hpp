#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "regseq/arith.hpp"

namespace regseq {

// Row-major sparse matrix. Each row is kept sorted by column with no stored
// zeros; columns are fixed at construction.
template <class Scalar>
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    Scalar value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Row = std::vector<Entry>;

  explicit SparseMatrix(std::size_t cols = 0) : cols_(cols) {}

  // Duplicate columns are summed; zero entries are dropped.
  void add_row(Row row) {
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    Row merged;
    merged.reserve(row.size());
    for (auto& e : row) {
      if (e.col >= cols_) throw std::out_of_range("sparse matrix column out of range");
      if (!merged.empty() && merged.back().col == e.col) {
        merged.back().value += e.value;
      } else {
        merged.push_back(std::move(e));
      }
    }
    std::erase_if(merged, [](const Entry& e) { return e.value == Scalar{}; });
    nnz_ += merged.size();
    rows_.push_back(std::move(merged));
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return nnz_; }
  const Row& row(std::size_t i) const { return rows_.at(i); }

  Scalar at(std::size_t r, std::size_t c) const {
    const Row& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.col < col; });
    return it != row.end() && it->col == c ? it->value : Scalar{};
  }

 private:
  std::size_t cols_;
  std::size_t nnz_ = 0;
  std::vector<Row> rows_;
};

using IntMatrix = SparseMatrix<BigInt>;

// Split into blocks that share no rows or columns; the rank is the sum of the
// block ranks. Empty rows are dropped, columns are renumbered per block.
std::vector<IntMatrix> connected_components(const IntMatrix& m);

// Rank over F_p for an odd prime p < 2^63. Never exceeds rank_exact.
std::uint64_t rank_modular(const IntMatrix& m, std::uint64_t prime);

// Rank over Q by fraction-free elimination with content removal.
std::uint64_t rank_exact(const IntMatrix& m);

}  // namespace regseq
