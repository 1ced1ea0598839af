#include "regseq/linalg.hpp"

#include <numeric>
#include <utility>

#include "regseq/modular.hpp"

namespace regseq {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Field operations over F_p in Montgomery form.
struct ModOps {
  using Value = std::uint64_t;
  using Row = std::vector<std::pair<std::uint32_t, Value>>;

  const PrimeField& field;

  static bool is_zero(Value v) { return v == 0; }
  static std::size_t pivot_cost(Value) { return 0; }

  // target - (target[c] / pivot[c]) * pivot, with both rows holding column c.
  Row combine(const Row& target, Value target_c, const Row& pivot, Value pivot_c) const {
    const Value factor = field.mul(target_c, field.inv(pivot_c));
    Row out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        out.push_back(target[i++]);
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, field.neg(field.mul(factor, pivot[j].second)));
        ++j;
      } else {
        const Value v = field.sub(target[i].second, field.mul(factor, pivot[j].second));
        if (v != 0) out.emplace_back(target[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }
};

// Fraction-free integer operations: rows are kept primitive (content 1).
struct IntOps {
  using Value = BigInt;
  using Row = std::vector<std::pair<std::uint32_t, Value>>;

  static bool is_zero(const Value& v) { return v.is_zero(); }
  static std::size_t pivot_cost(const Value& v) { return v.bit_length(); }

  static void remove_content(Row& row) {
    BigInt g(0);
    for (const auto& [c, v] : row) {
      g = gcd(g, v);
      if (g.is_one()) return;
    }
    if (g.is_zero() || g.is_one()) return;
    for (auto& [c, v] : row) v = divide_exact(v, g);
  }

  // (p/g) * target - (t/g) * pivot with g = gcd(p, t); column c cancels.
  Row combine(const Row& target, const Value& target_c, const Row& pivot, const Value& pivot_c) const {
    const BigInt g = gcd(target_c, pivot_c);
    const BigInt ft = divide_exact(pivot_c, g);
    const BigInt fp = divide_exact(target_c, g);
    Row out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        out.emplace_back(target[i].first, ft * target[i].second);
        ++i;
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, -(fp * pivot[j].second));
        ++j;
      } else {
        BigInt v = ft * target[i].second - fp * pivot[j].second;
        if (!v.is_zero()) out.emplace_back(target[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    remove_content(out);
    return out;
  }
};

template <class Row>
auto find_entry(const Row& row, std::uint32_t c) {
  return std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t col) { return e.first < col; });
}

// Dense Gaussian elimination over F_p on the given rows/columns.
std::uint64_t dense_rank_mod(const std::vector<ModOps::Row>& rows, const std::vector<std::uint32_t>& col_index,
                             std::size_t ncols, const PrimeField& field) {
  std::vector<std::vector<std::uint64_t>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::uint64_t> dense(ncols, 0);
    for (const auto& [c, v] : r) dense[col_index[c]] = v;
    a.push_back(std::move(dense));
  }
  std::uint64_t rank = 0;
  std::size_t top = 0;
  for (std::size_t c = 0; c < ncols && top < a.size(); ++c) {
    std::size_t p = top;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[top]);
    const std::uint64_t inv = field.inv(a[top][c]);
    auto& piv = a[top];
    for (std::size_t k = c; k < ncols; ++k) piv[k] = field.mul(piv[k], inv);
    for (std::size_t r = top + 1; r < a.size(); ++r) {
      const std::uint64_t f = a[r][c];
      if (f == 0) continue;
      auto& row = a[r];
      for (std::size_t k = c; k < ncols; ++k) {
        if (piv[k] != 0) row[k] = field.sub(row[k], field.mul(f, piv[k]));
      }
    }
    ++top;
    ++rank;
  }
  return rank;
}

// Sparse elimination with Markowitz pivoting: the pivot column is the one with
// the fewest active entries, the pivot row the shortest row holding it.
// With a dense fallback it hands the remainder over once fill-in is heavy.
template <class Ops>
std::uint64_t markowitz_rank(std::vector<typename Ops::Row> rows, std::size_t cols, const Ops& ops,
                             const PrimeField* dense_field) {
  constexpr double kDenseThreshold = 0.2;
  constexpr std::size_t kDenseMinCols = 24;

  std::vector<char> alive(rows.size(), 0);
  std::vector<std::vector<std::uint32_t>> col_rows(cols);
  std::vector<std::uint32_t> col_count(cols, 0);
  std::size_t active_rows = 0;
  std::size_t active_cols = 0;
  std::size_t active_nnz = 0;
  for (std::uint32_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    alive[i] = 1;
    ++active_rows;
    active_nnz += rows[i].size();
    for (const auto& e : rows[i]) {
      col_rows[e.first].push_back(i);
      if (col_count[e.first]++ == 0) ++active_cols;
    }
  }

  auto bump = [&](std::uint32_t c, int delta) {
    if (delta > 0) {
      if (col_count[c]++ == 0) ++active_cols;
    } else if (--col_count[c] == 0) {
      --active_cols;
    }
  };

  std::uint64_t rank = 0;
  std::vector<std::uint32_t> stamp(rows.size(), 0);
  std::uint32_t epoch = 0;
  std::vector<std::uint32_t> cand;
  while (active_cols > 0) {
    if (dense_field != nullptr && active_cols >= kDenseMinCols &&
        static_cast<double>(active_nnz) > kDenseThreshold * static_cast<double>(active_rows) * active_cols) {
      std::vector<typename Ops::Row> rest;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (alive[i]) rest.push_back(std::move(rows[i]));
      }
      std::vector<std::uint32_t> col_index(cols, 0);
      std::size_t k = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        if (col_count[c] > 0) col_index[c] = static_cast<std::uint32_t>(k++);
      }
      if constexpr (std::is_same_v<Ops, ModOps>) {
        return rank + dense_rank_mod(rest, col_index, k, *dense_field);
      }
    }

    std::uint32_t pc = 0;
    std::uint32_t best = UINT32_MAX;
    for (std::uint32_t c = 0; c < cols; ++c) {
      if (col_count[c] > 0 && col_count[c] < best) {
        best = col_count[c];
        pc = c;
        if (best == 1) break;
      }
    }

    ++epoch;
    cand.clear();
    for (std::uint32_t r : col_rows[pc]) {
      if (!alive[r] || stamp[r] == epoch) continue;
      stamp[r] = epoch;
      auto it = find_entry(rows[r], pc);
      if (it != rows[r].end() && it->first == pc) cand.push_back(r);
    }
    col_rows[pc].clear();

    std::uint32_t pivot = cand.front();
    for (std::uint32_t r : cand) {
      const auto len = rows[r].size();
      const auto plen = rows[pivot].size();
      if (len < plen || (len == plen && Ops::pivot_cost(find_entry(rows[r], pc)->second) <
                                            Ops::pivot_cost(find_entry(rows[pivot], pc)->second))) {
        pivot = r;
      }
    }

    ++rank;
    alive[pivot] = 0;
    --active_rows;
    active_nnz -= rows[pivot].size();
    for (const auto& e : rows[pivot]) bump(e.first, -1);
    const auto& prow = rows[pivot];
    const auto pval = find_entry(prow, pc)->second;

    for (std::uint32_t r : cand) {
      if (r == pivot) continue;
      auto& old = rows[r];
      const auto tval = find_entry(old, pc)->second;
      auto fresh = ops.combine(old, tval, prow, pval);
      // Update column counts from the symmetric difference of supports.
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < old.size() || j < fresh.size()) {
        if (j == fresh.size() || (i < old.size() && old[i].first < fresh[j].first)) {
          bump(old[i++].first, -1);
        } else if (i == old.size() || fresh[j].first < old[i].first) {
          bump(fresh[j].first, +1);
          col_rows[fresh[j].first].push_back(r);
          ++j;
        } else {
          ++i;
          ++j;
        }
      }
      active_nnz = active_nnz - old.size() + fresh.size();
      if (fresh.empty()) {
        alive[r] = 0;
        --active_rows;
      }
      old = std::move(fresh);
    }
    typename Ops::Row().swap(rows[pivot]);
  }
  return rank;
}

}  // namespace

std::vector<IntMatrix> connected_components(const IntMatrix& m) {
  UnionFind uf(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto& row = m.row(i);
    for (std::size_t k = 1; k < row.size(); ++k) uf.unite(row[0].col, row[k].col);
  }
  std::vector<std::int64_t> block_of_root(m.cols(), -1);
  std::vector<std::uint32_t> local_col(m.cols(), 0);
  std::vector<std::uint32_t> block_cols;
  std::vector<std::vector<std::size_t>> block_rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto& row = m.row(i);
    if (row.empty()) continue;
    const std::size_t root = uf.find(row[0].col);
    if (block_of_root[root] < 0) {
      block_of_root[root] = static_cast<std::int64_t>(block_rows.size());
      block_rows.emplace_back();
      block_cols.push_back(0);
    }
    block_rows[block_of_root[root]].push_back(i);
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto b = block_of_root[uf.find(c)];
    if (b >= 0) local_col[c] = block_cols[b]++;
  }
  std::vector<IntMatrix> blocks;
  blocks.reserve(block_rows.size());
  for (std::size_t b = 0; b < block_rows.size(); ++b) {
    IntMatrix block(block_cols[b]);
    for (std::size_t i : block_rows[b]) {
      IntMatrix::Row row;
      row.reserve(m.row(i).size());
      for (const auto& e : m.row(i)) row.push_back({local_col[e.col], e.value});
      block.add_row(std::move(row));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::uint64_t rank_modular(const IntMatrix& m, std::uint64_t prime) {
  const PrimeField field(prime);
  const ModOps ops{field};
  std::uint64_t rank = 0;
  for (const auto& block : connected_components(m)) {
    std::vector<ModOps::Row> rows;
    rows.reserve(block.rows());
    for (std::size_t i = 0; i < block.rows(); ++i) {
      ModOps::Row row;
      for (const auto& e : block.row(i)) {
        const std::uint64_t v = e.value.mod_u64(prime);
        if (v != 0) row.emplace_back(e.col, field.to_field(v));
      }
      rows.push_back(std::move(row));
    }
    rank += markowitz_rank(std::move(rows), block.cols(), ops, &field);
  }
  return rank;
}

std::uint64_t rank_exact(const IntMatrix& m) {
  const IntOps ops;
  std::uint64_t rank = 0;
  for (const auto& block : connected_components(m)) {
    std::vector<IntOps::Row> rows;
    rows.reserve(block.rows());
    for (std::size_t i = 0; i < block.rows(); ++i) {
      IntOps::Row row;
      for (const auto& e : block.row(i)) row.emplace_back(e.col, e.value);
      IntOps::remove_content(row);
      rows.push_back(std::move(row));
    }
    rank += markowitz_rank(std::move(rows), block.cols(), ops, nullptr);
  }
  return rank;
}

}  // namespace regseq
