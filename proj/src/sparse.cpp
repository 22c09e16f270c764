#include "augberg/sparse.hpp"

#include <algorithm>
#include <climits>

#include "augberg/smith.hpp"

namespace augberg {

namespace {

using Row = std::vector<std::pair<int, long long>>;

struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}

long long checked_sub(long long a, long long b) {
  long long out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}

long long entry(const Row& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(col, LLONG_MIN));
  return it != row.end() && it->first == col ? it->second : 0;
}

// Row-wise elimination state shared by the rank and kernel computations.
class Eliminator {
 public:
  explicit Eliminator(const SparseMatrix& a) : rows_(a.rows), col_rows_(a.cols), pivot_row_(a.cols, -1) {
    for (int c = 0; c < a.cols; ++c)
      for (auto [r, v] : a.columns[c])
        if (v != 0) rows_[r].emplace_back(c, v);
    for (int r = 0; r < a.rows; ++r) {
      std::sort(rows_[r].begin(), rows_[r].end());
      for (auto [c, v] : rows_[r]) col_rows_[c].push_back(r);
    }
    row_used_.assign(a.rows, false);
  }

  // Runs passes over the columns until no unit pivot is left. With `full`,
  // pivot columns are also cleared from rows pivoted earlier (reduced echelon form).
  void run(bool full) {
    for (bool progress = true; progress;) {
      progress = false;
      for (int j = 0; j < static_cast<int>(col_rows_.size()); ++j) {
        if (pivot_row_[j] >= 0) continue;
        std::vector<int> holders = live_rows(j);
        int pivot = -1;
        for (int r : holders) {
          if (row_used_[r]) continue;
          const long long v = entry(rows_[r], j);
          if ((v == 1 || v == -1) && (pivot < 0 || rows_[r].size() < rows_[pivot].size())) pivot = r;
        }
        if (pivot < 0) continue;
        const long long inv = entry(rows_[pivot], j);
        for (int r : holders) {
          if (r == pivot || (!full && row_used_[r])) continue;
          const long long factor = checked_mul(entry(rows_[r], j), inv);
          subtract(r, pivot, factor);
        }
        row_used_[pivot] = true;
        pivot_row_[j] = pivot;
        ++rank_;
        progress = true;
      }
    }
  }

  long rank() const { return rank_; }
  int pivot_row(int col) const { return pivot_row_[col]; }
  const Row& row(int r) const { return rows_[r]; }

  // Unpivoted rows restricted to unpivoted columns, as a dense matrix.
  IntMatrix remainder() const {
    std::vector<int> rows, cols, col_pos(col_rows_.size(), -1);
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
      if (!row_used_[r] && !rows_[r].empty()) rows.push_back(r);
    for (int c = 0; c < static_cast<int>(col_rows_.size()); ++c)
      if (pivot_row_[c] < 0) {
        col_pos[c] = static_cast<int>(cols.size());
        cols.push_back(c);
      }
    IntMatrix out = IntMatrix::Zero(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (auto [c, v] : rows_[rows[i]])
        if (col_pos[c] >= 0) out(i, col_pos[c]) = Integer(static_cast<long>(v));
    return out;
  }

 private:
  std::vector<int> live_rows(int col) {
    auto& list = col_rows_[col];
    std::vector<int> out;
    for (int r : list)
      if (entry(rows_[r], col) != 0) out.push_back(r);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    list = out;
    return out;
  }

  // rows_[r] -= factor * rows_[p]
  void subtract(int r, int p, long long factor) {
    const Row& a = rows_[r];
    const Row& b = rows_[p];
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, k = 0;
    while (i < a.size() || k < b.size()) {
      if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[k].first < a[i].first) {
        out.emplace_back(b[k].first, checked_sub(0, checked_mul(factor, b[k].second)));
        col_rows_[b[k].first].push_back(r);
        ++k;
      } else {
        const long long v = checked_sub(a[i].second, checked_mul(factor, b[k].second));
        if (v != 0) out.emplace_back(a[i].first, v);
        ++i;
        ++k;
      }
    }
    rows_[r] = std::move(out);
  }

  std::vector<Row> rows_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<int> pivot_row_;
  std::vector<bool> row_used_;
  long rank_ = 0;
};

}  // namespace

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix out = IntMatrix::Zero(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (auto [r, v] : columns[c]) out(r, c) = Integer(static_cast<long>(v));
  return out;
}

SmithInvariants smith_invariants(const SparseMatrix& a) {
  SmithInvariants out;
  IntMatrix rest;
  try {
    Eliminator e(a);
    e.run(false);
    out.rank = e.rank();
    rest = e.remainder();
  } catch (const Overflow&) {
    out.rank = 0;
    rest = a.to_dense();
  }
  if (rest.size() == 0) return out;
  SmithNormalForm<IntMatrix> snf(rest);
  out.rank += snf.rank();
  for (const auto& f : snf.invariantFactors())
    if (f > 1) out.torsion.push_back(f);
  return out;
}

std::optional<KernelBasis> sparse_kernel(const SparseMatrix& a) {
  try {
    Eliminator e(a);
    e.run(true);
    if (e.remainder().size() != 0) return std::nullopt;
    KernelBasis out;
    for (int c = 0; c < a.cols; ++c)
      if (e.pivot_row(c) < 0) out.free_columns.push_back(c);
    out.basis = IntMatrix::Zero(a.cols, out.free_columns.size());
    std::vector<int> free_pos(a.cols, -1);
    for (std::size_t k = 0; k < out.free_columns.size(); ++k) {
      free_pos[out.free_columns[k]] = static_cast<int>(k);
      out.basis(out.free_columns[k], k) = 1;
    }
    // Each pivot row reads a_p x_p + sum_k a_k x_k = 0 with a_p = +-1.
    for (int j = 0; j < a.cols; ++j) {
      const int p = e.pivot_row(j);
      if (p < 0) continue;
      const long long unit = entry(e.row(p), j);
      for (auto [c, v] : e.row(p))
        if (c != j) out.basis(j, free_pos[c]) = Integer(static_cast<long>(-unit * v));
    }
    return out;
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

}  // namespace augberg
