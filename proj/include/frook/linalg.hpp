#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frook/cyclo.hpp"

namespace frook {

/// A sparse row over Q(xi_d): (column id, value) pairs sorted by column id,
/// no zero values.
using SparseRow = std::vector<std::pair<uint64_t, CycloRat>>;

void sparse_normalize(SparseRow& r);
SparseRow sparse_axpy(const SparseRow& x, const CycloRat& a, const SparseRow& y);  // x + a*y

/// Exact rank of a dense rectangular matrix over Q(xi_d) by Gaussian
/// elimination in the field. Throws on ragged input.
int rank_over_field(const std::vector<std::vector<CycloRat>>& rows);

int rank_over_field_sparse(std::vector<SparseRow> rows);

/// Incremental echelon basis over Q(xi_d) with combination tracking: each
/// echelon row is remembered as an exact linear combination of the rows fed
/// in. solve() then expresses a vector in the span of those rows, or reports
/// the residual pivot column when it is not in the span.
class EchelonSolver {
 public:
  explicit EchelonSolver(const CycloCtx* ctx) : ctx_(ctx) {}

  void add_row(SparseRow row);
  int rank() const { return static_cast<int>(rows_.size()); }
  size_t source_count() const { return n_sources_; }

  struct Solution {
    bool in_span = false;
    std::vector<CycloRat> coeffs;  // over the rows fed in, meaningful iff in_span
  };
  Solution solve(SparseRow v) const;

 private:
  const CycloCtx* ctx_;
  size_t n_sources_ = 0;
  std::vector<SparseRow> rows_;            // echelon rows, leading columns strictly increasing
  std::vector<std::vector<CycloRat>> combo_;  // rows_[i] = sum_j combo_[i][j] * source_j
};

}  // namespace frook
