#include "frook/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace frook {

void sparse_normalize(SparseRow& r) {
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(r.size());
  for (auto& [c, v] : r) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, v);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& p) { return p.second.is_zero(); }),
            out.end());
  r = std::move(out);
}

SparseRow sparse_axpy(const SparseRow& x, const CycloRat& a, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      CycloRat v = a * y[j].second;
      if (!v.is_zero()) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      CycloRat v = x[i].second + a * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

int rank_over_field(const std::vector<std::vector<CycloRat>>& rows) {
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  std::vector<SparseRow> sparse;
  sparse.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("rank_over_field: ragged rows");
    SparseRow r;
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) r.emplace_back(j, row[j]);
    sparse.push_back(std::move(r));
  }
  return rank_over_field_sparse(std::move(sparse));
}

int rank_over_field_sparse(std::vector<SparseRow> rows) {
  if (rows.empty()) return 0;
  const CycloCtx* ctx = nullptr;
  for (const auto& r : rows)
    if (!r.empty()) { ctx = r[0].second.ctx(); break; }
  if (!ctx) return 0;
  EchelonSolver es(ctx);
  for (auto& r : rows) es.add_row(std::move(r));
  return es.rank();
}

void EchelonSolver::add_row(SparseRow row) {
  ++n_sources_;
  std::vector<CycloRat> combo(n_sources_, CycloRat(ctx_));
  combo.back() = CycloRat(ctx_, Rat(1));
  // Reduce against existing echelon rows.
  for (size_t i = 0; i < rows_.size() && !row.empty(); ++i) {
    uint64_t lead = rows_[i][0].first;
    auto it = std::lower_bound(row.begin(), row.end(), lead,
                               [](const auto& p, uint64_t c) { return p.first < c; });
    if (it == row.end() || it->first != lead) continue;
    CycloRat factor = -(it->second * rows_[i][0].second.inverse());
    row = sparse_axpy(row, factor, rows_[i]);
    for (size_t j = 0; j < combo_[i].size(); ++j) combo[j] += factor * combo_[i][j];
  }
  if (row.empty()) return;
  // Insert keeping leading columns strictly increasing.
  for (auto& c : combo_) c.resize(n_sources_, CycloRat(ctx_));
  size_t pos = 0;
  while (pos < rows_.size() && rows_[pos][0].first < row[0].first) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(row));
  combo_.insert(combo_.begin() + pos, std::move(combo));
}

EchelonSolver::Solution EchelonSolver::solve(SparseRow v) const {
  Solution sol;
  std::vector<CycloRat> coeffs(n_sources_, CycloRat(ctx_));
  for (size_t i = 0; i < rows_.size() && !v.empty(); ++i) {
    uint64_t lead = rows_[i][0].first;
    if (v[0].first > lead) continue;
    if (v[0].first < lead) return sol;  // leading column not matched by any pivot
    CycloRat factor = v[0].second * rows_[i][0].second.inverse();
    v = sparse_axpy(v, -factor, rows_[i]);
    for (size_t j = 0; j < combo_[i].size(); ++j) coeffs[j] += factor * combo_[i][j];
  }
  if (!v.empty()) return sol;
  sol.in_span = true;
  sol.coeffs = std::move(coeffs);
  return sol;
}

}  // namespace frook
