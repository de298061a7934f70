#include "elimination.hpp"

#include <limits>

namespace mctool::detail {

namespace {

// Pivot preference: rationals first, then the element with the smallest
// coefficient size. Keeps intermediate growth down on the dense systems.
std::size_t pivot_cost(const CycNum& x) {
  std::size_t cost = x.is_rational() ? 0 : 1u << 20;
  cost += mpz_sizeinbase(x.denominator().get_mpz_t(), 2);
  for (const auto& c : x.numerators()) {
    if (c != 0) cost += mpz_sizeinbase(c.get_mpz_t(), 2);
  }
  return cost;
}

void scale_row(Vec& row, std::size_t from, const CycNum& factor) {
  for (std::size_t k = from; k < row.size(); ++k) {
    if (!row[k].is_zero()) row[k] *= factor;
  }
}

// row -= f * pivot_row over the listed support.
void axpy(Vec& row, const CycNum& f, const Vec& pivot_row, const std::vector<std::size_t>& support) {
  for (std::size_t k : support) row[k] -= f * pivot_row[k];
}

std::vector<std::size_t> eliminate(std::vector<Vec>& rows, std::size_t ncols, std::uint64_t order,
                                   bool full) {
  (void)order;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      std::size_t cost = pivot_cost(rows[i][c]);
      if (cost < best_cost) {
        best = i;
        best_cost = cost;
        if (rows[i][c].is_one()) break;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[best], rows[r]);
    Vec& prow = rows[r];
    if (!prow[c].is_one()) scale_row(prow, c, prow[c].inv());
    std::vector<std::size_t> support;
    for (std::size_t k = c; k < ncols; ++k) {
      if (!prow[k].is_zero()) support.push_back(k);
    }
    for (std::size_t i = full ? 0 : r + 1; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      CycNum f = rows[i][c];
      axpy(rows[i], f, prow, support);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref_rows(std::vector<Vec>& rows, std::size_t ncols, std::uint64_t order) {
  return eliminate(rows, ncols, order, true);
}

std::vector<std::size_t> echelon_rows(std::vector<Vec>& rows, std::size_t ncols, std::uint64_t order) {
  return eliminate(rows, ncols, order, false);
}

bool EchelonBasis::insert(Vec v) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    CycNum f = v[p];
    for (std::size_t k = 0; k < ncols_; ++k) {
      if (!rows_[i][k].is_zero()) v[k] -= f * rows_[i][k];
    }
  }
  std::size_t p = 0;
  while (p < ncols_ && v[p].is_zero()) ++p;
  if (p == ncols_) return false;
  scale_row(v, p, v[p].inv());
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace mctool::detail
