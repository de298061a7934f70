#pragma once

// Row reduction kernels shared by the linear algebra routines.

#include <cstdint>
#include <vector>

#include "mctool/linalg.hpp"

namespace mctool::detail {

/// Reduces `rows` to RREF in place (zero rows moved to the bottom) and returns
/// the pivot columns.
std::vector<std::size_t> rref_rows(std::vector<Vec>& rows, std::size_t ncols, std::uint64_t order);

/// Forward elimination only (row echelon form, pivots normalized to 1).
std::vector<std::size_t> echelon_rows(std::vector<Vec>& rows, std::size_t ncols, std::uint64_t order);

/// Incrementally maintained echelon basis: every stored row has a 1 in its
/// pivot column and was reduced against all rows stored before it.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ncols) : ncols_(ncols) {}

  /// Reduces v against the basis; returns true and stores it if independent.
  bool insert(Vec v);
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t ncols_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace mctool::detail
