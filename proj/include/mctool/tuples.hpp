#pragma once

// Monodromy tuples (T_1, ..., T_r) with the derived entry
// T_{r+1} = (T_1 ... T_r)^-1, and the operations that keep the puncture set.

#include <cstdint>
#include <vector>

#include "mctool/linalg.hpp"

namespace mctool {

class MonodromyTuple {
 public:
  MonodromyTuple() = default;
  /// Validates that the entries are square, invertible and of equal size, then
  /// derives the infinity entry. Throws SizeMismatch / NotInvertible.
  explicit MonodromyTuple(std::vector<Mat> entries);

  std::size_t rank() const { return rank_; }
  std::size_t puncture_count() const { return entries_.size(); }
  std::uint64_t order() const { return order_; }

  /// Finite entries T_1..T_r.
  const std::vector<Mat>& entries() const { return entries_; }
  const Mat& entry(std::size_t i) const { return entries_.at(i); }
  const Mat& infinity_entry() const { return infinity_; }
  /// T_1, ..., T_r, T_{r+1}.
  std::vector<Mat> all_entries() const;

  /// Same tuple with entries viewed in Q(zeta_M).
  MonodromyTuple embed(std::uint64_t target_order) const;

  friend bool operator==(const MonodromyTuple& a, const MonodromyTuple& b);

 private:
  std::size_t rank_ = 0;
  std::uint64_t order_ = 1;
  std::vector<Mat> entries_;
  Mat infinity_;
};

/// Rank-one tuple (l_1, ..., l_q) with derived l_{q+1} = (l_1 ... l_q)^-1.
class RankOneTuple {
 public:
  RankOneTuple() = default;
  /// Throws NotInvertible on a zero scalar.
  explicit RankOneTuple(std::vector<CycNum> scalars);

  std::size_t size() const { return scalars_.size(); }
  const std::vector<CycNum>& scalars() const { return scalars_; }
  const CycNum& scalar(std::size_t j) const { return scalars_.at(j); }
  const CycNum& infinity_scalar() const { return infinity_; }
  std::uint64_t order() const;

  /// As a 1x1 monodromy tuple.
  MonodromyTuple as_tuple() const;

 private:
  std::vector<CycNum> scalars_;
  CycNum infinity_;
};

/// Kummer tuple (l) on one finite puncture.
RankOneTuple kummer(const CycNum& lambda);

MonodromyTuple tuple_new(std::vector<Mat> entries);

/// Entrywise Kronecker product. Throws PunctureMismatch.
MonodromyTuple tensor_same_base(const MonodromyTuple& s, const MonodromyTuple& t);

/// Entrywise inverse transpose.
MonodromyTuple dual(const MonodromyTuple& t);

/// T_i -> l_i T_i. Throws PunctureMismatch unless r.size() == t.puncture_count().
MonodromyTuple twist(const MonodromyTuple& t, const RankOneTuple& r);

/// (A_1, ..., A_p, l_1 I, ..., l_q I) with infinity entry l_{q+1} A_{p+1}.
MonodromyTuple fiber_tuple(const MonodromyTuple& t, const RankOneTuple& r);

/// Absolutely irreducible with at least two finite entries different from 1.
bool property_T(const MonodromyTuple& t);

/// dim ker(M - 1).
std::size_t fixed_dim(const Mat& m);

/// Dimension of parabolic H^1 via the Euler characteristic, including the
/// invariant and coinvariant corrections.
long parabolic_h1_dim(const MonodromyTuple& t);

/// parabolic_h1_dim of the conjugation action on matrices. Zero means
/// cohomologically rigid. Throws NotIrreducible.
long rigidity_index(const MonodromyTuple& t);

}  // namespace mctool
