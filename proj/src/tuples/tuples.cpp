#include "mctool/tuples.hpp"

namespace mctool {

MonodromyTuple::MonodromyTuple(std::vector<Mat> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::SizeMismatch, "a tuple needs at least one finite entry");
  rank_ = entries_.front().rows();
  for (const auto& m : entries_) {
    if (!m.is_square() || m.rows() != rank_) throw Error(ErrorKind::SizeMismatch, "entries must be square of equal size");
    order_ = checked_order_lcm(order_, m.order());
  }
  Mat prod = Mat::identity(rank_, order_);
  for (auto& m : entries_) {
    m = m.embed(order_);
    if (det(m).is_zero()) throw Error(ErrorKind::NotInvertible, "tuple entry is singular");
    prod = prod * m;
  }
  infinity_ = inverse(prod);
}

std::vector<Mat> MonodromyTuple::all_entries() const {
  std::vector<Mat> out = entries_;
  out.push_back(infinity_);
  return out;
}

MonodromyTuple MonodromyTuple::embed(std::uint64_t target_order) const {
  MonodromyTuple t = *this;
  for (auto& m : t.entries_) m = m.embed(target_order);
  t.infinity_ = infinity_.embed(target_order);
  t.order_ = target_order;
  return t;
}

bool operator==(const MonodromyTuple& a, const MonodromyTuple& b) {
  return a.rank_ == b.rank_ && a.entries_ == b.entries_;
}

RankOneTuple::RankOneTuple(std::vector<CycNum> scalars) : scalars_(std::move(scalars)) {
  CycNum prod = CycNum::one(1);
  for (const auto& s : scalars_) {
    if (s.is_zero()) throw Error(ErrorKind::NotInvertible, "rank-one scalar is zero");
    prod *= s;
  }
  infinity_ = prod.inv();
}

std::uint64_t RankOneTuple::order() const {
  std::uint64_t order = infinity_.order();
  for (const auto& s : scalars_) order = checked_order_lcm(order, s.order());
  return order;
}

MonodromyTuple RankOneTuple::as_tuple() const {
  std::vector<Mat> entries;
  for (const auto& s : scalars_) entries.push_back(Mat::scalar(1, s));
  return MonodromyTuple(std::move(entries));
}

RankOneTuple kummer(const CycNum& lambda) { return RankOneTuple({lambda}); }

MonodromyTuple tuple_new(std::vector<Mat> entries) { return MonodromyTuple(std::move(entries)); }

MonodromyTuple tensor_same_base(const MonodromyTuple& s, const MonodromyTuple& t) {
  if (s.puncture_count() != t.puncture_count()) {
    throw Error(ErrorKind::PunctureMismatch, "tensor of tuples with " + std::to_string(s.puncture_count()) + " and " +
                                                 std::to_string(t.puncture_count()) + " punctures");
  }
  std::vector<Mat> out;
  for (std::size_t i = 0; i < s.puncture_count(); ++i) out.push_back(kronecker(s.entry(i), t.entry(i)));
  return MonodromyTuple(std::move(out));
}

MonodromyTuple dual(const MonodromyTuple& t) {
  std::vector<Mat> out;
  for (const auto& m : t.entries()) out.push_back(inverse(m).transpose());
  MonodromyTuple d(std::move(out));
  if (d.infinity_entry() != inverse(t.infinity_entry()).transpose()) {
    throw Error(ErrorKind::InternalCheckFailed, "dual broke the product relation");
  }
  return d;
}

MonodromyTuple twist(const MonodromyTuple& t, const RankOneTuple& r) {
  if (r.size() != t.puncture_count()) {
    throw Error(ErrorKind::PunctureMismatch, "twist needs " + std::to_string(t.puncture_count()) + " scalars, got " +
                                                 std::to_string(r.size()));
  }
  std::vector<Mat> out;
  for (std::size_t i = 0; i < r.size(); ++i) out.push_back(r.scalar(i) * t.entry(i));
  return MonodromyTuple(std::move(out));
}

MonodromyTuple fiber_tuple(const MonodromyTuple& t, const RankOneTuple& r) {
  std::vector<Mat> out = t.entries();
  for (const auto& l : r.scalars()) out.push_back(Mat::scalar(t.rank(), l));
  MonodromyTuple f(std::move(out));
  if (f.infinity_entry() != r.infinity_scalar() * t.infinity_entry()) {
    throw Error(ErrorKind::InternalCheckFailed, "fiber tuple infinity entry mismatch");
  }
  return f;
}

bool property_T(const MonodromyTuple& t) {
  std::size_t nontrivial = 0;
  for (const auto& m : t.entries()) {
    if (!m.is_identity()) ++nontrivial;
  }
  if (nontrivial < 2) return false;
  return algebra_closure_dim(t.entries()) == t.rank() * t.rank();
}

std::size_t fixed_dim(const Mat& m) { return m.rows() - rank(m - Mat::identity(m.rows(), m.order())); }

long parabolic_h1_dim(const MonodromyTuple& t) {
  const long n = static_cast<long>(t.rank());
  const long r = static_cast<long>(t.puncture_count());
  long chi = (1 - r) * n;
  for (const auto& m : t.all_entries()) chi += static_cast<long>(fixed_dim(m));
  const long h0 = static_cast<long>(common_fixed_space(t.entries()).dim());
  const long h2 = static_cast<long>(common_fixed_space(dual(t).entries()).dim());
  return h0 + h2 - chi;
}

long rigidity_index(const MonodromyTuple& t) {
  if (algebra_closure_dim(t.entries()) != t.rank() * t.rank()) {
    throw Error(ErrorKind::NotIrreducible, "rigidity index needs an absolutely irreducible tuple");
  }
  return parabolic_h1_dim(tensor_same_base(t, dual(t)));
}

}  // namespace mctool
