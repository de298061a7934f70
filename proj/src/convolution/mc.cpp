// Closed-form middle convolution with a Kummer tuple, and the local
// monodromy predictors.

#include "mctool/convolution.hpp"

namespace mctool {

namespace {

void check_lambda(const CycNum& lambda) {
  if (lambda.is_one()) throw Error(ErrorKind::LambdaIsOne, "lambda must differ from 1");
  if (lambda.is_zero()) throw Error(ErrorKind::NotInvertible, "lambda must be nonzero");
}

}  // namespace

std::vector<Mat> mc_blocks(const MonodromyTuple& t, const CycNum& lambda) {
  check_lambda(lambda);
  const std::size_t p = t.puncture_count(), n = t.rank();
  const std::uint64_t order = checked_order_lcm(t.order(), lambda.order());
  const Mat id = Mat::identity(n, order);
  std::vector<Mat> out;
  for (std::size_t i = 0; i < p; ++i) {
    Mat d = Mat::identity(p * n, order);
    for (std::size_t k = 0; k < p; ++k) {
      Mat blk;
      if (k < i) {
        blk = lambda * (t.entry(k) - id);
      } else if (k == i) {
        blk = lambda * t.entry(k);
      } else {
        blk = t.entry(k) - id;
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) d.set(i * n + a, k * n + b, blk(a, b));
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

McSpaces mc_subspaces(const MonodromyTuple& t, const CycNum& lambda) {
  check_lambda(lambda);
  const std::size_t p = t.puncture_count(), n = t.rank();
  const std::uint64_t order = checked_order_lcm(t.order(), lambda.order());
  const Mat id = Mat::identity(n, order);

  std::vector<Vec> krows;
  for (std::size_t i = 0; i < p; ++i) {
    Subspace im = image_basis(t.entry(i) - id);
    for (std::size_t b = 0; b < im.dim(); ++b) {
      Vec row(p * n, CycNum::zero(order));
      for (std::size_t a = 0; a < n; ++a) row[i * n + a] = im.basis()(b, a);
      krows.push_back(std::move(row));
    }
  }
  Subspace k = krows.empty() ? Subspace(p * n, order) : Subspace::span(Mat::from_rows(krows, order));

  // v in L iff sum_i v_i A_{i+1} ... A_p lies in Im(A_1 ... A_p lambda - 1).
  std::vector<Mat> tails(p);
  Mat acc = id;
  for (std::size_t i = p; i-- > 0;) {
    tails[i] = acc;
    acc = t.entry(i) * acc;
  }
  Mat y = image_basis(lambda * acc - id).annihilator();
  Subspace l;
  if (y.cols() == 0) {
    l = Subspace::full(p * n, order);
  } else {
    std::vector<Mat> stacked;
    for (std::size_t i = 0; i < p; ++i) stacked.push_back(tails[i] * y);
    l = kernel_basis(vconcat(stacked));
  }
  Subspace w = intersect(k, l);
  return {std::move(k), std::move(l), std::move(w)};
}

Subspace mc_space(const MonodromyTuple& t, const CycNum& lambda) {
  check_lambda(lambda);
  if (!property_T(t)) throw Error(ErrorKind::PropertyTFailed, "mc input lacks property T");
  McSpaces s = mc_subspaces(t, lambda);
  long expected = static_cast<long>(t.puncture_count() * t.rank());
  for (const auto& a : t.entries()) expected -= static_cast<long>(fixed_dim(a));
  expected -= static_cast<long>(fixed_dim(lambda.inv() * t.infinity_entry()));
  if (static_cast<long>(s.w.dim()) != expected) {
    throw Error(ErrorKind::InternalCheckFailed, "dim W = " + std::to_string(s.w.dim()) + ", rank formula gives " +
                                                    std::to_string(expected));
  }
  return std::move(s.w);
}

MonodromyTuple mc(const MonodromyTuple& t, const CycNum& lambda) {
  Subspace w = mc_space(t, lambda);
  std::vector<Mat> blocks = mc_blocks(t, lambda);
  std::vector<Mat> out;
  for (const auto& d : blocks) {
    Mat restricted(w.dim(), w.dim(), w.order());
    for (std::size_t b = 0; b < w.dim(); ++b) {
      auto coords = w.coordinates(w.basis().row(b) * d);
      if (!coords) throw Error(ErrorKind::InternalCheckFailed, "block matrix does not stabilize W");
      for (std::size_t c = 0; c < w.dim(); ++c) restricted.set(b, c, (*coords)[c]);
    }
    out.push_back(std::move(restricted));
  }
  return MonodromyTuple(std::move(out));
}

std::optional<JordanData> predict_jordan_finite(const JordanData& jd, const CycNum& lambda, std::size_t target_rank) {
  const CycNum one = CycNum::one(1);
  const CycNum lambda_inv = lambda.inv();
  std::vector<JordanBlock> out;
  std::size_t total = 0;
  for (const auto& b : jd.blocks()) {
    if (b.eigenvalue == one && b.length == 1) continue;
    std::size_t len = b.length;
    if (b.eigenvalue == one) {
      --len;
    } else if (b.eigenvalue == lambda_inv) {
      ++len;
    }
    if (len == 0) continue;
    out.push_back({b.eigenvalue * lambda, len});
    total += len;
  }
  if (total > target_rank) return std::nullopt;
  for (; total < target_rank; ++total) out.push_back({one, 1});
  return JordanData(std::move(out));
}

std::optional<JordanData> predict_jordan_infinity(const JordanData& jd, const CycNum& lambda,
                                                  std::size_t target_rank) {
  const CycNum one = CycNum::one(1);
  const CycNum lambda_inv = lambda.inv();
  std::vector<JordanBlock> out;
  std::size_t total = 0;
  for (const auto& b : jd.blocks()) {
    std::size_t len = b.length;
    if (b.eigenvalue == lambda) {
      --len;
    } else if (b.eigenvalue == one) {
      ++len;
    }
    if (len == 0) continue;
    out.push_back({b.eigenvalue * lambda_inv, len});
    total += len;
  }
  if (total > target_rank) return std::nullopt;
  for (; total < target_rank; ++total) out.push_back({lambda_inv, 1});
  return JordanData(std::move(out));
}

}  // namespace mctool
