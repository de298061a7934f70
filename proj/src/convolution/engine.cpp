// Parabolic cocycle engine for convolution with rank-one tuples.

#include "mctool/convolution.hpp"

namespace mctool {

namespace {

void check_scalars(const RankOneTuple& r) {
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r.scalar(j).is_one()) throw Error(ErrorKind::LambdaIsOne, "scalar " + std::to_string(j + 1) + " is 1");
  }
}

// Matrix whose columns are `columns`, each of length `rows`.
Mat from_columns(const std::vector<Vec>& columns, std::size_t rows, std::uint64_t order) {
  Mat m(rows, columns.size(), order);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (!columns[c][r].is_zero()) m.set(r, c, columns[c][r]);
    }
  }
  return m;
}

Vec column(const Mat& m, std::size_t c) {
  Vec v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

}  // namespace

ParabolicCocycleSpace::ParabolicCocycleSpace(const MonodromyTuple& t, const RankOneTuple& r)
    : p_(t.puncture_count()), q_(r.size()), n_(t.rank()), base_(t), scalars_(r) {
  if (q_ == 0) throw Error(ErrorKind::BadParameters, "the rank-one tuple needs at least one scalar");
  check_scalars(r);
  if (!property_T(t)) throw Error(ErrorKind::PropertyTFailed, "first factor lacks property T");
  fiber_ = fiber_tuple(t, r);
  const std::size_t m = p_ + q_;
  const std::uint64_t order = fiber_.order();
  base_ = base_.embed(order);
  for (const auto& c : fiber_.entries()) rho_inv_.push_back(inverse(c));

  // Parabolic conditions as columns y with (values) * y = 0.
  std::vector<Vec> constraints;
  const Mat id = Mat::identity(n_, order);
  for (std::size_t k = 0; k < m; ++k) {
    Mat y = image_basis(fiber_.entry(k) - id).annihilator();
    for (std::size_t c = 0; c < y.cols(); ++c) {
      Vec col(m * n_, CycNum::zero(order));
      for (std::size_t a = 0; a < n_; ++a) col[k * n_ + a] = y(a, c);
      constraints.push_back(std::move(col));
    }
  }
  // d(a_1 ... a_m) = sum_k d(a_k) C_{k+1} ... C_m must lie in Im(C_1 ... C_m - 1).
  std::vector<Mat> tails(m);
  Mat acc = id;
  for (std::size_t k = m; k-- > 0;) {
    tails[k] = acc;
    acc = fiber_.entry(k) * acc;
  }
  Mat yinf = image_basis(acc - id).annihilator();
  for (std::size_t c = 0; c < yinf.cols(); ++c) {
    Vec col(m * n_, CycNum::zero(order));
    const Vec y = column(yinf, c);
    for (std::size_t k = 0; k < m; ++k) {
      // block k of the column is tails[k] * y
      for (std::size_t a = 0; a < n_; ++a) {
        CycNum s = CycNum::zero(order);
        for (std::size_t b = 0; b < n_; ++b) {
          if (!tails[k](a, b).is_zero() && !y[b].is_zero()) s += tails[k](a, b) * y[b];
        }
        col[k * n_ + a] = s;
      }
    }
    constraints.push_back(std::move(col));
  }
  zpar_ = constraints.empty() ? Subspace::full(m * n_, order)
                              : kernel_basis(from_columns(constraints, m * n_, order));

  std::vector<Mat> cob;
  for (std::size_t k = 0; k < m; ++k) cob.push_back(id - fiber_.entry(k));
  coboundaries_ = image_basis(hconcat(cob));
  if (!zpar_.contains(coboundaries_)) {
    throw Error(ErrorKind::InternalCheckFailed, "coboundaries are not parabolic");
  }

  // Row reduce [tau(z) | z] over a basis z of zpar: rows with a nonzero left
  // part give the RREF basis of the image together with lifts.
  const std::size_t width = p_ * q_ * n_;
  std::vector<Vec> aug;
  for (std::size_t b = 0; b < zpar_.dim(); ++b) {
    Vec z = zpar_.basis().row(b);
    Vec row = twisted_evaluation(z);
    row.insert(row.end(), z.begin(), z.end());
    aug.push_back(std::move(row));
  }
  Mat reduced = aug.empty() ? Mat(0, width + m * n_, order) : rref(Mat::from_rows(aug, order)).reduced;
  std::vector<Vec> image_rows, lift_rows;
  for (std::size_t b = 0; b < reduced.rows(); ++b) {
    Vec row = reduced.row(b);
    bool nonzero = false;
    for (std::size_t c = 0; c < width && !nonzero; ++c) nonzero = !row[c].is_zero();
    if (!nonzero) break;
    image_rows.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(width));
    lift_rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(width), row.end());
  }
  image_ = image_rows.empty() ? Subspace(width, order) : Subspace::span(Mat::from_rows(image_rows, order));
  lifts_ = lift_rows.empty() ? Mat(0, m * n_, order) : Mat::from_rows(lift_rows, order);
  if (image_.dim() != lifts_.rows() || image_.dim() + coboundaries_.dim() != zpar_.dim()) {
    throw Error(ErrorKind::InternalCheckFailed, "twisted evaluation is not injective on H");
  }
}

Vec ParabolicCocycleSpace::block(const Vec& values, std::size_t k) const {
  return Vec(values.begin() + static_cast<std::ptrdiff_t>(k * n_),
             values.begin() + static_cast<std::ptrdiff_t>((k + 1) * n_));
}

Vec ParabolicCocycleSpace::evaluate(const Vec& values, const FreeWord& w) const {
  const std::size_t m = p_ + q_;
  if (values.size() != m * n_) throw Error(ErrorKind::DimensionMismatch, "cocycle value vector");
  Vec acc(n_, CycNum::zero(fiber_.order()));
  for (const auto& l : w.letters()) {
    if (l.gen > m) throw Error(ErrorKind::IndexOutOfRange, "word uses a" + std::to_string(l.gen));
    const std::size_t g = l.gen - 1;
    const Vec d = block(values, g);
    if (l.exp == 1) {
      // d(w a) = d(w) rho(a) + d(a)
      acc = acc * fiber_.entry(g);
      for (std::size_t a = 0; a < n_; ++a) acc[a] += d[a];
    } else {
      // d(w a^-1) = (d(w) - d(a)) rho(a)^-1
      for (std::size_t a = 0; a < n_; ++a) acc[a] -= d[a];
      acc = acc * rho_inv_[g];
    }
  }
  return acc;
}

Vec ParabolicCocycleSpace::twisted_evaluation(const Vec& values) const {
  // d([a_i, a_{p+j}]) = d(a_i)(l_j - 1) + d(a_{p+j})(1 - A_i)
  Vec out;
  out.reserve(p_ * q_ * n_);
  const std::uint64_t order = fiber_.order();
  const Mat id = Mat::identity(n_, order);
  for (std::size_t j = 0; j < q_; ++j) {
    const CycNum lm1 = scalars_.scalar(j) - CycNum::one(order);
    const Vec dy = block(values, p_ + j);
    for (std::size_t i = 0; i < p_; ++i) {
      const Vec dx = block(values, i);
      Vec term = dy * (id - base_.entry(i));
      for (std::size_t a = 0; a < n_; ++a) out.push_back(dx[a] * lm1 + term[a]);
    }
  }
  return out;
}

Mat ParabolicCocycleSpace::braid_action(std::size_t i, std::size_t j) const {
  const BraidAuto phi = braid_auto(p_, q_, i, j);
  const std::size_t h = dim();
  Mat out(h, h, fiber_.order());
  for (std::size_t b = 0; b < h; ++b) {
    const Vec lift = lifts_.row(b);
    Vec moved;
    moved.reserve(lift.size());
    for (const auto& img : phi.images) {
      Vec v = evaluate(lift, img);
      moved.insert(moved.end(), v.begin(), v.end());
    }
    auto coords = image_.coordinates(twisted_evaluation(moved));
    if (!coords) throw Error(ErrorKind::InternalCheckFailed, "braid action leaves the parabolic image");
    for (std::size_t c = 0; c < h; ++c) out.set(b, c, (*coords)[c]);
  }
  return out;
}

Vec evaluate_cocycle(const ParabolicCocycleSpace& space, const Vec& values, const FreeWord& w) {
  return space.evaluate(values, w);
}

Mat twisted_evaluation(const ParabolicCocycleSpace& space) { return space.image().basis(); }

long convolution_rank(const MonodromyTuple& t, const RankOneTuple& r) {
  if (common_fixed_space(t.entries()).dim() != 0) {
    throw Error(ErrorKind::HasGlobalSections, "first factor has global sections");
  }
  const long n = static_cast<long>(t.rank());
  const long p = static_cast<long>(t.puncture_count());
  const long q = static_cast<long>(r.size());
  long rk = (p + q - 1) * n;
  for (const auto& a : t.entries()) rk -= static_cast<long>(fixed_dim(a));
  for (const auto& l : r.scalars()) {
    if (l.is_one()) rk -= n;
  }
  rk -= static_cast<long>(fixed_dim(r.infinity_scalar() * t.infinity_entry()));
  return rk;
}

MonodromyTuple convolve_rank_one(const MonodromyTuple& t, const RankOneTuple& r) {
  ParabolicCocycleSpace space(t, r);
  const long expected = convolution_rank(t, r);
  if (static_cast<long>(space.dim()) != expected) {
    throw Error(ErrorKind::RankMismatch, "engine dimension " + std::to_string(space.dim()) +
                                             " but rank formula gives " + std::to_string(expected));
  }
  std::vector<Mat> entries;
  for (std::size_t j = 1; j <= space.q(); ++j) {
    for (std::size_t i = 1; i <= space.p(); ++i) entries.push_back(space.braid_action(i, j));
  }
  return MonodromyTuple(std::move(entries));
}

}  // namespace mctool
