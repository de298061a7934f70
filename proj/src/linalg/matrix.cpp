#include <algorithm>
#include <array>
#include <sstream>

#include "elimination.hpp"
#include "mctool/linalg.hpp"

namespace mctool {

Mat::Mat(std::size_t rows, std::size_t cols, std::uint64_t order)
    : rows_(rows), cols_(cols), order_(order), data_(rows * cols, CycNum::zero(order)) {}

Mat Mat::identity(std::size_t n, std::uint64_t order) {
  Mat m(n, n, order);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = CycNum::one(order);
  return m;
}

Mat Mat::scalar(std::size_t n, const CycNum& c) {
  Mat m(n, n, c.order());
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = c;
  return m;
}

Mat Mat::diagonal(const Vec& diag) {
  std::uint64_t order = 1;
  for (const auto& d : diag) order = checked_order_lcm(order, d.order());
  Mat m(diag.size(), diag.size(), order);
  for (std::size_t i = 0; i < diag.size(); ++i) m.data_[i * diag.size() + i] = diag[i].embed(order);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::uint64_t order) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != ncols) throw Error(ErrorKind::SizeMismatch, "ragged matrix rows");
    for (const auto& x : r) order = checked_order_lcm(order, x.order());
  }
  Mat m(rows.size(), ncols, order);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) m.data_[i * ncols + j] = rows[i][j].embed(order);
  }
  return m;
}

Mat Mat::from_ints(const std::vector<std::vector<long>>& rows, std::uint64_t order) {
  std::vector<Vec> vs;
  for (const auto& r : rows) {
    Vec v;
    for (long x : r) v.emplace_back(Rational(x), order);
    vs.push_back(std::move(v));
  }
  Mat m = from_rows(vs, order);
  if (rows.empty()) m.order_ = order;
  return m;
}

void Mat::set(std::size_t i, std::size_t j, const CycNum& value) {
  if (value.order() == order_) {
    data_[i * cols_ + j] = value;
    return;
  }
  std::uint64_t l = checked_order_lcm(order_, value.order());
  if (l != order_) *this = embed(l);
  data_[i * cols_ + j] = value.embed(l);
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Mat Mat::embed(std::uint64_t target) const {
  if (target == order_) return *this;
  Mat m = *this;
  m.order_ = target;
  for (auto& x : m.data_) x = x.embed(target);
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, order_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  }
  return t;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

std::uint64_t common_order(const Mat& a, const Mat& b) { return checked_order_lcm(a.order(), b.order()); }

Mat& Mat::operator+=(const Mat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::SizeMismatch, "matrix sum");
  if (other.order_ != order_) {
    std::uint64_t l = common_order(*this, other);
    *this = embed(l);
    return *this += other.embed(l);
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& other) { return *this += -other; }

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::SizeMismatch, "matrix product");
  if (a.order_ != b.order_) {
    std::uint64_t l = common_order(a, b);
    return a.embed(l) * b.embed(l);
  }
  Mat c(a.rows_, b.cols_, a.order_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& x = a.data_[i * a.cols_ + k];
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycNum& y = b.data_[k * b.cols_ + j];
        if (y.is_zero()) continue;
        c.data_[i * c.cols_ + j] += x * y;
      }
    }
  }
  return c;
}

Mat operator*(const CycNum& c, const Mat& m) {
  std::uint64_t l = checked_order_lcm(c.order(), m.order_);
  Mat r = m.embed(l);
  CycNum cc = c.embed(l);
  for (auto& x : r.data_) x *= cc;
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    if (a.data_[k] != b.data_[k]) return false;
  }
  return true;
}

bool Mat::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const CycNum& x = data_[i * cols_ + j];
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const CycNum& x) { return x.is_zero(); });
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw Error(ErrorKind::IndexOutOfRange, "matrix block");
  Mat m(nrows, ncols, order_);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) m.data_[i * ncols + j] = data_[(r0 + i) * cols_ + c0 + j];
  }
  return m;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << data_[i * cols_ + j];
    os << "]";
  }
  os << "]";
  return os.str();
}

Vec operator*(const Vec& v, const Mat& m) {
  if (v.size() != m.rows()) throw Error(ErrorKind::SizeMismatch, "vector-matrix product");
  Vec out(m.cols(), CycNum::zero(m.order()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const CycNum& y = m(k, j);
      if (!y.is_zero()) out[j] += v[k] * y;
    }
  }
  return out;
}

Mat hconcat(const std::vector<Mat>& blocks) {
  if (blocks.empty()) return {};
  std::uint64_t order = 1;
  std::size_t cols = 0;
  const std::size_t rows = blocks.front().rows();
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorKind::SizeMismatch, "hconcat");
    order = checked_order_lcm(order, b.order());
    cols += b.cols();
  }
  Mat out(rows, cols, order);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    Mat e = b.embed(order);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, c0 + j, e(i, j));
    }
    c0 += b.cols();
  }
  return out;
}

Mat vconcat(const std::vector<Mat>& blocks) {
  std::vector<Mat> ts;
  ts.reserve(blocks.size());
  for (const auto& b : blocks) ts.push_back(b.transpose());
  return hconcat(ts).transpose();
}

// ---------------------------------------------------------------------------
// Elimination-based routines

RrefResult rref(const Mat& m) {
  std::vector<Vec> rows = m.row_list();
  std::vector<std::size_t> pivots = detail::rref_rows(rows, m.cols(), m.order());
  RrefResult res;
  res.rank = pivots.size();
  res.pivots = std::move(pivots);
  res.reduced = rows.empty() ? Mat(0, m.cols(), m.order()) : Mat::from_rows(rows, m.order());
  return res;
}

std::size_t rank(const Mat& m) {
  std::vector<Vec> rows = m.row_list();
  return detail::echelon_rows(rows, m.cols(), m.order()).size();
}

CycNum det(const Mat& m) {
  if (!m.is_square()) throw Error(ErrorKind::SizeMismatch, "determinant of non-square matrix");
  std::vector<Vec> rows = m.row_list();
  const std::size_t n = m.rows();
  CycNum d = CycNum::one(m.order());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r) {
      if (!rows[r][c].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == n) return CycNum::zero(m.order());
    if (piv != c) {
      std::swap(rows[piv], rows[c]);
      d = -d;
    }
    d *= rows[c][c];
    CycNum inv = rows[c][c].inv();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (rows[r][c].is_zero()) continue;
      CycNum f = rows[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) {
        if (!rows[c][k].is_zero()) rows[r][k] -= f * rows[c][k];
      }
    }
  }
  return d;
}

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotInvertible, "non-square matrix");
  const std::size_t n = m.rows();
  RrefResult r = rref(hconcat({m, Mat::identity(n, m.order())}));
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw Error(ErrorKind::NotInvertible, "singular matrix");
  return r.reduced.block(0, n, n, n);
}

Mat mat_pow(const Mat& m, long long e) {
  Mat base = e < 0 ? inverse(m) : m;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Mat result = Mat::identity(m.rows(), m.order());
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Mat right_kernel(const Mat& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  Mat k(n, free.size(), m.order());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k.set(free[f], f, CycNum::one(m.order()));
    for (std::size_t i = 0; i < r.rank; ++i) {
      const CycNum& x = r.reduced(i, free[f]);
      if (!x.is_zero()) k.set(r.pivots[i], f, -x);
    }
  }
  return k;
}

std::optional<Vec> solve_left(const Mat& m, const Vec& b) {
  // x M = b  <=>  M^T x^T = b^T.
  Mat bcol = Mat::from_rows({b}, m.order()).transpose();
  const std::size_t n = m.rows();
  RrefResult r = rref(hconcat({m.transpose(), bcol}));
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
  Vec x(n, CycNum::zero(r.reduced.order()));
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, n);
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient, std::uint64_t order)
    : ambient_(ambient), order_(order), basis_(0, ambient, order) {}

Subspace Subspace::span(const Mat& rows) {
  Subspace s(rows.cols(), rows.order());
  RrefResult r = rref(rows);
  s.basis_ = r.reduced.block(0, 0, r.rank, rows.cols());
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient, std::uint64_t order) {
  return span(Mat::identity(ambient, order));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length");
  Vec coords;
  coords.reserve(dim());
  for (auto p : pivots_) coords.push_back(v[p]);
  Vec recon = dim() ? coords * basis_ : Vec(ambient_, CycNum::zero(order_));
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (recon[j] != v[j]) return std::nullopt;
  }
  return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis().row(i))) return false;
  }
  return true;
}

Mat Subspace::annihilator() const {
  if (dim() == 0) return Mat::identity(ambient_, order_);
  return right_kernel(basis_);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace kernel_basis(const Mat& m) { return Subspace::span(right_kernel(m.transpose()).transpose()); }

Subspace image_basis(const Mat& m) { return Subspace::span(m); }

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "intersect");
  Mat yu = u.annihilator();
  Mat yw = w.annihilator();
  if (yu.cols() == 0) return w;
  if (yw.cols() == 0) return u;
  return kernel_basis(hconcat({yu, yw}));
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "sum");
  return Subspace::span(vconcat({u.basis(), w.basis()}));
}

// ---------------------------------------------------------------------------

Mat kronecker(const Mat& a, const Mat& b) {
  std::uint64_t order = common_order(a, b);
  Mat ae = a.embed(order), be = b.embed(order);
  Mat k(a.rows() * b.rows(), a.cols() * b.cols(), order);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const CycNum& x = ae(i, j);
      if (x.is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          if (!be(r, c).is_zero()) k.set(i * b.rows() + r, j * b.cols() + c, x * be(r, c));
        }
      }
    }
  }
  return k;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  std::uint64_t order = common_order(a, b);
  Mat s(a.rows() + b.rows(), a.cols() + b.cols(), order);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s.set(i, j, a(i, j));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) s.set(a.rows() + i, a.cols() + j, b(i, j));
  }
  return s;
}

Mat exterior_cube(const Mat& a) {
  if (!a.is_square()) throw Error(ErrorKind::SizeMismatch, "exterior_cube needs a square matrix");
  const std::size_t n = a.rows();
  if (n < 3) throw Error(ErrorKind::DimensionTooSmall, "exterior_cube needs n >= 3");
  std::vector<std::array<std::size_t, 3>> idx;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) idx.push_back({i, j, k});
    }
  }
  Mat out(idx.size(), idx.size(), a.order());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const auto& I = idx[r];
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const auto& J = idx[c];
      auto e = [&](std::size_t p, std::size_t q) -> const CycNum& { return a(I[p], J[q]); };
      CycNum d = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
                 e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                 e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
      if (!d.is_zero()) out.set(r, c, d);
    }
  }
  return out;
}

}  // namespace mctool
