// Jordan data, invariant forms, conjugators and algebra closure.

#include <algorithm>
#include <random>
#include <sstream>

#include "elimination.hpp"
#include "mctool/linalg.hpp"

namespace mctool {

// ---------------------------------------------------------------------------
// JordanData

JordanData::JordanData(std::vector<JordanBlock> blocks) : blocks_(std::move(blocks)) { canonicalize(); }

void JordanData::canonicalize() {
  std::uint64_t order = 1;
  for (const auto& b : blocks_) order = checked_order_lcm(order, b.eigenvalue.order());
  for (auto& b : blocks_) b.eigenvalue = b.eigenvalue.embed(order);
  std::stable_sort(blocks_.begin(), blocks_.end(), [](const JordanBlock& a, const JordanBlock& b) {
    std::string sa = a.eigenvalue.to_string(), sb = b.eigenvalue.to_string();
    if (sa != sb) return sa < sb;
    return a.length > b.length;
  });
}

std::size_t JordanData::dimension() const {
  std::size_t d = 0;
  for (const auto& b : blocks_) d += b.length;
  return d;
}

std::size_t JordanData::count(const CycNum& eigenvalue, std::size_t length) const {
  return static_cast<std::size_t>(std::count_if(blocks_.begin(), blocks_.end(), [&](const JordanBlock& b) {
    return b.length == length && b.eigenvalue == eigenvalue;
  }));
}

JordanData JordanData::galois(long long k) const {
  std::vector<JordanBlock> out = blocks_;
  for (auto& b : out) b.eigenvalue = b.eigenvalue.galois(k);
  return JordanData(std::move(out));
}

JordanData JordanData::embed(std::uint64_t order) const {
  std::vector<JordanBlock> out = blocks_;
  for (auto& b : out) b.eigenvalue = b.eigenvalue.embed(order);
  return JordanData(std::move(out));
}

std::string JordanData::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    os << (i ? ", " : "") << "J(" << blocks_[i].eigenvalue << ", " << blocks_[i].length << ")";
  }
  os << "}";
  return os.str();
}

bool operator==(const JordanData& a, const JordanData& b) {
  if (a.blocks_.size() != b.blocks_.size()) return false;
  std::uint64_t order = 1;
  for (const auto& x : a.blocks_) order = checked_order_lcm(order, x.eigenvalue.order());
  for (const auto& x : b.blocks_) order = checked_order_lcm(order, x.eigenvalue.order());
  JordanData ea = a.embed(order), eb = b.embed(order);
  for (std::size_t i = 0; i < ea.blocks_.size(); ++i) {
    if (ea.blocks_[i].length != eb.blocks_[i].length || ea.blocks_[i].eigenvalue != eb.blocks_[i].eigenvalue) {
      return false;
    }
  }
  return true;
}

std::vector<CycNum> default_eigenvalue_candidates(const Mat& m) {
  std::vector<CycNum> out = roots_of_unity_in_field(m.order());
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    const CycNum& d = m(i, i);
    if (d.is_zero()) continue;
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  return out;
}

JordanData jordan_data(const Mat& m, const std::vector<CycNum>& candidates) {
  if (!m.is_square()) throw Error(ErrorKind::SizeMismatch, "jordan_data of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<JordanBlock> blocks;
  std::size_t found = 0;
  std::vector<CycNum> seen;
  for (const auto& alpha : candidates) {
    if (found == n) break;
    if (std::find(seen.begin(), seen.end(), alpha) != seen.end()) continue;
    seen.push_back(alpha);
    Mat shifted = m - Mat::scalar(n, alpha.embed(checked_order_lcm(alpha.order(), m.order())));
    // d[k] = dim ker (M - alpha)^k
    std::vector<std::size_t> d{0};
    Mat power = shifted;
    while (true) {
      std::size_t dk = n - rank(power);
      if (dk == d.back()) break;
      d.push_back(dk);
      power = power * shifted;
    }
    if (d.size() == 1) continue;
    d.push_back(d.back());
    for (std::size_t l = 1; l + 1 < d.size(); ++l) {
      const long cnt = 2 * static_cast<long>(d[l]) - static_cast<long>(d[l - 1]) - static_cast<long>(d[l + 1]);
      for (long c = 0; c < cnt; ++c) blocks.push_back({alpha, l});
    }
    found += d.back();
  }
  if (found != n) {
    throw Error(ErrorKind::EigenvalueOutsideCandidates,
                "candidates account for " + std::to_string(found) + " of " + std::to_string(n) + " dimensions");
  }
  return JordanData(std::move(blocks));
}

JordanData jordan_data(const Mat& m) { return jordan_data(m, default_eigenvalue_candidates(m)); }

// ---------------------------------------------------------------------------
// Linear matrix equations. Unknown matrices are flattened row-major.

namespace {

Mat flatten_rows(const std::vector<Mat>& ms, std::uint64_t order) {
  std::vector<Vec> rows;
  for (const auto& m : ms) {
    Vec v;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    }
    rows.push_back(std::move(v));
  }
  return Mat::from_rows(rows, order);
}

Mat unflatten(const Mat& columns, std::size_t col, std::size_t n) {
  Mat m(n, n, columns.order());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m.set(a, b, columns(a * n + b, col));
  }
  return m;
}

std::uint64_t tuple_order(std::span<const Mat> ms) {
  std::uint64_t order = 1;
  for (const auto& m : ms) order = checked_order_lcm(order, m.order());
  return order;
}

// Picks an invertible element of span(basis), trying the basis elements and
// then pseudo-random integer combinations. A nonsingular member exists iff
// det of the generic combination is a nonzero polynomial, so a handful of
// random points decides it with overwhelming probability.
std::optional<Mat> find_nonsingular(const std::vector<Mat>& basis) {
  if (basis.empty()) return std::nullopt;
  for (const auto& b : basis) {
    if (!det(b).is_zero()) return b;
  }
  if (basis.size() == 1) return std::nullopt;
  std::mt19937 rng(20240601u);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Mat sum = Mat(basis.front().rows(), basis.front().cols(), basis.front().order());
    for (const auto& b : basis) sum += CycNum(coeff(rng)) * b;
    if (!det(sum).is_zero()) return sum;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Mat> simultaneous_conjugator(std::span<const Mat> s, std::span<const Mat> t) {
  if (s.size() != t.size()) throw Error(ErrorKind::SizeMismatch, "conjugator: tuple lengths differ");
  if (s.empty()) throw Error(ErrorKind::SizeMismatch, "conjugator: empty tuples");
  const std::size_t n = s.front().rows();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].rows() != n || s[i].cols() != n || t[i].rows() != n || t[i].cols() != n) {
      throw Error(ErrorKind::SizeMismatch, "conjugator: matrix sizes differ");
    }
  }
  const std::uint64_t order = checked_order_lcm(tuple_order(s), tuple_order(t));
  // Equation (c, d) of X S - T X = 0, unknown X_ab:
  //   coefficient = [a == c] S_bd - T_ca [b == d].
  Mat eqs(s.size() * n * n, n * n, order);
  for (std::size_t g = 0; g < s.size(); ++g) {
    const Mat S = s[g].embed(order), T = t[g].embed(order);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t d = 0; d < n; ++d) {
        const std::size_t row = g * n * n + c * n + d;
        for (std::size_t b = 0; b < n; ++b) {
          if (!S(b, d).is_zero()) eqs.set(row, c * n + b, S(b, d));
        }
        for (std::size_t a = 0; a < n; ++a) {
          if (!T(c, a).is_zero()) eqs.set(row, a * n + d, eqs(row, a * n + d) - T(c, a));
        }
      }
    }
  }
  Mat sol = right_kernel(eqs);
  std::vector<Mat> basis;
  for (std::size_t k = 0; k < sol.cols(); ++k) basis.push_back(unflatten(sol, k, n));
  return find_nonsingular(basis);
}

BilinearFormInfo invariant_bilinear_forms(std::span<const Mat> gens) {
  if (gens.empty()) throw Error(ErrorKind::SizeMismatch, "invariant forms: no generators");
  const std::size_t n = gens.front().rows();
  const std::uint64_t order = tuple_order(gens);
  // Equation (c, d) of T^T G T - G = 0, unknown G_ab:
  //   coefficient = T_ac T_bd - [a == c][b == d].
  Mat eqs(gens.size() * n * n, n * n, order);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].rows() != n || gens[g].cols() != n) throw Error(ErrorKind::SizeMismatch, "invariant forms");
    const Mat T = gens[g].embed(order);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t d = 0; d < n; ++d) {
        const std::size_t row = g * n * n + c * n + d;
        for (std::size_t a = 0; a < n; ++a) {
          if (T(a, c).is_zero()) continue;
          for (std::size_t b = 0; b < n; ++b) {
            if (!T(b, d).is_zero()) eqs.set(row, a * n + b, T(a, c) * T(b, d));
          }
        }
        eqs.set(row, c * n + d, eqs(row, c * n + d) - CycNum::one(order));
      }
    }
  }
  Mat sol = right_kernel(eqs);
  BilinearFormInfo info;
  for (std::size_t k = 0; k < sol.cols(); ++k) info.basis.push_back(unflatten(sol, k, n));
  if (info.basis.empty()) return info;

  // The invariant space is stable under transposition, so it splits into its
  // symmetric and alternating parts; find each part as a kernel in the
  // coordinates of the basis.
  auto part = [&](bool symmetric) {
    std::vector<Mat> diffs;
    for (const auto& b : info.basis) diffs.push_back(symmetric ? b - b.transpose() : b + b.transpose());
    Mat coeffs = kernel_basis(flatten_rows(diffs, order)).basis();
    std::vector<Mat> out;
    for (std::size_t r = 0; r < coeffs.rows(); ++r) {
      Mat acc(n, n, order);
      for (std::size_t k = 0; k < info.basis.size(); ++k) {
        if (!coeffs(r, k).is_zero()) acc += coeffs(r, k) * info.basis[k];
      }
      out.push_back(std::move(acc));
    }
    return out;
  };
  info.has_nondegenerate_symmetric = find_nonsingular(part(true)).has_value();
  info.has_nondegenerate_alternating = find_nonsingular(part(false)).has_value();
  return info;
}

std::size_t algebra_closure_dim(std::span<const Mat> gens) {
  if (gens.empty()) return 1;
  const std::size_t n = gens.front().rows();
  const std::uint64_t order = tuple_order(gens);
  std::vector<Mat> g;
  for (const auto& m : gens) g.push_back(m.embed(order));
  auto flat = [n](const Mat& m) {
    Vec v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v.push_back(m(i, j));
    }
    return v;
  };
  detail::EchelonBasis basis(n * n);
  std::vector<Mat> queue{Mat::identity(n, order)};
  basis.insert(flat(queue.front()));
  for (std::size_t idx = 0; idx < queue.size() && basis.size() < n * n; ++idx) {
    for (const auto& x : g) {
      Mat p = queue[idx] * x;
      if (basis.insert(flat(p))) {
        queue.push_back(std::move(p));
        if (basis.size() == n * n) break;
      }
    }
  }
  return basis.size();
}

Subspace common_fixed_space(std::span<const Mat> gens) {
  if (gens.empty()) throw Error(ErrorKind::SizeMismatch, "common_fixed_space: no generators");
  const std::size_t n = gens.front().rows();
  std::vector<Mat> shifted;
  for (const auto& m : gens) shifted.push_back(m - Mat::identity(n, m.order()));
  return kernel_basis(hconcat(shifted));
}

}  // namespace mctool
