#pragma once

// Exact linear algebra over Q(zeta_N).
//
// Vectors are rows and matrices act from the right: the image of v under M is
// v * M, kernels are left kernels {v : v M = 0} and images are row spaces.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mctool/cyclo.hpp"

namespace mctool {

using Vec = std::vector<CycNum>;

class Mat {
 public:
  Mat() = default;
  /// Zero matrix.
  Mat(std::size_t rows, std::size_t cols, std::uint64_t order = 1);

  static Mat identity(std::size_t n, std::uint64_t order = 1);
  static Mat scalar(std::size_t n, const CycNum& c);
  static Mat diagonal(const Vec& diag);
  /// Entries are embedded into the lcm of their orders and `order`.
  static Mat from_rows(const std::vector<Vec>& rows, std::uint64_t order = 1);
  /// Convenience for integer literals in tests and builders.
  static Mat from_ints(const std::vector<std::vector<long>>& rows, std::uint64_t order = 1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t order() const { return order_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const CycNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Assigning an entry of a different order re-embeds as needed via set().
  void set(std::size_t i, std::size_t j, const CycNum& value);

  Vec row(std::size_t i) const;
  std::vector<Vec> row_list() const;

  /// Same matrix with every entry viewed in Q(zeta_M); order() must divide M.
  Mat embed(std::uint64_t target_order) const;

  Mat transpose() const;
  Mat operator-() const;
  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const CycNum& c, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  bool is_identity() const;
  bool is_zero() const;

  /// Column block [c0, c0 + n).
  Mat block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint64_t order_ = 1;
  std::vector<CycNum> data_;
};

/// Row vector times matrix.
Vec operator*(const Vec& v, const Mat& m);

/// Common cyclotomic order of two matrices (lcm, bounded).
std::uint64_t common_order(const Mat& a, const Mat& b);

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank = 0;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
CycNum det(const Mat& m);
/// Throws NotInvertible.
Mat inverse(const Mat& m);
Mat mat_pow(const Mat& m, long long exponent);

/// Horizontal / vertical concatenation (orders are unified).
Mat hconcat(const std::vector<Mat>& blocks);
Mat vconcat(const std::vector<Mat>& blocks);

/// A subspace of the row space F^ambient, kept as an RREF basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient, std::uint64_t order = 1);  // zero subspace
  /// Row span of `rows` (need not be independent).
  static Subspace span(const Mat& rows);
  static Subspace full(std::size_t ambient, std::uint64_t order = 1);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  std::uint64_t order() const { return order_; }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the RREF basis; nullopt if v is not in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Columns spanning {y : basis * y = 0}; v lies in the subspace iff v * Y == 0.
  Mat annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  std::uint64_t order_ = 1;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : v M = 0}.
Subspace kernel_basis(const Mat& m);
/// Row space of M.
Subspace image_basis(const Mat& m);
/// {x : M x = 0}, returned as the columns of a matrix.
Mat right_kernel(const Mat& m);
/// Throws AmbientMismatch.
Subspace intersect(const Subspace& u, const Subspace& w);
Subspace subspace_sum(const Subspace& u, const Subspace& w);

/// Solves x * M = b for a row vector x; nullopt if inconsistent.
std::optional<Vec> solve_left(const Mat& m, const Vec& b);

struct JordanBlock {
  CycNum eigenvalue;
  std::size_t length = 1;
};

/// Multiset of Jordan blocks in canonical order (eigenvalue text, then length
/// descending).
class JordanData {
 public:
  JordanData() = default;
  explicit JordanData(std::vector<JordanBlock> blocks);

  const std::vector<JordanBlock>& blocks() const { return blocks_; }
  std::size_t dimension() const;
  std::size_t count(const CycNum& eigenvalue, std::size_t length) const;
  /// Applies a Galois automorphism z -> z^k to every eigenvalue.
  JordanData galois(long long k) const;
  JordanData embed(std::uint64_t order) const;
  std::string to_string() const;

  friend bool operator==(const JordanData& a, const JordanData& b);
  friend bool operator!=(const JordanData& a, const JordanData& b) { return !(a == b); }

 private:
  void canonicalize();
  std::vector<JordanBlock> blocks_;
};

/// Default candidate eigenvalues: every root of unity in Q(zeta_N) plus the
/// distinct diagonal entries of M.
std::vector<CycNum> default_eigenvalue_candidates(const Mat& m);

/// Jordan data from kernel dimensions of powers of (M - a). Throws
/// EigenvalueOutsideCandidates when the candidates do not exhaust dim(M).
JordanData jordan_data(const Mat& m, const std::vector<CycNum>& candidates);
JordanData jordan_data(const Mat& m);

Mat kronecker(const Mat& a, const Mat& b);
Mat direct_sum(const Mat& a, const Mat& b);

/// Matrix of the induced action on the third exterior power, basis
/// e_i^e_j^e_k with i<j<k in lexicographic order. Throws DimensionTooSmall.
Mat exterior_cube(const Mat& a);

/// Invertible X with X S_i = T_i X for all i, if one exists.
std::optional<Mat> simultaneous_conjugator(std::span<const Mat> s, std::span<const Mat> t);

struct BilinearFormInfo {
  std::vector<Mat> basis;  // basis of {G : T_i^T G T_i = G}
  bool has_nondegenerate_symmetric = false;
  bool has_nondegenerate_alternating = false;
};

BilinearFormInfo invariant_bilinear_forms(std::span<const Mat> generators);

/// Dimension of the unital algebra generated by the matrices.
std::size_t algebra_closure_dim(std::span<const Mat> generators);

/// {v : v T_i = v for all i}.
Subspace common_fixed_space(std::span<const Mat> generators);

}  // namespace mctool
