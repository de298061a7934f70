#pragma once

// Middle convolution. Two routes are provided: the closed form MC_lambda for a
// Kummer tuple, and a general engine that computes the action of the braid
// automorphisms on parabolic cocycles, for rank-one tuples with q scalars.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mctool/linalg.hpp"
#include "mctool/tuples.hpp"

namespace mctool {

struct Letter {
  std::size_t gen = 1;  // 1-based generator index
  int exp = 1;          // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the generators a1, a2, ...
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<Letter>& letters);

  static FreeWord generator(std::size_t k);
  /// Parses "a1 a3^-1 a2"; "1" or "" is the empty word. Throws ParseError.
  static FreeWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  /// b^-1 (*this) b
  FreeWord conjugate_by(const FreeWord& b) const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord& a, const FreeWord& b) = default;

  std::string to_string() const;

 private:
  void push(Letter l);
  std::vector<Letter> letters_;
};

/// [a, b] = a^-1 b^-1 a b.
FreeWord commutator(const FreeWord& a, const FreeWord& b);

/// Automorphism of the free group on a1..a_{p+q} induced by the pure braid
/// moving puncture i once around puncture p + j.
struct BraidAuto {
  std::size_t p = 0, q = 0, i = 0, j = 0;
  std::vector<FreeWord> images;  // images[k - 1] is the image of a_k

  FreeWord apply(const FreeWord& w) const;
};

/// Throws IndexOutOfRange unless 1 <= i <= p and 1 <= j <= q.
BraidAuto braid_auto(std::size_t p, std::size_t q, std::size_t i, std::size_t j);

/// Parabolic 1-cocycles of the fiber tuple of (T, R) modulo coboundaries.
///
/// A cocycle is stored by its values (d(a_1), ..., d(a_{p+q})) concatenated
/// into one row vector of length (p+q) n. The chosen basis of the quotient is
/// the set of lifts of the RREF basis of its image under the twisted
/// evaluation map, so engine coordinates are twisted evaluation coordinates.
class ParabolicCocycleSpace {
 public:
  /// Throws LambdaIsOne if some l_j == 1 and PropertyTFailed if T lacks
  /// property T.
  ParabolicCocycleSpace(const MonodromyTuple& t, const RankOneTuple& r);

  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  std::size_t fiber_rank() const { return n_; }
  const MonodromyTuple& fiber() const { return fiber_; }
  const RankOneTuple& scalars() const { return scalars_; }

  /// Parabolic cocycles, as a subspace of V^{p+q}.
  const Subspace& zpar() const { return zpar_; }
  const Subspace& coboundaries() const { return coboundaries_; }
  std::size_t dim() const { return lifts_.rows(); }
  /// Row b is a cocycle whose twisted evaluation is image().basis() row b.
  const Mat& lifts() const { return lifts_; }
  /// Twisted evaluation image of zpar() in V^{pq}.
  const Subspace& image() const { return image_; }

  /// Extends the cocycle with the given generator values to a word.
  Vec evaluate(const Vec& values, const FreeWord& w) const;
  /// (d([a_i, a_{p+j}]))_{i,j} ordered j-major.
  Vec twisted_evaluation(const Vec& values) const;
  /// Matrix of the action of braid_auto(p, q, i, j) in the basis lifts().
  Mat braid_action(std::size_t i, std::size_t j) const;

 private:
  Vec block(const Vec& values, std::size_t k) const;

  std::size_t p_ = 0, q_ = 0, n_ = 0;
  MonodromyTuple base_;
  RankOneTuple scalars_;
  MonodromyTuple fiber_;
  std::vector<Mat> rho_inv_;
  Subspace zpar_;
  Subspace coboundaries_;
  Subspace image_;
  Mat lifts_;
};

/// Free-function spelling of ParabolicCocycleSpace::evaluate.
Vec evaluate_cocycle(const ParabolicCocycleSpace& space, const Vec& values, const FreeWord& w);

/// Rows are the twisted evaluations of the basis of H; injective on H.
Mat twisted_evaluation(const ParabolicCocycleSpace& space);

/// The block matrices D~_1..D~_p on V^p. Throws LambdaIsOne.
std::vector<Mat> mc_blocks(const MonodromyTuple& t, const CycNum& lambda);

/// The subspaces K, L and W = K n L of V^p.
struct McSpaces {
  Subspace k, l, w;
};
McSpaces mc_subspaces(const MonodromyTuple& t, const CycNum& lambda);

/// W = K n L. Throws LambdaIsOne, PropertyTFailed.
Subspace mc_space(const MonodromyTuple& t, const CycNum& lambda);

/// MC_lambda(T) in the RREF basis of W. Throws as mc_space, and
/// InternalCheckFailed if some D~_i does not stabilize W.
MonodromyTuple mc(const MonodromyTuple& t, const CycNum& lambda);

/// Rank formula for T * R. Throws HasGlobalSections.
long convolution_rank(const MonodromyTuple& t, const RankOneTuple& r);

/// T * R through the cocycle engine. Entry (j - 1) p + i is D_{i,j}.
/// Throws LambdaIsOne, PropertyTFailed, RankMismatch.
MonodromyTuple convolve_rank_one(const MonodromyTuple& t, const RankOneTuple& r);

/// Jordan data of the MC entry at a finite puncture from that of A_i;
/// nullopt means inconclusive.
std::optional<JordanData> predict_jordan_finite(const JordanData& jd, const CycNum& lambda, std::size_t target_rank);

/// Same for the entry at infinity, from the Jordan data of A_{p+1}.
std::optional<JordanData> predict_jordan_infinity(const JordanData& jd, const CycNum& lambda,
                                                  std::size_t target_rank);

}  // namespace mctool
