#pragma once

// Checkable certificates about the group generated by a tuple.

#include <string>
#include <vector>

#include "mctool/tuples.hpp"

namespace mctool {

/// Jordan data of every entry, the one at infinity last.
std::vector<JordanData> jordan_report(const MonodromyTuple& t);

/// (p - 2) n - sum_i dim ker(A_i - 1); positive values imply that T * R is
/// irreducible.
long irreducibility_criterion_value(const MonodromyTuple& t);

/// Throws LambdaIsOne, PropertyTFailed.
bool irreducibility_criterion(const MonodromyTuple& t, const RankOneTuple& r);

struct G2Certificate {
  bool orthogonal = false;
  std::size_t lambda3_fixed_dim = 0;
  bool abs_irreducible = false;

  /// Orthogonal, a fixed line in the third exterior power and absolutely
  /// irreducible in rank 7: consistent with G2, not a density proof.
  bool consistent_with_g2(std::size_t rank) const {
    return rank == 7 && orthogonal && lambda3_fixed_dim >= 1 && abs_irreducible;
  }
};

G2Certificate g2_certificate(const MonodromyTuple& t);

enum class EntryKind { Transvection, Homology, Biperspectivity, Semisimple, Other };

struct EntryClass {
  EntryKind kind = EntryKind::Other;
  /// Multiplicative order of the nontrivial eigenvalue of a homology
  /// (0 if it is not a root of unity).
  std::uint64_t order = 0;
  /// Eigenvalues on the image of M - 1 (biperspectivities and homologies).
  std::vector<CycNum> eigenvalues;

  std::string to_string() const;
};

std::string_view to_string(EntryKind kind);

EntryClass entry_class(const Mat& m);

}  // namespace mctool
