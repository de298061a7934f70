#include "mctool/recognition.hpp"

namespace mctool {

std::vector<JordanData> jordan_report(const MonodromyTuple& t) {
  std::vector<JordanData> out;
  for (const auto& m : t.all_entries()) out.push_back(jordan_data(m));
  return out;
}

long irreducibility_criterion_value(const MonodromyTuple& t) {
  long value = (static_cast<long>(t.puncture_count()) - 2) * static_cast<long>(t.rank());
  for (const auto& a : t.entries()) value -= static_cast<long>(fixed_dim(a));
  return value;
}

bool irreducibility_criterion(const MonodromyTuple& t, const RankOneTuple& r) {
  for (const auto& l : r.scalars()) {
    if (l.is_one()) throw Error(ErrorKind::LambdaIsOne, "criterion needs nontrivial scalars");
  }
  if (!property_T(t)) throw Error(ErrorKind::PropertyTFailed, "criterion needs property T");
  return irreducibility_criterion_value(t) > 0;
}

G2Certificate g2_certificate(const MonodromyTuple& t) {
  G2Certificate c;
  c.orthogonal = invariant_bilinear_forms(t.entries()).has_nondegenerate_symmetric;
  if (t.rank() >= 3) {
    std::vector<Mat> cubes;
    for (const auto& m : t.entries()) cubes.push_back(exterior_cube(m));
    c.lambda3_fixed_dim = common_fixed_space(cubes).dim();
  }
  c.abs_irreducible = algebra_closure_dim(t.entries()) == t.rank() * t.rank();
  return c;
}

std::string_view to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::Transvection: return "transvection";
    case EntryKind::Homology: return "homology";
    case EntryKind::Biperspectivity: return "biperspectivity";
    case EntryKind::Semisimple: return "semisimple";
    case EntryKind::Other: return "other";
  }
  return "other";
}

std::string EntryClass::to_string() const {
  std::string out(mctool::to_string(kind));
  if (kind == EntryKind::Homology) out += " of order " + std::to_string(order);
  if (kind == EntryKind::Biperspectivity) {
    out += " (";
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) out += (i ? ", " : "") + eigenvalues[i].to_string();
    out += ")";
  }
  return out;
}

EntryClass entry_class(const Mat& m) {
  if (det(m).is_zero()) throw Error(ErrorKind::NotInvertible, "entry_class of a singular matrix");
  const std::size_t r = rank(m - Mat::identity(m.rows(), m.order()));
  const JordanData jd = jordan_data(m);
  const CycNum one = CycNum::one(1);
  EntryClass c;
  bool semisimple = true;
  for (const auto& b : jd.blocks()) {
    if (b.length > 1) semisimple = false;
    if (b.eigenvalue == one) {
      for (std::size_t k = 1; k < b.length; ++k) c.eigenvalues.push_back(one);
    } else {
      for (std::size_t k = 0; k < b.length; ++k) c.eigenvalues.push_back(b.eigenvalue);
    }
  }
  if (r == 1) {
    if (c.eigenvalues.front().is_one()) {
      c.kind = EntryKind::Transvection;
    } else {
      c.kind = EntryKind::Homology;
      c.order = c.eigenvalues.front().root_of_unity_order();
    }
  } else if (r == 2) {
    c.kind = EntryKind::Biperspectivity;
  } else {
    c.kind = semisimple ? EntryKind::Semisimple : EntryKind::Other;
  }
  return c;
}

}  // namespace mctool
