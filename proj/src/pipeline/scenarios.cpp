#include <numeric>

#include "mctool/pipeline.hpp"

namespace mctool {

using nlohmann::json;

namespace {

// Generators h_1, h_2, h_3 as printed, over Q(zeta_3).
const std::vector<std::vector<std::vector<std::string>>> kG2Reference = {
    {
        {"1", "-3", "z - 1", "0", "z - 4", "0", "2z + 4"},
        {"0", "3z + 1", "2z + 1", "0", "2z + 1", "-2z - 1", "0"},
        {"0", "-3z", "-2z", "0", "-2z - 1", "2z + 1", "0"},
        {"0", "3z + 3", "z + 2", "1", "z + 2", "-z - 2", "0"},
        {"0", "3z + 6", "3", "0", "4", "-3", "0"},
        {"0", "3z + 3", "z + 2", "0", "z + 2", "-z - 1", "0"},
        {"0", "6", "-2z + 2", "0", "-2z + 2", "2z - 2", "1"},
    },
    {
        {"1", "0", "0", "0", "0", "0", "0"},
        {"z - 1", "1", "0", "2z + 1", "0", "0", "0"},
        {"3", "0", "1", "-2z - 1", "-3", "0", "2z + 4"},
        {"0", "0", "0", "1", "0", "0", "0"},
        {"0", "0", "0", "0", "1", "0", "0"},
        {"0", "0", "0", "0", "0", "1", "0"},
        {"0", "0", "0", "0", "0", "0", "1"},
    },
    {
        {"z", "0", "0", "0", "0", "0", "0"},
        {"0", "z", "0", "0", "0", "0", "0"},
        {"0", "0", "z", "0", "0", "0", "0"},
        {"z + 2", "0", "0", "-z - 1", "0", "0", "0"},
        {"0", "z + 2", "0", "0", "-z - 1", "0", "0"},
        {"0", "3z + 3", "z + 2", "0", "0", "-z - 1", "0"},
        {"0", "0", "0", "0", "z - 1", "0", "1"},
    },
};

json g2_reference_object() {
  return {{"kind", "tuple"}, {"order", 3}, {"entries", kG2Reference}};
}

json step(const char* op, std::vector<std::string> inputs, std::string output, json params = nullptr) {
  json s = {{"op", op}, {"inputs", std::move(inputs)}, {"output", std::move(output)}};
  if (!params.is_null()) s["params"] = std::move(params);
  return s;
}

json rank_one(std::vector<std::string> scalars) { return {{"kind", "rank_one"}, {"scalars", std::move(scalars)}}; }

json blocks(std::initializer_list<std::pair<std::string, std::size_t>> list) {
  json out = json::array();
  for (const auto& [ev, len] : list) out.push_back(json::array({ev, len}));
  return out;
}

// The rank-7 construction. `z1` is the root in the first two rank-one
// systems, `w` the cube root of unity driving the later convolutions; both
// are scalar strings over the order-`order` field.
json g2_shape(std::uint64_t order, const std::string& z1, const std::string& z1_inv, const std::string& w,
              const std::string& w_inv) {
  json doc;
  doc["cyclotomic_order"] = order;
  doc["assumptions"] = {{"generic", true}};
  doc["objects"] = {
      {"L1", rank_one({z1, "1", z1})},
      {"L2", rank_one({"1", z1, z1})},
      {"L3", rank_one({"1", "1", w})},
  };
  doc["steps"] = json::array({
      step("mc", {"L1"}, "M1", {{"lambda", z1_inv}}),
      step("mc", {"L2"}, "M2", {{"lambda", z1_inv}}),
      step("tensor", {"M1", "M2"}, "T4"),
      step("mc", {"T4"}, "M3", {{"lambda", w}}),
      step("dual", {"L3"}, "L3inv"),
      step("tensor", {"L3inv", "M3"}, "S"),
      step("mc", {"S"}, "M4", {{"lambda", w_inv}}),
      step("tensor", {"L3", "M4"}, "H"),
  });
  return doc;
}

json g2_jordan(const std::string& w, const std::string& w_inv) {
  const auto unip = blocks({{"1", 2}, {"1", 2}, {"1", 1}, {"1", 1}, {"1", 1}});
  return {
      {"1", unip},
      {"2", unip},
      {"3", blocks({{"1", 1}, {w, 1}, {w, 1}, {w, 1}, {w_inv, 1}, {w_inv, 1}, {w_inv, 1}})},
      {"inf", blocks({{"1", 3}, {"1", 3}, {"1", 1}})},
  };
}

}  // namespace

MonodromyTuple g2_reference_tuple() {
  std::vector<Mat> entries;
  for (const auto& m : kG2Reference) {
    std::vector<Vec> rows;
    for (const auto& r : m) {
      Vec row;
      for (const auto& s : r) row.push_back(parse_cycnum(s, 3));
      rows.push_back(std::move(row));
    }
    entries.push_back(Mat::from_rows(rows, 3));
  }
  return MonodromyTuple(std::move(entries));
}

PipelineSpec scenario_g2() {
  json doc = g2_shape(3, "z", "z^2", "z", "z^2");
  doc["description"] = "rank-7 tuple with local monodromy of G2 type, compared against stored reference generators";
  doc["objects"]["G2Reference"] = g2_reference_object();
  doc["checks"] = json::array({
      {{"name", "final_rank"}, {"kind", "rank"}, {"target", "H"}, {"expect", 7}},
      {{"name", "local_monodromy"}, {"kind", "jordan"}, {"target", "H"}, {"expect", g2_jordan("z", "z^2")}},
      {{"name", "g2_certificate"},
       {"kind", "certificate"},
       {"target", "H"},
       {"orthogonal", true},
       {"lambda3_fixed_dim", 1},
       {"abs_irreducible", true}},
      {{"name", "algebra_closure"}, {"kind", "closure_dim"}, {"target", "H"}, {"expect", 49}},
      {{"name", "not_rigid"}, {"kind", "rigidity"}, {"target", "H"}, {"at_least", 1}},
      {{"name", "g2_reference"}, {"kind", "conjugate_to"}, {"target", "H"}, {"fixture", "G2Reference"}},
  });
  return parse_pipeline_json(doc);
}

PipelineSpec scenario_so6() {
  // Over Q(zeta_6) the cube root of unity is z^2.
  json doc = g2_shape(6, "z", "z^5", "z^2", "z^4");
  doc["description"] = "sixth-root variant with the same local monodromy and no invariant in the third exterior power";
  doc["checks"] = json::array({
      {{"name", "final_rank"}, {"kind", "rank"}, {"target", "H"}, {"expect", 7}},
      {{"name", "local_monodromy"}, {"kind", "jordan"}, {"target", "H"}, {"expect", g2_jordan("z^2", "z^4")}},
      {{"name", "symmetric_form"}, {"kind", "forms"}, {"target", "H"}, {"symmetric", true}},
      {{"name", "lambda3_invariants"}, {"kind", "lambda3_fixed_dim"}, {"target", "H"}, {"expect", 0}},
      {{"name", "algebra_closure"}, {"kind", "closure_dim"}, {"target", "H"}, {"expect", 49}},
  });
  return parse_pipeline_json(doc);
}

PipelineSpec scenario_sl(long m, long r) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorKind::BadParameters, "m must be odd and at least 3");
  const long phi = static_cast<long>(euler_phi(static_cast<std::uint64_t>(m)));
  if (r < 2 + phi) {
    throw Error(ErrorKind::BadParameters, "r must be at least 2 + phi(m) = " + std::to_string(2 + phi));
  }
  const std::uint64_t n = std::lcm<std::uint64_t>(4, 2 * static_cast<std::uint64_t>(m));
  checked_order_lcm(n, 1);
  const auto zm = [&](long k) { return root_of_unity(n, static_cast<long long>(n / m) * (((k % m) + m) % m)); };
  const CycNum minus_one = CycNum(-1).embed(n);

  std::vector<Mat> a;
  a.push_back(Mat::from_ints({{0, 1}, {1, 0}}, n));
  std::vector<Mat> tail;
  for (long t = 1; t < m; ++t) {
    if (std::gcd(t, m) == 1) tail.push_back(Mat::diagonal({zm(t), zm(-t)}));
  }
  while (static_cast<long>(tail.size()) < r - 2) tail.push_back(Mat::scalar(2, minus_one));
  // A_2 makes the product A_1 ... A_r equal to -I, so the entry at infinity is -I.
  Mat prod = Mat::identity(2, n);
  for (const auto& x : tail) prod = prod * x;
  a.push_back(inverse(a[0]) * inverse(prod * Mat::scalar(2, minus_one)));
  for (auto& x : tail) a.push_back(std::move(x));

  json entries = json::array();
  for (const auto& x : a) {
    json rows = json::array();
    for (std::size_t i = 0; i < 2; ++i) rows.push_back({x(i, 0).to_string(), x(i, 1).to_string()});
    entries.push_back(rows);
  }
  const std::string i4 = root_of_unity(n, static_cast<long long>(n / 4)).to_string();
  const std::string minus_i4 = (-root_of_unity(n, static_cast<long long>(n / 4))).to_string();
  std::vector<std::string> twist_scalars(static_cast<std::size_t>(r), "1");
  twist_scalars.front() = "-1";

  // Galois exponent fixing zeta_m and inverting zeta_4.
  long k = 1;
  while (!(k % 4 == 3 && k % m == 1)) ++k;
  json pairs = json::array();
  for (long j = 1; j <= r; ++j) pairs.push_back({std::to_string(j), std::to_string(j + r)});

  json doc;
  doc["cyclotomic_order"] = n;
  doc["description"] = "SL tuple from dihedral-type reflections, m = " + std::to_string(m) + ", r = " + std::to_string(r);
  doc["assumptions"] = {{"generic", true}};
  doc["objects"] = {{"F1", {{"kind", "tuple"}, {"entries", entries}}}};
  doc["steps"] = json::array({
      step("mc", {"F1"}, "M", {{"lambda", "-1"}}),
      step("twist", {"M"}, "T", {{"scalars", twist_scalars}}),
      step("convolve_rank_one", {"T"}, "C", {{"scalars", {i4, minus_i4}}}),
  });
  const std::size_t rr = static_cast<std::size_t>(r);
  doc["checks"] = json::array({
      {{"name", "intermediate_rank"}, {"kind", "rank"}, {"target", "M"}, {"expect", 2 * rr - 4}},
      {{"name", "final_rank"}, {"kind", "rank"}, {"target", "C"}, {"expect", 4 * rr - 7}},
      {{"name", "c1_jordan"},
       {"kind", "jordan"},
       {"target", "C"},
       {"expect", {{"1", [&] {
                      json b = json::array({json::array({minus_i4, 2})});
                      for (std::size_t t = 0; t < 2 * rr - 6; ++t) b.push_back(json::array({minus_i4, 1}));
                      for (std::size_t t = 0; t < 2 * rr - 3; ++t) b.push_back(json::array({"1", 1}));
                      return b;
                    }()}}}},
      {{"name", "c2_homology"},
       {"kind", "entry_class"},
       {"target", "C"},
       {"entry", "2"},
       {"expect", {{"kind", "homology"}, {"order", 4}}}},
      {{"name", "determinants"}, {"kind", "determinants"}, {"target", "C"}, {"root_order", 4}},
      {{"name", "irreducibility_criterion"}, {"kind", "irreducibility_criterion"}, {"target", "C"}, {"expect", true}},
      {{"name", "absolutely_irreducible"}, {"kind", "abs_irreducible"}, {"target", "C"}, {"expect", true}},
      {{"name", "conjugate_halves"}, {"kind", "jordan_galois"}, {"target", "C"}, {"exponent", k}, {"pairs", pairs}},
  });
  return parse_pipeline_json(doc);
}

}  // namespace mctool
