#include <fstream>
#include <sstream>

#include "mctool/pipeline.hpp"

namespace mctool {

using nlohmann::json;

namespace {

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

[[noreturn]] void schema(const std::string& pointer, const std::string& message) {
  throw Error(ErrorKind::SchemaError, pointer + ": " + message);
}

Mat matrix_from_json(const json& v, std::uint64_t order, const std::string& at) {
  if (!v.is_array() || v.empty()) schema(at, "expected a nonempty array of rows");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& r = v[i];
    if (!r.is_array() || r.size() != v.front().size()) schema(at + "/" + std::to_string(i), "ragged or missing row");
    Vec row;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const std::string cell = at + "/" + std::to_string(i) + "/" + std::to_string(j);
      if (r[j].is_number_integer()) {
        row.push_back(CycNum(r[j].get<long>()).embed(order));
      } else if (r[j].is_string()) {
        try {
          row.push_back(parse_cycnum(r[j].get<std::string>(), order));
        } catch (const Error& e) {
          schema(cell, e.what());
        }
      } else {
        schema(cell, "expected a scalar");
      }
    }
    rows.push_back(std::move(row));
  }
  return Mat::from_rows(rows, order);
}

}  // namespace

json tuple_to_json(const MonodromyTuple& t) {
  json entries = json::array();
  for (const auto& e : t.entries()) entries.push_back(matrix_json(e));
  return {{"cyclotomic_order", t.order()},
          {"rank", t.rank()},
          {"entries", entries},
          {"infinity", matrix_json(t.infinity_entry())}};
}

MonodromyTuple tuple_from_json(const json& doc) {
  if (!doc.is_object()) schema("", "expected an object");
  if (!doc.contains("cyclotomic_order") || !doc["cyclotomic_order"].is_number_integer() ||
      doc["cyclotomic_order"].get<long long>() < 1) {
    schema("/cyclotomic_order", "required positive integer");
  }
  const auto order = doc["cyclotomic_order"].get<std::uint64_t>();
  if (order > max_cyclotomic_order()) schema("/cyclotomic_order", "exceeds the cyclotomic order bound");
  if (!doc.contains("entries") || !doc["entries"].is_array() || doc["entries"].empty()) {
    schema("/entries", "required nonempty array of matrices");
  }
  std::vector<Mat> entries;
  for (std::size_t i = 0; i < doc["entries"].size(); ++i) {
    entries.push_back(matrix_from_json(doc["entries"][i], order, "/entries/" + std::to_string(i)));
  }
  std::optional<MonodromyTuple> t;
  try {
    t.emplace(std::move(entries));
  } catch (const Error& e) {
    schema("/entries", e.what());
  }
  if (doc.contains("rank") && (!doc["rank"].is_number_integer() || doc["rank"].get<std::size_t>() != t->rank())) {
    schema("/rank", "does not match the entries");
  }
  if (doc.contains("infinity")) {
    const Mat inf = matrix_from_json(doc["infinity"], order, "/infinity");
    Mat prod = inf;
    for (auto it = t->entries().rbegin(); it != t->entries().rend(); ++it) prod = *it * prod;
    if (!prod.is_identity()) {
      throw Error(ErrorKind::ProductRelationViolated, "the stored entries do not multiply to the identity");
    }
  }
  return std::move(*t);
}

void save_tuple(const MonodromyTuple& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << tuple_to_json(t).dump(2) << '\n';
  if (!out) throw Error(ErrorKind::IoError, "write to " + path.string() + " failed");
}

MonodromyTuple load_tuple(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  return tuple_from_json(doc);
}

}  // namespace mctool
