#include <set>

#include "mctool/pipeline.hpp"

namespace mctool {

using nlohmann::json;

namespace {

const std::map<std::string, StepOp, std::less<>> kOps = {
    {"mc", StepOp::Mc},
    {"convolve_rank_one", StepOp::ConvolveRankOne},
    {"tensor", StepOp::Tensor},
    {"twist", StepOp::Twist},
    {"dual", StepOp::Dual},
};

const std::map<std::string, CheckKind, std::less<>> kChecks = {
    {"rank", CheckKind::Rank},
    {"jordan", CheckKind::Jordan},
    {"forms", CheckKind::Forms},
    {"lambda3_fixed_dim", CheckKind::Lambda3FixedDim},
    {"closure_dim", CheckKind::ClosureDim},
    {"abs_irreducible", CheckKind::AbsIrreducible},
    {"certificate", CheckKind::Certificate},
    {"rigidity", CheckKind::Rigidity},
    {"conjugate_to", CheckKind::ConjugateTo},
    {"irreducibility_criterion", CheckKind::IrreducibilityCriterion},
    {"entry_class", CheckKind::EntryClass},
    {"determinants", CheckKind::Determinants},
    {"jordan_galois", CheckKind::JordanGalois},
};

std::string escape_token(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string ptr(const std::string& base, const std::string& token) { return base + "/" + escape_token(token); }
std::string ptr(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

// Collects issues instead of stopping at the first one.
class Parser {
 public:
  explicit Parser(const json& doc) : doc_(doc) {}

  PipelineSpec parse() {
    if (!doc_.is_object()) {
      fail(ErrorKind::SchemaError, "", "top level must be an object");
      throw PipelineError(issues_);
    }
    for (const auto& [key, value] : doc_.items()) {
      (void)value;
      static const std::set<std::string> allowed = {"cyclotomic_order", "objects", "steps", "checks",
                                                    "assumptions", "description"};
      if (!allowed.contains(key)) fail(ErrorKind::SchemaError, ptr("", key), "unknown key");
    }
    parse_order();
    if (!issues_.empty()) throw PipelineError(issues_);
    parse_assumptions();
    parse_objects();
    parse_steps();
    parse_checks();
    if (!issues_.empty()) throw PipelineError(issues_);
    return std::move(spec_);
  }

 private:
  void fail(ErrorKind kind, std::string pointer, std::string message) {
    issues_.push_back({kind, std::move(pointer), std::move(message)});
  }

  void parse_order() {
    auto it = doc_.find("cyclotomic_order");
    if (it == doc_.end() || !it->is_number_integer() || it->get<long long>() < 1) {
      fail(ErrorKind::SchemaError, "/cyclotomic_order", "required positive integer");
      return;
    }
    auto n = it->get<std::uint64_t>();
    if (n > max_cyclotomic_order()) {
      fail(ErrorKind::SchemaError, "/cyclotomic_order", "exceeds the cyclotomic order bound");
      return;
    }
    spec_.cyclotomic_order = n;
  }

  void parse_assumptions() {
    auto it = doc_.find("assumptions");
    if (it == doc_.end()) return;
    if (!it->is_object()) {
      fail(ErrorKind::SchemaError, "/assumptions", "must be an object");
      return;
    }
    for (const auto& [key, value] : it->items()) {
      if (key == "generic" && value.is_boolean()) {
        spec_.generic = value.get<bool>();
      } else {
        fail(ErrorKind::SchemaError, ptr("/assumptions", key), "unknown assumption or wrong type");
      }
    }
  }

  // A scalar: string in the cyclo syntax, an integer, or {"root_of_unity": [M, k]}.
  std::optional<CycNum> scalar(const json& v, const std::string& at, std::uint64_t order) {
    const std::uint64_t n = spec_.cyclotomic_order;
    if (v.is_number_integer()) return CycNum(v.get<long>()).embed(n);
    if (v.is_string()) {
      try {
        return parse_cycnum(v.get<std::string>(), order).embed(n);
      } catch (const Error& e) {
        fail(ErrorKind::SchemaError, at, e.what());
        return std::nullopt;
      }
    }
    if (v.is_object() && v.size() == 1 && v.contains("root_of_unity")) {
      const json& r = v["root_of_unity"];
      if (r.is_array() && r.size() == 2 && r[0].is_number_integer() && r[1].is_number_integer() &&
          r[0].get<long long>() >= 1) {
        auto m = r[0].get<std::uint64_t>();
        if (n % m != 0) {
          fail(ErrorKind::CyclotomicOrderMismatch, at,
               "root of unity of order " + std::to_string(m) + " is not in Q(zeta_" + std::to_string(n) + ")");
          return std::nullopt;
        }
        return root_of_unity(n, r[1].get<long long>() * static_cast<long long>(n / m));
      }
    }
    fail(ErrorKind::SchemaError, at, "expected a scalar");
    return std::nullopt;
  }

  std::optional<std::vector<CycNum>> scalar_list(const json& v, const std::string& at, std::uint64_t order) {
    if (!v.is_array() || v.empty()) {
      fail(ErrorKind::SchemaError, at, "expected a nonempty array of scalars");
      return std::nullopt;
    }
    std::vector<CycNum> out;
    bool ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto x = scalar(v[i], ptr(at, i), order);
      if (x) {
        out.push_back(*x);
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<Mat> matrix(const json& v, const std::string& at, std::uint64_t order) {
    if (!v.is_array() || v.empty()) {
      fail(ErrorKind::SchemaError, at, "expected a nonempty array of rows");
      return std::nullopt;
    }
    std::vector<Vec> rows;
    bool ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto row = scalar_list(v[i], ptr(at, i), order);
      if (!row) {
        ok = false;
        continue;
      }
      if (!rows.empty() && row->size() != rows.front().size()) {
        fail(ErrorKind::SchemaError, ptr(at, i), "ragged matrix");
        ok = false;
        continue;
      }
      rows.push_back(std::move(*row));
    }
    if (!ok) return std::nullopt;
    return Mat::from_rows(rows, spec_.cyclotomic_order);
  }

  void parse_objects() {
    auto it = doc_.find("objects");
    if (it == doc_.end() || !it->is_object()) {
      fail(ErrorKind::SchemaError, "/objects", "required object");
      return;
    }
    for (const auto& [name, obj] : it->items()) {
      const std::string at = ptr("/objects", name);
      if (!obj.is_object() || !obj.contains("kind") || !obj["kind"].is_string()) {
        fail(ErrorKind::SchemaError, at, "object needs a string 'kind'");
        continue;
      }
      std::uint64_t order = spec_.cyclotomic_order;
      if (obj.contains("order")) {
        const json& o = obj["order"];
        if (!o.is_number_integer() || o.get<long long>() < 1) {
          fail(ErrorKind::SchemaError, ptr(at, "order"), "must be a positive integer");
          continue;
        }
        order = o.get<std::uint64_t>();
        if (spec_.cyclotomic_order % order != 0) {
          fail(ErrorKind::CyclotomicOrderMismatch, ptr(at, "order"),
               "Q(zeta_" + std::to_string(order) + ") is not contained in Q(zeta_" +
                   std::to_string(spec_.cyclotomic_order) + ")");
          continue;
        }
      }
      const std::string kind = obj["kind"].get<std::string>();
      std::vector<Mat> entries;
      if (kind == "rank_one") {
        auto s = obj.contains("scalars") ? scalar_list(obj["scalars"], ptr(at, "scalars"), order) : std::nullopt;
        if (!obj.contains("scalars")) fail(ErrorKind::SchemaError, ptr(at, "scalars"), "required");
        if (!s) continue;
        for (const auto& x : *s) entries.push_back(Mat::scalar(1, x));
      } else if (kind == "tuple") {
        if (!obj.contains("entries") || !obj["entries"].is_array() || obj["entries"].empty()) {
          fail(ErrorKind::SchemaError, ptr(at, "entries"), "required nonempty array of matrices");
          continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < obj["entries"].size(); ++i) {
          auto m = matrix(obj["entries"][i], ptr(ptr(at, "entries"), i), order);
          if (m) {
            entries.push_back(std::move(*m));
          } else {
            ok = false;
          }
        }
        if (!ok) continue;
      } else {
        fail(ErrorKind::SchemaError, ptr(at, "kind"), "kind must be 'tuple' or 'rank_one'");
        continue;
      }
      try {
        MonodromyTuple t(std::move(entries));
        spec_.objects.emplace(name, std::move(t));
        spec_.object_names.push_back(name);
        defined_[name] = 0;
      } catch (const Error& e) {
        fail(ErrorKind::SchemaError, at, e.what());
      }
    }
  }

  bool check_name(const json& v, const std::string& at) {
    if (!v.is_string()) {
      fail(ErrorKind::SchemaError, at, "expected a name");
      return false;
    }
    if (!defined_.contains(v.get<std::string>())) {
      fail(ErrorKind::UndefinedName, at, "undefined name '" + v.get<std::string>() + "'");
      return false;
    }
    return true;
  }

  void parse_steps() {
    auto it = doc_.find("steps");
    if (it == doc_.end() || !it->is_array()) {
      fail(ErrorKind::SchemaError, "/steps", "required array");
      return;
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& s = (*it)[i];
      const std::string at = ptr("/steps", i);
      if (!s.is_object()) {
        fail(ErrorKind::SchemaError, at, "step must be an object");
        continue;
      }
      for (const auto& [key, value] : s.items()) {
        (void)value;
        if (key != "op" && key != "inputs" && key != "params" && key != "output") {
          fail(ErrorKind::SchemaError, ptr(at, key), "unknown key");
        }
      }
      PipelineStep step;
      if (!s.contains("op") || !s["op"].is_string()) {
        fail(ErrorKind::SchemaError, ptr(at, "op"), "required string");
        continue;
      }
      auto op = kOps.find(s["op"].get<std::string>());
      if (op == kOps.end()) {
        fail(ErrorKind::UnknownOp, ptr(at, "op"), "unknown op '" + s["op"].get<std::string>() + "'");
        continue;
      }
      step.op = op->second;
      const std::size_t arity = step.op == StepOp::Tensor ? 2 : 1;
      bool ok = true;
      if (!s.contains("inputs") || !s["inputs"].is_array() || s["inputs"].size() != arity) {
        fail(ErrorKind::SchemaError, ptr(at, "inputs"), "expected " + std::to_string(arity) + " input name(s)");
        ok = false;
      } else {
        for (std::size_t k = 0; k < arity; ++k) {
          if (check_name(s["inputs"][k], ptr(ptr(at, "inputs"), k))) {
            step.inputs.push_back(s["inputs"][k].get<std::string>());
          } else {
            ok = false;
          }
        }
      }
      const json params = s.contains("params") ? s["params"] : json::object();
      if (!params.is_object()) {
        fail(ErrorKind::SchemaError, ptr(at, "params"), "must be an object");
        ok = false;
      } else if (step.op == StepOp::Mc) {
        if (!params.contains("lambda")) {
          fail(ErrorKind::SchemaError, ptr(ptr(at, "params"), "lambda"), "required");
          ok = false;
        } else {
          step.lambda = scalar(params["lambda"], ptr(ptr(at, "params"), "lambda"), spec_.cyclotomic_order);
          ok = ok && step.lambda.has_value();
        }
      } else if (step.op == StepOp::ConvolveRankOne || step.op == StepOp::Twist) {
        if (!params.contains("scalars")) {
          fail(ErrorKind::SchemaError, ptr(ptr(at, "params"), "scalars"), "required");
          ok = false;
        } else {
          auto xs = scalar_list(params["scalars"], ptr(ptr(at, "params"), "scalars"), spec_.cyclotomic_order);
          if (xs) {
            step.scalars = std::move(*xs);
          } else {
            ok = false;
          }
        }
      }
      if (!s.contains("output") || !s["output"].is_string() || s["output"].get<std::string>().empty()) {
        fail(ErrorKind::SchemaError, ptr(at, "output"), "required name");
        continue;
      }
      step.output = s["output"].get<std::string>();
      if (defined_.contains(step.output)) {
        fail(ErrorKind::SchemaError, ptr(at, "output"), "name '" + step.output + "' is already defined");
        continue;
      }
      // Defined even when the step has other problems, to avoid cascades.
      defined_[step.output] = i + 1;
      if (step.op == StepOp::Mc || step.op == StepOp::ConvolveRankOne) convolution_outputs_.insert(step.output);
      if (ok) spec_.steps.push_back(std::move(step));
    }
  }

  // Entry label "1".."r" or "inf".
  bool entry_label(const json& v, const std::string& at) {
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      if (s == "inf") return true;
      if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos && s != "0") return true;
    }
    if (v.is_number_integer() && v.get<long long>() >= 1) return true;
    fail(ErrorKind::SchemaError, at, "entry label must be a positive index or 'inf'");
    return false;
  }

  bool blocks(const json& v, const std::string& at) {
    if (!v.is_array()) {
      fail(ErrorKind::SchemaError, at, "expected an array of [eigenvalue, length] blocks");
      return false;
    }
    bool ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const json& b = v[i];
      if (!b.is_array() || b.size() != 2 || !b[1].is_number_integer() || b[1].get<long long>() < 1) {
        fail(ErrorKind::SchemaError, ptr(at, i), "block must be [eigenvalue, length >= 1]");
        ok = false;
        continue;
      }
      ok = scalar(b[0], ptr(ptr(at, i), 0), spec_.cyclotomic_order).has_value() && ok;
    }
    return ok;
  }

  void require(const json& c, const std::string& at, const char* key, bool (*pred)(const json&),
               const char* what) {
    if (!c.contains(key) || !pred(c[key])) fail(ErrorKind::SchemaError, ptr(at, key), what);
  }

  static bool is_count(const json& v) { return v.is_number_integer() && v.get<long long>() >= 0; }
  static bool is_positive(const json& v) { return v.is_number_integer() && v.get<long long>() >= 1; }
  static bool is_bool(const json& v) { return v.is_boolean(); }

  void optional_bool(const json& c, const std::string& at, const char* key) {
    if (c.contains(key) && !c[key].is_boolean()) fail(ErrorKind::SchemaError, ptr(at, key), "must be a boolean");
  }

  void parse_checks() {
    auto it = doc_.find("checks");
    if (it == doc_.end() || !it->is_array()) {
      fail(ErrorKind::SchemaError, "/checks", "required array");
      return;
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& c = (*it)[i];
      const std::string at = ptr("/checks", i);
      if (!c.is_object()) {
        fail(ErrorKind::SchemaError, at, "check must be an object");
        continue;
      }
      const std::size_t before = issues_.size();
      PipelineCheck check;
      if (!c.contains("name") || !c["name"].is_string() || c["name"].get<std::string>().empty()) {
        fail(ErrorKind::SchemaError, ptr(at, "name"), "required string");
      } else if (!names.insert(c["name"].get<std::string>()).second) {
        fail(ErrorKind::SchemaError, ptr(at, "name"), "duplicate check name");
      } else {
        check.name = c["name"].get<std::string>();
      }
      std::optional<CheckKind> kind;
      if (!c.contains("kind") || !c["kind"].is_string()) {
        fail(ErrorKind::SchemaError, ptr(at, "kind"), "required string");
      } else if (auto k = kChecks.find(c["kind"].get<std::string>()); k == kChecks.end()) {
        fail(ErrorKind::SchemaError, ptr(at, "kind"), "unknown check kind '" + c["kind"].get<std::string>() + "'");
      } else {
        kind = k->second;
      }
      if (!c.contains("target")) {
        fail(ErrorKind::SchemaError, ptr(at, "target"), "required name");
      } else if (check_name(c["target"], ptr(at, "target"))) {
        check.target = c["target"].get<std::string>();
      }
      if (kind) validate_params(*kind, c, at, check.target);
      if (issues_.size() != before) continue;
      check.kind = *kind;
      check.params = c;
      check.params.erase("name");
      check.params.erase("kind");
      check.params.erase("target");
      spec_.checks.push_back(std::move(check));
    }
  }

  void validate_params(CheckKind kind, const json& c, const std::string& at, const std::string& target) {
    static const std::set<std::string> common = {"name", "kind", "target"};
    std::set<std::string> allowed;
    switch (kind) {
      case CheckKind::Rank:
      case CheckKind::Lambda3FixedDim:
      case CheckKind::ClosureDim:
        allowed = {"expect"};
        require(c, at, "expect", is_count, "expected a nonnegative integer");
        break;
      case CheckKind::Jordan:
        allowed = {"expect"};
        if (!c.contains("expect") || !c["expect"].is_object() || c["expect"].empty()) {
          fail(ErrorKind::SchemaError, ptr(at, "expect"), "expected an object from entry label to blocks");
          break;
        }
        for (const auto& [label, bl] : c["expect"].items()) {
          if (entry_label(json(label), ptr(ptr(at, "expect"), label))) blocks(bl, ptr(ptr(at, "expect"), label));
        }
        break;
      case CheckKind::Forms:
        allowed = {"symmetric", "alternating"};
        optional_bool(c, at, "symmetric");
        optional_bool(c, at, "alternating");
        if (!c.contains("symmetric") && !c.contains("alternating")) {
          fail(ErrorKind::SchemaError, at, "forms check needs 'symmetric' or 'alternating'");
        }
        break;
      case CheckKind::AbsIrreducible:
      case CheckKind::IrreducibilityCriterion:
        allowed = {"expect"};
        optional_bool(c, at, "expect");
        if (kind == CheckKind::IrreducibilityCriterion && !target.empty() &&
            !convolution_outputs_.contains(target)) {
          fail(ErrorKind::SchemaError, ptr(at, "target"), "target must be the output of an mc or convolve_rank_one step");
        }
        break;
      case CheckKind::Certificate:
        allowed = {"orthogonal", "lambda3_fixed_dim", "abs_irreducible"};
        optional_bool(c, at, "orthogonal");
        optional_bool(c, at, "abs_irreducible");
        if (c.contains("lambda3_fixed_dim") && !is_count(c["lambda3_fixed_dim"])) {
          fail(ErrorKind::SchemaError, ptr(at, "lambda3_fixed_dim"), "expected a nonnegative integer");
        }
        break;
      case CheckKind::Rigidity:
        allowed = {"at_least", "expect"};
        if (c.contains("at_least") == c.contains("expect")) {
          fail(ErrorKind::SchemaError, at, "rigidity check needs exactly one of 'at_least', 'expect'");
        } else if (!(c.contains("at_least") ? c["at_least"] : c["expect"]).is_number_integer()) {
          fail(ErrorKind::SchemaError, at, "rigidity bound must be an integer");
        }
        break;
      case CheckKind::ConjugateTo:
        allowed = {"fixture"};
        if (!c.contains("fixture")) {
          fail(ErrorKind::SchemaError, ptr(at, "fixture"), "required name");
        } else {
          check_name(c["fixture"], ptr(at, "fixture"));
        }
        break;
      case CheckKind::EntryClass:
        allowed = {"entry", "expect"};
        if (!c.contains("entry")) {
          fail(ErrorKind::SchemaError, ptr(at, "entry"), "required");
        } else {
          entry_label(c["entry"], ptr(at, "entry"));
        }
        if (!c.contains("expect") || !c["expect"].is_object() || !c["expect"].contains("kind") ||
            !c["expect"]["kind"].is_string()) {
          fail(ErrorKind::SchemaError, ptr(at, "expect"), "expected {\"kind\": ..., \"order\": ...}");
        } else if (c["expect"].contains("order") && !is_count(c["expect"]["order"])) {
          fail(ErrorKind::SchemaError, ptr(ptr(at, "expect"), "order"), "expected a nonnegative integer");
        }
        break;
      case CheckKind::Determinants:
        allowed = {"root_order"};
        require(c, at, "root_order", is_positive, "expected a positive integer");
        break;
      case CheckKind::JordanGalois:
        allowed = {"exponent", "pairs"};
        if (!c.contains("exponent") || !c["exponent"].is_number_integer()) {
          fail(ErrorKind::SchemaError, ptr(at, "exponent"), "required integer");
        }
        if (!c.contains("pairs") || !c["pairs"].is_array() || c["pairs"].empty()) {
          fail(ErrorKind::SchemaError, ptr(at, "pairs"), "required nonempty array of [label, label]");
        } else {
          for (std::size_t k = 0; k < c["pairs"].size(); ++k) {
            const json& pr = c["pairs"][k];
            const std::string pat = ptr(ptr(at, "pairs"), k);
            if (!pr.is_array() || pr.size() != 2) {
              fail(ErrorKind::SchemaError, pat, "expected [label, label]");
              continue;
            }
            entry_label(pr[0], ptr(pat, 0));
            entry_label(pr[1], ptr(pat, 1));
          }
        }
        break;
    }
    for (const auto& [key, value] : c.items()) {
      (void)value;
      if (!common.contains(key) && !allowed.contains(key)) fail(ErrorKind::SchemaError, ptr(at, key), "unknown key");
    }
  }

  const json& doc_;
  PipelineSpec spec_;
  std::vector<SchemaIssue> issues_;
  std::map<std::string, std::size_t> defined_;  // name -> 0 for objects, step index + 1
  std::set<std::string> convolution_outputs_;
};

json scalar_json(const CycNum& x) { return x.to_string(); }

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string_view to_string(StepOp op) {
  for (const auto& [name, value] : kOps) {
    if (value == op) return name;
  }
  return "?";
}

std::string_view to_string(CheckKind kind) {
  for (const auto& [name, value] : kChecks) {
    if (value == kind) return name;
  }
  return "?";
}

namespace {

std::string summarize(const std::vector<SchemaIssue>& issues) {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(issue.kind)) + " at " + (issue.pointer.empty() ? "/" : issue.pointer) + ": " +
           issue.message;
  }
  return out;
}

}  // namespace

PipelineError::PipelineError(std::vector<SchemaIssue> issues)
    : Error(issues.empty() ? ErrorKind::SchemaError : issues.front().kind, summarize(issues)),
      issues_(std::move(issues)) {}

PipelineSpec parse_pipeline_json(const json& doc) { return Parser(doc).parse(); }

PipelineSpec parse_pipeline(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PipelineError({{ErrorKind::SchemaError, "", std::string("invalid JSON: ") + e.what()}});
  }
  return parse_pipeline_json(doc);
}

json spec_to_json(const PipelineSpec& spec) {
  json doc;
  doc["cyclotomic_order"] = spec.cyclotomic_order;
  doc["assumptions"] = {{"generic", spec.generic}};
  json objects = json::object();
  for (const auto& name : spec.object_names) {
    const MonodromyTuple& t = spec.objects.at(name);
    if (t.rank() == 1) {
      json scalars = json::array();
      for (const auto& e : t.entries()) scalars.push_back(scalar_json(e(0, 0)));
      objects[name] = {{"kind", "rank_one"}, {"scalars", scalars}};
    } else {
      json entries = json::array();
      for (const auto& e : t.entries()) entries.push_back(matrix_json(e));
      objects[name] = {{"kind", "tuple"}, {"entries", entries}};
    }
  }
  doc["objects"] = objects;
  json steps = json::array();
  for (const auto& s : spec.steps) {
    json step = {{"op", std::string(to_string(s.op))}, {"inputs", s.inputs}};
    if (s.lambda) step["params"] = {{"lambda", scalar_json(*s.lambda)}};
    if (!s.scalars.empty()) {
      json xs = json::array();
      for (const auto& x : s.scalars) xs.push_back(scalar_json(x));
      step["params"] = {{"scalars", xs}};
    }
    step["output"] = s.output;
    steps.push_back(std::move(step));
  }
  doc["steps"] = steps;
  json checks = json::array();
  for (const auto& c : spec.checks) {
    json check = {{"name", c.name}, {"kind", std::string(to_string(c.kind))}, {"target", c.target}};
    for (const auto& [key, value] : c.params.items()) check[key] = value;
    checks.push_back(std::move(check));
  }
  doc["checks"] = checks;
  return doc;
}

}  // namespace mctool
