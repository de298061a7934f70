#include <chrono>

#include "mctool/convolution.hpp"
#include "mctool/pipeline.hpp"
#include "mctool/recognition.hpp"

namespace mctool {

using nlohmann::json;

namespace {

json jordan_json(const JordanData& jd) {
  json blocks = json::array();
  for (const auto& b : jd.blocks()) blocks.push_back(json::array({b.eigenvalue.to_string(), b.length}));
  return blocks;
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string label_of(std::size_t index, std::size_t count) {
  return index == count ? "inf" : std::to_string(index + 1);
}

// Entry label -> 0-based index into all_entries(); the label "inf" and the
// index r+1 both name the entry at infinity.
std::size_t entry_index(const json& label, const MonodromyTuple& t) {
  const std::size_t count = t.puncture_count() + 1;
  std::size_t k = 0;
  if (label.is_string()) {
    const auto s = label.get<std::string>();
    if (s == "inf") return count - 1;
    k = std::stoul(s);
  } else {
    k = label.get<std::size_t>();
  }
  if (k < 1 || k > count) {
    throw Error(ErrorKind::IndexOutOfRange,
                "entry " + std::to_string(k) + " of a tuple with " + std::to_string(count) + " entries");
  }
  return k - 1;
}

JordanData blocks_from_json(const json& blocks, std::uint64_t order) {
  std::vector<JordanBlock> out;
  for (const auto& b : blocks) {
    CycNum ev = b[0].is_number_integer() ? CycNum(b[0].get<long>()).embed(order)
                                         : parse_cycnum(b[0].get<std::string>(), order);
    out.push_back({ev, b[1].get<std::size_t>()});
  }
  return JordanData(std::move(out));
}

struct State {
  const PipelineSpec& spec;
  std::map<std::string, MonodromyTuple> values;
  // Output name -> (input tuple, rank-one tuple) of convolution steps.
  std::map<std::string, std::pair<MonodromyTuple, RankOneTuple>> convolutions;
  // Jordan reports are reused between step records and checks.
  std::map<std::string, std::optional<std::vector<JordanData>>> jordan_cache;

  const std::optional<std::vector<JordanData>>& jordan(const std::string& name) {
    auto it = jordan_cache.find(name);
    if (it != jordan_cache.end()) return it->second;
    std::optional<std::vector<JordanData>> rep;
    try {
      rep = jordan_report(values.at(name));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EigenvalueOutsideCandidates) throw;
    }
    return jordan_cache.emplace(name, std::move(rep)).first->second;
  }
};

MonodromyTuple execute(const PipelineStep& step, State& st) {
  const MonodromyTuple& in = st.values.at(step.inputs.front());
  const std::uint64_t n = st.spec.cyclotomic_order;
  switch (step.op) {
    case StepOp::Mc: {
      auto out = mc(in, *step.lambda);
      st.convolutions.insert_or_assign(step.output, std::make_pair(in, kummer(*step.lambda)));
      return out.embed(std::max<std::uint64_t>(out.order(), n));
    }
    case StepOp::ConvolveRankOne: {
      RankOneTuple r(step.scalars);
      auto out = convolve_rank_one(in, r);
      st.convolutions.insert_or_assign(step.output, std::make_pair(in, r));
      return out;
    }
    case StepOp::Tensor:
      return tensor_same_base(in, st.values.at(step.inputs[1]));
    case StepOp::Twist:
      return twist(in, RankOneTuple(step.scalars));
    case StepOp::Dual:
      return dual(in);
  }
  throw Error(ErrorKind::InternalCheckFailed, "unhandled op");
}

void pass_if(CheckRecord& rec, bool ok) { rec.passed = ok; }

void evaluate(const PipelineCheck& check, State& st, CheckRecord& rec) {
  const MonodromyTuple& t = st.values.at(check.target);
  const json& p = check.params;
  json& w = rec.witness;
  switch (check.kind) {
    case CheckKind::Rank: {
      w["rank"] = t.rank();
      pass_if(rec, t.rank() == p["expect"].get<std::size_t>());
      break;
    }
    case CheckKind::Jordan: {
      const auto& rep = st.jordan(check.target);
      if (!rep) {
        w["error"] = "eigenvalues outside the field";
        break;
      }
      bool ok = true;
      for (const auto& [label, blocks] : p["expect"].items()) {
        const std::size_t k = entry_index(json(label), t);
        const JordanData expected = blocks_from_json(blocks, st.spec.cyclotomic_order);
        w[label] = jordan_json((*rep)[k]);
        ok = ok && (*rep)[k] == expected;
      }
      pass_if(rec, ok);
      break;
    }
    case CheckKind::Forms: {
      auto info = invariant_bilinear_forms(t.entries());
      w["space_dim"] = info.basis.size();
      w["symmetric"] = info.has_nondegenerate_symmetric;
      w["alternating"] = info.has_nondegenerate_alternating;
      bool ok = true;
      if (p.contains("symmetric")) ok = ok && info.has_nondegenerate_symmetric == p["symmetric"].get<bool>();
      if (p.contains("alternating")) ok = ok && info.has_nondegenerate_alternating == p["alternating"].get<bool>();
      pass_if(rec, ok);
      break;
    }
    case CheckKind::Lambda3FixedDim: {
      std::vector<Mat> cubes;
      for (const auto& e : t.entries()) cubes.push_back(exterior_cube(e));
      const std::size_t d = common_fixed_space(cubes).dim();
      w["lambda3_fixed_dim"] = d;
      pass_if(rec, d == p["expect"].get<std::size_t>());
      break;
    }
    case CheckKind::ClosureDim: {
      const std::size_t d = algebra_closure_dim(t.entries());
      w["closure_dim"] = d;
      pass_if(rec, d == p["expect"].get<std::size_t>());
      break;
    }
    case CheckKind::AbsIrreducible: {
      const std::size_t d = algebra_closure_dim(t.entries());
      w["closure_dim"] = d;
      pass_if(rec, (d == t.rank() * t.rank()) == p.value("expect", true));
      break;
    }
    case CheckKind::Certificate: {
      auto c = g2_certificate(t);
      w["orthogonal"] = c.orthogonal;
      w["lambda3_fixed_dim"] = c.lambda3_fixed_dim;
      w["abs_irreducible"] = c.abs_irreducible;
      bool ok = true;
      if (p.contains("orthogonal")) ok = ok && c.orthogonal == p["orthogonal"].get<bool>();
      if (p.contains("lambda3_fixed_dim")) ok = ok && c.lambda3_fixed_dim == p["lambda3_fixed_dim"].get<std::size_t>();
      if (p.contains("abs_irreducible")) ok = ok && c.abs_irreducible == p["abs_irreducible"].get<bool>();
      pass_if(rec, ok);
      break;
    }
    case CheckKind::Rigidity: {
      const long r = rigidity_index(t);
      w["rigidity_index"] = r;
      pass_if(rec, p.contains("at_least") ? r >= p["at_least"].get<long>() : r == p["expect"].get<long>());
      break;
    }
    case CheckKind::ConjugateTo: {
      const MonodromyTuple& f = st.values.at(p["fixture"].get<std::string>());
      if (f.rank() != t.rank() || f.puncture_count() != t.puncture_count()) {
        w["error"] = "shape differs from the fixture";
        break;
      }
      const std::uint64_t order = checked_order_lcm(t.order(), f.order());
      auto x = simultaneous_conjugator(t.embed(order).entries(), f.embed(order).entries());
      if (x) w["conjugator"] = matrix_json(*x);
      pass_if(rec, x.has_value());
      break;
    }
    case CheckKind::IrreducibilityCriterion: {
      const auto& [input, r] = st.convolutions.at(check.target);
      const long value = irreducibility_criterion_value(input);
      const bool verdict = irreducibility_criterion(input, r);
      w["value"] = value;
      w["criterion"] = verdict;
      pass_if(rec, verdict == p.value("expect", true));
      break;
    }
    case CheckKind::EntryClass: {
      const std::size_t k = entry_index(p["entry"], t);
      auto c = entry_class(t.all_entries()[k]);
      w["class"] = c.to_string();
      w["kind"] = std::string(to_string(c.kind));
      w["order"] = c.order;
      bool ok = std::string(to_string(c.kind)) == p["expect"]["kind"].get<std::string>();
      if (p["expect"].contains("order")) ok = ok && c.order == p["expect"]["order"].get<std::uint64_t>();
      pass_if(rec, ok);
      break;
    }
    case CheckKind::Determinants: {
      const auto order = p["root_order"].get<std::uint64_t>();
      bool ok = true;
      json dets = json::array();
      for (const auto& e : t.entries()) {
        const CycNum d = det(e);
        dets.push_back(d.to_string());
        const std::uint64_t o = d.root_of_unity_order();
        ok = ok && o != 0 && order % o == 0;
      }
      w["determinants"] = dets;
      pass_if(rec, ok);
      break;
    }
    case CheckKind::JordanGalois: {
      const auto& rep = st.jordan(check.target);
      if (!rep) {
        w["error"] = "eigenvalues outside the field";
        break;
      }
      const long long k = p["exponent"].get<long long>();
      bool ok = true;
      json failures = json::array();
      for (const auto& pr : p["pairs"]) {
        const JordanData& a = (*rep)[entry_index(pr[0], t)];
        const JordanData& b = (*rep)[entry_index(pr[1], t)];
        if (a.galois(k) != b) {
          ok = false;
          failures.push_back(pr);
        }
      }
      w["mismatched_pairs"] = failures;
      pass_if(rec, ok);
      break;
    }
  }
}

struct Outcome {
  Report report;
  std::map<std::string, MonodromyTuple> values;
};

Outcome run_all(const PipelineSpec& spec, bool with_checks) {
  const auto start = std::chrono::steady_clock::now();
  State st{spec, spec.objects, {}, {}};
  Outcome out;
  Report& rep = out.report;
  rep.field_order = spec.cyclotomic_order;
  rep.generic = spec.generic;
  for (std::size_t i = 0; i < spec.steps.size(); ++i) {
    const PipelineStep& step = spec.steps[i];
    StepRecord rec;
    rec.output = step.output;
    rec.op = step.op;
    try {
      MonodromyTuple result = execute(step, st);
      rec.rank = result.rank();
      rec.punctures = result.puncture_count();
      st.values.insert_or_assign(step.output, std::move(result));
      if (const auto& jr = st.jordan(step.output)) rec.jordan = *jr;
    } catch (const Error& e) {
      throw Error(ErrorKind::StepFailed, "step " + std::to_string(i) + " (" + std::string(to_string(step.op)) +
                                             " -> " + step.output + "): " + e.what());
    }
    rep.steps.push_back(std::move(rec));
  }
  if (with_checks) {
    for (const auto& check : spec.checks) {
      CheckRecord rec;
      rec.name = check.name;
      rec.kind = check.kind;
      rec.target = check.target;
      rec.witness = json::object();
      try {
        evaluate(check, st, rec);
      } catch (const Error& e) {
        rec.passed = false;
        rec.witness["error"] = e.what();
      }
      rep.checks.push_back(std::move(rec));
    }
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.values = std::move(st.values);
  return out;
}

}  // namespace

bool Report::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

json Report::to_json(bool include_timing) const {
  json doc;
  doc["field_order"] = field_order;
  doc["assumptions"] = {{"generic", generic}};
  json st = json::array();
  for (const auto& s : steps) {
    json jd = json::object();
    for (std::size_t k = 0; k < s.jordan.size(); ++k) jd[label_of(k, s.jordan.size() - 1)] = jordan_json(s.jordan[k]);
    st.push_back({{"output", s.output},
                  {"op", std::string(to_string(s.op))},
                  {"rank", s.rank},
                  {"punctures", s.punctures},
                  {"jordan", s.jordan.empty() ? json(nullptr) : jd}});
  }
  doc["steps"] = st;
  json cs = json::array();
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name},
                  {"kind", std::string(to_string(c.kind))},
                  {"target", c.target},
                  {"passed", c.passed},
                  {"witness", c.witness}});
  }
  doc["checks"] = cs;
  doc["all_passed"] = all_passed();
  if (include_timing) doc["wall_seconds"] = wall_seconds;
  return doc;
}

Report run(const PipelineSpec& spec) { return run_all(spec, true).report; }

std::map<std::string, MonodromyTuple> run_objects(const PipelineSpec& spec) { return run_all(spec, false).values; }

}  // namespace mctool
