#pragma once

// Declarative pipelines: named tuple literals, a sequence of operations on
// them and assertions about the results. Specs and reports are JSON.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "mctool/tuples.hpp"

namespace mctool {

enum class StepOp { Mc, ConvolveRankOne, Tensor, Twist, Dual };

std::string_view to_string(StepOp op);

struct PipelineStep {
  StepOp op = StepOp::Mc;
  std::vector<std::string> inputs;
  /// mc: the scalar lambda.
  std::optional<CycNum> lambda;
  /// convolve_rank_one, twist: finite scalars of the rank-one tuple.
  std::vector<CycNum> scalars;
  std::string output;
};

enum class CheckKind {
  Rank,
  Jordan,
  Forms,
  Lambda3FixedDim,
  ClosureDim,
  AbsIrreducible,
  Certificate,
  Rigidity,
  ConjugateTo,
  IrreducibilityCriterion,
  EntryClass,
  Determinants,
  JordanGalois,
};

std::string_view to_string(CheckKind kind);

struct PipelineCheck {
  std::string name;
  CheckKind kind = CheckKind::Rank;
  std::string target;
  /// Kind-specific parameters, kept as validated JSON.
  nlohmann::json params;
};

struct PipelineSpec {
  std::uint64_t cyclotomic_order = 1;
  /// Genericity of the puncture positions is assumed, not computed.
  bool generic = true;
  std::vector<std::string> object_names;  // declaration order
  std::map<std::string, MonodromyTuple> objects;
  std::vector<PipelineStep> steps;
  std::vector<PipelineCheck> checks;
};

/// One validation problem, located by a JSON pointer.
struct SchemaIssue {
  ErrorKind kind;
  std::string pointer;
  std::string message;
};

/// Raised by parse_pipeline. kind() is the kind of the first issue.
class PipelineError : public Error {
 public:
  explicit PipelineError(std::vector<SchemaIssue> issues);
  const std::vector<SchemaIssue>& issues() const { return issues_; }

 private:
  std::vector<SchemaIssue> issues_;
};

/// Throws PipelineError carrying every issue found (SchemaError, UnknownOp,
/// UndefinedName, CyclotomicOrderMismatch).
PipelineSpec parse_pipeline(std::string_view text);
PipelineSpec parse_pipeline_json(const nlohmann::json& doc);

nlohmann::json spec_to_json(const PipelineSpec& spec);

struct StepRecord {
  std::string output;
  StepOp op = StepOp::Mc;
  std::size_t rank = 0;
  std::size_t punctures = 0;
  std::vector<JordanData> jordan;
};

struct CheckRecord {
  std::string name;
  CheckKind kind = CheckKind::Rank;
  std::string target;
  bool passed = false;
  /// Exact computed values backing the verdict.
  nlohmann::json witness;
};

struct Report {
  std::uint64_t field_order = 1;
  bool generic = true;
  std::vector<StepRecord> steps;
  std::vector<CheckRecord> checks;
  double wall_seconds = 0.0;

  bool all_passed() const;
  /// Everything except the wall time, so identical specs give identical text.
  nlohmann::json to_json(bool include_timing = true) const;
};

/// Runs the steps in order and evaluates the checks. Check failures are
/// recorded, operation errors abort with StepFailed naming the step.
Report run(const PipelineSpec& spec);

/// Values produced by a run, for callers that need the tuples themselves.
std::map<std::string, MonodromyTuple> run_objects(const PipelineSpec& spec);

PipelineSpec scenario_g2();
PipelineSpec scenario_so6();
/// Throws BadParameters unless m is odd, m >= 3 and 2 + phi(m) <= r.
PipelineSpec scenario_sl(long m, long r);

/// Reference generators h_1, h_2, h_3 over Q(zeta_3).
MonodromyTuple g2_reference_tuple();

nlohmann::json tuple_to_json(const MonodromyTuple& t);
/// Finite entries plus the stored infinity entry, which must match the
/// product relation. Throws SchemaError, ProductRelationViolated.
MonodromyTuple tuple_from_json(const nlohmann::json& doc);

/// Throws IoError.
void save_tuple(const MonodromyTuple& t, const std::filesystem::path& path);
/// Throws IoError, SchemaError, ProductRelationViolated.
MonodromyTuple load_tuple(const std::filesystem::path& path);

}  // namespace mctool
