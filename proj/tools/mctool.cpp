// mctool: command-line front end for pipelines, scenarios and tuple checks.
// Exit status: 0 when every check passed, 1 when some check failed, 2 on
// errors (bad input, failed operations).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mctool/pipeline.hpp"
#include "mctool/recognition.hpp"

namespace {

using nlohmann::json;
using namespace mctool;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
}

void print_report(const Report& rep, bool verbose) {
  std::cout << "field Q(zeta_" << rep.field_order << ")"
            << (rep.generic ? ", generic puncture positions assumed" : "") << '\n';
  for (const auto& s : rep.steps) {
    std::cout << "step " << s.output << " = " << to_string(s.op) << ": rank " << s.rank << ", " << s.punctures
              << " finite punctures\n";
    if (verbose) {
      for (std::size_t k = 0; k < s.jordan.size(); ++k) {
        std::cout << "    " << (k + 1 == s.jordan.size() ? std::string("inf") : std::to_string(k + 1)) << ": "
                  << s.jordan[k].to_string() << '\n';
      }
    }
  }
  std::size_t passed = 0;
  for (const auto& c : rep.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << to_string(c.kind) << " on " << c.target << ")";
    if (!c.passed || verbose) {
      json w = c.witness;
      w.erase("conjugator");
      std::cout << ' ' << w.dump();
    }
    std::cout << '\n';
    passed += c.passed ? 1 : 0;
  }
  std::cout << passed << '/' << rep.checks.size() << " checks passed in " << rep.wall_seconds << " s\n";
}

int finish(const PipelineSpec& spec, const std::string& report_path, bool verbose) {
  Report rep = run(spec);
  print_report(rep, verbose);
  if (!report_path.empty()) write_json(report_path, rep.to_json());
  return rep.all_passed() ? 0 : 1;
}

struct CheckFlags {
  bool jordan = false;
  bool irreducible = false;
  bool forms = false;
  bool g2 = false;
  bool rigidity = false;
};

int check_tuple(const std::string& path, CheckFlags f, const std::string& report_path) {
  if (!(f.jordan || f.irreducible || f.forms || f.g2 || f.rigidity)) f = {true, true, true, true, true};
  const MonodromyTuple t = load_tuple(path);
  json doc = {{"rank", t.rank()}, {"punctures", t.puncture_count()}, {"field_order", t.order()}};
  bool ok = true;
  std::cout << "tuple of rank " << t.rank() << " with " << t.puncture_count() << " finite punctures over Q(zeta_"
            << t.order() << ")\n";
  const auto record = [&](const std::string& name, bool passed, json witness) {
    std::cout << (passed ? "PASS " : "FAIL ") << name << ' ' << witness.dump() << '\n';
    doc["checks"][name] = {{"passed", passed}, {"witness", std::move(witness)}};
    ok = ok && passed;
  };
  if (f.jordan) {
    try {
      json w = json::object();
      auto rep = jordan_report(t);
      for (std::size_t k = 0; k < rep.size(); ++k) {
        w[k + 1 == rep.size() ? std::string("inf") : std::to_string(k + 1)] = rep[k].to_string();
      }
      record("jordan", true, w);
    } catch (const Error& e) {
      record("jordan", false, {{"error", e.what()}});
    }
  }
  if (f.irreducible) {
    const std::size_t d = algebra_closure_dim(t.entries());
    record("irreducible", d == t.rank() * t.rank(), {{"closure_dim", d}});
  }
  if (f.forms) {
    auto info = invariant_bilinear_forms(t.entries());
    record("forms", info.has_nondegenerate_symmetric || info.has_nondegenerate_alternating,
           {{"space_dim", info.basis.size()},
            {"symmetric", info.has_nondegenerate_symmetric},
            {"alternating", info.has_nondegenerate_alternating}});
  }
  if (f.g2) {
    auto c = g2_certificate(t);
    record("g2", c.consistent_with_g2(t.rank()),
           {{"orthogonal", c.orthogonal},
            {"lambda3_fixed_dim", c.lambda3_fixed_dim},
            {"abs_irreducible", c.abs_irreducible}});
  }
  if (f.rigidity) {
    try {
      const long r = rigidity_index(t);
      record("rigidity", true, {{"rigidity_index", r}, {"cohomologically_rigid", r == 0}});
    } catch (const Error& e) {
      record("rigidity", false, {{"error", e.what()}});
    }
  }
  doc["all_passed"] = ok;
  if (!report_path.empty()) write_json(report_path, doc);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Middle convolution of monodromy tuples over cyclotomic fields"};
  app.require_subcommand(1);

  std::string spec_path, report_path, spec_out, scenario, tuple_path;
  bool verbose = false;
  long m = 3, r = 5;
  CheckFlags flags;

  auto* run_cmd = app.add_subcommand("run", "Run a pipeline spec");
  run_cmd->add_option("spec", spec_path, "Pipeline JSON")->required();
  run_cmd->add_option("--report", report_path, "Write the report JSON here");
  run_cmd->add_flag("--verbose", verbose, "Print Jordan data of every step");

  auto* scen_cmd = app.add_subcommand("scenario", "Run a built-in scenario");
  scen_cmd->add_option("name", scenario, "g2, so6 or sl")->required()->check(CLI::IsMember({"g2", "so6", "sl"}));
  scen_cmd->add_option("--m", m, "Odd parameter m of the sl scenario");
  scen_cmd->add_option("--r", r, "Puncture count r of the sl scenario");
  scen_cmd->add_option("--report", report_path, "Write the report JSON here");
  scen_cmd->add_option("--spec-out", spec_out, "Write the scenario spec JSON here");
  scen_cmd->add_flag("--verbose", verbose, "Print Jordan data of every step");

  auto* check_cmd = app.add_subcommand("check", "Certificates for a stored tuple (all when no flag is given)");
  check_cmd->add_option("tuple", tuple_path, "Tuple JSON")->required();
  check_cmd->add_flag("--jordan", flags.jordan, "Jordan data of every entry");
  check_cmd->add_flag("--irreducible", flags.irreducible, "Absolute irreducibility via the generated algebra");
  check_cmd->add_flag("--forms", flags.forms, "Invariant bilinear forms");
  check_cmd->add_flag("--g2", flags.g2, "G2 certificate");
  check_cmd->add_flag("--rigidity", flags.rigidity, "Rigidity index");
  check_cmd->add_option("--report", report_path, "Write the results JSON here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return finish(parse_pipeline(read_file(spec_path)), report_path, verbose);
    if (scen_cmd->parsed()) {
      PipelineSpec spec = scenario == "g2" ? scenario_g2() : scenario == "so6" ? scenario_so6() : scenario_sl(m, r);
      if (!spec_out.empty()) write_json(spec_out, spec_to_json(spec));
      return finish(spec, report_path, verbose);
    }
    return check_tuple(tuple_path, flags, report_path);
  } catch (const PipelineError& e) {
    for (const auto& issue : e.issues()) {
      std::cerr << to_string(issue.kind) << " at " << (issue.pointer.empty() ? "/" : issue.pointer) << ": "
                << issue.message << '\n';
    }
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
