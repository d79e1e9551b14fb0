// locdiag: consistency-based diagnosis over propositional system
// descriptions, with an optional relevance-focused local mode.
//
// Exit codes: 0 success, 2 parse/usage error, 3 not diagnosable, 4 local
// mode requested without graph data in the system file.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "locdiag/diagnosis.hpp"
#include "locdiag/errors.hpp"
#include "locdiag/kernels.hpp"
#include "locdiag/locality.hpp"
#include "locdiag/parser.hpp"
#include "locdiag/report.hpp"
#include "locdiag/system_file.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNotDiagnosable = 3;
constexpr int kExitNoGraph = 4;

struct Options {
  std::string file;
  std::string obs_text;
  std::string obs_file;
  bool local = false;
  bool json = false;
  std::optional<std::uint64_t> max_rounds;
  std::optional<std::uint64_t> max_marked;
  std::optional<std::uint64_t> timeout_ms;
  std::string target_text = "false";
  std::string add_text;
  std::vector<std::string> prefer_texts;
  std::uint64_t seed = 0;  // accepted for harness compatibility
};

class Timer {
 public:
  std::uint64_t elapsed_ms() const {
    const auto d = std::chrono::steady_clock::now() - start_;
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

locdiag::SystemFile load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw locdiag::ParseError("cannot open system file '" + path + "'", 0, 0);
  return locdiag::parse_system_file(in);
}

locdiag::Formula load_observation(const Options& opt) {
  if (!opt.obs_file.empty()) {
    std::ifstream in(opt.obs_file);
    if (!in) {
      throw locdiag::ParseError("cannot open observation file '" + opt.obs_file + "'", 0, 0);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return locdiag::parse_formula(text.str());
  }
  if (opt.obs_text.empty()) {
    throw locdiag::ParseError("an observation is required (--obs or --obs-file)", 0, 0);
  }
  return locdiag::parse_formula(opt.obs_text);
}

locdiag::RetrievalBudget budget_of(const Options& opt) {
  return {opt.max_rounds, opt.max_marked};
}

std::function<bool()> deadline_of(const Options& opt) {
  if (!opt.timeout_ms) return {};
  const auto deadline =
      std::chrono::steady_clock::now() + std::chrono::milliseconds(*opt.timeout_ms);
  return [deadline] { return std::chrono::steady_clock::now() >= deadline; };
}

std::vector<std::string> atom_names(const locdiag::AtomSet& atoms) {
  std::vector<std::string> out;
  for (const auto& a : atoms) out.push_back(a.name());
  return out;
}

std::vector<std::vector<std::string>> atom_set_names(const std::vector<locdiag::AtomSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(atom_names(s));
  return out;
}

std::vector<std::string> relevant_names(const std::vector<locdiag::Atom>& atoms) {
  std::vector<std::string> out;
  for (const auto& a : atoms) out.push_back(a.name());
  return out;
}

std::uint64_t total_formula_count(const locdiag::System& system) {
  return system.sd.size() + system.ass.size() + 1;  // + observation
}

void emit(const Options& opt, const locdiag::RunReport& report) {
  if (opt.json) {
    std::cout << locdiag::to_json(report) << '\n';
  } else {
    locdiag::print_human(std::cout, report);
  }
}

locdiag::RunReport global_report(const locdiag::System& system, const locdiag::Formula& obs) {
  Timer timer;
  locdiag::SolveStats stats;
  locdiag::RunReport report;
  const auto conflicts = locdiag::minimal_conflict_sets(system, obs, &stats);
  report.conflict_sets = atom_set_names(conflicts);
  report.diagnoses = atom_set_names(locdiag::minimal_hitting_sets(conflicts));
  report.total_formulas = total_formula_count(system);
  report.compartment_size = report.total_formulas;  // a global run reads everything
  report.entailment_calls = stats.entailment_checks;
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

locdiag::RunReport local_report(const locdiag::System& system, const locdiag::Formula& obs,
                                const locdiag::RelatednessGraph& graph, const Options& opt,
                                locdiag::LocalDiagnosis::Status* status_out = nullptr) {
  Timer timer;
  // The wall-clock limit only shapes retrieval; rerunning retrieve inside
  // local_diagnose keeps the engine deterministic for the same budget.
  const auto retrieval =
      locdiag::retrieve(obs, system.ass, graph, budget_of(opt), deadline_of(opt));
  locdiag::RetrievalBudget effective = budget_of(opt);
  if (retrieval.budget_exhausted && opt.timeout_ms) {
    effective.max_marked = retrieval.marked.size();
  }
  const auto local = locdiag::local_diagnose(system, obs, graph, effective);

  locdiag::RunReport report;
  report.diagnoses = atom_set_names(local.diagnoses);
  report.relevant = relevant_names(local.relevant);
  report.compartment_size = local.compartment_size;
  report.total_formulas = total_formula_count(system);
  report.entailment_calls = local.entailment_calls;
  report.budget_exhausted = local.budget_exhausted;
  report.elapsed_ms = timer.elapsed_ms();
  if (status_out) *status_out = local.status;
  return report;
}

int cmd_diagnose(const Options& opt) {
  const locdiag::SystemFile file = load_system(opt.file);
  const locdiag::Formula obs = load_observation(opt);
  const locdiag::System system = file.system();

  if (opt.local) {
    if (!file.has_graph_data()) {
      std::cerr << "error: local mode needs a [COMPONENTS] or [GRAPH] section\n";
      return kExitNoGraph;
    }
    locdiag::LocalDiagnosis::Status status{};
    const locdiag::RunReport report =
        local_report(system, obs, file.relatedness_graph(), opt, &status);
    emit(opt, report);
    if (status == locdiag::LocalDiagnosis::Status::not_diagnosable_in_compartment) {
      std::cerr << "not diagnosable within the compartment\n";
      return kExitNotDiagnosable;
    }
    if (status == locdiag::LocalDiagnosis::Status::not_diagnosable_globally) {
      std::cerr << "not diagnosable\n";
      return kExitNotDiagnosable;
    }
    return kExitOk;
  }

  const locdiag::RunReport report = global_report(system, obs);
  emit(opt, report);
  if (report.diagnoses.empty()) {
    std::cerr << "not diagnosable\n";
    return kExitNotDiagnosable;
  }
  return kExitOk;
}

int cmd_conflicts(const Options& opt) {
  const locdiag::SystemFile file = load_system(opt.file);
  const locdiag::Formula obs = load_observation(opt);

  Timer timer;
  locdiag::SolveStats stats;
  locdiag::RunReport report;
  report.conflict_sets =
      atom_set_names(locdiag::minimal_conflict_sets(file.system(), obs, &stats));
  report.total_formulas = total_formula_count(file.system());
  report.compartment_size = report.total_formulas;
  report.entailment_calls = stats.entailment_checks;
  report.elapsed_ms = timer.elapsed_ms();
  emit(opt, report);
  return kExitOk;
}

std::vector<std::vector<std::string>> rendered_sorted(const std::vector<locdiag::BeliefBase>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& set : sets) {
    std::vector<std::string> rendered;
    for (const auto& f : set) rendered.push_back(f.to_string());
    std::sort(rendered.begin(), rendered.end());
    out.push_back(std::move(rendered));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_kernels(const Options& opt) {
  const locdiag::SystemFile file = load_system(opt.file);
  const locdiag::Formula target = locdiag::parse_formula(opt.target_text);
  locdiag::BeliefBase base = file.sd;
  for (const auto& a : file.ass) base.insert(locdiag::Formula::atom(a));

  const auto kc = locdiag::compute_kernels(base, target);
  const auto rendered = rendered_sorted(kc.kernels);
  if (opt.json) {
    std::cout << nlohmann::ordered_json(rendered).dump() << '\n';
  } else {
    std::cout << "kernels for target '" << target << "' (" << rendered.size() << "):\n";
    for (const auto& kernel : rendered) {
      std::cout << "  {";
      for (std::size_t i = 0; i < kernel.size(); ++i) {
        if (i) std::cout << "; ";
        std::cout << kernel[i];
      }
      std::cout << "}\n";
    }
  }
  return kExitOk;
}

int cmd_compartment(const Options& opt) {
  const locdiag::SystemFile file = load_system(opt.file);
  const locdiag::Formula obs = load_observation(opt);
  if (!file.has_graph_data()) {
    std::cerr << "error: compartment extraction needs a [COMPONENTS] or [GRAPH] section\n";
    return kExitNoGraph;
  }
  const locdiag::System system = file.system();

  Timer timer;
  const auto retrieval = locdiag::retrieve(obs, system.ass, file.relatedness_graph(),
                                           budget_of(opt), deadline_of(opt));
  const auto comp = locdiag::compartment(obs, system, retrieval.relevant);

  std::vector<std::string> formulas;
  for (const auto& f : comp.formulas) formulas.push_back(f.to_string());

  if (opt.json) {
    nlohmann::ordered_json j;
    j["relevant"] = relevant_names(comp.relevant);
    j["compartment"] = formulas;
    j["compartment_size"] = comp.formulas.size();
    j["total_formulas"] = total_formula_count(system);
    j["budget_exhausted"] = retrieval.budget_exhausted;
    j["elapsed_ms"] = timer.elapsed_ms();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "relevant:";
    for (const auto& a : comp.relevant) std::cout << ' ' << a.name();
    std::cout << "\ncompartment (" << comp.formulas.size() << " of "
              << total_formula_count(system) << " formulas):\n";
    for (const auto& f : formulas) std::cout << "  " << f << '\n';
    if (retrieval.budget_exhausted) std::cout << "budget exhausted\n";
  }
  return kExitOk;
}

int cmd_revise(const Options& opt) {
  const locdiag::SystemFile file = load_system(opt.file);
  if (opt.add_text.empty()) {
    throw locdiag::ParseError("revise needs --add <formula>", 0, 0);
  }
  const locdiag::Formula input = locdiag::parse_formula(opt.add_text);

  locdiag::BeliefBase base = file.sd;
  for (const auto& a : file.ass) base.insert(locdiag::Formula::atom(a));

  locdiag::BeliefBase preferred;
  if (opt.prefer_texts.empty()) {
    for (const auto& a : file.ass) preferred.insert(locdiag::Formula::atom(a));
  } else {
    for (const auto& text : opt.prefer_texts) preferred.insert(locdiag::parse_formula(text));
  }

  const locdiag::BeliefBase revised = locdiag::semi_revise(base, input, preferred);
  std::vector<std::string> rendered;
  for (const auto& f : revised) rendered.push_back(f.to_string());
  std::sort(rendered.begin(), rendered.end());

  if (opt.json) {
    std::cout << nlohmann::ordered_json(rendered).dump() << '\n';
  } else {
    std::cout << "revised base (" << rendered.size() << "):\n";
    for (const auto& f : rendered) std::cout << "  " << f << '\n';
  }
  return kExitOk;
}

int cmd_bench(const Options& opt) {
  const locdiag::SystemFile file = load_system(opt.file);
  const locdiag::Formula obs = load_observation(opt);
  if (!file.has_graph_data()) {
    std::cerr << "error: bench needs a [COMPONENTS] or [GRAPH] section\n";
    return kExitNoGraph;
  }
  const locdiag::System system = file.system();

  const locdiag::RunReport global = global_report(system, obs);
  const locdiag::RunReport local = local_report(system, obs, file.relatedness_graph(), opt);
  const bool equal = global.diagnoses == local.diagnoses;

  if (opt.json) {
    nlohmann::ordered_json j;
    j["global"] = nlohmann::ordered_json::parse(locdiag::to_json(global));
    j["local"] = nlohmann::ordered_json::parse(locdiag::to_json(local));
    j["diagnoses_equal"] = equal;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "== global ==\n";
    locdiag::print_human(std::cout, global);
    std::cout << "== local ==\n";
    locdiag::print_human(std::cout, local);
    if (equal) {
      std::cout << "diagnosis sets identical\n";
    } else if (local.budget_exhausted) {
      std::cout << "diagnosis sets differ (retrieval budget exhausted)\n";
    } else {
      std::cout << "*** DIVERGENCE: local and global diagnosis sets differ ***\n";
    }
  }
  if (global.diagnoses.empty()) {
    std::cerr << "not diagnosable\n";
    return kExitNotDiagnosable;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"consistency-based diagnosis with relevance-focused local search"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_obs) {
    cmd->add_option("file", opt.file, "system description file")->required();
    if (needs_obs) {
      cmd->add_option("--obs", opt.obs_text, "observation formula");
      cmd->add_option("--obs-file", opt.obs_file, "file holding the observation formula");
    }
    cmd->add_flag("--json", opt.json, "single-line JSON output");
    cmd->add_option("--seed", opt.seed, "random seed (property-test harness only)");
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--max-rounds", opt.max_rounds, "retrieval budget: frontier expansions")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-marked", opt.max_marked, "retrieval budget: marked atoms")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--timeout-ms", opt.timeout_ms, "soft wall-clock budget for retrieval")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* diagnose = app.add_subcommand("diagnose", "minimal diagnoses for an observation");
  add_common(diagnose, true);
  add_budget(diagnose);
  diagnose->add_flag("--local", opt.local, "diagnose inside the retrieved compartment");

  CLI::App* conflicts = app.add_subcommand("conflicts", "minimal conflict sets");
  add_common(conflicts, true);

  CLI::App* kernels = app.add_subcommand("kernels", "kernels of SD + ASS for a target formula");
  add_common(kernels, false);
  kernels->add_option("--target", opt.target_text, "target formula (default: false)");

  CLI::App* comp = app.add_subcommand("compartment", "retrieve the observation-relevant part");
  add_common(comp, true);
  add_budget(comp);

  CLI::App* revise = app.add_subcommand("revise", "kernel semi-revision of SD + ASS");
  add_common(revise, false);
  revise->add_option("--add", opt.add_text, "formula to add")->required();
  revise->add_option("--prefer", opt.prefer_texts,
                     "formulas preferred for removal (default: the assumables)");

  CLI::App* bench = app.add_subcommand("bench", "global vs local diagnosis on one input");
  add_common(bench, true);
  add_budget(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (diagnose->parsed()) return cmd_diagnose(opt);
    if (conflicts->parsed()) return cmd_conflicts(opt);
    if (kernels->parsed()) return cmd_kernels(opt);
    if (comp->parsed()) return cmd_compartment(opt);
    if (revise->parsed()) return cmd_revise(opt);
    if (bench->parsed()) return cmd_bench(opt);
  } catch (const locdiag::ParseError& e) {
    if (e.line() > 0) {
      std::cerr << "parse error at " << e.line() << ':' << e.column() << ": " << e.what() << '\n';
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return kExitParse;
  } catch (const locdiag::NotDiagnosableError& e) {
    std::cerr << "not diagnosable: " << e.what() << '\n';
    return kExitNotDiagnosable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
