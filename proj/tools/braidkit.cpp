// braidkit command line: list, check, solve, export.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error,
// 3 solver budget exhausted.

#include "braidkit/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace braidkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::vector<std::string> data_dirs;
  std::string output;
  bool json = false;
  bool quiet = false;

  // check
  std::string name;
  std::string axioms = "all";
  std::optional<std::size_t> max_word_len;
  std::vector<std::string> specialize;
  bool comodule = false;
  bool comodule_algebra = false;
  std::string coacted;
  bool psi_naturality = false;
  std::string braiding;
  std::string coacting_structure;
  std::string target = "BR_abcd";
  std::string bosonic;
  std::size_t samples = 1000;
  std::size_t sample_len = 5;
  std::uint64_t seed = 0;

  // solve
  bool no_star = false;
  std::size_t budget = kDefaultSolveBudget;
  std::size_t verify_len = 3;

  // export
  std::vector<std::string> names;
  bool all = false;
  std::string dir;

  std::string kind;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::filesystem::path> search_dirs(const Options& o) {
  std::vector<std::filesystem::path> dirs(o.data_dirs.begin(), o.data_dirs.end());
  if (const char* env = std::getenv("BRAIDKIT_DATA_DIR")) dirs.emplace_back(env);
#ifdef BRAIDKIT_DEFAULT_DATA_DIR
  dirs.emplace_back(BRAIDKIT_DEFAULT_DATA_DIR);
#endif
  return dirs;
}

Bindings bindings_of(const Options& o) {
  Bindings b;
  for (const auto& s : o.specialize) b = parse_binding(s, b);
  return b;
}

std::string specialize_suffix(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "|" : ",") + s;
  return out;
}

Json config_of(const Options& o, const std::string& command) {
  Json c;
  c["command"] = command;
  if (!o.name.empty()) c["name"] = o.name;
  if (command == "check") {
    c["axioms"] = o.axioms;
    if (o.max_word_len) c["max_word_len"] = *o.max_word_len;
    c["specialize"] = o.specialize;
    if (o.comodule) c["comodule"] = true;
    if (o.comodule_algebra) c["comodule_algebra"] = true;
    if (!o.coacted.empty()) c["coacted"] = o.coacted;
    if (o.psi_naturality) c["psi_naturality"] = true;
    if (!o.braiding.empty()) c["braiding"] = o.braiding;
    if (!o.bosonic.empty()) c["bosonic"] = o.bosonic;
    c["seed"] = o.seed;
  }
  if (command == "solve") {
    c["include_star"] = !o.no_star;
    c["budget"] = o.budget;
    c["verify_len"] = o.verify_len;
  }
  return c;
}

Json report_of(const Options& o, const std::string& command) {
  Json r;
  r["format_version"] = kFormatVersion;
  r["config"] = config_of(o, command);
  r["checks"] = Json::array();
  return r;
}

// Writes the JSON report to --output, else to $BRAIDKIT_OUTPUT_DIR/<stem>.json.
void emit(const Options& o, const Json& report, const std::string& stem) {
  std::filesystem::path path;
  if (!o.output.empty()) {
    path = o.output;
  } else if (const char* dir = std::getenv("BRAIDKIT_OUTPUT_DIR")) {
    std::string file = stem;
    for (auto& ch : file)
      if (ch == '|' || ch == '=' || ch == ',' || ch == '/') ch = '_';
    path = std::filesystem::path(dir) / (file + ".json");
  }
  if (!path.empty()) write_text_file(path, dump(report));
  if (o.json) std::cout << dump(report);
}

void print_check(const Options& o, const CheckReport& r) {
  if (o.json || o.quiet) return;
  std::cout << (r.holds() ? "holds " : "FAILS ") << r.axiom << " on " << r.structure << " (" << r.cases << " cases";
  if (r.word_length_bound) std::cout << ", length <= " << r.word_length_bound;
  std::cout << ")\n";
  // Text output shows a few witnesses, clipped; the JSON report has them all.
  constexpr std::size_t kShown = 3, kWidth = 160;
  for (std::size_t i = 0; i < r.witnesses.size() && i < kShown; ++i) {
    const auto& w = r.witnesses[i];
    std::cout << "    witness";
    for (const auto& x : w.inputs) std::cout << " " << x;
    std::string text = w.residual_text.size() > kWidth ? w.residual_text.substr(0, kWidth) + " ..." : w.residual_text;
    std::cout << " : " << text << "\n";
  }
  if (r.failures > kShown) std::cout << "    ... " << r.failures - std::min(r.failures, kShown) << " more\n";
  for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
}

std::vector<std::string> select_axioms(const std::string& spec, const StructureMaps& m) {
  std::vector<std::string> applicable = applicable_axioms(m);
  if (spec == "all") return applicable;
  std::vector<std::string> wanted;
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) {
    const std::vector<std::string>* group = item == "hopf" ? &hopf_axiom_names() : item == "star" ? &star_axiom_names() : nullptr;
    if (group) {
      for (const auto& a : *group)
        if (std::find(applicable.begin(), applicable.end(), a) != applicable.end()) wanted.push_back(a);
      continue;
    }
    const auto& known = axiom_names();
    if (std::find(known.begin(), known.end(), item) == known.end()) throw UsageError("unknown axiom '" + item + "'");
    wanted.push_back(item);
  }
  return wanted;
}

int check_structure(const Options& o, const Library& lib, Json& report) {
  StructurePtr s = lib.structure(o.name);
  if (!o.specialize.empty()) {
    StructureMaps m = s->maps().substitute(bindings_of(o));
    m.name += specialize_suffix(o.specialize);
    s = std::make_shared<const Structure>(std::move(m));
  }
  std::size_t L = o.max_word_len.value_or(3);
  bool ok = true;
  for (const auto& axiom : select_axioms(o.axioms, s->maps())) {
    CheckReport r = check_axiom(axiom, *s, L);
    print_check(o, r);
    report["checks"].push_back(to_json(r));
    ok = ok && r.holds();
  }
  if (!o.bosonic.empty()) {
    CheckReport r = check_bosonic_central(s->parse(o.bosonic), *s);
    print_check(o, r);
    report["checks"].push_back(to_json(r));
    ok = ok && r.holds();
  }
  return ok ? kExitOk : kExitFailed;
}

int check_coaction(const Options& o, const Library& lib, Json& report) {
  CoactionMap beta = lib.coaction(o.name);
  Bindings b = bindings_of(o);
  if (!b.empty()) beta = beta.substitute(b);
  std::size_t L = o.max_word_len.value_or(2);
  bool ok = true;
  auto add = [&](const CheckReport& r) {
    print_check(o, r);
    report["checks"].push_back(to_json(r));
    ok = ok && r.holds();
  };
  bool any = o.comodule || o.comodule_algebra || o.psi_naturality;
  if (o.comodule || !any) {
    StructurePtr coacting = beta.source;
    if (!o.coacting_structure.empty()) {
      coacting = lib.structure(o.coacting_structure);
      if (!b.empty()) coacting = std::make_shared<const Structure>(coacting->maps().substitute(b));
    }
    if (!coacting) throw UsageError("coaction '" + o.name + "' needs --coacting-structure for the comodule check");
    add(check_comodule(beta, *coacting, L));
  }
  if (o.comodule_algebra) {
    PresentationPtr mult = o.coacted.empty() ? beta.coacted : lib.presentation(o.coacted);
    if (!b.empty()) mult = mult->specialize(b);
    add(check_comodule_algebra(beta, *mult, L));
  }
  if (o.psi_naturality) {
    if (o.braiding.empty()) throw UsageError("--psi-naturality needs --braiding <structure>");
    StructurePtr s = lib.structure(o.braiding);
    if (!b.empty()) s = std::make_shared<const Structure>(s->maps().substitute(b));
    add(check_psi_naturality(beta, *s));
  }
  return ok ? kExitOk : kExitFailed;
}

int check_table(const Options& o, const Library& lib, Json& report) {
  MultiplicationTable t = lib.table(o.name);
  PresentationPtr target = lib.presentation(o.target);
  Bindings b = bindings_of(o);
  if (!b.empty()) {
    t = t.substitute(b);
    target = target->specialize(b);
  }
  TransmutationReport r = verify_transmutation(t, *target);
  for (const CheckReport* c : {&r.relations, &r.associativity, &r.bijectivity}) {
    print_check(o, *c);
    report["checks"].push_back(to_json(*c));
  }
  return r.holds() ? kExitOk : kExitFailed;
}

int check_presentation(const Options& o, const Library& lib, Json& report) {
  PresentationPtr p = lib.presentation(o.name);
  Bindings b = bindings_of(o);
  if (!b.empty()) p = p->specialize(b, p->name() + specialize_suffix(o.specialize));
  ConfluenceReport c = p->confluence_probe(o.samples, o.sample_len, o.seed);
  ClassicalLimitReport limit = classical_limit(*p);
  Json rules = Json::array();
  for (const auto& r : p->rules()) rules.push_back(Json{{"rule", p->rule_to_string(r)}, {"origin", r.origin}});
  report["rules"] = rules;
  Json cj = to_json(c, *p);
  cj["check"] = "confluence";
  report["checks"].push_back(cj);
  Json lj;
  lj["check"] = "classical-limit";
  lj["status"] = limit.holds() ? "holds" : "fails";
  Json lr = Json::array();
  for (const auto& r : limit.rules) lr.push_back(Json{{"rule", r.rule}, {"kind", r.kind}});
  lj["rules"] = lr;
  lj["noncommuting"] = limit.noncommuting;
  report["checks"].push_back(lj);
  if (!o.json && !o.quiet) {
    for (const auto& r : p->rules()) std::cout << "rule " << p->rule_to_string(r) << "   [" << r.origin << "]\n";
    std::cout << (c.confluent() ? "holds " : "FAILS ") << "confluence on " << p->name() << " (" << c.samples
              << " random words, length <= " << c.max_len << ", seed " << c.seed << "; " << c.overlaps.size()
              << " overlaps)\n";
    for (const auto& [w, d] : c.counterexamples)
      std::cout << "    witness " << p->alphabet().to_string(w) << " : " << d.to_string(p->alphabet()) << "\n";
    std::cout << (limit.holds() ? "holds " : "FAILS ") << "classical-limit on " << p->name() << "\n";
    for (const auto& r : limit.rules) std::cout << "    " << r.rule << "   [" << r.kind << "]\n";
  }
  return c.confluent() && limit.holds() ? kExitOk : kExitFailed;
}

int cmd_check(const Options& o) {
  Library lib(search_dirs(o));
  std::string kind = lib.kind_of(o.name);
  if (kind.empty()) throw UsageError("unknown name '" + o.name + "'");
  bool coaction_flags = o.comodule || o.comodule_algebra || o.psi_naturality || !o.coacted.empty();
  if (coaction_flags && kind != "coaction") throw UsageError("coaction flags need a coaction, '" + o.name + "' is a " + kind);
  if (o.max_word_len && *o.max_word_len < 1) throw UsageError("--max-word-len must be at least 1");
  Json report = report_of(o, "check");
  report["kind"] = kind;
  int code = kExitOk;
  if (kind == "structure") code = check_structure(o, lib, report);
  if (kind == "coaction") code = check_coaction(o, lib, report);
  if (kind == "product_table") code = check_table(o, lib, report);
  if (kind == "presentation") code = check_presentation(o, lib, report);
  report["verdict"] = Json{{"status", code == kExitOk ? "holds" : "fails"}};
  emit(o, report, "check_" + o.name + specialize_suffix(o.specialize));
  if (!o.json && !o.quiet) std::cout << (code == kExitOk ? "verdict: holds\n" : "verdict: FAILS\n");
  return code;
}

int cmd_solve(const Options& o) {
  auto start = std::chrono::steady_clock::now();
  AnsatzSpec spec = build_ansatz();
  EquationSystem sys = generate_equations(spec, default_ansatz_axioms(!o.no_star));
  SolveResult res = solve(sys.values(), spec.unknowns, o.budget);
  Json report = report_of(o, "solve");

  Json system = Json::array();
  for (const auto& e : sys.equations)
    system.push_back(Json{{"equation", e.value.to_string()}, {"axiom", e.axiom}, {"inputs", e.inputs}, {"basis", e.basis}});
  report["system"] = system;

  std::map<std::string, std::size_t> matched;
  Json branches = Json::array();
  std::size_t solved = 0, unsound = 0;
  std::vector<Scalar> values = sys.values();
  for (std::size_t i = 0; i < res.branches.size(); ++i) {
    const SolutionBranch& b = res.branches[i];
    Json j = to_json(b);
    j["index"] = i;
    if (b.solved()) {
      ++solved;
      // Soundness: the original system vanishes under the assignment.
      Bindings bind = b.bindings();
      std::size_t nonzero = 0;
      for (const auto& v : values) nonzero += v.substitute(bind).is_zero() ? 0 : 1;
      j["system_residual"] = nonzero;
      unsound += nonzero ? 1 : 0;
      if (auto m = match_known_solution(b, spec)) {
        j["matches"] = *m;
        matched.emplace(*m, i);
      }
      if (o.verify_len > 0 && b.free_unknowns.empty()) {
        Json checks = Json::array();
        bool all = true;
        for (const auto& r : verify_branch(b, spec, o.verify_len)) {
          all = all && r.holds();
          checks.push_back(Json{{"axiom", r.axiom}, {"status", r.holds() ? "holds" : "fails"}, {"failures", r.failures}});
        }
        j["verification"] = checks;
        j["verified"] = all;
      }
    }
    branches.push_back(j);
  }
  report["branches"] = branches;
  report["pruned"] = res.pruned;

  bool both = matched.count("br_sol1_abcp") && matched.count("br_sol2_abcp");
  int code = res.budget_exhausted ? kExitBudget : (both && unsound == 0) ? kExitOk : kExitFailed;
  Json verdict;
  verdict["status"] = code == kExitOk ? "holds" : code == kExitBudget ? "budget exhausted" : "fails";
  verdict["steps"] = res.steps;
  verdict["budget_exhausted"] = res.budget_exhausted;
  verdict["equations"] = sys.equations.size();
  verdict["unknowns"] = spec.unknowns.size();
  verdict["solved_branches"] = solved;
  verdict["stuck_branches"] = res.branches.size() - solved;
  verdict["pruned_branches"] = res.pruned.size();
  Json m = Json::object();
  for (const char* n : {"br_sol1_abcp", "br_sol2_abcp"})
    m[n] = matched.count(n) ? Json(matched[n]) : Json(nullptr);
  verdict["matches"] = m;
  verdict["note"] = "branches are all terminal branches of the explored tree; no claim is made about solutions outside it";
  report["verdict"] = verdict;
  emit(o, report, o.no_star ? "solve_no_star" : "solve");

  if (!o.json && !o.quiet) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << sys.equations.size() << " equations in " << spec.unknowns.size() << " unknowns ("
              << (o.no_star ? "without" : "with") << " star axioms)\n";
    std::cout << res.steps << " steps, " << res.branches.size() << " branches (" << solved << " solved), "
              << res.pruned.size() << " pruned" << (res.budget_exhausted ? ", budget exhausted" : "") << "\n";
    for (std::size_t i = 0; i < res.branches.size(); ++i) {
      const auto& j = branches[i];
      std::cout << "branch " << i << ": " << j["status"].get<std::string>();
      if (j.contains("matches")) std::cout << ", matches " << j["matches"].get<std::string>();
      if (j.contains("verified")) std::cout << (j["verified"].get<bool>() ? ", all axioms hold" : ", AXIOMS FAIL");
      std::cout << "\n   ";
      for (const auto& [k, v] : j["assignment"].items()) std::cout << " " << k << "=" << v.get<std::string>();
      std::cout << "\n";
      for (const auto& r : res.branches[i].residual) std::cout << "    residual: " << r.to_string() << "\n";
    }
    std::cout << "verdict: " << verdict["status"].get<std::string>() << " (" << secs << " s)\n";
  }
  return code;
}

int cmd_list(const Options& o) {
  Library lib(search_dirs(o));
  std::string kind = o.kind == "table" ? "product_table" : o.kind;
  Json out = Json::array();
  for (const auto& e : lib.list()) {
    if (!kind.empty() && e.kind != kind) continue;
    if (o.json)
      out.push_back(Json{{"name", e.name}, {"kind", e.kind}, {"origin", e.origin}});
    else
      std::cout << e.kind << "\t" << e.name << "\t" << e.origin << "\n";
  }
  if (o.json) std::cout << dump(out);
  return kExitOk;
}

int cmd_export(const Options& o) {
  std::vector<std::string> names = o.all ? Library::builtin_names() : o.names;
  if (names.empty()) throw UsageError("export needs names or --all");
  for (const auto& n : names) {
    Json doc = Library::builtin_document(n);
    if (o.dir.empty()) {
      std::cout << dump(doc);
    } else {
      auto path = std::filesystem::path(o.dir) / (doc["name"].get<std::string>() + ".json");
      write_text_file(path, dump(doc));
      if (!o.quiet) std::cout << "wrote " << path.string() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidkit: exact checks for quantum and braided Hopf algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--data-dir", o.data_dirs, "Extra directory searched for JSON documents");

  auto* list = app.add_subcommand("list", "List presentations, structures, coactions and tables");
  list->add_option("--kind", o.kind, "presentation, structure, coaction or table")
      ->check(CLI::IsMember({"presentation", "structure", "coaction", "table", "product_table"}));
  list->add_flag("--json", o.json, "Print JSON");

  auto* check = app.add_subcommand("check", "Run checks on a named object");
  check->add_option("name", o.name, "Structure, coaction, table or presentation")->required();
  check->add_option("--axioms", o.axioms, "all, hopf, star or a comma list of axiom names");
  check->add_option("--max-word-len", o.max_word_len, "Word length bound (3 for axioms, 2 for coactions)");
  check->add_option("--specialize", o.specialize, "Bindings such as r=q or q=3")->expected(1, -1);
  check->add_flag("--comodule", o.comodule, "Comodule axioms");
  check->add_flag("--comodule-algebra", o.comodule_algebra, "Homomorphism property");
  check->add_option("--coacted", o.coacted, "Presentation multiplying the coacted copy");
  check->add_flag("--psi-naturality", o.psi_naturality, "Braiding commutes with the coaction");
  check->add_option("--braiding", o.braiding, "Structure whose braiding --psi-naturality uses");
  check->add_option("--coacting-structure", o.coacting_structure, "Hopf structure for the comodule check");
  check->add_option("--target", o.target, "Target presentation of a product table");
  check->add_option("--bosonic", o.bosonic, "Element to check for central and bosonic");
  check->add_option("--samples", o.samples, "Random words for the confluence probe");
  check->add_option("--sample-len", o.sample_len, "Maximum random word length");
  check->add_option("--seed", o.seed, "Seed for the confluence probe");
  check->add_option("-o,--output", o.output, "Report path");
  check->add_flag("--json", o.json, "Print the JSON report instead of text");
  check->add_flag("-q,--quiet", o.quiet, "No text output");

  auto* solve_cmd = app.add_subcommand("solve", "Generate and solve the ansatz equations");
  solve_cmd->add_flag("--no-star", o.no_star, "Leave out the star axioms");
  solve_cmd->add_option("--budget", o.budget, "Solver step budget");
  solve_cmd->add_option("--verify-len", o.verify_len, "Word length for verifying solved branches (0 skips)");
  solve_cmd->add_option("-o,--output", o.output, "Report path");
  solve_cmd->add_flag("--json", o.json, "Print the JSON report instead of text");
  solve_cmd->add_flag("-q,--quiet", o.quiet, "No text output");

  auto* exp = app.add_subcommand("export", "Write builtin objects as JSON documents");
  exp->add_option("names", o.names, "Names to export");
  exp->add_flag("--all", o.all, "Export every builtin");
  exp->add_option("--dir", o.dir, "Directory to write into (stdout otherwise)");
  exp->add_flag("-q,--quiet", o.quiet, "No text output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*list) return cmd_list(o);
    if (*check) return cmd_check(o);
    if (*solve_cmd) return cmd_solve(o);
    if (*exp) return cmd_export(o);
  } catch (const RewriteBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ScalarError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
