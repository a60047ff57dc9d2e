#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "epistle/checker.hpp"
#include "epistle/crosscheck.hpp"
#include "epistle/dataset.hpp"
#include "epistle/errors.hpp"
#include "epistle/generator.hpp"
#include "epistle/puzzle.hpp"
#include "epistle/syntax.hpp"

namespace epistle::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Backend backend_flag(const std::string& text) {
  auto b = parse_backend(text);
  if (!b) throw UsageError("unknown backend '" + text + "' (explicit|symbolic|both)");
  return *b;
}

struct GenerateOptions {
  std::uint64_t seed = 0;
  int per_setup = 400;
  std::string setups;
  std::string n_agents = "2,3";
  int max_order = 2;
  std::string backend = "explicit";
  std::string out;
  int threads = 1;
};

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  GenConfig cfg;
  cfg.seed = o.seed;
  cfg.per_setup_count = o.per_setup;
  cfg.max_order = o.max_order;
  cfg.backend = backend_flag(o.backend);
  cfg.threads = o.threads;
  cfg.node_capacity = node_capacity_from_env();
  if (!o.setups.empty()) {
    cfg.setups.clear();
    for (const auto& tag : split_list(o.setups)) {
      auto kind = parse_setup_tag(tag);
      if (!kind) throw UsageError("unknown setup '" + tag + "'");
      cfg.setups.push_back(*kind);
    }
  }
  cfg.n_agents_choices.clear();
  for (const auto& n : split_list(o.n_agents)) {
    try {
      cfg.n_agents_choices.push_back(std::stoi(n));
    } catch (const std::exception&) {
      throw UsageError("bad --n-agents entry '" + n + "'");
    }
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  GenerationStats stats;
  const auto problems = generate_balanced(cfg, &stats);
  std::vector<DatasetRecord> records;
  records.reserve(problems.size());
  for (const auto& p : problems) records.push_back(to_record(p));

  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error("cannot open '" + o.out + "' for writing");
  write_jsonl(file, records);
  file.close();
  if (!file) throw Error("failed writing '" + o.out + "'");

  std::map<std::string, std::pair<int, int>> counts;
  for (const auto& r : records) {
    auto& c = counts[r.setup];
    (r.label == "True" ? c.first : c.second)++;
  }
  out << "wrote " << records.size() << " records to " << o.out << "\n";
  for (const auto& [setup, c] : counts) {
    out << "  " << setup << ": " << c.first << " True, " << c.second << " False\n";
  }
  out << "draws " << stats.draws << ", rejected " << stats.rejected << ", duplicates " << stats.duplicates
      << ", undersampled " << stats.discarded << "\n";
  return exit_ok;
}

struct CheckOptions {
  int n = 0;
  std::string setup;
  std::string obs;
  std::vector<std::string> anns;
  std::string hyp;
  std::string backend = "explicit";
  bool explain = false;
  bool allow_contradiction = false;
};

std::string world_bits(World w, int n) {
  std::string s;
  for (int j = 0; j < n; ++j) s += w.holds(PropId{j}) ? '1' : '0';
  return s;
}

int cmd_check(const CheckOptions& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be positive");
  ObservabilityMatrix obs;
  if (!o.obs.empty()) {
    try {
      obs = ObservabilityMatrix::from_rows(o.obs);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (obs.size() != o.n) throw UsageError("--obs size differs from --n");
  } else {
    const auto kind = parse_setup_tag(o.setup.empty() ? "forehead-mud" : o.setup);
    if (!kind || *kind == SetupKind::explicit_card) {
      throw UsageError("--setup must be forehead-mud, forehead-mud-mirror or thirst (use --obs otherwise)");
    }
    Rng unused(0);
    obs = sample_observability(*kind, o.n, unused);
  }

  std::vector<Formula> anns;
  for (const auto& text : o.anns) anns.push_back(parse_formula(text, o.n));
  const auto hyp = parse_formula(o.hyp, o.n);
  const auto backend = backend_flag(o.backend);
  Checker checker(backend, node_capacity_from_env());

  if (o.explain && o.n <= KripkeModel::max_agents) {
    const auto m = announce_all(build_initial_model(o.n, obs), anns);
    out << "surviving worlds (p0..p" << o.n - 1 << "):";
    for (auto w : m.live_worlds()) out << ' ' << world_bits(w, o.n);
    out << "\n";
  }

  if (checker.is_contradictory(obs, anns)) {
    out << "Contradictory\n";
    return o.allow_contradiction ? exit_ok : exit_contradiction;
  }
  if (backend == Backend::both) {
    const auto a = checker.label_explicit(obs, anns, hyp);
    const auto b = checker.label_symbolic(obs, anns, hyp);
    out << "explicit: " << to_string(a) << "\n";
    out << "symbolic: " << to_string(b) << "\n";
    if (a != b) {
      out << "backends disagree\n";
      return exit_mismatch;
    }
    out << to_string(a) << "\n";
    return exit_ok;
  }
  out << to_string(checker.label(obs, anns, hyp)) << "\n";
  return exit_ok;
}

int cmd_crosscheck(std::uint64_t count, std::uint64_t seed, std::ostream& out) {
  const auto report = crosscheck(count, seed, node_capacity_from_env());
  out << "instances " << report.instances << ", rejected draws " << report.rejected << "\n";
  out << report.mismatches << " mismatches\n";
  auto timing = [&](const char* name, const TimingSummary& t) {
    out << name << " us: p50 " << t.p50_us << ", p90 " << t.p90_us << ", p99 " << t.p99_us << ", max "
        << t.max_us << "\n";
  };
  timing("explicit", report.lhs);
  timing("symbolic", report.rhs);
  for (const auto& e : report.examples) out << "mismatch: " << e << "\n";
  return crosscheck_exit_code(report);
}

int cmd_puzzle(int n, int rounds, const std::string& backend_text, std::ostream& out) {
  if (n < 2) throw UsageError("--n must be at least 2");
  const auto backend = backend_flag(backend_text);
  const int max_rounds = rounds < 0 ? n : rounds;
  PuzzleResult result;
  try {
    result = run_muddy_children(n, max_rounds, backend, node_capacity_from_env());
  } catch (const SizeLimit& e) {
    throw UsageError(e.what());
  }
  for (const auto& r : result.rounds) {
    out << "round " << r.round << ": " << r.surviving << " worlds, ";
    if (r.everyone_knows) {
      out << "everyone knows their own status\n";
    } else if (r.nobody_knows) {
      out << "nobody knows their own status\n";
    } else {
      out << "some but not all know their own status\n";
    }
  }
  if (result.rounds_until_known) {
    out << "everyone knows after " << *result.rounds_until_known << " round(s)\n";
  } else {
    out << "not resolved within " << max_rounds << " round(s)\n";
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Public announcement logic checker and epistemic reasoning dataset generator", "epistle"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate a balanced JSON-Lines dataset");
  generate->add_option("--seed", gen.seed, "Master seed");
  generate->add_option("--per-setup", gen.per_setup, "Records per setup (even)");
  generate->add_option("--setups", gen.setups, "Comma list: forehead-mud,forehead-mud-mirror,thirst,explicit");
  generate->add_option("--n-agents", gen.n_agents, "Comma list of agent counts");
  generate->add_option("--max-order", gen.max_order, "Highest hypothesis belief order");
  generate->add_option("--backend", gen.backend, "explicit|symbolic|both");
  generate->add_option("--out", gen.out, "Output path")->required();
  generate->add_option("--threads", gen.threads, "Worker threads");

  CheckOptions chk;
  auto* check = app.add_subcommand("check", "Label one problem given in the formula language");
  check->add_option("--n", chk.n, "Agent count")->required();
  check->add_option("--setup", chk.setup, "forehead-mud|forehead-mud-mirror|thirst");
  check->add_option("--obs", chk.obs, "Observability rows, e.g. 011,101,110");
  check->add_option("--ann", chk.anns, "Announcement (repeatable, in order)");
  check->add_option("--hyp", chk.hyp, "Hypothesis")->required();
  check->add_option("--backend", chk.backend, "explicit|symbolic|both");
  check->add_flag("--explain", chk.explain, "Print the surviving worlds");
  check->add_flag("--allow-contradiction", chk.allow_contradiction, "Exit 0 on a contradictory premise");

  std::uint64_t count = 5000, cc_seed = 1;
  auto* cross = app.add_subcommand("crosscheck", "Compare explicit and symbolic labels on random problems");
  cross->add_option("--count", count, "Problems to check");
  cross->add_option("--seed", cc_seed, "Seed");

  int puzzle_n = 3, puzzle_rounds = -1;
  std::string puzzle_backend = "explicit";
  auto* puzzle = app.add_subcommand("puzzle", "Muddy children, round by round");
  puzzle->add_option("--n", puzzle_n, "Children, all muddy");
  puzzle->add_option("--rounds", puzzle_rounds, "Maximum ignorance rounds (default n)");
  puzzle->add_option("--backend", puzzle_backend, "explicit|symbolic|both");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*check) return cmd_check(chk, out);
    if (*cross) return cmd_crosscheck(count, cc_seed, out);
    if (*puzzle) return cmd_puzzle(puzzle_n, puzzle_rounds, puzzle_backend, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const IndexOutOfRange& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const GenerationStall& e) {
    err << "generation stalled: " << e.what() << "\n";
    return exit_stall;
  } catch (const BackendMismatch& e) {
    err << "backend mismatch: " << e.what() << "\n";
    return exit_mismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace epistle::cli
