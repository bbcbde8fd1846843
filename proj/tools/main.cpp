#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>

#include "slocc/catalog.hpp"
#include "slocc/classify.hpp"
#include "slocc/conjugacy.hpp"
#include "slocc/verify.hpp"
#include "state_io.hpp"

namespace {

using namespace slocc;
using cli::Json;

enum Exit : int {
  kOk = 0,
  kNo = 1,
  kUnknown = 2,
  kPartial = 3,
  kUsage = 64,
  kDataError = 65,
};

struct Config {
  std::string format = "json";
  double limits_time = 60;
  unsigned limits_degree = 12;
  bool time_given = false;
  std::vector<std::string> inputs;
  std::string group = "g0";
  bool witness = false;
  std::string level = "g0";
  std::string name;
  std::vector<std::string> suites;
};

ConjugacyLimits limits_of(const Config& cfg) {
  ConjugacyLimits limits;
  limits.groebner.time_budget = std::chrono::duration<double>(cfg.limits_time);
  limits.groebner.max_degree = cfg.limits_degree;
  limits.want_witness = cfg.witness;
  return limits;
}

void emit(const Config& cfg, const Json& doc) {
  if (cfg.format == "text")
    std::cout << cli::render_text(doc);
  else
    std::cout << doc.dump(2) << "\n";
}

int cmd_classify(const Config& cfg) {
  ClassificationReport r = classify_state(cli::read_state(cfg.inputs.at(0)), limits_of(cfg));
  emit(cfg, cli::report_json(r));
  return r.exactness == Exactness::exact ? kOk : kPartial;
}

int cmd_invariants(const Config& cfg) {
  InvariantSignature sig = evaluate_signature(cli::read_state(cfg.inputs.at(0)));
  if (cfg.format == "text")
    std::cout << sig.H.to_string() << "\n" << sig.L.to_string() << "\n" << sig.M.to_string() << "\n" << sig.D.to_string() << "\n";
  else
    emit(cfg, cli::signature_json(sig));
  return kOk;
}

int cmd_conjugate(const Config& cfg) {
  StateVector a = cli::read_state(cfg.inputs.at(0));
  StateVector b = cli::read_state(cfg.inputs.at(1));
  ConjugacyVerdict v = cfg.group == "s" ? s_conjugate(a, b, limits_of(cfg)) : g0_conjugate(a, b, limits_of(cfg));
  if (cfg.format == "text") {
    std::cout << to_string(v.answer) << "\n";
    if (v.permutation) std::cout << "permutation: " << to_string(*v.permutation) << "\n";
    if (v.witness)
      for (int k = 0; k < 4; ++k) std::cout << "g" << k + 1 << ": " << (*v.witness)[k].to_string() << "\n";
  } else {
    emit(cfg, cli::verdict_json(v));
  }
  return v.answer == Answer::yes ? kOk : v.answer == Answer::no ? kNo : kUnknown;
}

int cmd_catalog_list(const Config& cfg) {
  Level level = cfg.level == "s" ? Level::S : Level::G0;
  const auto& entries = Catalog::instance().entries(level);
  if (cfg.format == "text") {
    for (const auto& e : entries) std::cout << e.name << "  " << e.description << "  [" << e.anchor << "]\n";
    return kOk;
  }
  Json doc = Json::array();
  for (const auto& e : entries) doc.push_back(cli::entry_json(e, false));
  emit(cfg, doc);
  return kOk;
}

int cmd_catalog_show(const Config& cfg) {
  const CatalogEntry* e = Catalog::instance().find(cfg.name);
  if (!e) {
    std::cerr << "unknown catalog entry: " << cfg.name << "\n";
    return kDataError;
  }
  emit(cfg, cli::entry_json(*e, true));
  return kOk;
}

int cmd_verify(const Config& cfg) {
  std::vector<std::string> names = cfg.suites;
  if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) names = suite_names();
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end()) {
      std::cerr << "unknown suite: " << n << "\n";
      return kUsage;
    }
  ConjugacyLimits limits = limits_of(cfg);
  limits.want_witness = false;
  std::vector<SuiteReport> reports;
  for (const auto& n : names) {
    ConjugacyLimits suite_limits = limits;
    if (n == "stable" && !cfg.time_given) suite_limits.groebner.time_budget = std::chrono::duration<double>(120);
    reports.push_back(run_suite(n, suite_limits));
  }
  Outcome worst = Outcome::pass;
  Json doc;
  Json suites = Json::array();
  for (const auto& r : reports) {
    suites.push_back(cli::suite_json(r));
    if (r.outcome() == Outcome::fail || (r.outcome() == Outcome::partial && worst == Outcome::pass)) worst = r.outcome();
  }
  doc["outcome"] = to_string(worst);
  doc["suites"] = suites;
  if (cfg.format == "text") {
    for (const auto& r : reports) {
      std::cout << r.suite << ": " << to_string(r.outcome()) << "\n";
      for (const auto& c : r.checks)
        std::cout << "  [" << to_string(c.outcome) << "] " << c.name << " (" << c.anchor << "): " << c.detail << "\n";
    }
    std::cout << "overall: " << to_string(worst) << "\n";
  } else {
    emit(cfg, doc);
  }
  return worst == Outcome::pass ? kOk : worst == Outcome::partial ? kPartial : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Exact classification of four-qubit states under SL(2,C)^4 and qubit permutations"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--limits-time", cfg.limits_time, "Time budget per Groebner computation, seconds")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { cfg.time_given = true; });
    sub->add_option("--limits-degree", cfg.limits_degree, "Maximum S-pair degree")->check(CLI::PositiveNumber);
  };

  auto* classify = app.add_subcommand("classify", "Classify a state");
  classify->add_option("state", cfg.inputs, "State file")->required()->expected(1);
  add_common(classify);

  auto* invariants = app.add_subcommand("invariants", "Print the invariants H, L, M, D");
  invariants->add_option("state", cfg.inputs, "State file")->required()->expected(1);
  add_common(invariants);

  auto* conjugate = app.add_subcommand("conjugate", "Decide whether two states are conjugate");
  conjugate->add_option("states", cfg.inputs, "Two state files")->required()->expected(2);
  conjugate->add_option("--group", cfg.group, "g0 = SL(2)^4, s = with qubit permutations")
      ->check(CLI::IsMember({"g0", "s"}));
  conjugate->add_flag("--witness", cfg.witness, "Search for a conjugating element");
  add_common(conjugate);

  auto* catalog = app.add_subcommand("catalog", "Browse the classification tables");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List classes");
  list->add_option("--level", cfg.level, "g0 or s")->transform(CLI::IsMember({"g0", "s"}, CLI::ignore_case));
  add_common(list);
  auto* show = catalog->add_subcommand("show", "Show one class");
  show->add_option("name", cfg.name, "Class name, e.g. nilpotent/31, mixed/7,2, N7, MT7.2")->required();
  add_common(show);

  auto* verify = app.add_subcommand("verify", "Replay the table-level checks");
  verify->add_option("--suite", cfg.suites, "Suite name, repeatable")
      ->check(CLI::IsMember({"algebra", "weyl", "invariants", "catalog", "nilpotent", "jordan", "roundtrip", "stable", "all"}));
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(cfg);
    if (*invariants) return cmd_invariants(cfg);
    if (*conjugate) return cmd_conjugate(cfg);
    if (*list) return cmd_catalog_list(cfg);
    if (*show) return cmd_catalog_show(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}
