#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <vector>

#include "arborium/arbor.hpp"
#include "arborium/corpus.hpp"
#include "arborium/crosscheck.hpp"
#include "arborium/error.hpp"
#include "arborium/invariants.hpp"
#include "arborium/json_io.hpp"
#include "arborium/verify.hpp"

namespace arborium::cli {

namespace {

constexpr int kDefaultOrder = 10;
constexpr std::uint64_t kDefaultSeed = 20240611;
constexpr int kDefaultCorpusCount = 24;
constexpr int kDefaultCorpusMaxSize = 6;

struct Config {
  std::string format = "text";
  // compute
  std::optional<std::string> arbor_text;
  std::optional<int> tn;
  std::vector<std::string> invariants;
  // verify
  std::string theorem = "all";
  int order = kDefaultOrder;
  // oracle-check
  std::uint64_t seed = kDefaultSeed;
  int count = kDefaultCorpusCount;
  int max_size = kDefaultCorpusMaxSize;
  bool inject_fault = false;
  // tn
  int n = 1;
};

// positive_integer() reports a floating-point range; integers deserve a plainer message.
CLI::Validator positive_integer() {
  return CLI::Validator(
      [](std::string& value) -> std::string {
        try {
          std::size_t used = 0;
          if (std::stol(value, &used) >= 1 && used == value.size()) return {};
        } catch (const std::exception&) {
        }
        return "expected a positive integer, got '" + value + "'";
      },
      "POSITIVE");
}

void add_format(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

InvariantSelection selection_from(const std::vector<std::string>& names) {
  if (names.empty()) return InvariantSelection::all();
  InvariantSelection s;
  for (const auto& name : names) {
    if (name == "zeta") s.zeta = true;
    if (name == "k") s.k = true;
    if (name == "m") s.m = true;
    if (name == "ehrhart") s.ehrhart = true;
    if (name == "laplace") s.laplace = true;
    if (name == "volume") s.volume = true;
  }
  return s;
}

int cmd_compute(const Config& cfg, std::ostream& out) {
  const Arbor t = cfg.tn ? make_tn(*cfg.tn) : parse_arbor(*cfg.arbor_text);
  const InvariantBundle b = compute_invariants(t, selection_from(cfg.invariants));
  if (cfg.format == "json") {
    out << bundle_to_json(b).dump(2) << '\n';
    return kExitSuccess;
  }
  std::vector<std::pair<std::string, std::string>> lines;
  if (b.zeta) lines.emplace_back("zeta", b.zeta->to_string());
  if (b.k_poly) lines.emplace_back("k", b.k_poly->to_string());
  if (b.m_triangle) lines.emplace_back("m", b.m_triangle->to_string());
  if (b.ehrhart) lines.emplace_back("ehrhart", b.ehrhart->to_string());
  if (b.laplace) lines.emplace_back("laplace", b.laplace->to_string());
  if (b.volume) lines.emplace_back("volume", b.volume->to_string());
  if (lines.size() == 1) {
    out << lines.front().second << '\n';
  } else {
    out << "arbor: " << serialize_arbor(t) << '\n';
    for (const auto& [name, value] : lines) out << name << ": " << value << '\n';
  }
  return kExitSuccess;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  std::vector<Theorem> theorems;
  if (cfg.theorem == "all") {
    theorems = {Theorem::zeta, Theorem::m_triangle, Theorem::ehrhart, Theorem::laplace};
  } else {
    theorems = {*parse_theorem(cfg.theorem)};
  }
  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const Theorem th : theorems) {
    const Report r = verify(th, cfg.order);
    ok = ok && r.overall;
    if (cfg.format == "json") {
      reports.push_back(report_to_json(r));
    } else {
      out << format_report(r);
    }
  }
  if (cfg.format == "json") out << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  return ok ? kExitSuccess : kExitFailure;
}

int cmd_oracle_check(const Config& cfg, std::ostream& out) {
  std::vector<Arbor> corpus;
  if (cfg.arbor_text) {
    corpus.push_back(parse_arbor(*cfg.arbor_text));
  } else {
    corpus = random_corpus(cfg.seed, cfg.count, cfg.max_size);
  }
  CrossCheckOptions options;
  options.inject_fault = cfg.inject_fault;

  bool ok = true;
  nlohmann::json results = nlohmann::json::array();
  for (const Arbor& t : corpus) {
    const CrossCheckResult r = cross_check(t, options);
    ok = ok && r.pass;
    if (cfg.format == "json") {
      nlohmann::json items = nlohmann::json::array();
      for (const auto& i : r.items) {
        items.push_back({{"name", i.name}, {"pass", i.pass}, {"recursion", i.recursion}, {"oracle", i.oracle}});
      }
      results.push_back({{"arbor", r.arbor}, {"pass", r.pass}, {"checks", items}});
      continue;
    }
    out << (r.pass ? "PASS " : "FAIL ") << r.arbor << '\n';
    for (const auto& i : r.items) {
      if (i.pass) continue;
      out << "  " << i.name << "\n    recursion: " << i.recursion << "\n    oracle:    " << i.oracle << '\n';
    }
  }
  if (cfg.format == "json") {
    nlohmann::json summary = {{"corpus_version", kCorpusVersion}, {"results", results}, {"pass", ok}};
    if (!cfg.arbor_text) summary["seed"] = cfg.seed;
    out << summary.dump(2) << '\n';
  } else {
    out << (ok ? "all " : "NOT all ") << corpus.size() << " arbors agree with their oracles";
    if (!cfg.arbor_text) out << " (seed " << cfg.seed << ", corpus v" << kCorpusVersion << ')';
    out << '\n';
  }
  return ok ? kExitSuccess : kExitFailure;
}

int cmd_tn(const Config& cfg, std::ostream& out) {
  const int n = cfg.n;
  const Arbor t = make_tn(n);
  const std::vector<std::pair<std::string, MultiPoly>> forms = {
      {"zeta(u,1)", zeta_tn_closed(n)}, {"k", k_tn_closed(n)},         {"m", m_tn_closed(n)},
      {"ehrhart", ehrhart_tn_closed(n)}, {"laplace", laplace_tn_closed(n)},
  };
  const Rat vol(n + 1, 2);
  if (cfg.format == "json") {
    nlohmann::json j = {{"arbor", serialize_arbor(t)}, {"size", n}, {"volume", vol.to_string()}};
    nlohmann::json ineqs = nlohmann::json::array();
    for (const auto& c : constraints(t)) ineqs.push_back(format_inequality(c));
    j["constraints"] = ineqs;
    for (const auto& [name, p] : forms) {
      j[name] = poly_to_json(p);
      j[name]["text"] = p.to_string();
    }
    out << j.dump(2) << '\n';
    return kExitSuccess;
  }
  out << "arbor: " << serialize_arbor(t) << '\n';
  for (const auto& c : constraints(t)) out << "constraint: " << format_inequality(c) << '\n';
  for (const auto& [name, p] : forms) out << name << ": " << p << '\n';
  out << "volume: " << vol << '\n';
  return kExitSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact invariants of arbors and their polytopes"};
  app.name(args.empty() ? "arborium" : args[0]);
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Compute invariants of one arbor");
  auto* arbor_opt = compute->add_option("--arbor", cfg.arbor_text, "Arbor text, e.g. \"{1,2}({3},{4,5})\"");
  auto* tn_opt = compute->add_option("--tn", cfg.tn, "Use t_n")->check(positive_integer());
  arbor_opt->excludes(tn_opt);
  compute->add_option("--invariant", cfg.invariants, "zeta, k, m, ehrhart, laplace, volume (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember({"zeta", "k", "m", "ehrhart", "laplace", "volume"}));
  add_format(compute, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "Check the generating series of t_n invariants");
  verify_cmd->add_option("--theorem", cfg.theorem, "zeta, m_triangle, ehrhart, laplace or all")
      ->check(CLI::IsMember({"zeta", "m_triangle", "ehrhart", "laplace", "all"}));
  verify_cmd->add_option("--order", cfg.order, "Series order N")
      ->envname("ARBORIUM_ORDER")
      ->check(positive_integer());
  add_format(verify_cmd, cfg);

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare recursions with brute-force oracles");
  oracle_cmd->add_option("--seed", cfg.seed, "Seed of the random arbor corpus");
  oracle_cmd->add_option("--count", cfg.count, "Number of random arbors")->check(positive_integer());
  oracle_cmd->add_option("--max-size", cfg.max_size, "Largest random arbor size")->check(CLI::Range(1, 8));
  oracle_cmd->add_option("--arbor", cfg.arbor_text, "Check this arbor instead of the random corpus");
  oracle_cmd->add_flag("--inject-fault", cfg.inject_fault, "Perturb the Zeta recursion (harness self-test)")
      ->group("");
  add_format(oracle_cmd, cfg);

  auto* tn_cmd = app.add_subcommand("tn", "Closed forms for t_n");
  tn_cmd->add_option("n", cfg.n, "Size of t_n")->required()->check(positive_integer());
  add_format(tn_cmd, cfg);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("arborium");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (compute->parsed() && !cfg.arbor_text && !cfg.tn) {
      throw CLI::RequiredError("compute needs --arbor or --tn");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (oracle_cmd->parsed()) return cmd_oracle_check(cfg, out);
    if (tn_cmd->parsed()) return cmd_tn(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace arborium::cli
