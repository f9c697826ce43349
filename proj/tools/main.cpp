// lctkit command-line front end.
//
// Exit codes: 0 success, 1 a verification found counterexamples (or a ledger
// check failed), 2 usage, parse, domain or structural errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "enum_cache.hpp"
#include "lctkit/json_io.hpp"
#include "lctkit/resolution_graph.hpp"
#include "lctkit/thresholds.hpp"
#include "lctkit/toric.hpp"
#include "lctkit/verifiers.hpp"
#include "output.hpp"
#include "run_config.hpp"

using namespace lctkit;
using lctkit::io::json;
namespace cli = lctkit::cli;

namespace {

constexpr const char* kVersion = "0.1.0";

enum class Style { Json, Table, Text };

Style resolve(cli::Format f, Style fallback) {
  switch (f) {
    case cli::Format::Json: return Style::Json;
    case cli::Format::Table: return fallback == Style::Text ? Style::Text : Style::Table;
    case cli::Format::Csv: return Style::Table;  // callers check csv separately
    case cli::Format::Auto: return fallback;
  }
  return fallback;
}

void emit_table(const cli::RunConfig& cfg, const cli::Table& t) {
  if (cfg.format == cli::Format::Csv) {
    cli::write_csv(std::cout, t);
  } else {
    cli::write_table(std::cout, t);
  }
}

/// Two-column rendering of the scalar fields of a JSON object.
cli::Table summary_table(const json& j) {
  cli::Table t{{"field", "value"}, {}};
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items()) t.rows.push_back({k + "." + k2, v2.is_string() ? v2.get<std::string>() : v2.dump()});
    } else if (v.is_array()) {
      t.rows.push_back({k, std::to_string(v.size()) + " entries"});
    } else {
      t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
    }
  }
  return t;
}

void emit_report(const cli::RunConfig& cfg, const json& j, Style fallback) {
  if (cfg.format == cli::Format::Csv || resolve(cfg.format, fallback) == Style::Table) {
    emit_table(cfg, summary_table(j));
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

std::uint64_t draw_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// ---------------------------------------------------------------------------
// t2

std::vector<std::string> verdict_row(const Rational& c, const MembershipVerdict& v) {
  std::string n = "";
  std::string witness = "";
  if (const auto* t1 = std::get_if<InT1>(&v)) n = t1->n.str();
  if (const auto* t2 = std::get_if<InT2>(&v)) witness = io::witness_terms_text(t2->witness.terms);
  return {c.str(), io::verdict_name(v), n, witness};
}

int cmd_t2_member(const cli::RunConfig& cfg, const std::vector<std::string>& inputs) {
  std::vector<std::pair<Rational, MembershipVerdict>> results;
  for (const auto& text : inputs) {
    Rational c = Rational::parse(text);
    auto v = t2_member(c);
    results.emplace_back(std::move(c), std::move(v));
  }
  if (cfg.format == cli::Format::Csv || cfg.format == cli::Format::Table) {
    cli::Table t{{"c", "verdict", "n", "witness"}, {}};
    for (const auto& [c, v] : results) t.rows.push_back(verdict_row(c, v));
    emit_table(cfg, t);
    return 0;
  }
  if (results.size() == 1) {
    std::cout << io::verdict_to_json(results[0].first, results[0].second).dump(2) << '\n';
  } else {
    json arr = json::array();
    for (const auto& [c, v] : results) arr.push_back(io::verdict_to_json(c, v));
    std::cout << arr.dump(2) << '\n';
  }
  return 0;
}

struct EnumArgs {
  std::string lo = "0";
  std::string hi = "1";
  std::optional<std::int64_t> max_den;
  bool open_lo = false;
  bool open_hi = false;
};

json rationals_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

/// Enumeration result as JSON; served from the cache when an entry exists.
json enumeration(const cli::RunConfig& cfg, const EnumArgs& a) {
  const Interval range{Rational::parse(a.lo), Rational::parse(a.hi), !a.open_lo, !a.open_hi};
  const std::int64_t max_den = a.max_den.value_or(cfg.enum_max_den);
  const json key{{"lo", range.lo.str()},
                 {"hi", range.hi.str()},
                 {"closed_lo", range.closed_lo},
                 {"closed_hi", range.closed_hi},
                 {"max_den", max_den}};
  const cli::EnumCache cache(cfg.cache_dir);
  if (cfg.cache) {
    if (auto hit = cache.load(key)) return *hit;
  }
  const auto points = t2_enumerate_verdicts(range, max_den, cfg.workers);
  json members = json::array();
  std::vector<Rational> values;
  for (const auto& p : points) {
    if (!is_member(p.verdict)) continue;
    values.push_back(p.c);
    json row = io::verdict_to_json(p.c, p.verdict);
    if (p.c > Rational(1, 2)) {
      const auto n = t2_form_check(p.c);
      row["n_form"] = n ? json(*n) : json(nullptr);
    } else {
      row["n_form"] = nullptr;
    }
    members.push_back(std::move(row));
  }
  const auto disc = upper_half_form_discrepancy(values);
  json result{{"interval", key},
              {"count", members.size()},
              {"members", members},
              {"form_discrepancy",
               {{"only_in_n_ge_2", rationals_json(disc.only_in_n_ge_2)},
                {"t1_outside_both", rationals_json(disc.t1_outside_both)}}}};
  if (cfg.cache) cache.store(key, result);
  return result;
}

int cmd_t2_enum(const cli::RunConfig& cfg, const EnumArgs& a) {
  const json result = enumeration(cfg, a);
  if (resolve(cfg.format, Style::Table) == Style::Json && cfg.format != cli::Format::Csv) {
    std::cout << result.dump(2) << '\n';
    return 0;
  }
  cli::Table t{{"c", "verdict", "n_form", "witness"}, {}};
  for (const auto& m : result.at("members")) {
    std::string witness;
    if (m.contains("witness")) {
      std::vector<CoeffTerm> terms;
      for (const auto& w : m.at("witness")) terms.push_back({w.at("m").get<std::int64_t>(), w.at("k").get<std::int64_t>()});
      witness = io::witness_terms_text(terms);
    } else if (m.contains("n")) {
      witness = "n=" + (m.at("n").is_string() ? m.at("n").get<std::string>() : m.at("n").dump());
    }
    t.rows.push_back({m.at("c").get<std::string>(), m.at("verdict").get<std::string>(),
                      m.at("n_form").is_null() ? "" : m.at("n_form").dump(), witness});
  }
  emit_table(cfg, t);
  return 0;
}

int cmd_t2_accum(const cli::RunConfig& cfg, const EnumArgs& a, const std::vector<std::string>& targets_text,
                 const std::string& delta_text) {
  const json result = enumeration(cfg, a);
  std::vector<Rational> values;
  for (const auto& m : result.at("members")) values.push_back(Rational::parse(m.at("c").get<std::string>()));
  std::vector<Rational> targets;
  for (const auto& t : targets_text) targets.push_back(Rational::parse(t));
  const Rational delta = Rational::parse(delta_text);
  const auto records = accumulation_report(values, targets, delta);
  if (resolve(cfg.format, Style::Table) == Style::Json && cfg.format != cli::Format::Csv) {
    json arr = json::array();
    for (const auto& r : records) {
      arr.push_back({{"target", r.target.str()},
                     {"count", r.count},
                     {"nearest", r.nearest ? json(r.nearest->str()) : json(nullptr)}});
    }
    std::cout << json{{"interval", result.at("interval")}, {"delta", delta.str()}, {"members", values.size()},
                      {"targets", arr}}
                     .dump(2)
              << '\n';
    return 0;
  }
  cli::Table t{{"target", "count", "nearest"}, {}};
  for (const auto& r : records) {
    t.rows.push_back({r.target.str(), std::to_string(r.count), r.nearest ? r.nearest->str() : ""});
  }
  emit_table(cfg, t);
  return 0;
}

// ---------------------------------------------------------------------------
// germ, lct

struct GermArgs {
  std::int64_t m = 1;
  std::int64_t q = 1;
  std::string l1 = "0";
  std::string l2 = "0";
  std::string v1;
  std::string v2;
  bool codim1 = false;
};

void emit_value(const cli::RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.format == cli::Format::Json) {
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == cli::Format::Csv) {
    cli::Table t{{}, {{}}};
    for (const auto& [k, v] : j.items()) {
      t.header.push_back(k);
      t.rows[0].push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    cli::write_csv(std::cout, t);
  } else {
    std::cout << text << '\n';
  }
}

int cmd_germ_hj(const cli::RunConfig& cfg, const GermArgs& a) {
  const auto chain = hj_expand(a.m, a.q);
  std::string text;
  for (std::size_t i = 0; i < chain.size(); ++i) text += (i ? " " : "") + std::to_string(chain[i]);
  emit_value(cfg, {{"m", a.m}, {"q", a.q}, {"chain", chain}}, text);
  return 0;
}

int cmd_germ_mld(const cli::RunConfig& cfg, const GermArgs& a) {
  const CyclicQuotientGerm germ(a.m, a.q);
  const AxesBoundary b{Rational::parse(a.l1), Rational::parse(a.l2)};
  const auto r = mld_axes(germ, b, a.codim1);
  emit_value(cfg,
             {{"m", a.m}, {"q", a.q}, {"lambda1", b.lambda1.str()}, {"lambda2", b.lambda2.str()},
              {"include_codim1", a.codim1}, {"mld", r.value.str()}, {"argmin", io::lattice_vector_to_json(r.argmin)}},
             r.value.str());
  return 0;
}

int cmd_germ_disc(const cli::RunConfig& cfg, const GermArgs& a) {
  const CyclicQuotientGerm germ(a.m, a.q);
  const AxesBoundary b{Rational::parse(a.l1), Rational::parse(a.l2)};
  const LatticeVector v{Rational::parse(a.v1), Rational::parse(a.v2)};
  const Rational d = toric_discrepancy(germ, b, v);
  emit_value(cfg,
             {{"m", a.m}, {"q", a.q}, {"lambda1", b.lambda1.str()}, {"lambda2", b.lambda2.str()},
              {"v", io::lattice_vector_to_json(v)}, {"discrepancy", d.str()}},
             d.str());
  return 0;
}

const char* binding_name(LctResult::Binding b) {
  switch (b) {
    case LctResult::Binding::Curve: return "curve";
    case LctResult::Binding::Component: return "component";
    case LctResult::Binding::None: return "none";
  }
  return "?";
}

int cmd_lct_graph(const cli::RunConfig& cfg, const std::string& path, const std::vector<std::int64_t>& mults) {
  const auto graph = io::load_graph(path);
  const auto r = lct_from_graph(graph, mults);
  std::string text = r.value.str() + "\nbinding: " + binding_name(r.binding);
  if (r.binding != LctResult::Binding::None) text += " " + std::to_string(r.binding_id);
  if (r.capped) text += " (capped at 1)";
  emit_value(cfg,
             {{"lct", r.value.str()}, {"binding", binding_name(r.binding)}, {"binding_id", r.binding_id},
              {"capped", r.capped}},
             text);
  return 0;
}

// ---------------------------------------------------------------------------
// verify, ledger

int finish_report(const cli::RunConfig& cfg, const json& report) {
  emit_report(cfg, report, Style::Json);
  return report.at("counterexamples").empty() ? 0 : 1;
}

int cmd_verify_p1(const cli::RunConfig& cfg, std::int64_t N, std::int64_t max_m, std::int64_t max_den) {
  const auto r = lemma_p1_scan(N, max_m, max_den, cfg.workers);
  json cex = json::array();
  for (const auto& b : r.counterexamples) cex.push_back(rationals_json(b));
  return finish_report(cfg, {{"lemma", "lemma-p1"},
                             {"params", {{"N", N}, {"max_m", max_m}, {"max_den", max_den}}},
                             {"instances_checked", r.instances_checked},
                             {"counterexamples", cex}});
}

int cmd_verify_pair(const cli::RunConfig& cfg, std::int64_t samples, std::uint64_t seed, std::int64_t max_m) {
  const auto r = pair_discr_sample(static_cast<std::size_t>(samples), seed, max_m);
  json cex = json::array();
  for (const auto& inst : r.counterexamples) cex.push_back(io::pair_instance_to_json(inst));
  return finish_report(cfg, {{"lemma", "pair-discr"},
                             {"params", {{"samples", samples}, {"max_m", max_m}}},
                             {"seed", seed},
                             {"instances_checked", r.instances_checked},
                             {"hypothesis_held", r.hypothesis_held},
                             {"counterexamples", cex}});
}

int cmd_verify_lct2(const cli::RunConfig& cfg, std::int64_t N, std::int64_t max_m, std::int64_t max_den) {
  const auto r = lct2_scan(N, max_m, max_den, cfg.workers);
  json cex = json::array();
  for (const auto& [germ, b] : r.violations) {
    cex.push_back({{"m", germ.m()}, {"q", germ.q()}, {"lambda1", b.lambda1.str()}, {"lambda2", b.lambda2.str()}});
  }
  return finish_report(cfg, {{"lemma", "lct2"},
                             {"params", {{"N", N}, {"max_m", max_m}, {"max_den", max_den}}},
                             {"scope", Lct2Verdict::scope},
                             {"instances_checked", r.instances_checked},
                             {"klt_instances", r.klt_instances},
                             {"counterexamples", cex}});
}

int cmd_verify_eq_s(const cli::RunConfig& cfg, std::int64_t count, std::uint64_t seed) {
  const auto r = eq_s_roundtrip(static_cast<std::size_t>(count), seed);
  json cex = json::array();
  for (const auto& l : r.failures) cex.push_back(io::ledger_to_json(l));
  return finish_report(cfg, {{"lemma", "eq-s"},
                             {"params", {{"random", count}}},
                             {"seed", seed},
                             {"instances_checked", r.instances_checked},
                             {"c_unique", r.c_unique},
                             {"c_identically_satisfied", r.c_identically_satisfied},
                             {"all_r_zero", r.all_r_zero},
                             {"counterexamples", cex}});
}

struct LedgerArgs {
  std::int64_t pa = 0;
  std::string gamma_sq = "1";
  std::string gamma = "1";
  std::string c = "0";
  std::vector<std::string> terms;
  std::string solve = "check";
};

DiffTerm parse_term(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("Diff terms are written s:r, got '" + text + "'");
  try {
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("Diff terms are written s:r, got '" + text + "'");
  }
}

int cmd_ledger(const cli::RunConfig& cfg, const LedgerArgs& a) {
  EqSLedger l;
  l.pa = a.pa;
  l.gamma_sq = Rational::parse(a.gamma_sq);
  l.gamma = Rational::parse(a.gamma);
  l.c = Rational::parse(a.c);
  for (const auto& t : a.terms) l.diff_terms.push_back(parse_term(t));
  json out{{"ledger", io::ledger_to_json(l)}, {"mode", a.solve}};
  int code = 0;
  if (a.solve == "check") {
    l.validate();
    const bool holds = adjunction_holds(l);
    out["lhs"] = l.lhs().str();
    out["rhs"] = l.rhs().str();
    out["holds"] = holds;
    code = holds ? 0 : 1;
  } else {
    const SolveResult s = a.solve == "c" ? solve_for_c(l) : solve_for_gamma(l);
    out["kind"] = to_string(s.kind);
    out["value"] = s.value ? json(s.value->str()) : json(nullptr);
  }
  emit_report(cfg, out, Style::Json);
  return code;
}

int cmd_config_show(const cli::RunConfig& cfg) {
  if (cfg.format == cli::Format::Json) {
    json j = json::object();
    for (const auto& [k, v] : cfg.entries()) j[k] = {{"value", v}, {"source", cfg.sources.at(k)}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  cli::Table t{{"key", "value", "source"}, {}};
  for (const auto& [k, v] : cfg.entries()) t.rows.push_back({k, v, cfg.sources.at(k)});
  if (cfg.format == cli::Format::Csv) {
    cli::write_csv(std::cout, t);
  } else {
    cli::write_table(std::cout, t);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for two-dimensional log canonical thresholds", "lctkit"};
  app.set_version_flag("--version", std::string("lctkit ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::string> format_flag;
  std::optional<unsigned> workers_flag;
  std::optional<std::string> cache_dir_flag;
  bool no_cache = false;
  app.add_option("--config", config_path, "key = value config file (also LCTKIT_CONFIG)");
  app.add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"auto", "json", "csv", "table"}));
  app.add_option("--workers", workers_flag, "Worker threads (also LCTKIT_WORKERS)")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache-dir", cache_dir_flag, "Enumeration cache directory (also LCTKIT_CACHE_DIR)");
  app.add_flag("--no-cache", no_cache, "Neither read nor write the enumeration cache");

  // t2
  auto* t2 = app.add_subcommand("t2", "Membership and enumeration of thresholds");
  t2->require_subcommand(1);
  std::vector<std::string> member_inputs;
  auto* t2_member_cmd = t2->add_subcommand("member", "Decide membership of c in (0,1]");
  t2_member_cmd->add_option("c", member_inputs, "Rationals p/q")->required();

  EnumArgs enum_args;
  auto add_interval = [&](CLI::App* sub) {
    sub->add_option("--lo", enum_args.lo, "Lower end")->capture_default_str();
    sub->add_option("--hi", enum_args.hi, "Upper end")->capture_default_str();
    sub->add_option("--max-den", enum_args.max_den, "Largest reduced denominator");
    sub->add_flag("--open-lo", enum_args.open_lo, "Exclude the lower end");
    sub->add_flag("--open-hi", enum_args.open_hi, "Exclude the upper end");
  };
  auto* t2_enum_cmd = t2->add_subcommand("enum", "List members of an interval");
  add_interval(t2_enum_cmd);
  std::vector<std::string> accum_targets;
  std::string accum_delta = "1/50";
  auto* t2_accum_cmd = t2->add_subcommand("accum", "Count members near target points");
  add_interval(t2_accum_cmd);
  t2_accum_cmd->add_option("--target", accum_targets, "Target point (repeatable)")->required();
  t2_accum_cmd->add_option("--delta", accum_delta, "Radius")->capture_default_str();

  // germ
  GermArgs germ_args;
  auto* germ = app.add_subcommand("germ", "Cyclic quotient germ 1/m(1,q)");
  germ->require_subcommand(1);
  auto add_germ = [&](CLI::App* sub) {
    sub->add_option("m", germ_args.m, "Order")->required();
    sub->add_option("q", germ_args.q, "Weight")->required();
  };
  auto add_lambda = [&](CLI::App* sub) {
    sub->add_option("--l1", germ_args.l1, "Coefficient of the axis of the ray (1,0)")->capture_default_str();
    sub->add_option("--l2", germ_args.l2, "Coefficient of the axis of the ray (0,1)")->capture_default_str();
  };
  auto* germ_hj = germ->add_subcommand("hj", "Hirzebruch-Jung expansion of m/q");
  add_germ(germ_hj);
  auto* germ_mld = germ->add_subcommand("mld", "Minimal discrepancy over toric valuations");
  add_germ(germ_mld);
  add_lambda(germ_mld);
  germ_mld->add_flag("--codim1", germ_args.codim1, "Include the two axes");
  auto* germ_disc = germ->add_subcommand("disc", "Discrepancy of the toric valuation v");
  add_germ(germ_disc);
  add_lambda(germ_disc);
  germ_disc->add_option("--v1", germ_args.v1, "First coordinate")->required();
  germ_disc->add_option("--v2", germ_args.v2, "Second coordinate")->required();

  // lct
  std::string graph_path;
  std::vector<std::int64_t> graph_mults;
  auto* lct = app.add_subcommand("lct", "Log canonical thresholds");
  lct->require_subcommand(1);
  auto* lct_graph = lct->add_subcommand("graph", "lct from a resolution graph JSON file");
  lct_graph->add_option("file", graph_path, "Graph file")->required();
  lct_graph->add_option("--mult", graph_mults, "Component multiplicities (default: the graph's ends)");

  // verify
  std::int64_t N = 6;
  std::optional<std::int64_t> max_m, max_den, samples;
  std::optional<std::uint64_t> seed;
  auto* verify = app.add_subcommand("verify", "Batch verification; exit 1 on counterexamples");
  verify->require_subcommand(1);
  auto* v_p1 = verify->add_subcommand("lemma-p1", "Exhaustive scan of boundaries on P^1");
  v_p1->add_option("--N", N, "N >= 6")->capture_default_str();
  v_p1->add_option("--max-m", max_m, "Largest m in 1 - 1/m")->check(CLI::PositiveNumber);
  v_p1->add_option("--max-den", max_den, "Largest denominator above 1/2 + 1/N")->check(CLI::PositiveNumber);
  auto* v_pair = verify->add_subcommand("pair-discr", "Random toric pairs against the discrepancy bound");
  v_pair->add_option("--samples", samples, "Number of instances")->check(CLI::PositiveNumber);
  v_pair->add_option("--seed", seed, "Seed (drawn and reported when omitted)");
  v_pair->add_option("--max-m", max_m, "Largest germ order")->check(CLI::PositiveNumber);
  auto* v_lct2 = verify->add_subcommand("lct2", "Rounded boundaries on toric germs stay lc");
  v_lct2->add_option("--N", N, "N >= 6")->capture_default_str();
  v_lct2->add_option("--max-m", max_m, "Largest germ order")->check(CLI::PositiveNumber);
  v_lct2->add_option("--max-den", max_den, "Largest coefficient denominator")->check(CLI::PositiveNumber);
  auto* v_eqs = verify->add_subcommand("eq-s", "Random adjunction ledgers round trip");
  v_eqs->add_option("--random", samples, "Number of ledgers")->check(CLI::PositiveNumber);
  v_eqs->add_option("--seed", seed, "Seed (drawn and reported when omitted)");

  // ledger
  LedgerArgs ledger_args;
  auto* ledger = app.add_subcommand("ledger", "Adjunction ledger");
  ledger->require_subcommand(1);
  auto* ledger_eqs = ledger->add_subcommand("eq-s", "Check or solve one ledger");
  ledger_eqs->add_option("--pa", ledger_args.pa, "Arithmetic genus")->capture_default_str();
  ledger_eqs->add_option("--gamma-sq", ledger_args.gamma_sq, "Self-intersection")->capture_default_str();
  ledger_eqs->add_option("--gamma", ledger_args.gamma, "Coefficient gamma")->capture_default_str();
  ledger_eqs->add_option("--c", ledger_args.c, "Threshold c")->capture_default_str();
  ledger_eqs->add_option("--term", ledger_args.terms, "Diff term s:r (repeatable)");
  ledger_eqs->add_option("--solve", ledger_args.solve, "check, c or gamma")
      ->check(CLI::IsMember({"check", "c", "gamma"}))
      ->capture_default_str();

  // config
  auto* config = app.add_subcommand("config", "Configuration");
  config->require_subcommand(1);
  auto* config_show = config->add_subcommand("show", "Print effective settings and their sources");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cli::RunConfig cfg = cli::RunConfig::defaults();
    if (config_path.empty()) {
      if (const char* env = std::getenv("LCTKIT_CONFIG"); env && *env) config_path = env;
    }
    if (!config_path.empty()) cfg.load_file(config_path);
    cfg.apply_env();
    if (format_flag) cfg.set("format", *format_flag, "flag");
    if (workers_flag) cfg.set("workers", std::to_string(*workers_flag), "flag");
    if (cache_dir_flag) cfg.set("cache_dir", *cache_dir_flag, "flag");
    if (no_cache) cfg.set("cache", "false", "flag");
    cfg.validate();

    if (t2_member_cmd->parsed()) return cmd_t2_member(cfg, member_inputs);
    if (t2_enum_cmd->parsed()) return cmd_t2_enum(cfg, enum_args);
    if (t2_accum_cmd->parsed()) return cmd_t2_accum(cfg, enum_args, accum_targets, accum_delta);
    if (germ_hj->parsed()) return cmd_germ_hj(cfg, germ_args);
    if (germ_mld->parsed()) return cmd_germ_mld(cfg, germ_args);
    if (germ_disc->parsed()) return cmd_germ_disc(cfg, germ_args);
    if (lct_graph->parsed()) return cmd_lct_graph(cfg, graph_path, graph_mults);
    if (v_p1->parsed()) return cmd_verify_p1(cfg, N, max_m.value_or(cfg.p1_max_m), max_den.value_or(cfg.p1_max_den));
    if (v_pair->parsed()) {
      return cmd_verify_pair(cfg, samples.value_or(cfg.pair_samples), seed.value_or(draw_seed()),
                             max_m.value_or(cfg.pair_max_m));
    }
    if (v_lct2->parsed()) {
      return cmd_verify_lct2(cfg, N, max_m.value_or(cfg.lct2_max_m), max_den.value_or(cfg.lct2_max_den));
    }
    if (v_eqs->parsed()) return cmd_verify_eq_s(cfg, samples.value_or(cfg.eq_s_samples), seed.value_or(draw_seed()));
    if (ledger_eqs->parsed()) return cmd_ledger(cfg, ledger_args);
    if (config_show->parsed()) return cmd_config_show(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "malformed data: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
