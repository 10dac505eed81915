#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "kkit/acceptance.hpp"
#include "kkit/alternation.hpp"
#include "kkit/io.hpp"
#include "kkit/kneser.hpp"
#include "kkit/matchcolor.hpp"
#include "kkit/ramsey.hpp"
#include "kkit/tucker.hpp"

namespace kkit::cli {
namespace {

using io::json;

struct Flags {
  std::string input;
  std::string tau;
  std::string coloring;
  std::optional<int> p, r, n;
  std::vector<int> s, x, gamma, sigma, only;
  bool verify = false;
  bool json_out = false;
  int threads = 1;
  std::optional<std::int64_t> budget_ms;
};

// Everything a handler produces. `results` must not depend on the thread
// count; node counts and similar go to `stats`.
struct Report {
  json inputs = json::object();
  json results = json::object();
  json stats = json::object();
  std::vector<std::string> human;
  bool budget_exceeded = false;
  int exit = kOk;
};

[[noreturn]] void input_error(const std::string& what) { throw std::invalid_argument(what); }

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

std::string join(std::span<const int> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

Budget budget_of(const Flags& f) { return f.budget_ms ? Budget::milliseconds(*f.budget_ms) : Budget{}; }
SearchOptions search_options(const Flags& f) { return {f.threads, budget_of(f)}; }

AlternationOptions alternation_options(const Flags& f) {
  AlternationOptions o;
  o.threads = f.threads;
  o.budget = budget_of(f);
  return o;
}

int require(const std::optional<int>& v, const char* name) {
  if (!v) input_error(std::string("missing required flag --") + name);
  return *v;
}

Hypergraph load_hypergraph(const Flags& f, Report& rep) {
  if (f.input.empty()) input_error("missing required flag --input");
  const Hypergraph h = io::hypergraph_from_json(io::read_json_file(f.input));
  rep.inputs["hypergraph"] = io::to_json(h);
  return h;
}

ColorFrequencyMap load_tau(const Flags& f, Report& rep) {
  if (f.tau.empty()) input_error("missing required flag --tau");
  const ColorFrequencyMap tau = io::tau_from_json(io::read_json_file(f.tau));
  rep.inputs["tau"] = io::to_json(tau);
  return tau;
}

RamseyInstance load_instance(const Flags& f, Report& rep) {
  const int r = require(f.r, "r");
  if (f.s.empty()) input_error("missing required flag --s");
  const RamseyInstance inst(r, f.s);
  rep.inputs["instance"] = io::to_json(inst);
  return inst;
}

// alt_p of a vector, or alt_r(H) of a hypergraph (optionally for a fixed σ).
void cmd_alt(const Flags& f, Report& rep) {
  if (!f.x.empty()) {
    const int p = require(f.p, "p");
    std::vector<std::uint8_t> entries;
    for (std::size_t i = 0; i < f.x.size(); ++i) {
      if (f.x[i] < 0 || f.x[i] > p) input_error("field 'x[" + std::to_string(i) + "]': must lie in [0, p]");
      entries.push_back(static_cast<std::uint8_t>(f.x[i]));
    }
    const SignedVector x(p, entries);
    rep.inputs["vector"] = io::to_json(x);
    rep.results["alt"] = alt(x);
    rep.human.push_back(std::to_string(alt(x)));
    return;
  }
  const Hypergraph h = load_hypergraph(f, rep);
  if (f.p && f.r && *f.p != *f.r) input_error("--p and --r disagree");
  const int p = f.r ? *f.r : require(f.p, "r");
  rep.inputs["p"] = p;
  if (!f.sigma.empty()) {
    const VertexOrdering sigma(f.sigma, h.vertex_count());
    rep.inputs["sigma"] = io::to_json(sigma);
    const auto res = alt_with_ordering(h, p, sigma);
    rep.results["alt_sigma"] = res.value;
    rep.results["witness"] = io::to_json(res.witness)["x"];
    rep.human.push_back(std::to_string(res.value));
    return;
  }
  const auto res = alternation_number(h, p, alternation_options(f));
  rep.results["alt"] = res.value;
  rep.results["ordering"] = io::to_json(res.ordering);
  rep.results["witness"] = io::to_json(res.witness)["x"];
  rep.stats["nodes"] = res.nodes;
  if (alt_with_ordering(h, p, res.ordering).value != res.value || !is_admissible(h, res.ordering, res.witness) ||
      alt(res.witness) != res.value)
    rep.exit = kViolation;
  rep.human.push_back(std::to_string(res.value));
  rep.human.push_back("ordering " + join(res.ordering.map()));
}

void cmd_chi(const Flags& f, Report& rep) {
  const Hypergraph h = load_hypergraph(f, rep);
  const auto res = chromatic_number(h, budget_of(f));
  rep.results["chi"] = io::to_json(res.chromatic);
  rep.results["coloring"] = res.colors;
  rep.stats["nodes"] = res.nodes;
  if (!res.chromatic.is_infinite() && !is_proper_coloring(h, res.colors)) rep.exit = kViolation;
  rep.human.push_back(res.chromatic.to_string());
  if (!res.colors.empty()) rep.human.push_back("coloring " + join(res.colors));
}

void cmd_kneser(const Flags& f, Report& rep) {
  const Hypergraph h = load_hypergraph(f, rep);
  const int r = require(f.r, "r");
  rep.inputs["r"] = r;
  const auto kg = kneser_power(h, r);
  rep.results["kneser"] = io::to_json(kg.graph);
  rep.results["correspondence"] = io::correspondence_table(kg);
  rep.human.push_back(std::to_string(kg.graph.vertex_count()) + " vertices, " +
                      std::to_string(kg.graph.edge_count()) + " edges");
  if (!f.verify) return;
  const auto chi = chromatic_number(kg.graph, budget_of(f));
  const int a = alternation_number(h, r, alternation_options(f)).value;
  const auto bound = theorem1_lower_bound(h.vertex_count(), a, r);
  const bool holds = ExtendedNat(bound) <= chi.chromatic;
  rep.results["chi"] = io::to_json(chi.chromatic);
  rep.results["coloring"] = chi.colors;
  rep.results["alt"] = a;
  rep.results["lower_bound"] = bound;
  rep.results["bound_holds"] = holds;
  if (!holds) rep.exit = kViolation;
  rep.human.push_back("chi " + chi.chromatic.to_string() + " >= lower bound " + std::to_string(bound) +
                      (holds ? "" : "  VIOLATED"));
}

void cmd_chi_m(const Flags& f, Report& rep) {
  const Hypergraph h = load_hypergraph(f, rep);
  const ColorFrequencyMap tau = load_tau(f, rep);
  MatchingChromaticResult res;
  try {
    res = matching_chromatic_number(h, tau, search_options(f));
  } catch (const MatchingChromaticBudgetExceeded& e) {
    rep.results["chi_m"] = nullptr;
    rep.results["lower"] = e.lower;
    rep.results["upper"] = io::to_json(e.upper);
    rep.budget_exceeded = true;
    rep.exit = kBudgetExceeded;
    rep.human.push_back("unknown, between " + std::to_string(e.lower) + " and " + e.upper.to_string());
    return;
  }
  rep.results["chi_m"] = io::to_json(res.value);
  rep.results["witness"] = res.witness ? io::to_json(*res.witness)["colors"] : json(nullptr);
  rep.stats["nodes"] = res.nodes;
  rep.human.push_back(res.value.to_string());
  if (res.witness && !is_matching_coloring(*res.witness, tau)) rep.exit = kViolation;

  const int r = tau.bound();
  AlternationOptions ao = alternation_options(f);
  if (r >= 2 && h.vertex_count() <= ao.max_vertices) {
    const int a = alternation_number(h, r, ao).value;
    const auto bound = theorem3_lower_bound(h.vertex_count(), a, tau, h.edge_count() > 0);
    const bool holds = bound <= res.value;
    rep.results["alt"] = a;
    rep.results["lower_bound"] = io::to_json(bound);
    rep.results["bound_holds"] = holds;
    if (!holds) rep.exit = kViolation;
    rep.human.push_back("lower bound " + bound.to_string() + (holds ? "" : "  VIOLATED"));
  } else {
    rep.results["lower_bound"] = nullptr;
  }
}

void cmd_ramsey_formula(const Flags& f, Report& rep) {
  const RamseyInstance inst = load_instance(f, rep);
  rep.results["formula"] = formula_value(inst);
  rep.human.push_back(std::to_string(formula_value(inst)));
  if (f.p) {
    rep.inputs["p"] = *f.p;
    const auto [lo, hi] = proposition8_bounds(inst, *f.p);
    rep.results["bounds"] = {lo, hi};
    rep.human.push_back("bounds " + std::to_string(lo) + " " + std::to_string(hi));
  }
}

void cmd_ramsey_check(const Flags& f, Report& rep) {
  const RamseyInstance inst = load_instance(f, rep);
  const int n = require(f.n, "n");
  rep.inputs["n"] = n;
  if (!f.coloring.empty()) {
    if (n < inst.uniformity()) input_error("field 'n': K_n^r has no edges for n < r");
    const EdgeColoring c = io::coloring_from_json(io::read_json_file(f.coloring), complete_uniform(n, inst.uniformity()));
    rep.inputs["coloring"] = io::to_json(c);
    const auto bad = matching_coloring_violation(c, inst.frequency_map());
    rep.results["coloring_avoids_all_matchings"] = !bad.has_value();
    rep.results["violating_color"] = bad ? json(*bad) : json(nullptr);
    rep.human.push_back(bad ? "color " + std::to_string(*bad) + " contains its forbidden matching"
                            : "coloring avoids every forbidden matching");
    return;
  }
  const auto res = arrows(n, inst, search_options(f));
  rep.results["verdict"] = to_string(res.verdict);
  rep.results["counterexample"] = res.counterexample ? io::to_json(*res.counterexample)["colors"] : json(nullptr);
  rep.stats["nodes"] = res.nodes;
  rep.human.push_back(to_string(res.verdict));
  if (res.verdict == Verdict::Unknown) {
    rep.budget_exceeded = true;
    rep.exit = kBudgetExceeded;
  } else if (res.counterexample && !is_matching_coloring(*res.counterexample, inst.frequency_map())) {
    rep.exit = kViolation;
  }
}

void cmd_ramsey_search(const Flags& f, Report& rep) {
  const RamseyInstance inst = load_instance(f, rep);
  const auto report = ramsey_number_exact(inst, search_options(f));
  json j = io::to_json(report);
  rep.stats["nodes"] = j["nodes"];
  j.erase("nodes");
  j.erase("instance");
  rep.results = j;
  rep.human.push_back(report.exact ? std::to_string(*report.exact) : "unknown");
  rep.human.push_back("formula " + std::to_string(report.formula) + ", " + report.status);
  if (report.status == "unknown") {
    rep.budget_exceeded = true;
    rep.exit = kBudgetExceeded;
  } else if (report.status == "mismatch") {
    rep.exit = kViolation;
  }
}

void report_hypotheses(const HypothesisReport& h, Report& rep) {
  rep.results["hypotheses"] = io::to_json(h);
  rep.human.push_back(std::string("hypotheses ") + (h.hypotheses_hold ? "hold" : "fail") + ", sum gamma " +
                      std::to_string(h.sum_gamma) + (h.conclusion_holds ? " >= " : " < ") + "n " +
                      std::to_string(h.n));
}

void cmd_tucker_check(const Flags& f, Report& rep) {
  if (f.input.empty()) input_error("missing required flag --input");
  const LambdaMap lambda = io::lambda_from_json(io::read_json_file(f.input));
  rep.inputs["lambda"] = io::to_json(lambda);
  const auto h = check_hypotheses(lambda);
  report_hypotheses(h, rep);
  if (h.hypotheses_hold && !h.conclusion_holds) rep.exit = kViolation;
}

void cmd_tucker_build(const Flags& f, Report& rep) {
  const Hypergraph h = load_hypergraph(f, rep);
  const ColorFrequencyMap tau = load_tau(f, rep);
  const int p = require(f.p, "p");
  rep.inputs["p"] = p;
  const auto optimal = alternation_number(h, p, alternation_options(f));
  VertexOrdering sigma = optimal.ordering;
  if (!f.sigma.empty()) {
    sigma = VertexOrdering(f.sigma, h.vertex_count());
    rep.inputs["sigma"] = io::to_json(sigma);
  }
  EdgeColoring coloring;
  if (!f.coloring.empty()) {
    coloring = io::coloring_from_json(io::read_json_file(f.coloring), h);
    rep.inputs["coloring"] = io::to_json(coloring);
  } else {
    const auto chi = matching_chromatic_number(h, tau, search_options(f));
    if (!chi.witness) input_error("field 'tau': H has no (A, tau)-matching coloring");
    coloring = *chi.witness;
  }
  const auto built = build_lambda_from_coloring(h, sigma, coloring, tau, p);
  const bool sigma_optimal = built.alt_sigma == optimal.value;
  const auto report = check_hypotheses(built.lambda);
  rep.results["alt"] = optimal.value;
  rep.results["alt_sigma"] = built.alt_sigma;
  rep.results["sigma"] = io::to_json(sigma);
  rep.results["sigma_optimal"] = sigma_optimal;
  rep.results["palette"] = built.palette;
  rep.results["lambda"] = io::to_json(built.lambda);
  report_hypotheses(report, rep);
  if (!sigma_optimal) rep.human.push_back("warning: sigma is not optimal (alt " + std::to_string(built.alt_sigma) +
                                          " > " + std::to_string(optimal.value) + ")");
  if (sigma_optimal && !report.hypotheses_hold) rep.exit = kViolation;
  if (report.hypotheses_hold && !report.conclusion_holds) rep.exit = kViolation;
}

void cmd_tucker_hunt(const Flags& f, Report& rep) {
  const int n = require(f.n, "n");
  const int p = require(f.p, "p");
  if (f.gamma.empty()) input_error("missing required flag --gamma");
  rep.inputs["n"] = n;
  rep.inputs["p"] = p;
  rep.inputs["gamma"] = f.gamma;
  const auto res = search_counterexample(n, p, f.gamma, search_options(f));
  rep.results["status"] = to_string(res.status);
  rep.results["counterexample"] = res.counterexample ? io::to_json(*res.counterexample) : json(nullptr);
  rep.stats["nodes"] = res.nodes;
  rep.human.push_back(to_string(res.status));
  if (res.status == HuntStatus::Found) rep.exit = kViolation;
  if (res.status == HuntStatus::Unknown) {
    rep.budget_exceeded = true;
    rep.exit = kBudgetExceeded;
  }
}

void cmd_selftest(const Flags& f, Report& rep) {
  acceptance::Options o;
  o.threads = f.threads;
  o.only = f.only;
  rep.inputs["only"] = f.only;
  json criteria = json::array(), timing = json::array();
  bool all = true;
  acceptance::run(o, [&](const acceptance::Outcome& out) {
    criteria.push_back({{"id", out.id}, {"name", out.name}, {"passed", out.passed}, {"degraded", out.degraded}});
    timing.push_back({{"id", out.id}, {"seconds", out.seconds}, {"detail", out.detail}});
    rep.human.push_back(acceptance::format_line(out));
    all = all && out.passed;
  });
  rep.results["criteria"] = criteria;
  rep.results["all_passed"] = all;
  rep.stats["criteria"] = timing;
  if (!all) rep.exit = kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kneser hypergraphs, matching colorings and Ramsey numbers of matchings"};
  app.require_subcommand(1);
  Flags f;
  std::function<void(const Flags&, Report&)> handler;
  std::string command;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", f.json_out, "emit the JSON report");
    sub->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget-ms", f.budget_ms, "wall-clock budget in milliseconds")->check(CLI::NonNegativeNumber);
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  void (*fn)(const Flags&, Report&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    common(sub);
    sub->callback([&, fn, sub] {
      handler = fn;
      command = sub->get_parent() == &app ? sub->get_name() : sub->get_parent()->get_name() + " " + sub->get_name();
    });
    return sub;
  };

  auto* a = leaf(&app, "alt", "alt of a signed vector, or alt_r of a hypergraph", cmd_alt);
  a->add_option("--input", f.input, "hypergraph JSON");
  a->add_option("--p", f.p, "group order");
  a->add_option("--r", f.r, "uniformity r (alt_r)");
  a->add_option("--x", f.x, "signed vector entries")->delimiter(',');
  a->add_option("--sigma", f.sigma, "fixed vertex ordering")->delimiter(',');

  auto* c = leaf(&app, "chi", "chromatic number of a hypergraph", cmd_chi);
  c->add_option("--input", f.input, "hypergraph JSON")->required();

  auto* k = leaf(&app, "kneser", "general Kneser hypergraph KG^r(H)", cmd_kneser);
  k->add_option("--input", f.input, "hypergraph JSON")->required();
  k->add_option("--r", f.r, "uniformity")->required();
  k->add_flag("--verify", f.verify, "also compute chi(KG^r(H)) and its lower bound");

  auto* m = leaf(&app, "chi-m", "matching chromatic number chi_M(tau, H)", cmd_chi_m);
  m->add_option("--input", f.input, "hypergraph JSON")->required();
  m->add_option("--tau", f.tau, "color-frequency map JSON")->required();

  auto* ramsey = app.add_subcommand("ramsey", "Ramsey numbers of matchings");
  ramsey->require_subcommand(1);
  for (auto [name, fn, help] : {std::tuple{"formula", cmd_ramsey_formula, "closed-form value"},
                                std::tuple{"check", cmd_ramsey_check, "decide n -> (s)^r or check a coloring"},
                                std::tuple{"search", cmd_ramsey_search, "exact Ramsey number"}}) {
    auto* sub = leaf(ramsey, name, help, fn);
    sub->add_option("--r", f.r, "uniformity")->required();
    sub->add_option("--s", f.s, "matching sizes")->delimiter(',')->required();
    if (std::string(name) == "formula") sub->add_option("--p", f.p, "prime for the two-sided bounds");
    if (std::string(name) == "check") {
      sub->add_option("--n", f.n, "number of vertices")->required();
      sub->add_option("--input", f.coloring, "coloring JSON of K_n^r to check");
    }
  }

  auto* tucker = app.add_subcommand("tucker", "equivariant maps on signed vectors");
  tucker->require_subcommand(1);
  auto* tc = leaf(tucker, "check", "check a lambda table", cmd_tucker_check);
  tc->add_option("--input", f.input, "lambda JSON")->required();
  auto* tb = leaf(tucker, "build", "build lambda from a matching coloring", cmd_tucker_build);
  tb->add_option("--input", f.input, "hypergraph JSON")->required();
  tb->add_option("--tau", f.tau, "color-frequency map JSON")->required();
  tb->add_option("--p", f.p, "prime p")->required();
  tb->add_option("--sigma", f.sigma, "vertex ordering (default: an optimal one)")->delimiter(',');
  tb->add_option("--coloring", f.coloring, "coloring JSON (default: an optimal one)");
  auto* th = leaf(tucker, "hunt", "search for a map violating the lemma", cmd_tucker_hunt);
  th->add_option("--n", f.n, "dimension")->required();
  th->add_option("--p", f.p, "prime p")->required();
  th->add_option("--gamma", f.gamma, "gamma vector")->delimiter(',')->required();

  auto* st = leaf(&app, "selftest", "run the acceptance table", cmd_selftest);
  st->add_option("--only", f.only, "criterion ids")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  Report rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    handler(f, rep);
  } catch (const BudgetExceeded& e) {
    rep.budget_exceeded = true;
    rep.exit = kBudgetExceeded;
    rep.results["status"] = "unknown";
    rep.human.push_back(std::string("unknown: ") + e.what());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (f.json_out) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = rep.inputs;
    doc["inputs_digest"] = "sha256:" + sha256_hex(rep.inputs.dump());
    doc["results"] = rep.results;
    doc["stats"] = rep.stats;
    doc["timing"] = {{"seconds", seconds}, {"threads", f.threads}};
    doc["budget"] = {{"limit_ms", f.budget_ms ? json(*f.budget_ms) : json(nullptr)},
                     {"status", rep.budget_exceeded ? "exceeded" : "within"}};
    doc["exit_code"] = rep.exit;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& line : rep.human) out << line << "\n";
  }
  return rep.exit;
}

}  // namespace kkit::cli
