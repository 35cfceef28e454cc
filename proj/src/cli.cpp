#include "teachlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "teachlab/bounds.hpp"
#include "teachlab/classical.hpp"
#include "teachlab/experiments.hpp"
#include "teachlab/johnson.hpp"
#include "teachlab/nc_teaching.hpp"
#include "teachlab/tournament.hpp"

namespace teachlab {

using Json = nlohmann::ordered_json;

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s = buf;
  if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
  return s;
}

namespace {

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

/// Key/value report rendered either as aligned text or as one JSON object.
class Report {
 public:
  explicit Report(const std::string& command) { json_["command"] = command; }

  void put(const std::string& key, const std::string& text, Json value) {
    rows_.emplace_back(key, text);
    json_[key] = std::move(value);
  }
  void integer(const std::string& key, long long v) { put(key, std::to_string(v), v); }
  void integer(const std::string& key, const BigInt& v) { put(key, v.str(), big_json(v)); }
  void rational(const std::string& key, const Rational& v) { put(key, to_string(v), to_string(v)); }
  void real(const std::string& key, double v) { put(key, format_real(v), v); }
  void flag(const std::string& key, bool v) { put(key, v ? "yes" : "no", v); }
  void text(const std::string& key, const std::string& v) { put(key, v, v); }
  void maybe(const std::string& key, const std::optional<long long>& v) {
    if (v) integer(key, *v);
    else put(key, "none", nullptr);
  }

  /// Verbatim lines after the key/value block; JSON gets `value` under `key`.
  void block(const std::string& key, const std::vector<std::string>& lines, Json value) {
    blocks_.emplace_back(key, lines);
    json_[key] = std::move(value);
  }

  Json& json() { return json_; }

  std::string render(bool as_json) const {
    if (as_json) return json_.dump() + "\n";
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    std::string out;
    for (const auto& [k, v] : rows_) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
    for (const auto& [k, lines] : blocks_) {
      out += k + ":\n";
      for (const auto& l : lines) out += "  " + l + "\n";
    }
    return out;
  }

 private:
  Json json_;
  std::vector<std::pair<std::string, std::string>> rows_;
  std::vector<std::pair<std::string, std::vector<std::string>>> blocks_;
};

std::string instance_list(const InstanceSet& s, const char* sep = " ") {
  std::string out;
  for (Instance x : s.instances()) {
    if (!out.empty()) out += sep;
    out += std::to_string(x);
  }
  return out;
}

Json instance_json(const InstanceSet& s) {
  Json a = Json::array();
  for (Instance x : s.instances()) a.push_back(x);
  return a;
}

Budget make_budget(double timeout) { return timeout > 0 ? Budget::seconds(timeout) : Budget::from_environment(); }

struct Globals {
  bool json = false;
  int jobs = 1;
};

CommandOutcome finish(const Report& r, const Globals& g, int code = kExitOk) {
  CommandOutcome o;
  o.exit_code = code;
  o.out = r.render(g.json);
  return o;
}

// ---- classical ----

CommandOutcome cmd_td(const Globals& g, const std::string& path, int concept_index, const std::string& csv) {
  ConceptClass k = read_class_file(path);
  if (k.empty()) throw InputError("class file has no concepts");
  Report r("td");
  r.integer("n", k.domain_size());
  r.integer("concepts", static_cast<long long>(k.size()));
  std::vector<std::size_t> which;
  if (concept_index > 0) {
    if (static_cast<std::size_t>(concept_index) > k.size()) throw InputError("concept index out of range");
    which.push_back(static_cast<std::size_t>(concept_index - 1));
  } else {
    for (std::size_t i = 0; i < k.size(); ++i) which.push_back(i);
  }
  std::vector<TeachingSet> sets(which.size());
  if (concept_index > 0) {
    sets[0] = td_of(k, k[which[0]]);
  } else {
    TeachingReport rep = teaching_report(k, g.jobs);
    sets = rep.per_concept;
    r.integer("td_min", rep.td_min());
    r.integer("td_max", rep.td_max());
  }
  std::vector<std::string> lines;
  Json rows = Json::array();
  std::string table = "concept_index,td,witness\n";
  for (std::size_t i = 0; i < which.size(); ++i) {
    const auto idx = static_cast<long long>(which[i] + 1);
    lines.push_back(std::to_string(idx) + "  " + k[which[i]].to_string() + "  td=" + std::to_string(sets[i].size) +
                    "  {" + instance_list(sets[i].witness, ",") + "}");
    rows.push_back({{"index", idx}, {"concept", k[which[i]].to_string()}, {"td", sets[i].size},
                    {"witness", instance_json(sets[i].witness)}});
    table += std::to_string(idx) + "," + std::to_string(sets[i].size) + "," + instance_list(sets[i].witness) + "\n";
  }
  r.block("per_concept", lines, rows);
  CommandOutcome o = finish(r, g);
  if (!csv.empty()) {
    write_text_file(csv, table);
    o.csv_path = csv;
  }
  return o;
}

CommandOutcome cmd_rtd(const Globals& g, const std::string& path, bool oracle) {
  ConceptClass k = read_class_file(path);
  if (k.empty()) throw InputError("class file has no concepts");
  Budget unlimited;
  auto layers = rtd_layers(k, unlimited);
  int value = 0;
  std::vector<std::string> lines;
  Json js = Json::array();
  for (const auto& l : layers) {
    value = std::max(value, l.td_min);
    lines.push_back("td_min=" + std::to_string(l.td_min) + "  removed=" + std::to_string(l.concepts.size()));
    Json cs = Json::array();
    for (const auto& c : l.concepts) cs.push_back(c.to_string());
    js.push_back({{"td_min", l.td_min}, {"concepts", cs}});
  }
  Report r("rtd");
  r.integer("n", k.domain_size());
  r.integer("concepts", static_cast<long long>(k.size()));
  r.integer("rtd", value);
  int code = kExitOk;
  if (oracle) {
    int brute = rtd_bruteforce(k);
    r.integer("rtd_oracle", brute);
    r.flag("oracle_agrees", brute == value);
    if (brute != value) code = kExitFailed;
  }
  r.block("layers", lines, js);
  return finish(r, g, code);
}

// ---- no-clash teaching ----

CommandOutcome cmd_nctd(const Globals& g, const std::string& path, int max_d, double timeout, const std::string& emit) {
  ConceptClass k = read_class_file(path);
  if (k.empty()) throw InputError("class file has no concepts");
  Budget budget = make_budget(timeout);
  NctdResult res = nctd(k, max_d < 0 ? k.domain_size() : max_d, budget);
  Report r("nctd");
  r.integer("n", k.domain_size());
  r.integer("concepts", static_cast<long long>(k.size()));
  r.integer("counting_bound", nctd_lower_bound(k));
  int code = kExitOk;
  switch (res.status) {
    case NctdStatus::exact:
      r.text("status", "exact");
      r.integer("nctd", res.d);
      break;
    case NctdStatus::exceeds_max:
      r.text("status", "exceeds-max");
      r.put("nctd", "> " + std::to_string(res.lower_bound - 1), nullptr);
      r.integer("lower_bound", res.lower_bound);
      code = kExitInconclusive;
      break;
    case NctdStatus::inconclusive:
      r.text("status", "inconclusive");
      r.put("nctd", "unknown", nullptr);
      r.integer("lower_bound", res.lower_bound);
      r.integer("upper_bound", res.upper_bound);
      code = kExitInconclusive;
      break;
  }
  r.integer("nodes", static_cast<long long>(budget.nodes_used()));
  CommandOutcome o = finish(r, g, code);
  if (!emit.empty()) {
    if (!res.teacher) throw InputError("no teacher to emit: NCTD was not determined");
    write_text_file(emit, serialize_teacher(*res.teacher));
  }
  return o;
}

CommandOutcome cmd_verify_teacher(const Globals& g, const std::string& class_path, const std::string& teacher_path) {
  ConceptClass k = read_class_file(class_path);
  NCTeacher t = parse_teacher(read_text_file(teacher_path), k);
  Report r("verify-teacher");
  r.integer("n", k.domain_size());
  r.integer("concepts", static_cast<long long>(k.size()));
  r.integer("order", t.order());
  auto c = find_clash(t);
  r.flag("admissible", !c);
  if (c) {
    auto [i, j] = *c;
    r.text("clash", std::to_string(i + 1) + " " + k[i].to_string() + " {" + instance_list(t.sets[i], ",") + "} / " +
                        std::to_string(j + 1) + " " + k[j].to_string() + " {" + instance_list(t.sets[j], ",") + "}");
    return finish(r, g, kExitFailed);
  }
  return finish(r, g);
}

// ---- tournaments ----

CommandOutcome emit_text(const Globals& g, const std::string& command, const std::string& text, const std::string& out,
                         Json js) {
  CommandOutcome o;
  if (!out.empty()) write_text_file(out, text);
  if (g.json) {
    Json j;
    j["command"] = command;
    for (auto& [key, v] : js.items()) j[key] = v;
    if (!out.empty()) j["out"] = out;
    o.out = j.dump() + "\n";
  } else if (out.empty()) {
    o.out = text;
  }
  return o;
}

Json tournament_json(const Tournament& t) {
  Json edges = Json::array();
  for (auto [i, j] : t.edges()) edges.push_back({i, j});
  return {{"n", t.players()}, {"edges", edges}};
}

Json class_json(const ConceptClass& k) {
  Json cs = Json::array();
  for (const auto& c : k) cs.push_back(c.to_string());
  return {{"n", k.domain_size()}, {"concepts", cs}};
}

CommandOutcome cmd_tournament_gen(const Globals& g, int n, bool linear, std::optional<std::uint64_t> seed,
                                  std::optional<std::uint64_t> index, const std::string& out) {
  if (static_cast<int>(linear) + seed.has_value() + index.has_value() != 1)
    throw InputError("give exactly one of --linear, --seed, --index");
  Tournament t = linear ? linear_tournament(n) : seed ? random_tournament(n, *seed) : tournament_from_index(n, *index);
  return emit_text(g, "tournament gen", serialize_tournament(t), out, tournament_json(t));
}

CommandOutcome cmd_tournament_class(const Globals& g, int mode, const std::string& in, const std::string& out) {
  Tournament t = parse_tournament(read_text_file(in));
  if (mode != 1 && mode != 2) throw InputError("--mode must be 1 or 2");
  ConceptClass k = mode == 1 ? class1(t) : class2(t);
  return emit_text(g, "tournament class", serialize_class(k), out, class_json(k));
}

const char* failure_name(RecoveryFailure f) {
  switch (f) {
    case RecoveryFailure::wrong_size: return "wrong-size";
    case RecoveryFailure::teacher_mismatch: return "teacher-mismatch";
    case RecoveryFailure::not_order_one: return "not-order-one";
    case RecoveryFailure::not_admissible: return "not-admissible";
    case RecoveryFailure::singleton_not_shared_by_two: return "singleton-not-shared-by-two";
    case RecoveryFailure::singleton_pair_agrees: return "singleton-pair-agrees";
    case RecoveryFailure::not_a_tournament: return "not-a-tournament";
    case RecoveryFailure::class_mismatch: return "class-mismatch";
  }
  return "?";
}

CommandOutcome cmd_tournament_recover(const Globals& g, const std::string& class_path, const std::string& teacher_path,
                                      bool find, const std::string& out) {
  ConceptClass k = read_class_file(class_path);
  if (teacher_path.empty() == !find) throw InputError("give exactly one of --teacher, --find-teacher");
  std::optional<NCTeacher> t;
  if (find) {
    Budget unlimited;
    t = find_nc_teacher(k, 1, unlimited);
    if (!t) {
      Report r("tournament recover");
      r.text("result", "no order-1 NC-teacher exists");
      return finish(r, g, kExitFailed);
    }
  } else {
    t = parse_teacher(read_text_file(teacher_path), k);
  }
  try {
    Tournament tour = recover_tournament(k, *t);
    return emit_text(g, "tournament recover", serialize_tournament(tour), out, tournament_json(tour));
  } catch (const RecoveryError& e) {
    if (e.kind() == RecoveryFailure::teacher_mismatch) throw;
    Report r("tournament recover");
    r.text("result", "rejected");
    r.text("reason", failure_name(e.kind()));
    r.text("detail", e.what());
    return finish(r, g, kExitFailed);
  }
}

// ---- Johnson graphs ----

CommandOutcome cmd_hmax(const Globals& g, int n, int k, int t, const std::string& pruning, std::uint64_t cap,
                        double timeout, const std::string& witness) {
  HMaxOptions opt;
  opt.size_cap = cap;
  if (pruning == "trivial") opt.pruning = HMaxPruning::trivial;
  else if (pruning == "counting") opt.pruning = HMaxPruning::counting;
  else if (pruning == "chain") opt.pruning = HMaxPruning::chain;
  else throw InputError("--pruning must be trivial, counting or chain");
  Budget budget = make_budget(timeout);
  HMaxResult res = h_max(n, k, t, budget, opt);
  Report r("johnson hmax");
  r.integer("n", n);
  r.integer("k", k);
  r.integer("t", t);
  r.text("status", res.exact ? "exact" : "inconclusive");
  if (res.exact) {
    r.integer("H", static_cast<long long>(res.value));
    r.rational("h", h_ratio(n, k, res));
  } else {
    r.integer("lower_bound", static_cast<long long>(res.value));
    r.integer("upper_bound", static_cast<long long>(res.upper));
  }
  r.rational("t_over_k_plus_1", Rational(t, k + 1));
  r.integer("nodes", static_cast<long long>(res.nodes));
  if (!witness.empty()) write_text_file(witness, serialize_family(res.witness));
  return finish(r, g, res.exact ? kExitOk : kExitInconclusive);
}

// ---- bounds ----

CommandOutcome cmd_bounds(const Globals& g, int n, int d, std::optional<int> t, const std::string& csv) {
  BoundReport b = bound_report(n, d, t);
  Report r("bounds");
  r.integer("n", n);
  r.integer("d", d);
  r.maybe("t", b.t ? std::optional<long long>(*b.t) : std::nullopt);
  r.integer("ksz", b.ksz);
  r.rational("gub", b.gub);
  r.real("gub_real", to_double(b.gub));
  r.real("factor", b.factor);
  r.rational("h_used", b.h_used);
  r.text("h_kind", to_string(b.h_kind));
  if (d == 2 && n >= 2) r.rational("d2_corollary", corollary_d2_bound(n));
  CommandOutcome o = finish(r, g, b.gub <= Rational(b.ksz) ? kExitOk : kExitFailed);
  if (!csv.empty()) {
    std::string text = "n,d,t,ksz,gub,factor,h_used,h_kind\n";
    text += std::to_string(n) + "," + std::to_string(d) + "," + (b.t ? std::to_string(*b.t) : "") + "," + b.ksz.str() +
            "," + to_string(b.gub) + "," + format_real(b.factor) + "," + to_string(b.h_used) + "," +
            to_string(b.h_kind) + "\n";
    write_text_file(csv, text);
    o.csv_path = csv;
  }
  return o;
}

// ---- experiments ----

CommandOutcome cmd_tdmin(const Globals& g, ExperimentConfig cfg, const std::string& out) {
  cfg.jobs = g.jobs;
  TdminSummary s = run_tdmin_experiment(cfg);
  Report r("experiment tdmin");
  r.integer("n", cfg.n);
  r.integer("trials", cfg.trials);
  r.text("seed", std::to_string(cfg.seed));
  r.integer("td_min_min", s.min);
  r.real("td_min_mean", s.mean);
  r.integer("td_min_max", s.max);
  r.flag("all_nctd_one", s.all_nctd_one);
  std::vector<std::string> lines;
  Json hist = Json::object();
  for (auto [v, c] : s.histogram) {
    lines.push_back("td_min=" + std::to_string(v) + "  trials=" + std::to_string(c));
    hist[std::to_string(v)] = c;
  }
  r.block("histogram", lines, hist);
  CommandOutcome o = finish(r, g, s.all_nctd_one ? kExitOk : kExitFailed);
  if (!out.empty()) {
    write_text_file(out, tdmin_csv(s.records));
    o.csv_path = out;
  }
  return o;
}

CommandOutcome cmd_claim(const Globals& g, std::uint64_t scan_max) {
  ClaimScan s = claim_scan(scan_max);
  Report r("experiment claim");
  r.text("scan_max", std::to_string(scan_max));
  r.integer("points", static_cast<long long>(s.points));
  auto opt = [](const std::optional<std::uint64_t>& v) {
    return v ? std::optional<long long>(static_cast<long long>(*v)) : std::nullopt;
  };
  r.maybe("n0", opt(s.n0));
  r.maybe("n0_fraction_variant", opt(s.n0_5));
  r.integer("implication_checks", static_cast<long long>(s.implication_checks));
  r.integer("implication_failures", static_cast<long long>(s.implication_failures));
  r.integer("implication_failures_fraction_variant", static_cast<long long>(s.implication_failures_5));
  if (s.last) {
    const ClaimPoint& p = *s.last;
    Threshold th = threshold_k(p.n);
    r.real("k_prime_at_max", th.k_prime);
    r.integer("k_at_max", p.k);
    r.flag("ineq1_at_max", p.ineq1);
    r.flag("ineq2_at_max", p.ineq2);
    r.flag("sufficient_at_max", p.sufficient);
  }
  int code = kExitOk;
  if (s.implication_failures || s.implication_failures_5) code = kExitFailed;
  else if (!s.n0) code = kExitInconclusive;
  return finish(r, g, code);
}

CommandOutcome cmd_tau(const Globals& g, ExperimentConfig cfg) {
  cfg.jobs = g.jobs;
  TauReport t = tau_estimate(cfg);
  Report r("experiment tau");
  r.integer("n", t.n);
  r.integer("trials", t.trials);
  r.text("seed", std::to_string(t.seed));
  r.real("k_prime", t.k_prime);
  r.integer("k", t.k);
  r.flag("k_overridden", t.overridden);
  r.flag("vacuous", t.vacuous);
  if (t.vacuous) r.text("note", "threshold < 1, vacuous");
  r.integer("hits", t.hits);
  r.real("fraction", t.fraction);
  r.real("ci95_low", t.ci_low);
  r.real("ci95_high", t.ci_high);
  return finish(r, g);
}

CommandOutcome cmd_dim1(const Globals& g, int n, bool filter) {
  Dim1Report d = verify_dim1(n, filter, g.jobs);
  Report r("verify dim1");
  r.integer("n", n);
  r.flag("complement_filter", filter);
  r.integer("candidates", static_cast<long long>(d.candidates));
  r.integer("decided", static_cast<long long>(d.decided));
  r.integer("passing", static_cast<long long>(d.passing.size()));
  r.integer("tournaments", static_cast<long long>(1ULL << (n * (n - 1) / 2)));
  r.integer("tournament_classes", static_cast<long long>(d.tournament_classes));
  r.flag("matches_tournaments", d.matches_tournaments);
  r.flag("all_complement_closed", d.all_complement_closed);
  r.integer("larger_candidates", static_cast<long long>(d.larger_candidates));
  r.integer("larger_passing", static_cast<long long>(d.larger_passing));
  r.flag("verified", d.ok());
  return finish(r, g, d.ok() ? kExitOk : kExitFailed);
}

CommandOutcome cmd_maxclass(const Globals& g, int n, int d, double timeout) {
  Budget budget = make_budget(timeout);
  MaxClassResult m = max_class_search(n, d, budget);
  Report r("search maxclass");
  r.integer("n", n);
  r.integer("d", d);
  r.text("status", m.exact ? "exact" : "inconclusive");
  if (m.exact) r.integer("M", static_cast<long long>(m.lower));
  r.integer("lower_bound", static_cast<long long>(m.lower));
  r.integer("upper_bound", static_cast<long long>(m.upper));
  r.integer("ksz", ksz_bound(n, d));
  r.integer("greedy", static_cast<long long>(m.greedy.size()));
  r.integer("candidates", static_cast<long long>(m.candidates));
  std::vector<std::string> lines;
  Json ws = Json::array();
  for (const auto& w : m.witnesses) {
    std::string line;
    Json cs = Json::array();
    for (const auto& c : w) {
      line += (line.empty() ? "" : " ") + c.to_string();
      cs.push_back(c.to_string());
    }
    lines.push_back(line);
    ws.push_back(cs);
  }
  r.block("witnesses", lines, ws);
  int code = m.exact ? kExitOk : kExitInconclusive;
  if (BigInt(m.lower) > ksz_bound(n, d)) code = kExitFailed;
  return finish(r, g, code);
}

}  // namespace

CommandOutcome dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Teaching-dimension toolkit: classical and no-clash teaching, tournaments, Johnson-graph extremal sets"};
  app.name("teachlab");
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print the report as one JSON object");
  app.add_option("--jobs", g.jobs, "Worker threads for parallel loops")->check(CLI::PositiveNumber);

  std::function<CommandOutcome()> action;
  std::string class_path, teacher_path, out, in, csv, pruning = "counting";
  int n = 0, k = 0, t = 0, d = 0, mode = 0, concept_index = 0, max_d = -1;
  std::optional<int> t_opt, k_opt;
  std::optional<std::uint64_t> seed, index;
  std::uint64_t scan_max = 1ULL << 40, cap = HMaxOptions{}.size_cap;
  double timeout = 0;
  bool flag_a = false, flag_b = false;
  ExperimentConfig cfg;

  auto* td = app.add_subcommand("td", "Teaching dimension of every concept (or one)");
  td->add_option("--class", class_path, "Class file")->required();
  td->add_option("--concept", concept_index, "1-based concept index");
  td->add_option("--csv", csv, "Write concept_index,td,witness rows");
  td->callback([&] { action = [&] { return cmd_td(g, class_path, concept_index, csv); }; });

  auto* rtd_cmd = app.add_subcommand("rtd", "Recursive teaching dimension");
  rtd_cmd->add_option("--class", class_path, "Class file")->required();
  rtd_cmd->add_flag("--oracle", flag_a, "Cross-check against the subclass brute force (|class| <= 14)");
  rtd_cmd->callback([&] { action = [&] { return cmd_rtd(g, class_path, flag_a); }; });

  auto* nc = app.add_subcommand("nctd", "No-clash teaching dimension");
  nc->add_option("--class", class_path, "Class file")->required();
  nc->add_option("--max-d", max_d, "Largest order to try");
  nc->add_option("--timeout", timeout, "Seconds before giving up");
  nc->add_option("--emit-teacher", out, "Write the optimal teacher here");
  nc->callback([&] { action = [&] { return cmd_nctd(g, class_path, max_d, timeout, out); }; });

  auto* vt = app.add_subcommand("verify-teacher", "Check a teacher file for clashes");
  vt->add_option("--class", class_path, "Class file")->required();
  vt->add_option("--teacher", teacher_path, "Teacher file")->required();
  vt->callback([&] { action = [&] { return cmd_verify_teacher(g, class_path, teacher_path); }; });

  auto* tour = app.add_subcommand("tournament", "Tournament files and their concept classes");
  tour->require_subcommand(1);
  auto* gen = tour->add_subcommand("gen", "Write a tournament");
  gen->add_option("--n", n, "Players")->required()->check(CLI::PositiveNumber);
  gen->add_flag("--linear", flag_a, "Edges (i, j) for all i < j");
  gen->add_option("--seed", seed, "Random tournament from this seed");
  gen->add_option("--index", index, "Tournament number, bit r orients pair r");
  gen->add_option("--out", out, "Output file (default stdout)");
  gen->callback([&] { action = [&] { return cmd_tournament_gen(g, n, flag_a, seed, index, out); }; });
  auto* cls = tour->add_subcommand("class", "First or second concept class of a tournament");
  cls->add_option("--mode", mode, "1 or 2")->required();
  cls->add_option("--in", in, "Tournament file")->required();
  cls->add_option("--out", out, "Output file (default stdout)");
  cls->callback([&] { action = [&] { return cmd_tournament_class(g, mode, in, out); }; });
  auto* rec = tour->add_subcommand("recover", "Recover the tournament behind a 2n-concept class");
  rec->add_option("--class", class_path, "Class file")->required();
  rec->add_option("--teacher", teacher_path, "Order-1 teacher file");
  rec->add_flag("--find-teacher", flag_b, "Search for an order-1 teacher");
  rec->add_option("--out", out, "Output file (default stdout)");
  rec->callback([&] { action = [&] { return cmd_tournament_recover(g, class_path, teacher_path, flag_b, out); }; });

  auto* johnson = app.add_subcommand("johnson", "Johnson-graph extremal families");
  johnson->require_subcommand(1);
  auto* hmax = johnson->add_subcommand("hmax", "Largest family with no narrow (t+1)-clique");
  hmax->add_option("--n", n, "Ground set size")->required();
  hmax->add_option("--k", k, "Set size")->required();
  hmax->add_option("--t", t, "Clique limit")->required();
  hmax->add_option("--witness", out, "Write a maximum family here");
  hmax->add_option("--pruning", pruning, "trivial, counting or chain");
  hmax->add_option("--size-cap", cap, "Exact search only when C(n,k) is at most this");
  hmax->add_option("--timeout", timeout, "Seconds before giving up");
  hmax->callback([&] { action = [&] { return cmd_hmax(g, n, k, t, pruning, cap, timeout, out); }; });

  auto* bnd = app.add_subcommand("bounds", "Upper bounds on the size of classes of NC-dimension d");
  bnd->add_option("--n", n, "Domain size")->required();
  bnd->add_option("--d", d, "Dimension")->required();
  bnd->add_option("--t", t_opt, "Clique parameter, 2 <= t <= d");
  bnd->add_option("--csv", csv, "Write a CSV row here");
  bnd->callback([&] { action = [&] { return cmd_bounds(g, n, d, t_opt, csv); }; });

  auto* exp = app.add_subcommand("experiment", "Random-tournament experiments");
  exp->require_subcommand(1);
  auto* tdmin_cmd = exp->add_subcommand("tdmin", "td_min and nctd of random first classes");
  tdmin_cmd->add_option("--n", cfg.n, "Players")->required();
  tdmin_cmd->add_option("--trials", cfg.trials, "Number of tournaments")->required();
  tdmin_cmd->add_option("--seed", cfg.seed, "Master seed")->required();
  tdmin_cmd->add_option("--out", out, "CSV output file");
  tdmin_cmd->add_option("--timeout", cfg.budget_secs, "Seconds per trial");
  tdmin_cmd->callback([&] { action = [&] { return cmd_tdmin(g, cfg, out); }; });
  auto* claim = exp->add_subcommand("claim", "Scan the threshold inequalities");
  claim->add_option("--scan-max", scan_max, "Largest n scanned");
  claim->callback([&] { action = [&] { return cmd_claim(g, scan_max); }; });
  auto* tau = exp->add_subcommand("tau", "Fraction of tournaments with small td_min");
  tau->add_option("--n", cfg.n, "Players")->required();
  tau->add_option("--trials", cfg.trials, "Number of tournaments")->required();
  tau->add_option("--seed", cfg.seed, "Master seed")->required();
  tau->add_option("--k", k_opt, "Threshold to use instead of the formula");
  tau->add_option("--timeout", cfg.budget_secs, "Seconds per trial");
  tau->callback([&] {
    action = [&] {
      cfg.k_override = k_opt;
      return cmd_tau(g, cfg);
    };
  });

  auto* verify = app.add_subcommand("verify", "Exhaustive verifications");
  verify->require_subcommand(1);
  auto* dim1 = verify->add_subcommand("dim1", "All classes of size 2n with NCTD 1 come from tournaments");
  dim1->add_option("--n", n, "Domain size, at most 4")->required();
  dim1->add_flag("--filter", flag_a, "Skip classes that are not closed under complement");
  dim1->callback([&] { action = [&] { return cmd_dim1(g, n, flag_a); }; });

  auto* search = app.add_subcommand("search", "Exact extremal searches");
  search->require_subcommand(1);
  auto* maxclass = search->add_subcommand("maxclass", "Largest class over [n] with NCTD at most d");
  maxclass->add_option("--n", n, "Domain size")->required();
  maxclass->add_option("--d", d, "Dimension")->required();
  maxclass->add_option("--timeout", timeout, "Seconds before giving up");
  maxclass->callback([&] { action = [&] { return cmd_maxclass(g, n, d, timeout); }; });

  CommandOutcome outcome;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os, es;
    int code = app.exit(e, os, es);
    outcome.exit_code = code == 0 ? kExitOk : kExitBadInput;
    outcome.out = os.str();
    outcome.err = es.str();
    return outcome;
  }
  try {
    return action();
  } catch (const BudgetExceeded& e) {
    outcome.exit_code = kExitInconclusive;
    outcome.err = std::string("inconclusive: ") + e.what() + "\n";
  } catch (const InputError& e) {
    outcome.exit_code = kExitBadInput;
    outcome.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::overflow_error& e) {
    outcome.exit_code = kExitBadInput;
    outcome.err = std::string("error: ") + e.what() + "\n";
  }
  return outcome;
}

}  // namespace teachlab
