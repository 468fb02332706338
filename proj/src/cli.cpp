#include "zerosum/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerosum/analytic.hpp"
#include "zerosum/cache.hpp"
#include "zerosum/criteria.hpp"
#include "zerosum/kernels.hpp"
#include "zerosum/lemma_sweeps.hpp"
#include "zerosum/rng.hpp"
#include "zerosum/search.hpp"
#include "zerosum/sumset.hpp"
#include "zerosum/version.hpp"

namespace zerosum::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string format = "json";
  unsigned threads = 0;
  std::uint64_t seed = 0;
  std::uint32_t cyclic_max = 60;
  std::uint32_t plane_max = 7;
  bool timings = false;
  std::string cache_path;
  bool no_cache = false;

  std::uint32_t n = 0;
  bool exact = false;
  bool bound_only = false;
  std::uint32_t p = 0;
  std::uint64_t trials = 10000;
  std::string which = "all";
  bool exhaustive = false;
  std::string lambda;
  std::string input;
  std::string method = "both";
  std::uint64_t pmax = 7000;
};

// Reported when a command finds a counterexample to something that must hold.
struct Verdict {
  json result;
  bool failed = false;
};

struct Context {
  const Options& opt;
  json timings = json::object();
  std::ostream& err;

  unsigned threads() const {
    if (opt.threads) return opt.threads;
    return std::max(1u, std::thread::hardware_concurrency());
  }
  SearchOptions search() const {
    SearchOptions s;
    s.cyclic_max = opt.cyclic_max;
    s.plane_max = opt.plane_max;
    s.threads = threads();
    return s;
  }
};

json point_json(PlanePoint a) { return json::array({a.x, a.y}); }

json cells_json(const EncodedSet& cells, std::uint32_t p) {
  json out = json::array();
  for (auto c : cells) out.push_back(json::array({c / p, c % p}));
  return out;
}

json set_json(const GroupDescriptor& g, const EncodedSet& s) {
  return g.kind == GroupKind::cyclic ? json(s) : cells_json(s, g.n);
}

json nat(double v) { return json{{"value", v}, {"unit", "nat"}}; }

json bigint_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

PlaneSet plane_set_from(Modulus m, const json& elements) {
  PlaneSet s(m);
  for (const auto& e : elements) {
    if (!e.is_array() || e.size() != 2) throw InvalidArgument("plane elements must be [x, y] pairs");
    s.insert(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
  }
  return s;
}

Subgroup subgroup_from(Modulus m, const json& u) {
  if (u.is_string()) {
    const auto name = u.get<std::string>();
    if (name == "vertical" || name == "VERTICAL") return Subgroup::vertical(m);
    throw InvalidArgument("U must be \"vertical\" or a slope");
  }
  return Subgroup::slope(m, m.reduce(u.get<std::int64_t>()));
}

std::vector<std::uint32_t> parse_lambda(const std::string& arg) {
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) text = read_file(arg);
  for (auto& c : text) {
    if (c == ',' || c == ';' || c == '\n' || c == '\r' || c == '\t') c = ' ';
  }
  std::istringstream in(text);
  std::vector<std::uint32_t> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw InvalidArgument("bad lambda entry: " + tok);
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

// ---- olson ------------------------------------------------------------------

json record_result(const ConstantRecord& r) {
  json out{{"group", r.group.key()},
           {"olson", r.olson},
           {"method", method_name(r.method)},
           {"extremal_examples", json::array()},
           {"examples_truncated", r.examples_truncated},
           {"examples_verified", r.examples_verified},
           {"reorder_agrees", r.reorder_agrees}};
  for (const auto& e : r.extremal_examples) out["extremal_examples"].push_back(set_json(r.group, e));
  out["witness"] = r.extremal_examples.empty() ? json(nullptr) : set_json(r.group, r.extremal_examples.front());
  return out;
}

// Exact records are looked up in and written to the cache.
ConstantRecord exact_record(Context& ctx, const GroupDescriptor& g) {
  const auto opts = ctx.search();
  // Limits are checked before the cache so the outcome does not depend on it.
  if (g.kind == GroupKind::cyclic && (g.n < 2 || g.n > opts.cyclic_max)) {
    throw LimitExceeded("cyclic order " + std::to_string(g.n) + " outside [2, " + std::to_string(opts.cyclic_max) + "]");
  }
  if (g.kind == GroupKind::plane && g.n > opts.plane_max) {
    throw LimitExceeded("exact plane search limited to p <= " + std::to_string(opts.plane_max));
  }
  std::optional<ResultsCache> cache;
  if (!ctx.opt.no_cache) {
    cache.emplace(ctx.opt.cache_path.empty() ? ResultsCache::default_path() : std::filesystem::path(ctx.opt.cache_path));
    auto hit = cache->get(g.key());
    for (const auto& w : cache->warnings()) ctx.err << "warning: " << w << "\n";
    if (hit && hit->method == Method::exact && hit->examples_verified && hit->reorder_agrees) {
      ctx.timings["cache"][g.key()] = {{"from_cache", true}, {"compute_seconds", hit->compute_seconds}};
      return *hit;
    }
  }
  auto r = g.kind == GroupKind::cyclic ? olson_cyclic(g.n, opts) : olson_plane(g.n, opts, true);
  ctx.timings["cache"][g.key()] = {{"from_cache", false}, {"compute_seconds", r.compute_seconds}};
  if (cache) cache->put(r);
  return r;
}

Verdict cmd_olson_cyclic(Context& ctx) {
  return {record_result(exact_record(ctx, GroupDescriptor::cyclic(ctx.opt.n)))};
}

Verdict cmd_olson_plane(Context& ctx) {
  const auto p = ctx.opt.n;
  const Modulus m(p);
  auto opts = ctx.search();
  const bool exact = ctx.opt.exact || (!ctx.opt.bound_only && p <= opts.plane_max);
  ConstantRecord r = exact ? exact_record(ctx, GroupDescriptor::plane(p)) : olson_plane(p, opts, false);
  if (!exact) ctx.timings["compute_seconds"] = r.compute_seconds;
  json out = record_result(r);

  if (p <= opts.cyclic_max) {
    const auto cyc = exact_record(ctx, GroupDescriptor::cyclic(p));
    const std::uint32_t predicted = p - 1 + cyc.olson;
    out["cyclic_olson"] = cyc.olson;
    out["p_minus_1_plus_cyclic_olson"] = predicted;
    if (r.method == Method::exact) {
      out["equals_p_minus_1_plus_cyclic_olson"] = r.olson == predicted;
    } else {
      out["lower_bound_reaches_p_minus_1_plus_cyclic_olson"] = r.olson >= predicted;
    }
  }
  if (!r.extremal_examples.empty()) {
    PlaneSet first(m);
    for (auto c : r.extremal_examples.front()) first.insert(plane_point(c, m));
    const auto s = classify_structure(first);
    json st{{"matches", s.matches_theorem2},
            {"in_u", s.in_u},
            {"coset_elements", s.coset_elements},
            {"coset", s.coset},
            {"degenerate", s.degenerate},
            {"matching_subgroups", json::array()}};
    st["subgroup"] = s.subgroup_index ? json(Subgroup::from_index(m, *s.subgroup_index).name()) : json(nullptr);
    for (auto i : s.matching_subgroups) st["matching_subgroups"].push_back(Subgroup::from_index(m, i).name());
    out["witness_structure"] = st;
  }
  return {out};
}

// ---- verify -----------------------------------------------------------------

Verdict cmd_verify_lemmas(Context& ctx) {
  const Modulus m(ctx.opt.p);
  std::vector<Lemma> lemmas;
  const auto& w = ctx.opt.which;
  if (w == "ddsh" || w == "all") lemmas.push_back(Lemma::ddsh);
  if (w == "cd" || w == "all") lemmas.push_back(Lemma::cauchy_davenport);
  if (w == "olson" || w == "all") lemmas.push_back(Lemma::olson_sigma);
  if (lemmas.empty()) throw InvalidArgument("--which must be ddsh, cd, olson or all");

  SweepConfig cfg;
  cfg.trials = ctx.opt.trials;
  cfg.seed = ctx.opt.seed;
  cfg.threads = ctx.threads();
  cfg.exhaustive = ctx.opt.exhaustive;

  Verdict v;
  v.result = {{"p", m.value()}, {"rng", std::string(kRngAlgorithm)}, {"sweeps", json::array()}};
  std::uint64_t total = 0;
  for (auto lemma : lemmas) {
    const auto r = sweep_lemma(lemma, m, cfg);
    json s{{"lemma", lemma_name(lemma)},
           {"exhaustive", r.exhaustive},
           {"cases", r.cases},
           {"violations", r.violations}};
    if (r.first_violation) {
      const auto& c = *r.first_violation;
      s["first_violation"] = {{"a", c.a}, {"b", c.b}, {"k", c.k}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    } else {
      s["first_violation"] = nullptr;
    }
    total += r.violations;
    v.result["sweeps"].push_back(s);
  }
  v.result["total_violations"] = total;
  v.failed = total != 0;
  return v;
}

// ---- criteria ---------------------------------------------------------------

Verdict cmd_criteria_numerik(Context& ctx) {
  const Modulus m(ctx.opt.p);
  const auto lambda = parse_lambda(ctx.opt.lambda);
  if (lambda.size() != m.value()) {
    throw InvalidArgument("lambda has " + std::to_string(lambda.size()) + " entries, expected p = " +
                          std::to_string(m.value()));
  }
  const auto c1 = numerik_condition1(m, lambda);
  const auto c2 = numerik_condition2(m, lambda);
  json out{{"p", m.value()}, {"lambda", lambda}};
  out["condition1"] = {{"outcome", outcome_name(c1.outcome)},
                       {"J", c1.J},
                       {"I", c1.I},
                       {"weight", c1.weight},
                       {"weight_needed", c1.weight_needed},
                       {"method", c1.method},
                       {"overlap_permitted", c1.overlap_permitted}};
  out["condition2"] = {{"log_product", nat(c2.log_product)},
                       {"threshold_log", nat(c2.threshold_log)},
                       {"satisfied", c2.satisfied}};
  out["either_condition_holds"] = c1.outcome == SearchOutcome::satisfied || c2.satisfied;
  return {out};
}

Verdict cmd_criteria_comb(Context& ctx) {
  const auto in = read_json_file(ctx.opt.input);
  const Modulus m(in.at("p").get<std::uint32_t>());
  const auto a = plane_set_from(m, in.at("A"));
  const auto u = subgroup_from(m, in.at("U"));
  const auto b = plane_set_from(m, in.at("B"));
  const auto r = comb_criterion(a, u, b);
  json out{{"p", m.value()},
           {"subgroup", u.name()},
           {"covers", r.covers},
           {"projected_b", r.projected_b},
           {"rest_profile", r.rest_profile},
           {"weight", r.weight},
           {"weight_needed", r.weight_needed},
           {"hypotheses_met", r.hypotheses_met},
           {"zero_sum_found", r.zero_sum_found},
           {"witness", json::array()}};
  for (auto pt : r.witness) out["witness"].push_back(point_json(pt));
  return {out};
}

// ---- count ------------------------------------------------------------------

Verdict cmd_count_zero_sums(Context& ctx) {
  const auto& method = ctx.opt.method;
  if (method != "dp" && method != "characters" && method != "both") {
    throw InvalidArgument("--method must be dp, characters or both");
  }
  const auto in = read_json_file(ctx.opt.input);
  const Modulus m(in.at("p").get<std::uint32_t>());
  const auto& elements = in.at("elements");
  const bool plane = !elements.empty() && elements.front().is_array();
  PlaneSet a(m);
  if (plane) {
    a = plane_set_from(m, elements);
  } else {
    // A set of residues counts the same as its copy on the vertical subgroup.
    for (const auto& e : elements) a.insert(0, e.get<std::int64_t>());
  }
  json out{{"p", m.value()},
           {"group", plane ? GroupDescriptor::plane(m.value()).key() : GroupDescriptor::cyclic(m.value()).key()},
           {"size", a.size()},
           {"includes_empty_subset", true}};
  std::optional<BigInt> dp;
  if (method != "characters") {
    dp = count_zero_sum_subsets(a);
    out["dp"] = {{"count", bigint_json(*dp)}};
  }
  Verdict v;
  if (method != "dp") {
    const auto c = character_count_zero_sums(a);
    out["characters"] = {{"value", c.value}, {"log_value", nat(c.log_value)}, {"exact_regime", c.exact_regime}};
    if (plane) {
      const auto e = zero_sum_existence_bound(a);
      out["existence_bound"] = {{"log_lower_bound", nat(e.log_lower_bound)},
                                {"all_characters_bounded", e.all_characters_bounded},
                                {"guarantees_zero_sum", e.guarantees_zero_sum},
                                {"reason", e.reason}};
    }
    if (dp && c.exact_regime) {
      const double exact = dp->convert_to<double>();
      const double rel = exact == 0 ? std::abs(c.value) : std::abs(c.value - exact) / exact;
      const BigInt rounded(std::llround(c.value));
      const bool agree = rounded == *dp && rel < 1e-6;
      out["agreement"] = {{"relative_error", rel}, {"rounded_equal", rounded == *dp}, {"agree", agree}};
      v.failed = !agree;
    }
  }
  v.result = out;
  return v;
}

// ---- audit and integral -----------------------------------------------------

Verdict cmd_audit_thresholds(Context& ctx) {
  AuditOptions ao;
  ao.exact_olson_limit = ctx.opt.cyclic_max;
  ao.threads = ctx.threads();
  const auto entries = audit_thresholds(ctx.opt.pmax, ao);
  const auto growth = growth_threshold(1.003328);
  Verdict v;
  v.result = {{"pmax", ctx.opt.pmax}, {"entries", json::array()}};
  for (const auto& e : entries) {
    v.result["entries"].push_back({{"claim_id", e.claim_id},
                                   {"inequality", e.inequality},
                                   {"domain", e.domain},
                                   {"role", e.role},
                                   {"ol_source", e.ol_source},
                                   {"claimed_from", e.claimed_from},
                                   {"verified_lo", e.verified_lo},
                                   {"verified_hi", e.verified_hi},
                                   {"points_checked", e.points_checked},
                                   {"minimal_p", e.minimal_p},
                                   {"failures_in_claimed_range", e.failures_in_claimed_range},
                                   {"sample_failures", e.sample_failures},
                                   {"holds_on_claimed_range", e.holds_on_claimed_range}});
    if (e.role == "threshold" && !e.holds_on_claimed_range) v.failed = true;
  }
  v.result["growth"] = {{"base", growth.base},
                        {"minimal_n", growth.minimal_n},
                        {"last_failure", growth.last_failure},
                        {"verified_upto", growth.verified_upto},
                        {"increasing_beyond", growth.increasing_beyond},
                        {"certified", growth.certified}};
  return v;
}

Verdict cmd_integral_coslog(Context&) {
  const auto r = cos_log_integral();
  json out{{"lo", r.lo},
           {"hi", r.hi},
           {"value", r.value},
           {"error_estimate", r.error_estimate},
           {"series_value", r.series_value},
           {"series_gap", r.series_gap},
           {"bound", kCosLogIntegralBound},
           {"below_bound", r.value < kCosLogIntegralBound},
           {"margin", kCosLogIntegralBound - r.value}};
  Verdict v{out};
  v.failed = !(r.value < kCosLogIntegralBound);
  return v;
}

// ---- output -----------------------------------------------------------------

std::string scalar_text(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  const bool leaf_array = j.is_array() && std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_object(); });
  if (j.is_object()) {
    if (j.empty()) out.emplace_back(prefix, "{}");
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !leaf_array) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out.emplace_back(prefix, scalar_text(j));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  if (format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << "," << csv_field(v) << "\n";
  } else {
    for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
  }
}

json config_json(const Options& o, const std::string& command) {
  json c{{"cyclic_max", o.cyclic_max}, {"plane_max", o.plane_max}};
  if (command == "olson cyclic") c["n"] = o.n;
  if (command == "olson plane") {
    c["p"] = o.n;
    c["mode"] = o.exact ? "exact" : o.bound_only ? "bound-only" : "auto";
  }
  if (command == "verify lemmas") {
    c["p"] = o.p;
    c["trials"] = o.trials;
    c["seed"] = o.seed;
    c["which"] = o.which;
    c["exhaustive"] = o.exhaustive;
  }
  if (command == "criteria numerik") c["p"] = o.p;
  if (command == "criteria comb" || command == "count zero-sums") c["input"] = o.input;
  if (command == "count zero-sums") c["method"] = o.method;
  if (command == "audit thresholds") c["pmax"] = o.pmax;
  c["tool_version"] = std::string(kToolVersion);
  return c;
}

int fail(const Options& o, std::ostream& out, std::ostream& err, const std::string& command, const std::string& kind,
         const std::string& message, int code) {
  if (o.format == "json") {
    out << json{{"command", command}, {"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump(2)
        << "\n";
  } else {
    err << "error (" << kind << "): " << message << "\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact zero-sum computations over Z_p and Z_p + Z_p", "zerosum"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
  app.add_option("--seed", o.seed, "seed for randomized sweeps");
  app.add_option("--cyclic-max", o.cyclic_max, "largest n for exact cyclic search")->check(CLI::PositiveNumber);
  app.add_option("--plane-max", o.plane_max, "largest p for exact plane search")->check(CLI::PositiveNumber);
  app.add_flag("--timings", o.timings, "include wall-clock timings in the report");
  app.add_option("--cache", o.cache_path, "results cache file (default $ZEROSUM_CACHE or ./zerosum_cache.jsonl)");
  app.add_flag("--no-cache", o.no_cache, "do not read or write the results cache");

  std::string command;
  auto* olson = app.add_subcommand("olson", "Olson constants")->require_subcommand(1);
  auto* oc = olson->add_subcommand("cyclic", "exact Ol(Z/n)");
  oc->add_option("n", o.n)->required();
  auto* op = olson->add_subcommand("plane", "Ol(Z/p + Z/p), exact or lower bound");
  op->add_option("p", o.n)->required();
  auto* ex = op->add_flag("--exact", o.exact, "require the exact value");
  op->add_flag("--bound-only", o.bound_only, "report the constructive lower bound")->excludes(ex);

  auto* verify = app.add_subcommand("verify", "lemma verifier sweeps")->require_subcommand(1);
  auto* vl = verify->add_subcommand("lemmas", "sweep the three sumset inequalities");
  vl->add_option("--p", o.p)->required();
  vl->add_option("--trials", o.trials, "random cases per lemma");
  vl->add_option("--which", o.which)->check(CLI::IsMember({"ddsh", "cd", "olson", "all"}));
  vl->add_flag("--exhaustive", o.exhaustive, "all inputs (p <= 13)");

  auto* criteria = app.add_subcommand("criteria", "zero-sum criteria")->require_subcommand(1);
  auto* cn = criteria->add_subcommand("numerik", "coset-profile conditions");
  cn->add_option("--p", o.p)->required();
  cn->add_option("--lambda", o.lambda, "file or inline csv of p counts")->required();
  auto* cc = criteria->add_subcommand("comb", "covering criterion");
  cc->add_option("--input", o.input, "json {p, A, U, B}")->required()->check(CLI::ExistingFile);

  auto* count = app.add_subcommand("count", "zero-sum subset counts")->require_subcommand(1);
  auto* cz = count->add_subcommand("zero-sums", "count zero-sum subsets (empty subset included)");
  cz->add_option("--input", o.input, "json {p, elements}")->required()->check(CLI::ExistingFile);
  cz->add_option("--method", o.method)->check(CLI::IsMember({"dp", "characters", "both"}));

  auto* audit = app.add_subcommand("audit", "numeric threshold audit")->require_subcommand(1);
  auto* at = audit->add_subcommand("thresholds", "check every stated threshold up to pmax");
  at->add_option("--pmax", o.pmax)->required()->check(CLI::PositiveNumber);

  auto* integral = app.add_subcommand("integral", "analytic constants")->require_subcommand(1);
  auto* ic = integral->add_subcommand("coslog", "integral of ln cos(pi t) over [-0.1, 0.1]");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const std::vector<std::pair<CLI::App*, std::function<Verdict(Context&)>>> table{
      {oc, cmd_olson_cyclic},         {op, cmd_olson_plane},
      {vl, cmd_verify_lemmas},        {cn, cmd_criteria_numerik},
      {cc, cmd_criteria_comb},        {cz, cmd_count_zero_sums},
      {at, cmd_audit_thresholds},     {ic, cmd_integral_coslog},
  };
  std::function<Verdict(Context&)> handler;
  for (const auto& [sub, h] : table) {
    if (sub->parsed()) {
      command = sub->get_parent()->get_name() + " " + sub->get_name();
      handler = h;
    }
  }

  Context ctx{o, json::object(), err};
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = handler(ctx);
  } catch (const LimitExceeded& e) {
    return fail(o, out, err, command, "limit", e.what(), kLimit);
  } catch (const SoundnessError& e) {
    return fail(o, out, err, command, "soundness", e.what(), kVerificationFailure);
  } catch (const std::invalid_argument& e) {
    return fail(o, out, err, command, "invalid_argument", e.what(), kUsage);
  } catch (const std::out_of_range& e) {
    return fail(o, out, err, command, "invalid_argument", e.what(), kUsage);
  } catch (const json::exception& e) {
    return fail(o, out, err, command, "invalid_input", e.what(), kUsage);
  } catch (const std::exception& e) {
    return fail(o, out, err, command, "runtime", e.what(), kVerificationFailure);
  }

  json timings = json::object();
  if (o.timings) {
    timings = ctx.timings;
    timings["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    timings["threads"] = ctx.threads();
    timings["isa"] = std::string(kernels::isa_name(kernels::active().isa));
  } else {
    timings["recorded"] = false;
  }
  json report{{"command", command}, {"config", config_json(o, command)}, {"result", v.result}, {"timings", timings}};
  emit(report, o.format, out);
  return v.failed ? kVerificationFailure : kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace zerosum::cli
