#include "latpair/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "latpair/bijection.hpp"
#include "latpair/closed_forms.hpp"
#include "latpair/oracle.hpp"
#include "latpair/series.hpp"
#include "latpair/verify.hpp"

namespace latpair::cli {

namespace {

using json = nlohmann::ordered_json;

// Range and input problems; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

void require_bound(long value, long bound, const std::string& what) {
  require(value <= bound, what + " = " + std::to_string(value) + " exceeds the default bound " +
                              std::to_string(bound) + " (override with --unsafe-nmax)");
}

struct Document {
  Document() = default;
  explicit Document(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  json params = json::object();
  json results = json::array();
  std::string provenance;
  std::optional<bool> consistency;
  json extra = json::object();  // command-specific trailer, e.g. the bijection report
};

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void emit(const Document& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j;
    j["command"] = doc.command;
    j["params"] = doc.params;
    j["results"] = doc.results;
    j["provenance"] = doc.provenance;
    j["consistency"] = doc.consistency ? json(*doc.consistency) : json(nullptr);
    for (const auto& [k, v] : doc.extra.items()) j[k] = v;
    out << j.dump(2) << '\n';
    return;
  }
  // csv: one row per result, columns from the first record.
  if (doc.results.empty()) {
    out << "command\n";
    return;
  }
  out << "command";
  for (const auto& [k, v] : doc.results.front().items()) out << ',' << k;
  out << '\n';
  for (const auto& rec : doc.results) {
    out << doc.command;
    for (const auto& [k, v] : rec.items()) out << ',' << csv_cell(v);
    out << '\n';
  }
}

// Values that must agree across routes, keyed by the row's position.
struct Agreement {
  std::vector<std::string> first;
  bool ok = true;
  void see(std::size_t row, const std::string& value) {
    if (row >= first.size()) first.resize(row + 1);
    if (first[row].empty()) {
      first[row] = value;
    } else if (first[row] != value) {
      ok = false;
    }
  }
};

std::vector<long> k_range(const std::optional<long>& k, long lo, long hi, const std::string& what) {
  if (k) {
    require(*k >= lo && *k <= hi, what + " needs " + std::to_string(lo) + " <= k <= " +
                                      std::to_string(hi) + ", got k = " + std::to_string(*k));
    return {*k};
  }
  std::vector<long> ks;
  for (long v = lo; v <= hi; ++v) ks.push_back(v);
  return ks;
}

std::vector<std::string> routes_for(const std::string& method, std::vector<std::string> all) {
  if (method == "all") return all;
  return {method};
}

// ---------------------------------------------------------------------------

struct Common {
  std::string format = "json";
  std::optional<long> unsafe_nmax;
};

Bounds effective_bounds(const Common& c) {
  Bounds b;
  if (c.unsafe_nmax) {
    b.oracle = b.series = b.formula = b.bijection = b.barrier = b.avg = *c.unsafe_nmax;
  }
  return b;
}

struct NkrArgs {
  long n = 0;
  long r = 0;
  std::optional<long> k;
  std::string method = "formula-a";
};

Document cmd_nkr(const NkrArgs& a, const Bounds& bounds) {
  require(a.n >= 0 && a.r >= 0 && a.r <= a.n, "nkr needs 0 <= r <= n");
  const long top = std::max(0L, a.n - 1);
  const auto ks = k_range(a.k, 0, top, "nkr");
  Document doc{"nkr"};
  doc.params = {{"n", a.n}, {"r", a.r}, {"method", a.method}};
  if (a.k) doc.params["k"] = *a.k;

  std::optional<CountTable> oracle;
  auto oracle_at = [&](long k) {
    if (!oracle) {
      require_bound(a.n, bounds.oracle, "n (enumeration)");
      oracle = enum_nkr(static_cast<int>(a.n), static_cast<int>(a.r), static_cast<int>(bounds.oracle));
    }
    return oracle->at(k);
  };
  auto series_at = [&](long k) -> BigInt {
    require_bound(a.n + a.r, bounds.series, "n + r (series degree)");
    if (a.n == 0) return 1;  // the constant term of 1 + sum_k u_k
    const Rat c = uk_series(static_cast<int>(k), static_cast<int>(a.n + a.r))
                      .at(static_cast<int>(a.n), static_cast<int>(a.r));
    return require_integer(c, "series coefficient");
  };
  // The closed forms cover k <= n-2; k = n-1 comes from enumeration when it
  // is small enough and from the series otherwise.
  auto boundary = [&](long k) -> std::pair<BigInt, std::string> {
    if (a.n <= bounds.oracle && a.n <= kDefaultOracleSteps) return {oracle_at(k), "oracle"};
    return {series_at(k), "series"};
  };

  Agreement agree;
  for (const auto& route : routes_for(a.method, {"formula-a", "formula-b", "series", "oracle"})) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const long k = ks[i];
      BigInt value;
      std::string prov = route;
      if (route == "formula-a" || route == "formula-b") {
        require_bound(a.n, bounds.formula, "n (closed form)");
        if (k <= a.n - 2) {
          value = route == "formula-a" ? nkr_formula_a(a.n, a.r, k) : nkr_formula_b(a.n, a.r, k);
        } else {
          std::tie(value, prov) = boundary(k);
        }
      } else if (route == "series") {
        value = series_at(k);
      } else {
        value = oracle_at(k);
      }
      agree.see(i, to_string(value));
      doc.results.push_back({{"n", a.n}, {"r", a.r}, {"k", k}, {"value", to_string(value)},
                             {"provenance", prov}});
    }
  }
  doc.provenance = a.method;
  if (a.method == "all") doc.consistency = agree.ok;
  return doc;
}

struct MrsArgs {
  long n = 0;
  long r = 0;
  long s = 0;
  std::optional<long> k;
  std::string method = "formula";
};

Document cmd_mrs(const MrsArgs& a, const Bounds& bounds) {
  require(a.n >= 1 && a.r >= 0 && a.r <= a.s && a.s <= a.n, "mrs needs 0 <= r <= s <= n, n >= 1");
  const bool same = a.r == a.s;
  const auto ks = k_range(a.k, same ? 1 : 0, same ? a.n : a.n - 1, "mrs");
  Document doc{"mrs"};
  doc.params = {{"n", a.n}, {"r", a.r}, {"s", a.s}, {"method", a.method}};
  if (a.k) doc.params["k"] = *a.k;

  std::optional<CountTable> oracle;
  Agreement agree;
  for (const auto& route : routes_for(a.method, {"formula", "oracle"})) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const long k = ks[i];
      BigInt value;
      if (route == "formula") {
        require_bound(a.n, bounds.formula, "n (closed form)");
        value = mrs_formula(a.n, a.r, a.s, k);
      } else {
        require_bound(a.n, bounds.oracle, "n (enumeration)");
        if (!oracle) {
          const int cap = static_cast<int>(bounds.oracle);
          oracle = same ? enum_nkr(static_cast<int>(a.n), static_cast<int>(a.r), cap)
                        : enum_mrs(static_cast<int>(a.n), static_cast<int>(a.r),
                                   static_cast<int>(a.s), cap);
        }
        // Equal end points: meetings after the start are interior ones plus the end.
        value = oracle->at(same ? k - 1 : k);
      }
      agree.see(i, to_string(value));
      doc.results.push_back({{"n", a.n}, {"r", a.r}, {"s", a.s}, {"k", k},
                             {"value", to_string(value)}, {"provenance", route}});
    }
  }
  doc.provenance = a.method;
  if (a.method == "all") doc.consistency = agree.ok;
  return doc;
}

struct NkArgs {
  long n = 0;
  std::optional<long> k;
  std::string method = "formula";
};

Document cmd_fnk(const NkArgs& a, const Bounds& bounds) {
  require(a.n >= 0, "fnk needs n >= 0");
  const auto ks = k_range(a.k, 0, a.n, "fnk");
  Document doc{"fnk"};
  doc.params = {{"n", a.n}, {"method", a.method}};
  if (a.k) doc.params["k"] = *a.k;
  const BigInt all_pairs = power_of_two(2 * a.n);
  std::optional<CountTable> oracle;
  Agreement agree;
  for (const auto& route : routes_for(a.method, {"formula", "series", "oracle"})) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const long k = ks[i];
      BigInt value;
      if (route == "formula") {
        require_bound(a.n, bounds.formula, "n (closed form)");
        value = fnk(a.n, k);
      } else if (route == "series") {
        require_bound(a.n, bounds.series, "n (series degree)");
        value = require_integer(fk_series(static_cast<int>(k), static_cast<int>(a.n))[static_cast<int>(a.n)],
                                "series coefficient");
      } else {
        require_bound(a.n, bounds.oracle, "n (enumeration)");
        if (!oracle) oracle = enum_fnk(static_cast<int>(a.n), static_cast<int>(bounds.oracle));
        value = oracle->at(k);
      }
      agree.see(i, to_string(value));
      doc.results.push_back({{"n", a.n}, {"k", k}, {"value", to_string(value)},
                             {"probability", to_string(make_rat(value, all_pairs))},
                             {"provenance", route}});
    }
  }
  doc.provenance = a.method;
  if (a.method == "all") doc.consistency = agree.ok;
  return doc;
}

Document cmd_pnk(const NkArgs& a, const Bounds& bounds) {
  require(a.n >= 1, "pnk needs n >= 1");
  const auto ks = k_range(a.k, 0, a.n - 1, "pnk");
  Document doc{"pnk"};
  doc.params = {{"n", a.n}, {"method", a.method}};
  if (a.k) doc.params["k"] = *a.k;
  const BigInt pairs = binomial(2 * a.n, a.n);
  std::optional<CountTable> oracle;
  Agreement agree;
  for (const auto& route : routes_for(a.method, {"formula", "oracle"})) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const long k = ks[i];
      Rat value;
      if (route == "formula") {
        require_bound(a.n, bounds.formula, "n (closed form)");
        value = pnk(a.n, k);
      } else {
        require_bound(a.n, bounds.oracle, "n (enumeration)");
        if (!oracle) oracle = enum_phi(static_cast<int>(a.n), static_cast<int>(bounds.oracle));
        value = make_rat(oracle->at(k), pairs);
      }
      agree.see(i, to_string(value));
      doc.results.push_back({{"n", a.n}, {"k", k}, {"value", to_string(value)},
                             {"count", to_string(require_integer(value * pairs, "pair count"))},
                             {"provenance", route}});
    }
  }
  doc.provenance = a.method;
  if (a.method == "all") doc.consistency = agree.ok;
  return doc;
}

Document cmd_diag(const NkArgs& a, const Bounds& bounds) {
  require(a.n >= 2, "diag needs n >= 2");
  const auto ks = k_range(a.k, 0, a.n - 2, "diag");
  Document doc{"diag"};
  doc.params = {{"n", a.n}, {"method", a.method}};
  if (a.k) doc.params["k"] = *a.k;
  std::vector<CountTable> oracle;
  Agreement agree;
  for (const auto& route : routes_for(a.method, {"formula", "formula-a", "series", "oracle"})) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const long k = ks[i];
      BigInt value = 0;
      if (route == "formula") {
        require_bound(a.n, bounds.formula, "n (closed form)");
        value = diag_sum(a.n, k);
      } else if (route == "formula-a") {
        require_bound(a.n, bounds.formula, "n (closed form)");
        for (long r = 0; r <= a.n; ++r) value += nkr_formula_a(a.n, r, k);
      } else if (route == "series") {
        require_bound(2 * a.n, bounds.series, "2n (series degree)");
        const BiSeries u = uk_series(static_cast<int>(k), static_cast<int>(2 * a.n));
        Rat sum = 0;
        for (long r = 0; r <= a.n; ++r) sum += u.at(static_cast<int>(a.n), static_cast<int>(r));
        value = require_integer(sum, "series coefficient sum");
      } else {
        require_bound(a.n, bounds.oracle, "n (enumeration)");
        if (oracle.empty()) {
          for (long r = 0; r <= a.n; ++r) {
            oracle.push_back(enum_nkr(static_cast<int>(a.n), static_cast<int>(r),
                                      static_cast<int>(bounds.oracle)));
          }
        }
        for (const auto& t : oracle) value += t.at(k);
      }
      agree.see(i, to_string(value));
      doc.results.push_back(
          {{"n", a.n}, {"k", k}, {"value", to_string(value)}, {"provenance", route}});
    }
  }
  doc.provenance = a.method;
  if (a.method == "all") doc.consistency = agree.ok;
  return doc;
}

Document cmd_avg(const NkArgs& a, const Bounds& bounds) {
  require(a.n >= 0, "avg needs n >= 0");
  Document doc{"avg"};
  doc.params = {{"n", a.n}, {"method", a.method}};
  Agreement agree;
  for (const auto& route : routes_for(a.method, {"formula", "oracle"})) {
    Rat value;
    if (route == "formula") {
      require_bound(a.n, bounds.avg, "n");
      value = avg_crossings(a.n);
    } else {
      require_bound(a.n, bounds.oracle, "n (enumeration)");
      const CountTable t = enum_fnk(static_cast<int>(a.n), static_cast<int>(bounds.oracle));
      BigInt weighted = 0;
      for (const auto& [k, count] : t.entries()) weighted += k * count;
      value = make_rat(weighted, t.total());
    }
    agree.see(0, to_string(value));
    doc.results.push_back({{"n", a.n}, {"value", to_string(value)}, {"float", value.get_d()},
                           {"provenance", route}});
  }
  doc.provenance = a.method;
  if (a.method == "all") doc.consistency = agree.ok;
  return doc;
}

struct BarrierArgs {
  long a = 0;
  long b = 0;
  long x = 0;
  std::optional<std::string> p;
  std::optional<std::string> level_file;
  std::string method = "dp";
};

LevelProb read_level_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open level file '" + path + "'");
  LevelProb model;
  std::string line;
  long lineno = 0;
  std::vector<long> blank;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      blank.push_back(lineno);
      continue;
    }
    // A blank line followed by more values would shift every later level.
    if (!blank.empty()) {
      throw UsageError(path + ":" + std::to_string(blank.front()) + ": blank line inside the level list");
    }
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    try {
      model.west.push_back(parse_rational(token));
    } catch (const std::exception& e) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  require(!model.west.empty(), "level file '" + path + "' holds no probabilities");
  try {
    validate(model);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  return model;
}

Document cmd_barrier(const BarrierArgs& a, const Bounds& bounds) {
  require(a.a >= 0 && a.b >= 0 && a.x >= 0, "barrier needs a, b, x >= 0");
  require(a.p.has_value() != a.level_file.has_value(), "barrier needs exactly one of --p, --level-file");
  require_bound(a.a + a.b + a.x, bounds.barrier, "a + b + x");
  ProbModel model;
  Document doc{"barrier"};
  doc.params = {{"a", a.a}, {"b", a.b}, {"x", a.x}, {"method", a.method}};
  if (a.p) {
    Rat p;
    try {
      p = parse_rational(*a.p);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--p: ") + e.what());
    }
    require(is_probability(p), "--p must lie in [0, 1]");
    model = ConstantProb{p};
    doc.params["p"] = to_string(p);
  } else {
    model = read_level_file(*a.level_file);
    json levels = json::array();
    for (const Rat& v : std::get<LevelProb>(model).west) levels.push_back(to_string(v));
    doc.params["levels"] = levels;
  }
  require(a.method != "formula" || a.p, "the formula route needs a constant --p");

  const BarrierConfig cfg{a.a, a.b, a.x, model};
  std::vector<std::string> routes = {"dp", "single-walker", "formula"};
  if (!a.p) routes.pop_back();
  Agreement agree;
  for (const auto& route : routes_for(a.method, routes)) {
    Rat value;
    std::string prov = route;
    if (route == "dp") {
      value = barrier_dp(cfg);
    } else if (route == "single-walker") {
      std::set<Point> targets;
      for (long t = 0; t <= a.x; ++t) targets.insert({-t, 1 + t});
      value = unconstrained_endpoint_prob(cfg.upper_start(), cfg.steps_to_line(), targets, model);
      prov = "single-walker-dp";
    } else {
      value = barrier_formula(a.a, a.b, a.x, std::get<ConstantProb>(model).p);
    }
    agree.see(0, to_string(value));
    doc.results.push_back(
        {{"a", a.a}, {"b", a.b}, {"x", a.x}, {"value", to_string(value)}, {"provenance", prov}});
  }
  doc.provenance = a.method;
  if (a.method == "all") doc.consistency = agree.ok;
  return doc;
}

std::string pair_text(const RectPair& p) { return p.upper.word() + "|" + p.lower.word(); }

Document cmd_bijection(long r, long s, const Bounds& bounds) {
  require(r >= 1 && s >= 1, "bijection needs r, s >= 1");
  require_bound(r + s, bounds.bijection, "r + s");
  const BijectionReport rep = verify_bijection(r, s, true);
  Document doc{"bijection"};
  doc.params = {{"r", r}, {"s", s}};
  for (const Correspondence& c : rep.table) {
    doc.results.push_back({{"source", pair_text(c.source)},
                           {"case", to_string(c.images.which)},
                           {"first_image", pair_text(c.images.first)},
                           {"first_group", to_string(c.first_tag)},
                           {"second_image", pair_text(c.images.second)},
                           {"second_group", to_string(c.second_tag)},
                           {"provenance", "bijection"}});
  }
  doc.provenance = "bijection";
  doc.consistency = rep.passed();
  doc.extra["report"] = {{"nonintersecting", rep.nonintersecting},
                         {"one_intersection", rep.one_intersection},
                         {"images", 2 * static_cast<long>(rep.table.size())},
                         {"total", rep.total},
                         {"injective", rep.injective},
                         {"exhaustive", rep.exhaustive},
                         {"round_trip", rep.round_trip},
                         {"groups_ok", rep.groups_ok},
                         {"counts_ok", rep.counts_ok()},
                         {"passed", rep.passed()},
                         {"counterexamples", rep.counterexamples}};
  return doc;
}

struct VerifyArgs {
  bool all = false;
  std::vector<std::string> suites;
  std::optional<int> nmax;
};

int cmd_verify(const VerifyArgs& a, const Common& common, std::ostream& out) {
  RunConfig cfg;
  if (a.all) cfg.suites = all_suites();
  for (const auto& s : a.suites) {
    if (s == "none") continue;
    require(is_suite(s), "unknown suite '" + s + "'");
    cfg.suites.push_back(s);
  }
  require(a.all || !a.suites.empty(), "verify needs --all or --suite");
  if (a.nmax) {
    require(*a.nmax >= 0, "--nmax must be nonnegative");
    const Bounds bounds = effective_bounds(common);
    require_bound(*a.nmax, bounds.oracle, "--nmax");
    cfg.cap_enumeration(*a.nmax);
    cfg.n_max = *a.nmax;
  }
  const auto reports = run_all(cfg);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });

  if (common.format == "text") {
    for (const auto& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.check_id << " (" << r.instances << " instances)";
      if (r.first_failure) {
        out << ": " << r.first_failure->inputs << ": expected " << r.first_failure->expected
            << ", got " << r.first_failure->actual;
      }
      out << '\n';
    }
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
    return ok ? kExitOk : kExitFailure;
  }
  Document doc{"verify"};
  json suites = json::array();
  for (const auto& s : cfg.suites) suites.push_back(s);
  doc.params = {{"suites", suites}};
  if (a.nmax) doc.params["nmax"] = *a.nmax;
  for (const auto& r : reports) {
    doc.results.push_back({{"check", r.check_id},
                           {"passed", r.passed},
                           {"instances", r.instances},
                           {"inputs", r.first_failure ? r.first_failure->inputs : ""},
                           {"expected", r.first_failure ? r.first_failure->expected : ""},
                           {"actual", r.first_failure ? r.first_failure->actual : ""},
                           {"provenance", "verify"}});
  }
  doc.provenance = "verify";
  doc.consistency = ok;
  emit(doc, common.format, out);
  return ok ? kExitOk : kExitFailure;
}

void add_common(CLI::App* sub, Common& c, bool text_allowed) {
  std::vector<std::string> formats = {"json", "csv"};
  if (text_allowed) formats.push_back("text");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
  sub->add_option("--unsafe-nmax", c.unsafe_nmax, "Replace every size bound with this value");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of lattice path pairs by number of intersections", "latpair"};
  app.require_subcommand(1);

  Common common;
  NkrArgs nkr;
  MrsArgs mrs;
  NkArgs fnk_a, pnk_a, diag_a, avg_a;
  BarrierArgs bar;
  long bij_r = 0, bij_s = 0;
  VerifyArgs ver;

  auto* s_nkr = app.add_subcommand("nkr", "Ordered pairs on an r x (n-r) rectangle by interior meetings");
  s_nkr->add_option("--n", nkr.n)->required();
  s_nkr->add_option("--r", nkr.r)->required();
  s_nkr->add_option("--k", nkr.k);
  s_nkr->add_option("--method", nkr.method)
      ->check(CLI::IsMember({"formula-a", "formula-b", "series", "oracle", "all"}));
  add_common(s_nkr, common, false);

  auto* s_mrs = app.add_subcommand("mrs", "Pairs with different end points by meetings after the start");
  s_mrs->add_option("--n", mrs.n)->required();
  s_mrs->add_option("--r", mrs.r)->required();
  s_mrs->add_option("--s", mrs.s)->required();
  s_mrs->add_option("--k", mrs.k);
  s_mrs->add_option("--method", mrs.method)->check(CLI::IsMember({"formula", "oracle", "all"}));
  add_common(s_mrs, common, false);

  auto* s_fnk = app.add_subcommand("fnk", "Pairs of free walks by meetings away from the origin");
  s_fnk->add_option("--n", fnk_a.n)->required();
  s_fnk->add_option("--k", fnk_a.k);
  s_fnk->add_option("--method", fnk_a.method)
      ->check(CLI::IsMember({"formula", "series", "oracle", "all"}));
  add_common(s_fnk, common, false);

  auto* s_pnk = app.add_subcommand("pnk", "Meeting distribution of free walks with a common end point");
  s_pnk->add_option("--n", pnk_a.n)->required();
  s_pnk->add_option("--k", pnk_a.k);
  s_pnk->add_option("--method", pnk_a.method)->check(CLI::IsMember({"formula", "oracle", "all"}));
  add_common(s_pnk, common, false);

  auto* s_diag = app.add_subcommand("diag", "Sum over r of the rectangle counts");
  s_diag->add_option("--n", diag_a.n)->required();
  s_diag->add_option("--k", diag_a.k);
  s_diag->add_option("--method", diag_a.method)
      ->check(CLI::IsMember({"formula", "formula-a", "series", "oracle", "all"}));
  add_common(s_diag, common, false);

  auto* s_avg = app.add_subcommand("avg", "Average number of meetings of two free walks");
  s_avg->add_option("--n", avg_a.n)->required();
  s_avg->add_option("--method", avg_a.method)->check(CLI::IsMember({"formula", "oracle", "all"}));
  add_common(s_avg, common, false);

  auto* s_bar = app.add_subcommand("barrier", "Probability that two walkers first meet at the origin");
  s_bar->add_option("--a", bar.a)->required();
  s_bar->add_option("--b", bar.b)->required();
  s_bar->add_option("--x", bar.x)->required();
  s_bar->add_option("--p", bar.p, "West-step probability as a rational, e.g. 1/3");
  s_bar->add_option("--level-file", bar.level_file, "One rational per line, level 1 first");
  s_bar->add_option("--method", bar.method)
      ->check(CLI::IsMember({"dp", "single-walker", "formula", "all"}));
  add_common(s_bar, common, false);

  auto* s_bij = app.add_subcommand("bijection", "Tabulate the two-to-one map on an r x s rectangle");
  s_bij->add_option("--r", bij_r)->required();
  s_bij->add_option("--s", bij_s)->required();
  add_common(s_bij, common, false);

  auto* s_ver = app.add_subcommand("verify", "Run identity checks");
  s_ver->add_flag("--all", ver.all);
  s_ver->add_option("--suite", ver.suites, "Suite name, repeatable; 'none' runs nothing");
  s_ver->add_option("--nmax", ver.nmax, "Bound for the rectangle enumerations");
  add_common(s_ver, common, true);
  common.format = "json";

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Bounds bounds = effective_bounds(common);
  try {
    if (s_ver->parsed()) {
      if (s_ver->count("--format") == 0) common.format = "text";
      return cmd_verify(ver, common, out);
    }
    require(common.format != "text", "text output is only available for verify");
    Document doc;
    if (s_nkr->parsed()) doc = cmd_nkr(nkr, bounds);
    if (s_mrs->parsed()) doc = cmd_mrs(mrs, bounds);
    if (s_fnk->parsed()) doc = cmd_fnk(fnk_a, bounds);
    if (s_pnk->parsed()) doc = cmd_pnk(pnk_a, bounds);
    if (s_diag->parsed()) doc = cmd_diag(diag_a, bounds);
    if (s_avg->parsed()) doc = cmd_avg(avg_a, bounds);
    if (s_bar->parsed()) doc = cmd_barrier(bar, bounds);
    if (s_bij->parsed()) doc = cmd_bijection(bij_r, bij_s, bounds);
    emit(doc, common.format, out);
    return doc.consistency.value_or(true) ? kExitOk : kExitFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace latpair::cli
