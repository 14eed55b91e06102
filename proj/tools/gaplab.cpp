// gaplab: derivation, sieve and construction subcommands with reproducible
// machine-readable reports.
//
// Exit codes: 0 success, 2 domain/usage error, 3 constraint violation,
// 4 I/O error.

#include <omp.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaplab/config.hpp"
#include "gaplab/constants.hpp"
#include "gaplab/construction.hpp"
#include "gaplab/report.hpp"
#include "gaplab/sieve.hpp"
#include "gaplab/variational.hpp"
#include "gaplab/zero_region.hpp"

namespace {

using gaplab::ConstraintCheck;
using gaplab::Interval;
using gaplab::KeyValueConfig;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kDomain = 2;
constexpr int kConstraint = 3;
constexpr int kIo = 4;

struct Output {
  std::optional<std::string> path;
  std::string format = "json";  // json | csv
};

std::string resolve_path(const std::string& p) {
  namespace fs = std::filesystem;
  if (fs::path(p).is_absolute()) return p;
  const char* dir = std::getenv("GAPLAB_OUTDIR");
  if (dir && *dir) return (fs::path(dir) / p).string();
  return p;
}

void emit(const Output& out, const std::string& content) {
  if (out.path)
    gaplab::atomic_write(resolve_path(*out.path), content);
  else
    std::cout << content;
}

ordered_json config_json(const KeyValueConfig& cfg) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : cfg.entries()) j[k] = v;
  return j;
}

ordered_json checks_json(const std::vector<ConstraintCheck>& checks) {
  auto arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json j;
    j["name"] = c.name;
    j["satisfied"] = c.satisfied;
    j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

bool all_pass(const std::vector<ConstraintCheck>& checks) {
  for (const auto& c : checks)
    if (!c.satisfied) return false;
  return true;
}

// CLI flag values land on top of config-file values; defaults fill the rest.
// The resolved map is embedded in every report.
class Resolver {
 public:
  explicit Resolver(const std::optional<std::string>& config_path) {
    if (config_path) cfg_ = KeyValueConfig::from_file(*config_path);
  }
  void override_if(const std::string& key, const std::optional<std::string>& v) {
    if (v) cfg_.set(key, *v);
  }
  void default_to(const std::string& key, const std::string& v) {
    if (!cfg_.has(key)) cfg_.set(key, v);
  }
  KeyValueConfig& cfg() { return cfg_; }

 private:
  KeyValueConfig cfg_;
};

uint64_t bounded_draw(std::mt19937_64& rng, uint64_t m) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % m;
}

// ---------------------------------------------------------------- derive --

int run_derive(Resolver& rv, const Output& out) {
  auto& cfg = rv.cfg();
  rv.default_to("k", "1");
  cfg.require_known_keys(
      {"k", "x", "logx", "theta", "c_ij", "c_pap", "d_pap", "c_ub", "d_ub"});

  const long k = cfg.get_long("k");
  gaplab::ComponentConstants cc = gaplab::ComponentConstants::defaults();
  if (cfg.has("theta")) cc.theta = Interval::parse(cfg.raw("theta"));
  if (cfg.has("c_ij")) cc.c_ij = Interval::parse(cfg.raw("c_ij"));
  if (cfg.has("c_pap")) cc.c_pap = Interval::parse(cfg.raw("c_pap"));
  if (cfg.has("d_pap")) cc.d_pap = Interval::parse(cfg.raw("d_pap"));
  if (cfg.has("c_ub")) cc.c_ub = Interval::parse(cfg.raw("c_ub"));
  if (cfg.has("d_ub")) cc.d_ub = Interval::parse(cfg.raw("d_ub"));

  std::optional<Interval> log_x;
  if (cfg.has("logx") && cfg.has("x"))
    throw gaplab::DomainError("give either x or logx, not both");
  if (cfg.has("logx")) log_x = Interval::parse(cfg.raw("logx"));
  if (cfg.has("x")) log_x = Interval::parse(cfg.raw("x")).log();

  const auto res = gaplab::derive_chain(cc, k, log_x);

  if (out.format == "csv") {
    emit(out, res.trace.to_csv());
  } else {
    ordered_json j;
    j["command"] = "derive";
    j["config"] = config_json(cfg);
    ordered_json params;
    auto put = [&params](const char* name, const Interval& v) {
      params[name] = v.mid_string(16);
    };
    const auto& p = res.params;
    put("c", p.c);
    put("A", p.a_pop);
    put("c1", p.c1);
    put("epsilon", p.epsilon);
    put("EN_lower", p.en_lower);
    put("EN2_upper", p.en2_upper);
    put("prob_lower", p.prob_lower);
    put("C_low", p.c_low);
    put("C_high", p.c_high);
    put("epsilon0", p.epsilon0);
    put("c_LG", p.c_lg);
    if (p.m) params["m"] = *p.m;
    if (p.a_prime) put("A_prime", *p.a_prime);
    if (p.u) put("u", *p.u);
    if (p.sigma_y_coeff) put("sigma_y_coeff", *p.sigma_y_coeff);
    j["params"] = std::move(params);
    j["c_LG_lo"] = p.c_lg.lo_string(40);
    j["c_LG_hi"] = p.c_lg.hi_string(40);
    j["max_relative_width"] = gaplab::fmt_double(res.trace.max_relative_width());
    j["checks"] = checks_json(res.checks);
    j["trace"] = res.trace.to_json();
    emit(out, gaplab::json_dump(j));
  }
  return res.all_checks_pass() ? kOk : kConstraint;
}

// -------------------------------------------------------- zero-constants --

int run_zero_constants(Resolver& rv, const Output& out) {
  auto& cfg = rv.cfg();
  rv.default_to("x", "100000");
  cfg.require_known_keys({"x", "R", "c_zfr", "jutila_exp", "trivial_exp"});

  gaplab::ZeroRegionOverrides ov;
  if (cfg.has("R")) ov.mccurley_r = Interval::parse(cfg.raw("R"));
  if (cfg.has("c_zfr")) ov.c_zfr = Interval::parse(cfg.raw("c_zfr"));
  if (cfg.has("jutila_exp")) ov.jutila_exp = cfg.get_double("jutila_exp");
  if (cfg.has("trivial_exp")) ov.trivial_exp = cfg.get_double("trivial_exp");
  const uint64_t x = static_cast<uint64_t>(cfg.get_long("x"));

  const auto chain = gaplab::derive_zero_region_chain(ov, x);

  if (out.format == "csv") {
    emit(out, chain.trace.to_csv());
  } else {
    ordered_json j;
    j["command"] = "zero-constants";
    j["config"] = config_json(cfg);
    ordered_json vals;
    vals["R"] = chain.values.mccurley_r.mid_string(16);
    vals["R1"] = chain.values.r1.mid_string(16);
    vals["c_ZFR"] = chain.values.c_zfr.mid_string(16);
    vals["a"] = chain.values.a.mid_string(16);
    vals["c_ZD"] = chain.values.c_zd;
    vals["D_PAP"] = chain.values.d_pap.mid_string(16);
    vals["C_PAP"] = chain.values.c_pap.mid_string(16);
    vals["C_UB"] = chain.values.c_ub.mid_string(16);
    j["values"] = std::move(vals);
    j["checks"] = checks_json(chain.checks);
    j["trace"] = chain.trace.to_json();
    emit(out, gaplab::json_dump(j));
  }
  return chain.all_checks_pass() ? kOk : kConstraint;
}

// --------------------------------------------------------------- maynard --

int run_maynard(Resolver& rv, const Output& out) {
  auto& cfg = rv.cfg();
  rv.default_to("degree", "0");
  cfg.require_known_keys({"r", "degree"});
  const long r = cfg.get_long("r");
  const long degree = cfg.get_long("degree");
  if (r < 1) throw gaplab::DomainError("r must be >= 1");
  if (degree < 0) throw gaplab::DomainError("degree must be >= 0");

  const auto res = gaplab::maximize_ratio(static_cast<unsigned>(r),
                                          static_cast<unsigned>(degree));

  if (out.format == "csv") {
    std::ostringstream csv;
    csv << "r,degree,ratio,basis_size\n"
        << res.r << ',' << res.degree << ',' << gaplab::fmt_double(res.ratio)
        << ',' << res.basis_size << '\n';
    emit(out, csv.str());
  } else {
    ordered_json j;
    j["command"] = "maynard";
    j["config"] = config_json(cfg);
    j["r"] = res.r;
    j["degree"] = res.degree;
    j["ratio"] = gaplab::fmt_double(res.ratio);
    j["basis_size"] = res.basis_size;
    auto coeffs = ordered_json::array();
    auto coeffs_q = ordered_json::array();
    for (double c : res.coefficients) {
      coeffs.push_back(gaplab::fmt_double(c));
      mpq_class q(c);
      q.canonicalize();
      coeffs_q.push_back(q.get_str());
    }
    j["coefficients"] = std::move(coeffs);
    j["coefficients_rational"] = std::move(coeffs_q);
    emit(out, gaplab::json_dump(j));
  }
  return kOk;
}

// ------------------------------------------------------------------ gaps --

int run_gaps(Resolver& rv, const Output& out) {
  auto& cfg = rv.cfg();
  rv.default_to("k", "1");
  cfg.require_known_keys({"max", "k"});
  const uint64_t x = static_cast<uint64_t>(cfg.get_long("max"));
  const long k = cfg.get_long("k");
  if (k < 1) throw gaplab::DomainError("k must be >= 1");

  const auto rec = gaplab::max_gap(x, static_cast<int>(k));

  if (out.format == "csv") {
    std::ostringstream csv;
    csv << "k,X,gap,witness_primes\n" << rec.k << ',' << rec.x_limit << ','
        << rec.value << ',';
    for (size_t i = 0; i < rec.witness.size(); ++i)
      csv << (i ? ";" : "") << rec.witness[i];
    csv << '\n';
    emit(out, csv.str());
  } else {
    ordered_json j;
    j["command"] = "gaps";
    j["config"] = config_json(cfg);
    j["k"] = rec.k;
    j["X"] = rec.x_limit;
    j["gap"] = rec.value;
    j["witness"] = rec.witness;
    emit(out, gaplab::json_dump(j));
  }
  return kOk;
}

// --------------------------------------------------------------- mertens --

int run_mertens(Resolver& rv, const Output& out) {
  auto& cfg = rv.cfg();
  cfg.require_known_keys({"x", "grid"});
  std::vector<uint64_t> xs;
  if (cfg.has("grid")) {
    std::istringstream in(cfg.raw("grid"));
    std::string tok;
    while (std::getline(in, tok, ','))
      xs.push_back(static_cast<uint64_t>(std::strtod(tok.c_str(), nullptr)));
  }
  if (cfg.has("x")) xs.push_back(static_cast<uint64_t>(cfg.get_long("x")));
  if (xs.empty()) throw gaplab::DomainError("give x or grid");

  auto rows = ordered_json::array();
  std::ostringstream csv;
  csv << "x,product,ratio_to_asymptotic\n";
  for (uint64_t x : xs) {
    const auto r = gaplab::mertens_product(x);
    ordered_json row;
    row["x"] = x;
    row["product"] = gaplab::fmt_double(r.product);
    row["ratio_to_asymptotic"] = gaplab::fmt_double(r.ratio_to_asymptotic);
    rows.push_back(std::move(row));
    csv << x << ',' << gaplab::fmt_double(r.product) << ','
        << gaplab::fmt_double(r.ratio_to_asymptotic) << '\n';
  }
  if (out.format == "csv") {
    emit(out, csv.str());
  } else {
    ordered_json j;
    j["command"] = "mertens";
    j["config"] = config_json(cfg);
    j["rows"] = std::move(rows);
    emit(out, gaplab::json_dump(j));
  }
  return kOk;
}

// -------------------------------------------------------------- bt-check --

int run_bt_check(Resolver& rv, const Output& out) {
  auto& cfg = rv.cfg();
  rv.default_to("qmax", "50");
  cfg.require_known_keys({"x", "qmax"});
  const uint64_t x = static_cast<uint64_t>(cfg.get_long("x"));
  const uint64_t qmax = static_cast<uint64_t>(cfg.get_long("qmax"));

  uint64_t checked = 0, violations = 0;
  auto rows = ordered_json::array();
  std::ostringstream csv;
  csv << "q,a,count,bound,holds\n";
  for (uint64_t q = 1; q <= qmax; ++q) {
    for (uint64_t a = (q == 1 ? 0 : 1); a < std::max<uint64_t>(q, 1); ++a) {
      if (q > 1 && std::gcd(a, q) != 1) continue;
      const auto r = gaplab::brun_titchmarsh_check(x, q, a);
      ++checked;
      if (!r.holds) ++violations;
      ordered_json row;
      row["q"] = q;
      row["a"] = a;
      row["count"] = r.count;
      row["bound"] = gaplab::fmt_double(r.bound);
      row["holds"] = r.holds;
      rows.push_back(std::move(row));
      csv << q << ',' << a << ',' << r.count << ',' << gaplab::fmt_double(r.bound)
          << ',' << (r.holds ? "true" : "false") << '\n';
    }
  }
  if (out.format == "csv") {
    emit(out, csv.str());
  } else {
    ordered_json j;
    j["command"] = "bt-check";
    j["config"] = config_json(cfg);
    j["checked"] = checked;
    j["violations"] = violations;
    j["rows"] = std::move(rows);
    emit(out, gaplab::json_dump(j));
  }
  return violations == 0 ? kOk : kConstraint;
}

// -------------------------------------------------------------- ub-pairs --

int run_ub_pairs(Resolver& rv, const Output& out) {
  auto& cfg = rv.cfg();
  rv.default_to("b0", "1");
  rv.default_to("seed", "7");
  rv.default_to("pairs", "50");
  cfg.require_known_keys({"x", "b0", "z", "pairs", "seed", "a", "b"});
  const uint64_t x = static_cast<uint64_t>(cfg.get_long("x"));
  const uint64_t b0 = static_cast<uint64_t>(cfg.get_long("b0"));
  const uint64_t z = static_cast<uint64_t>(cfg.get_long("z"));
  const double c_ub = gaplab::ComponentConstants::defaults().c_ub.mid_double();

  std::vector<std::pair<uint64_t, uint64_t>> pairs;
  if (cfg.has("a") || cfg.has("b")) {
    pairs.emplace_back(static_cast<uint64_t>(cfg.get_long("a")),
                       static_cast<uint64_t>(cfg.get_long("b")));
  } else {
    const uint64_t want = static_cast<uint64_t>(cfg.get_long("pairs"));
    const uint64_t big_p = gaplab::primorial_div(x, b0);
    std::mt19937_64 rng(static_cast<uint64_t>(cfg.get_long("seed")));
    auto coprime_draw = [&]() {
      uint64_t v;
      do {
        v = bounded_draw(rng, big_p) + 1;
      } while (std::gcd(v, big_p) != 1);
      return v;
    };
    while (pairs.size() < want) {
      const uint64_t a = coprime_draw();
      const uint64_t b = coprime_draw();
      if (a != b) pairs.emplace_back(a, b);
    }
  }

  uint64_t violations = 0;
  auto rows = ordered_json::array();
  std::ostringstream csv;
  csv << "x,b0,P,Z,a,b,count,bound,ratio_precondition_ok,short_circuited,holds\n";
  for (const auto& [a, b] : pairs) {
    const auto r = gaplab::ub_pair_count(x, b0, z, a, b, c_ub);
    if (!r.holds) ++violations;
    ordered_json row;
    row["x"] = x;
    row["b0"] = b0;
    row["P"] = r.primorial;
    row["Z"] = z;
    row["a"] = a;
    row["b"] = b;
    row["count"] = r.count;
    row["bound"] = gaplab::fmt_double(r.bound);
    row["ratio_precondition_ok"] = r.ratio_precondition_ok;
    row["short_circuited"] = r.short_circuited;
    row["holds"] = r.holds;
    rows.push_back(std::move(row));
    csv << x << ',' << b0 << ',' << r.primorial << ',' << z << ',' << a << ','
        << b << ',' << r.count << ',' << gaplab::fmt_double(r.bound) << ','
        << (r.ratio_precondition_ok ? "true" : "false") << ','
        << (r.short_circuited ? "true" : "false") << ','
        << (r.holds ? "true" : "false") << '\n';
  }
  if (out.format == "csv") {
    emit(out, csv.str());
  } else {
    ordered_json j;
    j["command"] = "ub-pairs";
    j["config"] = config_json(cfg);
    j["violations"] = violations;
    j["rows"] = std::move(rows);
    emit(out, gaplab::json_dump(j));
  }
  return violations == 0 ? kOk : kConstraint;
}

// ------------------------------------------------------------- construct --

int run_construct(Resolver& rv, const Output& out,
                  const std::optional<std::string>& members_out) {
  auto& cfg = rv.cfg();
  rv.default_to("b0", "1");
  rv.default_to("seed", "1");
  rv.default_to("strategy", "uniform");
  rv.default_to("bands", "0:0.25,0.25:0.5,0.5:0.75,0.75:1");
  rv.default_to("A", "1");
  rv.default_to("epsilon", "0.01");
  cfg.require_known_keys(
      {"x", "b0", "c", "y", "z", "smin", "seed", "strategy", "bands", "A",
       "epsilon"});

  const double x = cfg.get_double("x");
  const uint64_t b0 = static_cast<uint64_t>(cfg.get_long("b0"));
  gaplab::SystemOverrides ov;
  if (cfg.has("c")) ov.c = cfg.get_double("c");
  if (cfg.has("y")) ov.y = cfg.get_double("y");
  if (cfg.has("z")) ov.z = cfg.get_double("z");
  if (cfg.has("smin")) ov.s_min = cfg.get_double("smin");

  const auto sys = gaplab::build_prime_sets(x, b0, ov);
  const auto strategy = gaplab::parse_strategy(cfg.raw("strategy"));
  const uint64_t seed = static_cast<uint64_t>(cfg.get_long("seed"));

  std::vector<std::pair<double, double>> bands;
  {
    std::istringstream in(cfg.raw("bands"));
    std::string tok;
    while (std::getline(in, tok, ',')) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw gaplab::DomainError("band '" + tok + "' must be alpha:beta");
      bands.emplace_back(std::strtod(tok.substr(0, colon).c_str(), nullptr),
                         std::strtod(tok.substr(colon + 1).c_str(), nullptr));
    }
  }

  const auto [assignment, survivors] = gaplab::random_construction(sys, seed, strategy);
  const auto band_rows =
      gaplab::survivor_stats(survivors, sys.y, bands, cfg.get_double("A"), sys.x,
                             cfg.get_double("epsilon"));

  if (members_out) {
    std::ostringstream m;
    for (uint64_t n : survivors.members) m << n << '\n';
    gaplab::atomic_write(resolve_path(*members_out), m.str());
  }

  std::ostringstream csv;
  csv << "alpha,beta,count,lower_band,upper_band,short_interval_band\n";
  auto rows = ordered_json::array();
  for (const auto& row : band_rows) {
    ordered_json r;
    r["alpha"] = gaplab::fmt_double(row.alpha);
    r["beta"] = gaplab::fmt_double(row.beta);
    r["count"] = row.count;
    r["lower_band"] = gaplab::fmt_double(row.lower_band);
    r["upper_band"] = gaplab::fmt_double(row.upper_band);
    r["short_interval_band"] = gaplab::fmt_double(row.short_interval_band);
    rows.push_back(std::move(r));
    csv << gaplab::fmt_double(row.alpha) << ',' << gaplab::fmt_double(row.beta)
        << ',' << row.count << ',' << gaplab::fmt_double(row.lower_band) << ','
        << gaplab::fmt_double(row.upper_band) << ','
        << gaplab::fmt_double(row.short_interval_band) << '\n';
  }

  if (out.format == "csv") {
    emit(out, csv.str());
  } else {
    ordered_json j;
    j["command"] = "construct";
    j["config"] = config_json(cfg);
    ordered_json system;
    system["x"] = gaplab::fmt_double(sys.x);
    system["y"] = gaplab::fmt_double(sys.y);
    system["z"] = gaplab::fmt_double(sys.z);
    system["s_min"] = gaplab::fmt_double(sys.s_min);
    system["c"] = gaplab::fmt_double(sys.c);
    system["b0"] = sys.b0;
    system["regime"] = sys.paper_regime ? "paper-regime" : "toy-regime";
    system["warnings"] = sys.warnings;
    j["system"] = std::move(system);
    ordered_json counts;
    counts["S"] = sys.s_primes.size();
    counts["P"] = sys.p_primes.size();
    counts["Q"] = sys.q_primes.size();
    counts["T"] = survivors.members.size();
    j["counts"] = std::move(counts);
    ordered_json asg;
    asg["strategy"] = gaplab::strategy_name(assignment.strategy);
    asg["seed"] = assignment.seed;
    asg["hash"] = assignment.hash();
    j["assignment"] = std::move(asg);
    j["provenance"] = gaplab::survivor_mode_name(survivors.provenance);
    j["bands"] = std::move(rows);
    emit(out, gaplab::json_dump(j));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime-gap lower-bound laboratory"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  Output out;
  int threads = 0;

  struct Sub {
    CLI::App* app = nullptr;
    std::map<std::string, std::optional<std::string>> flags;
  };
  std::map<std::string, Sub> subs;

  auto add_sub = [&](const std::string& name, const std::string& desc,
                     const std::vector<std::pair<std::string, std::string>>& opts) {
    Sub s;
    s.app = app.add_subcommand(name, desc);
    s.app->add_option("--config", config_path, "key = value config file");
    s.app->add_option("--out", out.path, "report path (default: stdout)");
    s.app->add_option("--format", out.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    s.app->add_option("--threads", threads, "worker threads (0 = default)");
    subs[name] = std::move(s);
    for (const auto& [flag, key] : opts) {
      auto& slot = subs[name].flags[key];
      subs[name].app->add_option(flag, slot, key);
    }
  };

  add_sub("derive", "evaluate the explicit constant chain",
          {{"--k", "k"},
           {"--x", "x"},
           {"--logx", "logx"},
           {"--theta", "theta"},
           {"--c-ij", "c_ij"},
           {"--c-pap", "c_pap"},
           {"--d-pap", "d_pap"},
           {"--c-ub", "c_ub"},
           {"--d-ub", "d_ub"}});
  add_sub("zero-constants", "derive the progression/pair-count coefficients",
          {{"--x", "x"},
           {"--mccurley-r", "R"},
           {"--c-zfr", "c_zfr"},
           {"--jutila", "jutila_exp"},
           {"--trivial", "trivial_exp"}});
  add_sub("maynard", "maximize the variational ratio on the simplex",
          {{"--r", "r"}, {"--degree", "degree"}});
  add_sub("gaps", "exact maximal-gap records",
          {{"--max", "max"}, {"--k", "k"}});
  add_sub("mertens", "finite Mertens products vs the asymptotic",
          {{"--x", "x"}, {"--grid", "grid"}});
  add_sub("bt-check", "exhaustive progression upper-bound checks",
          {{"--x", "x"}, {"--qmax", "qmax"}});
  add_sub("ub-pairs", "pair-count surrogate at primorial moduli",
          {{"--x", "x"},
           {"--b0", "b0"},
           {"--z", "z"},
           {"--pairs", "pairs"},
           {"--seed", "seed"},
           {"--a", "a"},
           {"--b", "b"}});
  std::optional<std::string> members_out;
  add_sub("construct", "desk-scale survivor-set construction",
          {{"--x", "x"},
           {"--b0", "b0"},
           {"--c", "c"},
           {"--y", "y"},
           {"--z", "z"},
           {"--smin", "smin"},
           {"--seed", "seed"},
           {"--strategy", "strategy"},
           {"--bands", "bands"},
           {"--A", "A"},
           {"--epsilon", "epsilon"}});
  subs["construct"].app->add_option("--members-out", members_out,
                                    "write survivor members to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kDomain;
  }

  if (threads > 0) omp_set_num_threads(threads);

  try {
    for (auto& [name, sub] : subs) {
      if (!sub.app->parsed()) continue;
      Resolver rv(config_path);
      for (const auto& [key, value] : sub.flags) rv.override_if(key, value);
      if (name == "derive") return run_derive(rv, out);
      if (name == "zero-constants") return run_zero_constants(rv, out);
      if (name == "maynard") return run_maynard(rv, out);
      if (name == "gaps") return run_gaps(rv, out);
      if (name == "mertens") return run_mertens(rv, out);
      if (name == "bt-check") return run_bt_check(rv, out);
      if (name == "ub-pairs") return run_ub_pairs(rv, out);
      if (name == "construct") return run_construct(rv, out, members_out);
    }
  } catch (const gaplab::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const gaplab::ConditioningError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::system_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  }
  return kDomain;
}
