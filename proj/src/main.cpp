// Command-line laboratory driver.
//
// Subcommands:
//   verify  run registered identity cross-checks, write a JSON/CSV report
//   eval    evaluate a symmetric-function family at an exact rational point
//   asep    contour-integral particle probabilities with simulation oracles
//   list    show the identity registry
//   schema  print the versioned JSON schema for reports or run configs
//
// Exit codes: 0 success / all verdicts pass, 1 evaluation failure or failed
// verdicts, 2 configuration errors.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shllab/asep.hpp"
#include "shllab/registry.hpp"
#include "shllab/schemas.hpp"
#include "shllab/shl.hpp"

using nlohmann::ordered_json;
using namespace shllab;

namespace {

// ---------------------------------------------------------------------------
// Parsing helpers.  Every user-input failure throws ConfigError -> exit 2.

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw ConfigError("empty rational literal");
  for (const char c : text)
    if (std::string("0123456789/-").find(c) == std::string::npos)
      throw ConfigError("bad rational literal '" + text + "' (expected p or p/q)");
  try {
    Rat r(text);
    if (r.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad rational literal '" + text + "' (expected p or p/q)");
  }
}

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> out;
  for (const auto& piece : split(text, ',')) out.push_back(parse_rational(piece));
  if (out.empty()) throw ConfigError("empty rational list");
  return out;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const auto& piece : split(text, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stol(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw ConfigError("bad integer literal '" + piece + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty integer list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& piece : split(text, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw ConfigError("bad numeric literal '" + piece + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty numeric list");
  return out;
}

// Shortest round-trip decimal form; identical bits give identical text.
std::string number_text(double x) { return ordered_json(x).dump(); }

// ---------------------------------------------------------------------------
// verify: suite execution and report serialization.

struct VerifyOptions {
  std::vector<std::string> suite = {"all"};
  std::optional<int> n_min, n_max;
  std::string points = "fixed";
  std::optional<double> tol_truncated, tol_quadrature;
  std::string out;
  std::string format = "json";
  bool timings = false;
};

void merge_config_file(VerifyOptions& opt, const std::string& path, const CLI::App* cmd) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ConfigError("config file parse failure: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
  const auto overridden = [&](const std::string& flag) { return cmd->count(flag) > 0; };
  try {
    if (doc.contains("suite") && !overridden("--suite")) {
      if (doc["suite"].is_string())
        opt.suite = {doc["suite"].get<std::string>()};
      else
        opt.suite = doc["suite"].get<std::vector<std::string>>();
    }
    if (doc.contains("n_min") && !overridden("--n")) opt.n_min = doc["n_min"].get<int>();
    if (doc.contains("n_max") && !overridden("--n")) opt.n_max = doc["n_max"].get<int>();
    if (doc.contains("points") && !overridden("--points")) {
      const auto& p = doc["points"];
      const std::string strategy = p.at("strategy").get<std::string>();
      if (strategy == "fixed") {
        opt.points = "fixed";
      } else if (strategy == "random") {
        opt.points = "random:" + std::to_string(p.at("count").get<long>()) + ":" +
                     std::to_string(p.at("seed").get<std::uint64_t>());
      } else {
        throw ConfigError("points.strategy must be 'fixed' or 'random'");
      }
    }
    if (doc.contains("tolerance")) {
      const auto& t = doc["tolerance"];
      if (t.contains("truncated") && !overridden("--tol-truncated"))
        opt.tol_truncated = t["truncated"].get<double>();
      if (t.contains("quadrature") && !overridden("--tol-quadrature"))
        opt.tol_quadrature = t["quadrature"].get<double>();
    }
    if (doc.contains("out") && !overridden("--out")) opt.out = doc["out"].get<std::string>();
    if (doc.contains("format") && !overridden("--format"))
      opt.format = doc["format"].get<std::string>();
    if (doc.contains("timings") && !overridden("--timings"))
      opt.timings = doc["timings"].get<bool>();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("config file field error: " + std::string(e.what()));
  }
}

SuiteRequest build_request(const VerifyOptions& opt) {
  SuiteRequest req;
  bool all = false;
  for (const auto& name : opt.suite) {
    if (name == "all") {
      all = true;
      continue;
    }
    const auto id = parse_identity_id(name);
    if (!id.has_value()) throw ConfigError("unknown identity id '" + name + "'");
    req.ids.push_back(*id);
  }
  if (all) req.ids.clear();
  req.n_min = opt.n_min;
  req.n_max = opt.n_max;
  if (req.n_min && req.n_max && *req.n_min > *req.n_max)
    throw ConfigError("empty size range: n_min exceeds n_max");
  if (opt.points == "fixed") {
    req.points = 1;
    req.seed = 0;
  } else {
    const auto pieces = split(opt.points, ':');
    if (pieces.size() != 3 || pieces[0] != "random")
      throw ConfigError("points must be 'fixed' or 'random:<count>:<seed>'");
    try {
      req.points = std::stol(pieces[1]);
      req.seed = std::stoull(pieces[2]);
    } catch (const std::exception&) {
      throw ConfigError("points must be 'fixed' or 'random:<count>:<seed>'");
    }
    if (req.points < 1) throw ConfigError("points count must be at least 1");
  }
  req.tol_truncated = opt.tol_truncated;
  req.tol_quadrature = opt.tol_quadrature;
  if (opt.format != "json" && opt.format != "csv")
    throw ConfigError("format must be 'json' or 'csv'");
  return req;
}

ordered_json scalar_json(const ScalarValue& v) {
  if (v.exact) return v.str();
  return ordered_json::array({v.c.real(), v.c.imag()});
}

ordered_json record_json(const VerificationReport& rep, bool timings) {
  ordered_json rec;
  rec["id"] = identity_id_name(rep.id);
  rec["n"] = rep.n;
  rec["seed"] = rep.seed;
  rec["point"] = rep.point_index;
  rec["lhs"] = scalar_json(rep.lhs);
  rec["rhs"] = scalar_json(rep.rhs);
  rec["truncation"] = rep.truncation;
  rec["abs_err"] = rep.abs_err;
  rec["rel_err"] = rep.rel_err;
  rec["verdict"] = verdict_name(rep.verdict);
  rec["error"] = rep.error;
  if (timings) rec["runtime_ms"] = rep.runtime_ms;
  return rec;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_report(const std::vector<VerificationReport>& reports,
                          const VerifyOptions& opt) {
  if (opt.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reports) arr.push_back(record_json(rep, opt.timings));
    return arr.dump(2) + "\n";
  }
  std::string out = "id,n,seed,point,lhs,rhs,truncation,abs_err,rel_err,verdict,error";
  if (opt.timings) out += ",runtime_ms";
  out += '\n';
  for (const auto& rep : reports) {
    out += identity_id_name(rep.id);
    out += ',' + std::to_string(rep.n);
    out += ',' + std::to_string(rep.seed);
    out += ',' + std::to_string(rep.point_index);
    out += ',' + csv_escape(rep.lhs.str());
    out += ',' + csv_escape(rep.rhs.str());
    out += ',' + std::to_string(rep.truncation);
    out += ',' + number_text(rep.abs_err);
    out += ',' + number_text(rep.rel_err);
    out += ',';
    out += verdict_name(rep.verdict);
    out += ',' + csv_escape(rep.error);
    if (opt.timings) out += ',' + number_text(rep.runtime_ms);
    out += '\n';
  }
  return out;
}

int run_verify(const VerifyOptions& opt) {
  const SuiteRequest req = build_request(opt);
  const auto reports = run_suite(req);
  size_t exact = 0, pass = 0, fail = 0;
  for (const auto& rep : reports) {
    if (rep.verdict == Verdict::ExactMatch) ++exact;
    if (rep.verdict == Verdict::Fail)
      ++fail;
    else
      ++pass;
  }
  const std::string text = render_report(reports, opt);
  std::ostringstream summary;
  summary << "verify: " << reports.size() << " records, " << pass << " pass (" << exact
          << " exact), " << fail << " fail, seed " << req.seed;
  if (!opt.out.empty()) {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + opt.out + "'");
    out << text;
    std::cout << summary.str() << "\n";
  } else {
    std::cout << text;
    std::cerr << summary.str() << "\n";
  }
  return fail == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// eval: exact evaluation of the row / dual-row / column families.

struct EvalOptions {
  std::string family;
  std::string lambda;
  std::string us;
  std::string q;
  std::string s = "0";
  std::string xi = "1";
  std::string gamma = "0";
};

int run_eval(const EvalOptions& opt) {
  const std::vector<long> parts = parse_long_list(opt.lambda);
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1]) throw ConfigError("--lambda must be weakly decreasing");
  if (!parts.empty() && parts.back() < 0) throw ConfigError("--lambda parts must be nonnegative");
  const Signature lam(parts);
  const std::vector<Rat> us = parse_rational_list(opt.us);

  Params<Rat> P;
  P.q = parse_rational(opt.q);
  P.s_pre = parse_rational_list(opt.s);
  P.s_tail = P.s_pre.back();
  P.xi_pre = parse_rational_list(opt.xi);
  P.xi_tail = P.xi_pre.back();
  P.gamma = parse_rational(opt.gamma);

  Rat value;
  if (opt.family == "F") {
    if (lam.length() != static_cast<int>(us.size()))
      throw ConfigError("family F needs as many variables as signature parts");
    value = shl_F(lam, us, P);
  } else if (opt.family == "Fstar") {
    if (lam.length() != static_cast<int>(us.size()))
      throw ConfigError("family Fstar needs as many variables as signature parts");
    value = shl_Fstar(lam, us, P);
  } else if (opt.family == "Gstar") {
    value = shl_Gstar(lam, us, P);
  } else {
    throw ConfigError("unknown family '" + opt.family + "' (expected F, Fstar, or Gstar)");
  }
  std::cout << value.get_str() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// asep: contour-integral probabilities with optional chain / MC oracles.

struct AsepOptions {
  std::string mode;
  double q = 0.5;
  int n = 0;
  std::string x;
  std::string t;
  std::string y;
  std::string k;
  std::string oracle;
  std::string window;
  int nodes = 0;
  double radius = 0.0;
  double radius_z = 0.0;
  double radius_w = 0.0;
};

struct OracleChoice {
  bool ctmc = false;
  bool mc = false;
  long mc_replicates = 0;
  std::uint64_t mc_seed = 1;
};

OracleChoice parse_oracles(const std::string& text) {
  OracleChoice out;
  if (text.empty()) return out;
  for (const auto& piece : split(text, ',')) {
    if (piece == "ctmc") {
      out.ctmc = true;
      continue;
    }
    const auto bits = split(piece, ':');
    if (bits.size() == 3 && bits[0] == "mc") {
      try {
        out.mc_replicates = std::stol(bits[1]);
        out.mc_seed = std::stoull(bits[2]);
      } catch (const std::exception&) {
        throw ConfigError("bad oracle spec '" + piece + "'");
      }
      if (out.mc_replicates < 1) throw ConfigError("mc oracle needs at least one replicate");
      out.mc = true;
      continue;
    }
    throw ConfigError("unknown oracle '" + piece + "' (expected ctmc or mc:<reps>:<seed>)");
  }
  return out;
}

std::vector<long> initial_positions(const AsepOptions& opt) {
  if (!opt.x.empty()) {
    const auto xs = parse_long_list(opt.x);
    for (size_t i = 0; i + 1 < xs.size(); ++i)
      if (xs[i] >= xs[i + 1]) throw ConfigError("--x must be strictly increasing");
    if (opt.n != 0 && opt.n != static_cast<int>(xs.size()))
      throw ConfigError("--n disagrees with the size of --x");
    return xs;
  }
  const int n = opt.n == 0 ? 1 : opt.n;
  if (n < 1) throw ConfigError("--n must be positive");
  std::vector<long> xs;
  for (int i = 0; i < n; ++i) xs.push_back(i);
  return xs;
}

// Window for the chain oracles: wide enough that the probability of any
// particle reaching the edge is far below the oracle's boundary guard.
std::pair<long, long> auto_window(const std::vector<long>& xs, const std::vector<long>& targets,
                                  double t_max, const AsepOptions& opt) {
  if (!opt.window.empty()) {
    const auto w = parse_long_list(opt.window);
    if (w.size() != 2 || w[0] >= w[1]) throw ConfigError("--window needs lo,hi with lo < hi");
    return {w[0], w[1]};
  }
  const long margin = 6 + static_cast<long>(std::ceil(8.0 * t_max));
  long lo = xs.front(), hi = xs.back();
  for (const long k : targets) lo = std::min(lo, k);
  return {lo - margin, hi + margin};
}

int run_asep(const AsepOptions& opt) {
  if (!(opt.q >= 0.0 && opt.q < 1.0)) throw ConfigError("--q must lie in [0,1)");
  const std::vector<long> xs = initial_positions(opt);
  const int n = static_cast<int>(xs.size());
  const OracleChoice oracles = parse_oracles(opt.oracle);
  const auto times = parse_double_list(opt.t);

  if (opt.mode == "transition") {
    if (times.size() != 1) throw ConfigError("transition mode needs --t <time>");
    if (opt.y.empty()) throw ConfigError("transition mode needs --y targets");
    const auto ys = parse_long_list(opt.y);
    if (static_cast<int>(ys.size()) != n)
      throw ConfigError("transition mode needs one --y target per particle");
    for (size_t i = 0; i + 1 < ys.size(); ++i)
      if (ys[i] >= ys[i + 1]) throw ConfigError("--y must be strictly increasing");
    const int nodes = opt.nodes == 0 ? 128 : opt.nodes;
    const double radius =
        opt.radius == 0.0 ? 0.75 * (1.0 - opt.q) / (1.0 + opt.q) : opt.radius;
    const ContourSpec spec{Cplx(1.0, 0.0), radius, nodes};
    const Cplx value =
        asep_transition_prob(ASEPConfig(xs), ASEPConfig(ys), times[0], opt.q, spec);
    std::cout << "integral " << number_text(value.real()) << "\n";
    if (oracles.ctmc) {
      SimSpec sim;
      sim.initial = ASEPConfig(xs);
      sim.q = opt.q;
      sim.t1 = times[0];
      sim.t2 = times[0];
      const auto window = auto_window(xs, ys, times[0], opt);
      sim.window_lo = window.first;
      sim.window_hi = window.second;
      const auto chain = asep_ctmc_oracle(sim);
      const auto hit = chain.single_time.find(ys);
      const double reference = hit == chain.single_time.end() ? 0.0 : hit->second;
      std::cout << "ctmc " << number_text(reference) << "\n";
      std::cout << "delta_ctmc " << number_text(std::abs(value.real() - reference)) << "\n";
    }
    if (oracles.mc) throw ConfigError("mc oracle applies to two-time mode only");
    return 0;
  }

  if (opt.mode != "two-time")
    throw ConfigError("unknown mode '" + opt.mode + "' (expected transition or two-time)");
  if (times.size() != 2) throw ConfigError("two-time mode needs --t t1,t2");
  if (opt.k.empty()) throw ConfigError("two-time mode needs --k k1,k2");
  const auto ks = parse_long_list(opt.k);
  if (ks.size() != 2) throw ConfigError("two-time mode needs --k k1,k2");

  SimSpec sim;
  sim.initial = ASEPConfig(xs);
  sim.q = opt.q;
  sim.t1 = times[0];
  sim.t2 = times[1];
  sim.k1 = ks[0];
  sim.k2 = ks[1];
  const auto window = auto_window(xs, ks, sim.t2, opt);
  sim.window_lo = window.first;
  sim.window_hi = window.second;
  const int nodes = opt.nodes == 0 ? 96 : opt.nodes;
  const double rz = opt.radius_z == 0.0 ? 0.1 * (1.0 - opt.q) : opt.radius_z;
  const double rw = opt.radius_w == 0.0 ? 0.3 * (1.0 - opt.q) : opt.radius_w;
  const ContourSpec zc{Cplx(1.0, 0.0), rz, nodes};
  const ContourSpec wc{Cplx(1.0, 0.0), rw, nodes};
  const Cplx value = asep_two_time_prob(sim, zc, wc);
  std::cout << "integral " << number_text(value.real()) << "\n";

  if (oracles.ctmc || oracles.mc) {
    if (oracles.ctmc) {
      const auto chain = asep_ctmc_oracle(sim);
      std::cout << "ctmc " << number_text(chain.two_time) << "\n";
      std::cout << "delta_ctmc " << number_text(std::abs(value.real() - chain.two_time)) << "\n";
    }
    if (oracles.mc) {
      sim.replicates = oracles.mc_replicates;
      sim.seed = oracles.mc_seed;
      const auto mc = asep_mc_simulate(sim);
      std::cout << "mc " << number_text(mc.estimate) << " stderr "
                << number_text(mc.stderr_est) << "\n";
      std::cout << "delta_mc " << number_text(std::abs(value.real() - mc.estimate)) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// list / schema.

int run_list(bool as_json) {
  if (as_json) {
    ordered_json arr = ordered_json::array();
    for (const auto& info : identity_catalog()) {
      ordered_json item;
      item["id"] = info.name;
      item["tolerance"] = tolerance_class_name(info.tol);
      item["sizes"] = info.default_ns;
      item["description"] = info.description;
      arr.push_back(item);
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto& info : identity_catalog()) {
    std::ostringstream sizes;
    for (size_t i = 0; i < info.default_ns.size(); ++i)
      sizes << (i ? "," : "") << info.default_ns[i];
    std::cout << info.name;
    for (size_t pad = std::string(info.name).size(); pad < 22; ++pad) std::cout << ' ';
    std::cout << tolerance_class_name(info.tol);
    for (size_t pad = std::string(tolerance_class_name(info.tol)).size(); pad < 12; ++pad)
      std::cout << ' ';
    std::cout << "n=" << sizes.str();
    for (size_t pad = sizes.str().size(); pad < 12; ++pad) std::cout << ' ';
    std::cout << info.description << "\n";
  }
  return 0;
}

int run_schema(const std::string& kind) {
  if (kind == "report") {
    std::cout << kReportSchemaJson;
    return 0;
  }
  if (kind == "config") {
    std::cout << kConfigSchemaJson;
    return 0;
  }
  throw ConfigError("unknown schema '" + kind + "' (expected report or config)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic laboratory: symmetric rational families, lattice partition "
      "functions, identity cross-checks, and interacting-particle probabilities"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  std::string config_path;
  auto* verify = app.add_subcommand("verify", "Run identity cross-checks and write a report");
  verify->add_option("--suite", vopt.suite,
                     "Identity ids to run, or 'all' (comma separated)")
      ->delimiter(',');
  std::string n_range;
  verify->add_option("--n", n_range, "Size restriction: a single n or a range lo-hi");
  verify->add_option("--points", vopt.points,
                     "Point strategy: 'fixed' or 'random:<count>:<seed>'");
  verify->add_option("--tol-truncated", vopt.tol_truncated,
                     "Relative tolerance override for truncated-sum cases");
  verify->add_option("--tol-quadrature", vopt.tol_quadrature,
                     "Absolute tolerance override for quadrature cases");
  verify->add_option("--out", vopt.out, "Report file (default: standard output)");
  verify->add_option("--format", vopt.format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--timings", vopt.timings,
                   "Include per-record runtimes (breaks byte-for-byte reproducibility)");
  verify->add_option("--config", config_path, "JSON run configuration (flags override)");

  EvalOptions eopt;
  auto* eval = app.add_subcommand("eval", "Evaluate a symmetric-function family exactly");
  eval->add_option("family", eopt.family, "Family: F, Fstar, or Gstar")->required();
  eval->add_option("--lambda", eopt.lambda, "Signature parts, weakly decreasing")->required();
  eval->add_option("--u", eopt.us, "Evaluation variables as rationals p/q")->required();
  eval->add_option("--q", eopt.q, "Quantization parameter as a rational")->required();
  eval->add_option("--s", eopt.s, "Spin values: prefix list, last entry repeats");
  eval->add_option("--xi", eopt.xi, "Node inhomogeneities: prefix list, last entry repeats");
  eval->add_option("--gamma", eopt.gamma, "Twist parameter as a rational");

  AsepOptions aopt;
  auto* asep = app.add_subcommand(
      "asep", "Contour-integral particle probabilities with optional oracles");
  asep->add_option("mode", aopt.mode, "Mode: transition or two-time")->required();
  asep->add_option("--q", aopt.q, "Left-jump asymmetry in [0,1)");
  asep->add_option("--n", aopt.n, "Particle count (initial state 0..n-1 unless --x)");
  asep->add_option("--x", aopt.x, "Initial positions, strictly increasing");
  asep->add_option("--t", aopt.t, "Time (transition) or t1,t2 (two-time)")->required();
  asep->add_option("--y", aopt.y, "Target positions (transition mode)");
  asep->add_option("--k", aopt.k, "Leftmost-position thresholds k1,k2 (two-time mode)");
  asep->add_option("--oracle", aopt.oracle,
                   "Reference oracles: ctmc and/or mc:<reps>:<seed> (comma separated)");
  asep->add_option("--window", aopt.window, "Chain-oracle window lo,hi (default: automatic)");
  asep->add_option("--nodes", aopt.nodes, "Quadrature nodes per contour");
  asep->add_option("--radius", aopt.radius, "Contour radius (transition mode)");
  asep->add_option("--radius-z", aopt.radius_z, "Inner contour radius (two-time mode)");
  asep->add_option("--radius-w", aopt.radius_w, "Outer contour radius (two-time mode)");

  bool list_json = false;
  auto* list = app.add_subcommand("list", "Show the identity registry");
  list->add_flag("--json", list_json, "Machine-readable listing");

  std::string schema_kind;
  auto* schema = app.add_subcommand("schema", "Print a versioned JSON schema");
  schema->add_option("kind", schema_kind, "Which schema: report or config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      if (!config_path.empty()) merge_config_file(vopt, config_path, verify);
      if (verify->count("--n") > 0) {
        const auto pieces = split(n_range, '-');
        try {
          if (pieces.size() == 1) {
            vopt.n_min = vopt.n_max = std::stoi(pieces[0]);
          } else if (pieces.size() == 2) {
            vopt.n_min = std::stoi(pieces[0]);
            vopt.n_max = std::stoi(pieces[1]);
          } else {
            throw std::invalid_argument(n_range);
          }
        } catch (const std::exception&) {
          throw ConfigError("bad --n value '" + n_range + "' (expected n or lo-hi)");
        }
      }
      return run_verify(vopt);
    }
    if (*eval) return run_eval(eopt);
    if (*asep) return run_asep(aopt);
    if (*list) return run_list(list_json);
    if (*schema) return run_schema(schema_kind);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
