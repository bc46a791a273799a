// sl3: line-bundle cohomology of SL3 in characteristic p.
//
//   sl3 char    --weight 5,-10 -p 5
//   sl3 dims    --box 6 -p 3 --format table
//   sl3 support --weight 5,-10 -i 1 -p 5
//   sl3 verify  --prop all -p 2,3,5,7 --box default --jobs 4
//   sl3 figure  -p 5 --box 5 --out fig.svg

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "figure.hpp"
#include "sl3/cohomology.hpp"
#include "sl3/identities.hpp"
#include "sl3/supportvar.hpp"
#include "sl3/sweep.hpp"

using namespace sl3;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string primes = "5";
  std::string box = "default";
  std::string format = "json";
  std::string out;
  int jobs = 1;
  std::string config;
  std::string weight;
  std::string bundle = "plain";
  int degree = 1;
  std::string prop = "all";
};

std::vector<Int> parse_primes(const std::string& text) {
  std::vector<Int> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    Int p = 0;
    try {
      std::size_t used = 0;
      p = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("not an integer prime: '" + tok + "'");
    }
    if (!is_prime(p)) throw UsageError("p must be prime, got " + std::to_string(p));
    out.push_back(p);
  }
  if (out.empty()) throw UsageError("no prime given");
  return out;
}

Int single_prime(const RunConfig& cfg) {
  auto ps = parse_primes(cfg.primes);
  if (ps.size() != 1) throw UsageError("this command takes a single prime");
  return ps.front();
}

std::optional<Int> parse_box(const std::string& text) {
  if (text == "default") return std::nullopt;
  try {
    std::size_t used = 0;
    Int b = std::stoll(text, &used);
    if (used == text.size() && b >= 0) return b;
  } catch (const std::exception&) {
  }
  throw UsageError("--box takes a nonnegative integer or 'default', got '" + text + "'");
}

Weight require_weight(const RunConfig& cfg) {
  if (cfg.weight.empty()) throw UsageError("--weight r,s is required");
  try {
    return parse_weight(cfg.weight);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

// Values from --config fill in any option not given on the command line.
void apply_config(CLI::App& app, RunConfig& cfg) {
  if (cfg.config.empty()) return;
  std::ifstream f(cfg.config);
  if (!f) throw UsageError("cannot read config " + cfg.config);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config: ") + e.what());
  }
  auto unset = [&](const std::string& opt) {
    for (CLI::App* sub : app.get_subcommands())
      if (const CLI::Option* o = sub->get_option_no_throw(opt); o && o->count()) return false;
    const CLI::Option* o = app.get_option_no_throw(opt);
    return !o || o->count() == 0;
  };
  auto as_text = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
      return s;
    }
    return v.dump();
  };
  try {
    if (j.contains("prime") && unset("--prime")) cfg.primes = as_text(j["prime"]);
    if (j.contains("box") && unset("--box")) cfg.box = as_text(j["box"]);
    if (j.contains("format") && unset("--format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("out") && unset("--out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("jobs") && unset("--jobs")) cfg.jobs = j["jobs"].get<int>();
    if (j.contains("weight") && unset("--weight")) cfg.weight = as_text(j["weight"]);
    if (j.contains("bundle") && unset("--bundle")) cfg.bundle = j["bundle"].get<std::string>();
    if (j.contains("degree") && unset("--degree")) cfg.degree = j["degree"].get<int>();
    if (j.contains("prop") && unset("--prop")) cfg.prop = j["prop"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config value: ") + e.what());
  }
}

void check_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("unsupported --format '" + cfg.format + "' for this command");
}

std::string character_text(const Character& c) {
  if (c.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, m] : c.terms()) {
    out << (first ? "" : " + ") << (m == 1 ? "" : std::to_string(m) + "*") << "e" << w.str();
    first = false;
  }
  return out.str();
}

int cmd_char(const RunConfig& cfg) {
  check_format(cfg, {"json", "table"});
  const Int p = single_prime(cfg);
  const Weight w = require_weight(cfg);
  Bundle b;
  try {
    b = parse_bundle(cfg.bundle);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  CharEngine engine(p);
  const CohomologyTable t = cohomology(engine, w, b);
  Character expect = weyl_character(w);
  if (b == Bundle::Alpha) expect += weyl_character(w - kAlpha);
  if (b == Bundle::Beta) expect += weyl_character(w - kBeta);
  const bool euler_ok = t.euler() == expect;

  if (cfg.format == "json") {
    nlohmann::json j = t.to_json();
    j["euler_check"] = euler_ok;
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "weight " << w.str() << "  bundle " << name(b) << "  p=" << p << "\n";
    const auto d = t.dims();
    for (int i = 0; i < 4; ++i)
      out << "H^" << i << "  dim " << std::setw(8) << d[static_cast<std::size_t>(i)] << "  "
          << character_text(t.chars[static_cast<std::size_t>(i)]) << "\n";
    out << "euler check: " << (euler_ok ? "ok" : "FAILED") << "\n";
    emit(cfg, out.str());
  }
  if (!euler_ok) {
    std::cerr << "error: Euler characteristic does not match the Weyl character\n";
    return 1;
  }
  return 0;
}

int cmd_dims(const RunConfig& cfg) {
  check_format(cfg, {"json", "table"});
  const Int p = single_prime(cfg);
  DimEngine engine(p);
  std::vector<Weight> ws;
  if (!cfg.weight.empty()) {
    ws.push_back(require_weight(cfg));
  } else {
    auto b = parse_box(cfg.box);
    ws = box_weights(b ? *b : p);
  }
  std::vector<Table<Int>> rows(ws.size());
  parallel_for(ws.size(), cfg.jobs, [&](std::size_t k) { rows[k] = engine.plain(ws[k]); });

  std::ostringstream out;
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < ws.size(); ++k)
      arr.push_back({{"weight", {ws[k].r, ws[k].s}}, {"dims", {rows[k][0], rows[k][1], rows[k][2], rows[k][3]}}});
    out << nlohmann::json{{"p", p}, {"weights", arr}}.dump(2) << "\n";
  } else {
    out << std::setw(12) << "weight" << std::setw(12) << "H^0" << std::setw(12) << "H^1" << std::setw(12) << "H^2"
        << std::setw(12) << "H^3" << "\n";
    for (std::size_t k = 0; k < ws.size(); ++k) {
      out << std::setw(12) << ws[k].str();
      for (Int d : rows[k]) out << std::setw(12) << d;
      out << "\n";
    }
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_support(const RunConfig& cfg) {
  check_format(cfg, {"json", "table"});
  const Int p = single_prime(cfg);
  const Weight w = require_weight(cfg);
  if (cfg.degree < 0 || cfg.degree > 3) throw UsageError("-i must lie in 0..3");
  GenericEngine engine(p);
  const auto sc = support_variety(engine, w, cfg.degree);
  std::ostringstream out;
  if (!sc) {
    const std::string marker = "H^" + std::to_string(cfg.degree) + " = 0";
    if (cfg.format == "json")
      out << nlohmann::json{{"weight", {w.r, w.s}}, {"i", cfg.degree}, {"p", p}, {"zero_module", true},
                            {"message", marker}}
                 .dump(2)
          << "\n";
    else
      out << marker << " at " << w.str() << ", p=" << p << "\n";
  } else if (cfg.format == "json") {
    out << sc->to_json().dump(2) << "\n";
  } else {
    out << "H^" << cfg.degree << w.str() << "  p=" << p << "  " << name(sc->kind) << "  dim " << sc->dim()
        << "  psi-order " << sc->evidence.psi_order << "  complexity >= " << sc->evidence.complexity_lower_bound
        << "\n";
  }
  emit(cfg, out.str());
  return 0;
}

std::string report_table(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.applicable ? (r.ok() ? "PASS" : "FAIL") : "N/A ") << "  " << r.prop << "  p=" << r.p << "  box=" << r.box;
  if (!r.note.empty()) out << "  (" << r.note << ")";
  out << "\n";
  for (const auto& c : r.cases)
    out << "    " << std::setw(8) << c.passed << "/" << std::left << std::setw(8) << c.tested << std::right << c.name
        << "\n";
  for (const auto& ce : r.counterexamples) out << "    counterexample: " << ce.dump() << "\n";
  return out.str();
}

int cmd_verify(const RunConfig& cfg) {
  check_format(cfg, {"json", "table"});
  const auto primes = parse_primes(cfg.primes);
  const auto box = parse_box(cfg.box);
  std::vector<std::string> ids;
  if (cfg.prop == "all") {
    for (const auto& info : propositions()) ids.push_back(info.id);
  } else {
    try {
      ids.push_back(find_proposition(cfg.prop).id);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<VerificationReport> reports;
  for (Int p : primes)
    for (const auto& id : ids) reports.push_back(verify(id, p, box ? *box : default_box(id, p), cfg.jobs));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });

  std::ostringstream out;
  if (cfg.format == "json") {
    if (reports.size() == 1) {
      out << reports.front().to_json().dump(2) << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(r.to_json());
      out << nlohmann::json{{"passed", ok}, {"reports", arr}}.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) out << report_table(r);
    out << (ok ? "all reports passed" : "some reports failed") << "\n";
  }
  emit(cfg, out.str());
  return ok ? 0 : 1;
}

int cmd_figure(const RunConfig& cfg) {
  check_format(cfg, {"svg", "json"});
  FigureOptions opts;
  opts.p = single_prime(cfg);
  const auto box = parse_box(cfg.box);
  opts.box = box ? *box : 5;
  opts.degree = cfg.degree;
  std::string svg;
  try {
    Calculus calc(opts.p);
    svg = render_figure(calc, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(cfg, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-bundle cohomology of SL3 in characteristic p"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("-p,--prime", cfg.primes, "prime, or a comma-separated list for verify");
  app.add_option("--box", cfg.box, "bound B for |r|,|s| <= B, or 'default'");
  app.add_option("--format", cfg.format, "json | table | svg");
  app.add_option("--out", cfg.out, "write output to this file");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--config", cfg.config, "JSON file with option values; flags override it");

  auto* c_char = app.add_subcommand("char", "characters of H^i for one weight");
  c_char->add_option("--weight", cfg.weight, "r,s");
  c_char->add_option("--bundle", cfg.bundle, "plain | alpha | beta");
  auto* c_dims = app.add_subcommand("dims", "dimensions of H^i for a weight or a box");
  c_dims->add_option("--weight", cfg.weight, "r,s");
  auto* c_support = app.add_subcommand("support", "G1 support class of H^i");
  c_support->add_option("--weight", cfg.weight, "r,s");
  c_support->add_option("-i,--degree", cfg.degree, "cohomological degree");
  auto* c_verify = app.add_subcommand("verify", "check identities over a box");
  c_verify->add_option("--prop", cfg.prop, "proposition id, alias, or 'all'");
  auto* c_figure = app.add_subcommand("figure", "SVG of the weight lattice");
  c_figure->add_option("-i,--degree", cfg.degree, "degree of the S/T labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    apply_config(app, cfg);
    if (c_char->parsed()) return cmd_char(cfg);
    if (c_dims->parsed()) return cmd_dims(cfg);
    if (c_support->parsed()) return cmd_support(cfg);
    if (c_verify->parsed()) return cmd_verify(cfg);
    if (c_figure->parsed()) return cmd_figure(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
