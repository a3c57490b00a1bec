#include "rqpd/cli.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rqpd/analysis.hpp"
#include "rqpd/errors.hpp"
#include "rqpd/game_core.hpp"
#include "rqpd/relativity.hpp"

namespace rqpd::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kDegree = std::numbers::pi / 180.0;

struct Options {
  std::string backend;
  bool degrees = false;
  std::string output;

  double gamma = 0.0;
  double omega_a = 0.0;
  double omega_b = 0.0;
  std::optional<double> alpha_speed;
  std::optional<double> delta_a_speed;
  std::optional<double> delta_b_speed;

  std::string alice = "Q";
  std::string bob = "Q";

  double t = 5.0;
  double r = 3.0;
  double p = 1.0;
  double s = 0.0;
  bool allow_non_dilemma = false;

  std::size_t samples = 101;
  std::size_t grid = 0;
  std::string method = "closed-form";
  unsigned threads = 1;

  std::optional<double> alpha;
  std::optional<double> delta;
  std::optional<double> delta_speed;
};

double angle_in(const Options& o, double value) { return o.degrees ? value * kDegree : value; }

Backend backend_or(const Options& o, Backend fallback) {
  return o.backend.empty() ? fallback : parse_backend(o.backend);
}

PayoffParams payoff_params(const Options& o) {
  return PayoffParams(o.t, o.r, o.p, o.s, o.allow_non_dilemma);
}

StrategyParams parse_strategy(const Options& o, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return to_params(parse_named_strategy(text));
  double theta = 0.0;
  double phi = 0.0;
  const char* first = text.data();
  const char* mid = first + comma;
  const char* last = first + text.size();
  const auto r1 = std::from_chars(first, mid, theta);
  const auto r2 = std::from_chars(mid + 1, last, phi);
  if (r1.ec != std::errc{} || r1.ptr != mid || r2.ec != std::errc{} || r2.ptr != last) {
    throw DomainError("strategy '" + text + "' is neither C/D/Q nor 'theta,phi'");
  }
  return StrategyParams(angle_in(o, theta), angle_in(o, phi));
}

struct ResolvedAngles {
  WignerAngle omega_a;
  WignerAngle omega_b;
  bool from_speeds;
};

// Ω from explicit angles, or from arbiter/particle speeds through rapidities.
ResolvedAngles resolve_omegas(const Options& o, std::ostream& err) {
  const bool any_speed = o.alpha_speed || o.delta_a_speed || o.delta_b_speed;
  if (!any_speed) {
    return {WignerAngle(angle_in(o, o.omega_a)), WignerAngle(angle_in(o, o.omega_b)), false};
  }
  if (!o.alpha_speed || !o.delta_a_speed || !o.delta_b_speed) {
    throw DomainError("--alpha-speed, --delta-a-speed and --delta-b-speed must be given together");
  }
  const Rapidity alpha = rapidity_from_speed(*o.alpha_speed);
  const WignerAngle oa = wigner_angle(alpha, rapidity_from_speed(*o.delta_a_speed));
  const WignerAngle ob = wigner_angle(alpha, rapidity_from_speed(*o.delta_b_speed));
  err << "note: speeds map to omega_a = " << format_real(oa.omega())
      << " rad, omega_b = " << format_real(ob.omega()) << " rad\n";
  return {oa, ob, true};
}

ordered_json metadata(Backend backend, double gamma, const ResolvedAngles& angles) {
  ordered_json m;
  m["backend"] = to_string(backend);
  m["gamma"] = gamma;
  m["omega_a"] = angles.omega_a.omega();
  m["omega_b"] = angles.omega_b.omega();
  m["omega_from_speeds"] = angles.from_speeds;
  m["version"] = kVersion;
  return m;
}

void write_csv_metadata(std::ostream& os,
                        const std::vector<std::pair<std::string, std::string>>& entries) {
  for (const auto& [key, value] : entries) os << "# " << key << "=" << value << "\n";
}

ordered_json optional_sds(Sds s) {
  if (s == Sds::None) return nullptr;
  return std::string(to_string(s));
}

ordered_json game_report(const GameInstance& g, const ResolvedAngles& angles) {
  const ProfileTable table = profile_table(g);
  const SdsReport sds = sds_of(table);
  const NashReport nash = nash_set(table);

  ordered_json doc;
  doc["metadata"] = metadata(g.backend, g.gamma, angles);
  for (Profile p : kProfiles) {
    doc["profiles"][std::string(to_string(p))] = {{"alice", table[p].alice}, {"bob", table[p].bob}};
  }
  doc["sds"] = {{"alice", optional_sds(sds.alice)}, {"bob", optional_sds(sds.bob)}};
  doc["nash"] = ordered_json::array();
  for (Profile p : nash.equilibria) doc["nash"].push_back(std::string(to_string(p)));
  return doc;
}

void cmd_payoff(const Options& o, std::ostream& out, std::ostream& err) {
  const ResolvedAngles angles = resolve_omegas(o, err);
  const GameInstance g(angle_in(o, o.gamma), angles.omega_a, angles.omega_b,
                       backend_or(o, Backend::Unitary), payoff_params(o));
  const StrategyParams a = parse_strategy(o, o.alice);
  const StrategyParams b = parse_strategy(o, o.bob);
  const TaggedProbabilities pr = joint_probabilities(g, a, b);
  const PayoffPair pay = payoff_from_probabilities(pr.joint, g.pay);

  ordered_json doc = game_report(g, angles);
  ordered_json& sel = doc["selection"];
  sel["alice_strategy"] = {{"theta", a.theta()}, {"phi", a.phi()}};
  sel["bob_strategy"] = {{"theta", b.theta()}, {"phi", b.phi()}};
  sel["probabilities"] = {{"CC", pr.joint.p_cc},
                          {"CD", pr.joint.p_cd},
                          {"DC", pr.joint.p_dc},
                          {"DD", pr.joint.p_dd}};
  sel["norm_defect"] = pr.joint.norm_defect;
  sel["alice"] = pay.alice;
  sel["bob"] = pay.bob;
  out << doc.dump(2) << "\n";
}

void cmd_nash(const Options& o, std::ostream& out, std::ostream& err) {
  const ResolvedAngles angles = resolve_omegas(o, err);
  const GameInstance g(angle_in(o, o.gamma), angles.omega_a, angles.omega_b,
                       backend_or(o, Backend::Unitary), payoff_params(o));
  ordered_json doc = game_report(g, angles);
  const RegionLabel region = region_classify(g);
  doc["region"] = {{"alice", to_string(region.alice)}, {"bob", to_string(region.bob)}};
  out << doc.dump(2) << "\n";
}

void cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const ResolvedAngles angles = resolve_omegas(o, err);
  const Backend backend = backend_or(o, Backend::Printed);
  const auto rows = sweep_gamma(angles.omega_a, angles.omega_b, o.samples, backend, payoff_params(o));

  CsvTable table{{"gamma", "A_DD", "A_QD", "A_DQ", "A_QQ", "B_DD", "B_QD", "B_DQ", "B_QQ"}, {}};
  for (const SweepRow& row : rows) {
    std::vector<std::string> fields{format_real(row.gamma)};
    for (int k = 1; k <= 4; ++k) fields.push_back(format_real(row.table.alice(k)));
    for (int k = 1; k <= 4; ++k) fields.push_back(format_real(row.table.bob(k)));
    table.rows.push_back(std::move(fields));
  }
  write_csv_metadata(out, {{"command", "sweep"},
                           {"backend", std::string(to_string(backend))},
                           {"omega_a", format_real(angles.omega_a.omega())},
                           {"omega_b", format_real(angles.omega_b.omega())},
                           {"samples", std::to_string(o.samples)},
                           {"version", std::string(kVersion)}});
  emit_csv(table, out);
}

void cmd_thresholds(const Options& o, std::ostream& out, std::ostream& err) {
  const Backend backend = backend_or(o, Backend::Printed);
  const bool numeric = o.method == "numeric";
  if (!numeric && o.method != "closed-form") {
    throw DomainError("unknown method '" + o.method + "' (expected closed-form or numeric)");
  }
  const auto compute = [&](WignerAngle oa, WignerAngle ob) {
    return numeric ? thresholds_numeric(oa, ob, backend) : thresholds_closed_form(oa, ob);
  };

  CsvTable table{{"omega_a", "omega_b", "gA12", "gA34", "gB13", "gB24"}, {}};
  const auto add_row = [&](WignerAngle oa, WignerAngle ob) {
    std::vector<std::string> fields{format_real(oa.omega()), format_real(ob.omega())};
    for (const auto& v : compute(oa, ob).as_array()) fields.push_back(format_real(v));
    table.rows.push_back(std::move(fields));
  };

  std::vector<std::pair<std::string, std::string>> meta{
      {"command", "thresholds"},
      {"method", o.method},
      {"backend", numeric ? std::string(to_string(backend)) : "PAPER_EQ14"},
  };
  if (o.grid > 0) {
    if (o.grid < 2) throw DomainError("--grid needs at least 2 points");
    for (std::size_t i = 0; i < o.grid; ++i)
      for (std::size_t j = 0; j < o.grid; ++j)
        add_row(WignerAngle(grid_point(0.0, kHalfPi, i, o.grid)),
                WignerAngle(grid_point(0.0, kHalfPi, j, o.grid)));
    meta.emplace_back("grid", std::to_string(o.grid));
  } else {
    const ResolvedAngles angles = resolve_omegas(o, err);
    add_row(angles.omega_a, angles.omega_b);
  }
  meta.emplace_back("version", std::string(kVersion));
  write_csv_metadata(out, meta);
  emit_csv(table, out);
}

void cmd_region_map(const Options& o, std::ostream& out, std::ostream&) {
  const Backend backend = backend_or(o, Backend::Printed);
  const auto cells = always_classical_scan(o.grid, backend, o.threads);
  CsvTable table{{"omega_a", "omega_b", "bob_always_D", "alice_always_Q"}, {}};
  for (const RegionCell& c : cells) {
    table.rows.push_back({format_real(c.omega_a), format_real(c.omega_b),
                          c.bob_always_d ? "1" : "0", c.alice_always_q ? "1" : "0"});
  }
  write_csv_metadata(out, {{"command", "region-map"},
                           {"backend", std::string(to_string(backend))},
                           {"grid", std::to_string(o.grid)},
                           {"version", std::string(kVersion)}});
  emit_csv(table, out);
}

void cmd_wigner(const Options& o, std::ostream& out, std::ostream&) {
  const bool by_rapidity = o.alpha || o.delta;
  const bool by_speed = o.alpha_speed || o.delta_speed;
  if (by_rapidity == by_speed) {
    throw DomainError("give either --alpha/--delta (rapidities) or --alpha-speed/--delta-speed");
  }
  if (by_rapidity && !(o.alpha && o.delta)) throw DomainError("--alpha and --delta go together");
  if (by_speed && !(o.alpha_speed && o.delta_speed)) {
    throw DomainError("--alpha-speed and --delta-speed go together");
  }
  const Rapidity alpha = by_rapidity ? Rapidity(*o.alpha) : rapidity_from_speed(*o.alpha_speed);
  const Rapidity delta = by_rapidity ? Rapidity(*o.delta) : rapidity_from_speed(*o.delta_speed);
  const WignerAngle omega = wigner_angle(alpha, delta);

  ordered_json doc;
  doc["metadata"] = {{"input", by_rapidity ? "rapidity" : "speed"}, {"version", kVersion}};
  doc["alpha"] = alpha.value();
  doc["delta"] = delta.value();
  doc["alpha_speed"] = speed_from_rapidity(alpha);
  doc["delta_speed"] = speed_from_rapidity(delta);
  doc["omega"] = omega.omega();
  doc["omega_degrees"] = omega.omega() / kDegree;
  out << doc.dump(2) << "\n";
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--backend", o.backend, "paper or unitary");
  sub->add_flag("--degrees", o.degrees, "angle inputs are in degrees");
  sub->add_option("-o,--output", o.output, "write to this file instead of stdout");
}

void add_omegas(CLI::App* sub, Options& o) {
  sub->add_option("--omega-a", o.omega_a, "Wigner angle of Alice's particle");
  sub->add_option("--omega-b", o.omega_b, "Wigner angle of Bob's particle");
  sub->add_option("--alpha-speed", o.alpha_speed, "arbiter speed (fraction of c)");
  sub->add_option("--delta-a-speed", o.delta_a_speed, "Alice's particle speed (fraction of c)");
  sub->add_option("--delta-b-speed", o.delta_b_speed, "Bob's particle speed (fraction of c)");
}

void add_payoffs(CLI::App* sub, Options& o) {
  sub->add_option("--t", o.t, "temptation payoff");
  sub->add_option("--r", o.r, "reward payoff");
  sub->add_option("--p", o.p, "punishment payoff");
  sub->add_option("--s", o.s, "sucker payoff");
  sub->add_flag("--allow-non-dilemma", o.allow_non_dilemma, "skip the t > r > p > s check");
}

}  // namespace

std::string format_real(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

std::string format_real(const std::optional<double>& x) { return x ? format_real(*x) : ""; }

void emit_csv(const CsvTable& table, std::ostream& os) {
  const auto line = [&os](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) os << ',';
      os << fields[i];
    }
    os << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Relativistic quantum Prisoner's Dilemma engine", "rqpd"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto* payoff = app.add_subcommand("payoff", "payoffs of one strategy profile (JSON)");
  add_common(payoff, o);
  add_omegas(payoff, o);
  add_payoffs(payoff, o);
  payoff->add_option("--gamma", o.gamma, "entanglement parameter in [0, pi/2]");
  payoff->add_option("--alice", o.alice, "C, D, Q or 'theta,phi'");
  payoff->add_option("--bob", o.bob, "C, D, Q or 'theta,phi'");

  auto* nash = app.add_subcommand("nash", "profile table, SDS and Nash equilibria over {D, Q} (JSON)");
  add_common(nash, o);
  add_omegas(nash, o);
  add_payoffs(nash, o);
  nash->add_option("--gamma", o.gamma, "entanglement parameter in [0, pi/2]");

  auto* sweep = app.add_subcommand("sweep", "G1..G4 for both players across gamma (CSV)");
  add_common(sweep, o);
  add_omegas(sweep, o);
  add_payoffs(sweep, o);
  sweep->add_option("--samples", o.samples, "number of gamma samples")->check(CLI::Range(2, 1000000));

  auto* thresholds = app.add_subcommand("thresholds", "the four gamma thresholds (CSV)");
  add_common(thresholds, o);
  add_omegas(thresholds, o);
  thresholds->add_option("--grid", o.grid, "emit an N x N grid over [0, pi/2]^2");
  thresholds->add_option("--method", o.method, "closed-form or numeric");

  auto* region = app.add_subcommand("region-map", "where Bob is always D / Alice always Q (CSV)");
  add_common(region, o);
  region->add_option("--grid", o.grid, "grid points per axis")->required();
  region->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));

  auto* wigner = app.add_subcommand("wigner", "Wigner angle from rapidities or speeds (JSON)");
  wigner->add_option("-o,--output", o.output, "write to this file instead of stdout");
  wigner->add_option("--alpha", o.alpha, "arbiter rapidity");
  wigner->add_option("--delta", o.delta, "particle rapidity");
  wigner->add_option("--alpha-speed", o.alpha_speed, "arbiter speed (fraction of c)");
  wigner->add_option("--delta-speed", o.delta_speed, "particle speed (fraction of c)");

  std::vector<std::string> argv_storage{"rqpd"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgs;
  }

  std::ostringstream body;
  try {
    if (*payoff) {
      cmd_payoff(o, body, err);
    } else if (*nash) {
      cmd_nash(o, body, err);
    } else if (*sweep) {
      cmd_sweep(o, body, err);
    } else if (*thresholds) {
      cmd_thresholds(o, body, err);
    } else if (*region) {
      cmd_region_map(o, body, err);
    } else if (*wigner) {
      cmd_wigner(o, body, err);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgs;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  }

  if (o.output.empty()) {
    out << body.str();
    return out ? kOk : kIoError;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << o.output << "' for writing\n";
    return kIoError;
  }
  file << body.str();
  file.close();
  if (!file) {
    err << "error: write to '" << o.output << "' failed\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace rqpd::cli
