// phasekit command-line front end.
//
// Subcommands: phase-states, witness, ghz, chsh, evolve, scan, verify, run.
// Each subcommand can preload its parameters from a scenario JSON file
// (--scenario); explicit flags override file values. `run <file>` executes
// a scenario file as-is. Exit codes: 0 success, 2 validation error,
// 3 assertion/identity failure.

#include "phasekit/acceptance.hpp"
#include "phasekit/atomlattice.hpp"
#include "phasekit/dynamics.hpp"
#include "phasekit/nonlocality.hpp"
#include "phasekit/serialize.hpp"
#include "phasekit/su2phase.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

namespace {

using json = nlohmann::json;
using namespace phasekit;
using std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitAssertion = 3;

struct OutputSpec {
  std::string format;  // "json" or "csv" ("text" for verify)
  std::string path;    // empty = stdout
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

json load_scenario(const std::string& path) {
  json j = load_json_file(path);
  if (!j.is_object() || !j.contains("version")) {
    throw std::invalid_argument("scenario file needs a top-level \"version\" field");
  }
  if (j.at("version").get<int>() != 1) {
    throw std::invalid_argument("unsupported scenario version");
  }
  if (!j.contains("command")) {
    throw std::invalid_argument("scenario file needs a \"command\" field");
  }
  return j;
}

void check_param_keys(const json& params, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : params.items()) {
    bool ok = false;
    for (const char* a : allowed) ok |= (key == a);
    if (!ok) throw std::invalid_argument("unknown scenario parameter: " + key);
  }
}

// Scenario value wins only when the flag was not passed on the command line.
template <typename T>
void apply_param(const CLI::Option* opt, const json& params, const char* key, T& value) {
  if (opt != nullptr && opt->count() > 0) return;
  if (params.contains(key)) value = params.at(key).get<T>();
}

void emit(const OutputSpec& out, const std::string& body) {
  if (out.path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write file: " + out.path);
  f << body;
}

OutputSpec resolve_output(const json& scenario, const CLI::Option* fmt_opt,
                          std::string fmt_flag, const CLI::Option* path_opt,
                          std::string path_flag, const std::string& default_format) {
  OutputSpec out{default_format, ""};
  if (scenario.contains("output")) {
    const json& o = scenario.at("output");
    if (o.contains("format")) out.format = o.at("format").get<std::string>();
    if (o.contains("path")) out.path = o.at("path").get<std::string>();
  }
  if (fmt_opt != nullptr && fmt_opt->count() > 0) out.format = fmt_flag;
  if (path_opt != nullptr && path_opt->count() > 0) out.path = path_flag;
  if (out.format != "json" && out.format != "csv" && out.format != "text") {
    throw std::invalid_argument("output format must be json or csv");
  }
  return out;
}

StateVector resolve_state(const std::string& tag, const std::string& file) {
  if (!file.empty()) return serialize::state_from_json(load_json_file(file));
  return atomlattice::named_state(tag);
}

// ---------------------------------------------------------------- commands

int cmd_phase_states(int pairs, std::optional<int> dimension, double psi,
                     const OutputSpec& out) {
  const su2phase::PhaseBasis pb =
      dimension ? su2phase::phase_states(su2phase::SpinSystem::from_dimension(*dimension), psi)
                : atomlattice::embed_phase_states(pairs, psi);
  if (out.format == "json") {
    json states = json::array();
    for (const auto& s : pb.states) states.push_back(serialize::state_to_json(s));
    const json report = {{"dimension", pb.spin.dimension()},
                         {"two_j", pb.spin.two_j()},
                         {"psi", pb.psi},
                         {"eigenphases", pb.eigenphases},
                         {"states", states}};
    emit(out, report.dump(2) + "\n");
  } else {
    std::ostringstream csv;
    csv << "k,eigenphase";
    for (int i = 0; i < pb.spin.dimension(); ++i) {
      csv << ",re_" << pb.states[0].basis().label(i).str()
          << ",im_" << pb.states[0].basis().label(i).str();
    }
    csv << '\n';
    for (std::size_t k = 0; k < pb.states.size(); ++k) {
      csv << k << ',' << serialize::csv_number(pb.eigenphases[k]);
      for (int i = 0; i < pb.states[k].dimension(); ++i) {
        csv << ',' << serialize::csv_number(pb.states[k].amplitude(i).real()) << ','
            << serialize::csv_number(pb.states[k].amplitude(i).imag());
      }
      csv << '\n';
    }
    emit(out, csv.str());
  }
  return kExitOk;
}

int cmd_witness(const std::string& tag, const std::string& file, double tolerance,
                const OutputSpec& out) {
  const StateVector state = resolve_state(tag, file);
  const atomlattice::WitnessReport report = atomlattice::witness_scan(state, tolerance);
  json j = serialize::witness_to_json(report);
  if (!tag.empty()) j["state"] = tag;
  emit(out, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_ghz(const std::string& tag, const std::string& file, const OutputSpec& out) {
  const StateVector state = resolve_state(tag, file);
  const auto constraints = nonlocality::derive_constraints(state);
  const auto search = nonlocality::classical_search(constraints);

  json eigenchecks = json::array();
  const int atoms = static_cast<int>(state.basis().factor_count());
  const std::string uniform3(static_cast<std::size_t>(atoms), '3');
  for (const auto& c : constraints) {
    eigenchecks.push_back(serialize::eigencheck_to_json(
        c.word, nonlocality::word_eigencheck(state, c.word)));
  }
  const nonlocality::PauliWord sigma3 = nonlocality::PauliWord::parse(uniform3);
  eigenchecks.push_back(serialize::eigencheck_to_json(
      sigma3, nonlocality::word_eigencheck(state, sigma3)));

  json j = {{"eigenchecks", eigenchecks},
            {"constraints", serialize::constraints_to_json(constraints)},
            {"search", serialize::search_to_json(search)},
            {"ghz_contradiction", !search.satisfiable}};
  if (!tag.empty()) j["state"] = tag;
  emit(out, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_chsh(const std::string& tag, const std::string& file, double theta_a,
             double theta_a_prime, double theta_b, std::optional<double> theta_b_prime,
             std::optional<int> grid, const OutputSpec& out) {
  const StateVector state = resolve_state(tag, file);
  if (grid) {
    if (*grid < 2) throw std::invalid_argument("--grid needs at least 2 points");
    std::ostringstream csv;
    csv << "theta_b,ab,ab_prime,a_prime_b,a_prime_b_prime,s_max,best_variant\n";
    for (int i = 0; i < *grid; ++i) {
      const double tb = -pi / 2 + i * (pi / (*grid - 1));
      const nonlocality::ChshSettings settings{theta_a, theta_a_prime, tb,
                                               theta_b_prime ? *theta_b_prime : -tb};
      const auto r = nonlocality::chsh_scan(state, settings);
      csv << serialize::csv_number(tb);
      for (double c : r.correlators) csv << ',' << serialize::csv_number(c);
      csv << ',' << serialize::csv_number(r.s_max) << ','
          << nonlocality::kChshVariantNames[static_cast<std::size_t>(r.best_variant)] << '\n';
    }
    emit(out, csv.str());
    return kExitOk;
  }
  const nonlocality::ChshSettings settings{theta_a, theta_a_prime, theta_b,
                                           theta_b_prime ? *theta_b_prime : -theta_b};
  const auto r = nonlocality::chsh_scan(state, settings);
  json j = serialize::chsh_to_json(settings, r);
  if (!tag.empty()) j["state"] = tag;
  emit(out, j.dump(2) + "\n");
  return kExitOk;
}

struct EvolveParams {
  int pairs = 1;
  double delta = 0.0;
  double omega0 = 0.0;
  double gamma = 1.0;
  double kappa = 0.0;
  std::string initial = "photon";
  std::string initial_file;
  double t_max = 10.0;
  int steps = 501;
  std::vector<double> times;  // explicit grid wins over t_max/steps
  int fock_cutoff = -1;       // <0 = default
  bool sector = false;
};

dynamics::SimConfig to_sim_config(const EvolveParams& p) {
  dynamics::SimConfig cfg;
  cfg.n_pairs = p.pairs;
  cfg.delta = p.delta;
  cfg.omega0 = p.omega0;
  cfg.gamma = p.gamma;
  cfg.kappa = p.kappa;
  cfg.restrict_to_sector = p.sector;
  if (p.fock_cutoff >= 0) cfg.fock_cutoff = p.fock_cutoff;
  cfg.initial = p.initial_file.empty()
                    ? dynamics::InitialCondition::from_tag(p.initial)
                    : dynamics::InitialCondition::explicit_state(
                          serialize::state_from_json(load_json_file(p.initial_file)));
  cfg.times = p.times.empty() ? dynamics::SimConfig::uniform_times(p.t_max, p.steps)
                              : p.times;
  return cfg;
}

int cmd_evolve(const EvolveParams& p, const OutputSpec& out) {
  const dynamics::Trace trace = dynamics::run_trace(to_sim_config(p));
  if (out.format == "json") {
    emit(out, serialize::trace_to_json(trace).dump(2) + "\n");
  } else {
    std::ostringstream csv;
    serialize::trace_to_csv(trace, csv);
    emit(out, csv.str());
  }
  return kExitOk;
}

int cmd_scan(const EvolveParams& p, const OutputSpec& out) {
  const dynamics::OverlapScan scan = dynamics::phase_overlap_scan(to_sim_config(p));
  if (out.format == "json") {
    emit(out, serialize::overlap_scan_to_json(scan).dump(2) + "\n");
  } else {
    std::ostringstream csv;
    serialize::overlap_scan_to_csv(scan, csv);
    emit(out, csv.str());
  }
  return kExitOk;
}

int cmd_verify(double inject_epsilon, const OutputSpec& out) {
  acceptance::Options options;
  options.epsilon_corner_perturbation = inject_epsilon;
  const auto results = acceptance::run_all(options);
  if (out.format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"id", r.id},
                     {"name", r.name},
                     {"worst", r.worst},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass},
                     {"detail", r.detail}});
    }
    const json j = {{"criteria", arr}, {"all_pass", acceptance::all_pass(results)}};
    emit(out, j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    for (const auto& r : results) text << acceptance::format_line(r) << '\n';
    text << (acceptance::all_pass(results) ? "all criteria passed\n"
                                           : "ACCEPTANCE FAILURES PRESENT\n");
    emit(out, text.str());
  }
  return acceptance::all_pass(results) ? kExitOk : kExitAssertion;
}

// ------------------------------------------------------------------- main

int dispatch(int argc, char** argv) {
  CLI::App app{"SU(2) phase states, entanglement witnesses and cavity dynamics"};
  app.require_subcommand(1);

  // phase-states
  auto* ps = app.add_subcommand("phase-states", "Emit the dual phase-state basis");
  std::string ps_scenario;
  int ps_pairs = 1;
  int ps_dimension = 0;
  double ps_psi = 0.0;
  std::string ps_fmt = "json", ps_path;
  ps->add_option("--scenario", ps_scenario, "Scenario JSON file");
  auto* ps_pairs_o = ps->add_option("--pairs,-n", ps_pairs, "Photon pairs n (2n atoms)");
  auto* ps_dim_o = ps->add_option("--dimension,-N", ps_dimension, "Abstract spin dimension");
  auto* ps_psi_o = ps->add_option("--psi", ps_psi, "Reference phase");
  auto* ps_fmt_o = ps->add_option("--format", ps_fmt)->check(CLI::IsMember({"json", "csv"}));
  auto* ps_path_o = ps->add_option("--output,-o", ps_path, "Output path (default stdout)");

  // witness
  auto* wt = app.add_subcommand("witness", "Local-measurement entanglement witness");
  std::string wt_scenario, wt_state = "bell+", wt_file;
  double wt_tol = atomlattice::kWitnessTol;
  std::string wt_fmt = "json", wt_path;
  wt->add_option("--scenario", wt_scenario, "Scenario JSON file");
  auto* wt_state_o = wt->add_option("--state", wt_state, "Named state tag");
  auto* wt_file_o = wt->add_option("--state-file", wt_file, "State JSON file");
  auto* wt_tol_o = wt->add_option("--tolerance", wt_tol, "Witness tolerance");
  auto* wt_fmt_o = wt->add_option("--format", wt_fmt)->check(CLI::IsMember({"json"}));
  auto* wt_path_o = wt->add_option("--output,-o", wt_path);

  // ghz
  auto* gz = app.add_subcommand("ghz", "GHZ identities and classical refutation");
  std::string gz_scenario, gz_state = "chi10", gz_file;
  std::string gz_fmt = "json", gz_path;
  gz->add_option("--scenario", gz_scenario, "Scenario JSON file");
  auto* gz_state_o = gz->add_option("--state", gz_state, "Named state tag");
  auto* gz_file_o = gz->add_option("--state-file", gz_file, "State JSON file");
  auto* gz_fmt_o = gz->add_option("--format", gz_fmt)->check(CLI::IsMember({"json"}));
  auto* gz_path_o = gz->add_option("--output,-o", gz_path);

  // chsh
  auto* ch = app.add_subcommand("chsh", "Pairwise CHSH correlators and scan");
  std::string ch_scenario, ch_state = "chi10", ch_file;
  double ch_ta = pi, ch_tap = pi / 2, ch_tb = 0.0, ch_tbp = 0.0;
  int ch_grid = 0;
  std::string ch_fmt = "json", ch_path;
  ch->add_option("--scenario", ch_scenario, "Scenario JSON file");
  auto* ch_state_o = ch->add_option("--state", ch_state, "Named state tag");
  auto* ch_file_o = ch->add_option("--state-file", ch_file, "State JSON file");
  auto* ch_ta_o = ch->add_option("--theta-a", ch_ta, "Angle of a (default pi)");
  auto* ch_tap_o = ch->add_option("--theta-a-prime", ch_tap, "Angle of a' (default pi/2)");
  auto* ch_tb_o = ch->add_option("--theta-b", ch_tb, "Angle of b");
  auto* ch_tbp_o = ch->add_option("--theta-b-prime", ch_tbp, "Angle of b' (default -theta_b)");
  auto* ch_grid_o = ch->add_option("--grid", ch_grid, "CSV scan over theta_b with N points");
  auto* ch_fmt_o = ch->add_option("--format", ch_fmt)->check(CLI::IsMember({"json", "csv"}));
  auto* ch_path_o = ch->add_option("--output,-o", ch_path);

  // evolve / scan share parameters
  const auto add_evolve_options = [](CLI::App* cmd, EvolveParams& p, std::string& scenario,
                                     std::string& fmt, std::string& path) {
    cmd->add_option("--scenario", scenario, "Scenario JSON file");
    std::vector<CLI::Option*> opts;
    opts.push_back(cmd->add_option("--n,--pairs", p.pairs, "Photon pairs n (2n atoms)"));
    opts.push_back(cmd->add_option("--delta", p.delta, "Cavity detuning"));
    opts.push_back(cmd->add_option("--omega0", p.omega0, "Atomic transition frequency"));
    opts.push_back(cmd->add_option("--gamma", p.gamma, "Atom-field coupling"));
    opts.push_back(cmd->add_option("--kappa", p.kappa, "Kerr coefficient"));
    opts.push_back(cmd->add_option("--initial", p.initial,
                                   "excited-atom | photon | mixed | phase-minus"));
    opts.push_back(cmd->add_option("--initial-file", p.initial_file, "State JSON file"));
    opts.push_back(cmd->add_option("--t-max", p.t_max, "End of the uniform time grid"));
    opts.push_back(cmd->add_option("--steps", p.steps, "Points on the uniform grid"));
    opts.push_back(cmd->add_option("--times", p.times, "Explicit time grid")->delimiter(','));
    opts.push_back(cmd->add_option("--fock-cutoff", p.fock_cutoff, "Fock cutoff override"));
    opts.push_back(cmd->add_flag("--sector", p.sector, "Restrict to the excitation sector"));
    return opts;
  };

  auto* ev = app.add_subcommand("evolve", "Time evolution trace (CSV/JSON)");
  EvolveParams ev_p;
  std::string ev_scenario, ev_fmt = "csv", ev_path;
  auto ev_opts = add_evolve_options(ev, ev_p, ev_scenario, ev_fmt, ev_path);
  auto* ev_fmt_o = ev->add_option("--format", ev_fmt)->check(CLI::IsMember({"json", "csv"}));
  auto* ev_path_o = ev->add_option("--output,-o", ev_path);

  auto* sc = app.add_subcommand("scan", "Phase-subspace overlap scan");
  EvolveParams sc_p;
  std::string sc_scenario, sc_fmt = "csv", sc_path;
  auto sc_opts = add_evolve_options(sc, sc_p, sc_scenario, sc_fmt, sc_path);
  auto* sc_fmt_o = sc->add_option("--format", sc_fmt)->check(CLI::IsMember({"json", "csv"}));
  auto* sc_path_o = sc->add_option("--output,-o", sc_path);

  // verify
  auto* vf = app.add_subcommand("verify", "Run every acceptance criterion");
  double vf_inject = 0.0;
  std::string vf_fmt = "text", vf_path;
  vf->add_option("--inject-epsilon-corner-error", vf_inject,
                 "Negative control: corrupt the eps corner phase")
      ->group("");  // hidden
  auto* vf_fmt_o = vf->add_option("--format", vf_fmt)->check(CLI::IsMember({"text", "json"}));
  auto* vf_path_o = vf->add_option("--output,-o", vf_path);

  // run <scenario>
  auto* rn = app.add_subcommand("run", "Execute a scenario file");
  std::string rn_file;
  rn->add_option("file", rn_file, "Scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  const auto scenario_params = [](const std::string& path, const char* expect) {
    json empty = json::object();
    if (path.empty()) return std::pair<json, json>{empty, empty};
    json s = load_scenario(path);
    if (s.at("command").get<std::string>() != expect) {
      throw std::invalid_argument("scenario command does not match the subcommand");
    }
    return std::pair<json, json>{s.value("params", json::object()), s};
  };

  if (ps->parsed()) {
    auto [params, scenario] = scenario_params(ps_scenario, "phase-states");
    check_param_keys(params, {"pairs", "dimension", "psi"});
    apply_param(ps_pairs_o, params, "pairs", ps_pairs);
    apply_param(ps_dim_o, params, "dimension", ps_dimension);
    apply_param(ps_psi_o, params, "psi", ps_psi);
    const OutputSpec out =
        resolve_output(scenario, ps_fmt_o, ps_fmt, ps_path_o, ps_path, "json");
    const bool use_dim = ps_dim_o->count() > 0 || params.contains("dimension");
    return cmd_phase_states(ps_pairs, use_dim ? std::optional<int>(ps_dimension) : std::nullopt,
                            ps_psi, out);
  }
  if (wt->parsed()) {
    auto [params, scenario] = scenario_params(wt_scenario, "witness");
    check_param_keys(params, {"state", "state_file", "tolerance"});
    apply_param(wt_state_o, params, "state", wt_state);
    apply_param(wt_file_o, params, "state_file", wt_file);
    apply_param(wt_tol_o, params, "tolerance", wt_tol);
    const OutputSpec out =
        resolve_output(scenario, wt_fmt_o, wt_fmt, wt_path_o, wt_path, "json");
    return cmd_witness(wt_file.empty() ? wt_state : "", wt_file, wt_tol, out);
  }
  if (gz->parsed()) {
    auto [params, scenario] = scenario_params(gz_scenario, "ghz");
    check_param_keys(params, {"state", "state_file"});
    apply_param(gz_state_o, params, "state", gz_state);
    apply_param(gz_file_o, params, "state_file", gz_file);
    const OutputSpec out =
        resolve_output(scenario, gz_fmt_o, gz_fmt, gz_path_o, gz_path, "json");
    return cmd_ghz(gz_file.empty() ? gz_state : "", gz_file, out);
  }
  if (ch->parsed()) {
    auto [params, scenario] = scenario_params(ch_scenario, "chsh");
    check_param_keys(params, {"state", "state_file", "theta_a", "theta_a_prime", "theta_b",
                              "theta_b_prime", "grid"});
    apply_param(ch_state_o, params, "state", ch_state);
    apply_param(ch_file_o, params, "state_file", ch_file);
    apply_param(ch_ta_o, params, "theta_a", ch_ta);
    apply_param(ch_tap_o, params, "theta_a_prime", ch_tap);
    apply_param(ch_tb_o, params, "theta_b", ch_tb);
    apply_param(ch_tbp_o, params, "theta_b_prime", ch_tbp);
    apply_param(ch_grid_o, params, "grid", ch_grid);
    const OutputSpec out = resolve_output(scenario, ch_fmt_o, ch_fmt, ch_path_o, ch_path,
                                          ch_grid_o->count() > 0 || params.contains("grid")
                                              ? "csv"
                                              : "json");
    const bool has_tbp = ch_tbp_o->count() > 0 || params.contains("theta_b_prime");
    const bool has_grid = ch_grid_o->count() > 0 || params.contains("grid");
    return cmd_chsh(ch_file.empty() ? ch_state : "", ch_file, ch_ta, ch_tap, ch_tb,
                    has_tbp ? std::optional<double>(ch_tbp) : std::nullopt,
                    has_grid ? std::optional<int>(ch_grid) : std::nullopt, out);
  }

  const auto fill_evolve = [&](EvolveParams& p, const std::string& scenario_path,
                               const char* name, std::vector<CLI::Option*>& opts,
                               CLI::Option* fmt_o, std::string& fmt, CLI::Option* path_o,
                               std::string& path, const char* default_fmt) {
    auto [params, scenario] = scenario_params(scenario_path, name);
    check_param_keys(params, {"pairs", "delta", "omega0", "gamma", "kappa", "initial",
                              "initial_file", "t_max", "steps", "times", "fock_cutoff",
                              "sector"});
    apply_param(opts[0], params, "pairs", p.pairs);
    apply_param(opts[1], params, "delta", p.delta);
    apply_param(opts[2], params, "omega0", p.omega0);
    apply_param(opts[3], params, "gamma", p.gamma);
    apply_param(opts[4], params, "kappa", p.kappa);
    apply_param(opts[5], params, "initial", p.initial);
    apply_param(opts[6], params, "initial_file", p.initial_file);
    apply_param(opts[7], params, "t_max", p.t_max);
    apply_param(opts[8], params, "steps", p.steps);
    apply_param(opts[9], params, "times", p.times);
    apply_param(opts[10], params, "fock_cutoff", p.fock_cutoff);
    apply_param(opts[11], params, "sector", p.sector);
    return resolve_output(scenario, fmt_o, fmt, path_o, path, default_fmt);
  };

  if (ev->parsed()) {
    const OutputSpec out = fill_evolve(ev_p, ev_scenario, "evolve", ev_opts, ev_fmt_o,
                                       ev_fmt, ev_path_o, ev_path, "csv");
    return cmd_evolve(ev_p, out);
  }
  if (sc->parsed()) {
    const OutputSpec out = fill_evolve(sc_p, sc_scenario, "scan", sc_opts, sc_fmt_o,
                                       sc_fmt, sc_path_o, sc_path, "csv");
    return cmd_scan(sc_p, out);
  }
  if (vf->parsed()) {
    const OutputSpec out = resolve_output(json::object(), vf_fmt_o, vf_fmt, vf_path_o,
                                          vf_path, "text");
    return cmd_verify(vf_inject, out);
  }
  if (rn->parsed()) {
    const json scenario = load_scenario(rn_file);
    const std::string command = scenario.at("command").get<std::string>();
    if (command == "run") throw std::invalid_argument("scenario command cannot be \"run\"");
    // Re-enter through the matching subcommand with the scenario as the only
    // source of parameters.
    std::vector<std::string> args = {command, "--scenario", rn_file};
    std::vector<char*> argv2 = {argv[0]};
    for (auto& a : args) argv2.push_back(a.data());
    return dispatch(static_cast<int>(argv2.size()), argv2.data());
  }
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::logic_error& e) {
    std::cerr << "identity-check failure: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertion;
  }
}
