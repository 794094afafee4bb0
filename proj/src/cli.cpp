#include "hardy/cli.hpp"

#include "hardy/lhv.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hardy::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string_view command_name(Command c)
{
  switch (c) {
  case Command::Simulate: return "simulate";
  case Command::Hardy: return "hardy";
  case Command::Lhv: return "lhv";
  case Command::Sweep: return "sweep";
  case Command::Optimize: return "optimize";
  }
  return "?";
}

// nlohmann's dump() prints the shortest round-trip form; documents here pin 17 digits.
void write_json(const Json& j, std::string& out)
{
  switch (j.type()) {
  case Json::value_t::object: {
    out += '{';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first)
        out += ',';
      first = false;
      out += Json(it.key()).dump();
      out += ':';
      write_json(it.value(), out);
    }
    out += '}';
    break;
  }
  case Json::value_t::array: {
    out += '[';
    bool first = true;
    for (const auto& v : j) {
      if (!first)
        out += ',';
      first = false;
      write_json(v, out);
    }
    out += ']';
    break;
  }
  case Json::value_t::number_float:
    out += format_number(j.get<double>());
    break;
  default:
    out += j.dump();
  }
}

std::string render(const Json& j)
{
  std::string out;
  write_json(j, out);
  out += '\n';
  return out;
}

Json number_or_null(std::optional<double> v) { return v ? Json(*v) : Json(nullptr); }

Json header(const RunConfig& c, bool with_angles)
{
  Json j;
  j["command"] = command_name(c.command);
  j["theta1"] = with_angles ? Json(c.theta1) : Json(nullptr);
  j["theta2"] = with_angles ? Json(c.theta2) : Json(nullptr);
  j["case"] = c.canonical_case ? Json(std::string(to_string(*c.canonical_case))) : Json(nullptr);
  return j;
}

Json occupation_json(const OccupationVector& occ)
{
  Json arr = Json::array();
  for (unsigned n : occ.counts())
    arr.push_back(n);
  return arr;
}

Json amplitudes_json(const FockState& state)
{
  Json arr = Json::array();
  for (const auto& [occ, amp] : state.terms()) {
    Json t;
    t["occupation"] = occupation_json(occ);
    t["re"] = amp.real();
    t["im"] = amp.imag();
    arr.push_back(std::move(t));
  }
  return arr;
}

struct Emitted {
  std::string document;
  int status = kExitOk;
};

Emitted run_simulate(const RunConfig& c)
{
  const HardyAngles angles{c.theta1, c.theta2};
  const auto which = c.canonical_case.value_or(CanonicalCase::A);
  const auto setting = canonical_setting(which, angles);
  const auto state = evolve_hardy(angles, setting);
  const auto split = psi_split(state);

  if (c.format == OutputFormat::Csv) {
    std::string out = "n_g,n_e,n_f,n_h,re,im,coincidence\r\n";
    for (const auto& [occ, amp] : state.terms()) {
      const bool coincidence = split.psi1.terms().count(occ) > 0;
      for (std::size_t m = 0; m < occ.n_modes(); ++m)
        out += std::to_string(occ[m]) + ',';
      out += format_number(amp.real()) + ',' + format_number(amp.imag()) + ',' +
             (coincidence ? "true" : "false") + "\r\n";
    }
    return {out};
  }

  RunConfig echoed = c;
  echoed.canonical_case = which;
  Json j = header(echoed, true);
  j["setting"] = {{"theta3", setting.theta3},
                  {"phi3", setting.phi3},
                  {"theta4", setting.theta4},
                  {"phi4", setting.phi4}};
  j["mode_labels"] = {"g", "e", "f", "h"};
  j["norm_sq"] = norm_sq(state);
  j["psi1_norm_sq"] = norm_sq(split.psi1);
  j["psi2_norm_sq"] = norm_sq(split.psi2);
  j["amplitudes"] = amplitudes_json(state);
  j["psi1"] = amplitudes_json(split.psi1);
  j["events"] = {{"E_bar", event_probability(state, Event::EBar)},
                 {"F_bar", event_probability(state, Event::FBar)},
                 {"G_bar", event_probability(state, Event::GBar)},
                 {"H_bar", event_probability(state, Event::HBar)},
                 {"F_bar_and_G_bar", event_probability(state, Event::FBar, Event::GBar)}};
  return {render(j)};
}

Json report_json(const RunConfig& c, const HardyReport& r)
{
  Json j = header(c, true);
  j["tau"] = tau(r.angles);
  j["tau_prime"] = tau_prime(r.angles);
  j["p_joint_a"] = r.p_joint_a;
  j["p_f_given_g_b"] = number_or_null(r.p_f_given_g_b);
  j["p_g_given_f_c"] = number_or_null(r.p_g_given_f_c);
  j["p_joint_d"] = r.p_joint_d;
  j["p_closed_form"] = r.p_closed_form;
  j["chain_holds"] = r.chain_holds;
  j["degenerate"] = r.degenerate();
  j["undefined_conditional"] = r.has_undefined_conditional();
  return j;
}

Emitted run_hardy(const RunConfig& c)
{
  const auto report = hardy_report({c.theta1, c.theta2});
  return {render(report_json(c, report)),
          report.has_undefined_conditional() ? kExitUndefined : kExitOk};
}

Emitted run_lhv(const RunConfig& c)
{
  const auto report = hardy_report({c.theta1, c.theta2});
  const auto constraints = ChainConstraints::from_report(report);
  const int lhv_max = lhv_max_case_d(constraints);

  Json j = header(c, true);
  j["constraints"] = {{"forbid_joint_a", constraints.forbid_joint_a},
                      {"implication_b", constraints.implication_b},
                      {"implication_c", constraints.implication_c}};
  Json strategies = Json::array();
  for (const auto& s : enumerate_satisfying(constraints))
    strategies.push_back({{"f_at_tau", s.f_at_tau},
                          {"f_at_tau_prime", s.f_at_tau_prime},
                          {"g_at_tau", s.g_at_tau},
                          {"g_at_tau_prime", s.g_at_tau_prime}});
  j["satisfying_strategies"] = std::move(strategies);
  j["lhv_max_case_d"] = lhv_max;
  j["quantum_p_case_d"] = report.p_joint_d;
  const bool contradiction = report.chain_holds && !report.degenerate() &&
                             report.p_joint_d > static_cast<double>(lhv_max);
  j["contradiction"] = contradiction;
  std::string summary;
  if (contradiction)
    summary = "local strategies allow case-D coincidence probability " + std::to_string(lhv_max) +
              ", quantum prediction is " + format_number(report.p_joint_d) +
              ": no local hidden-variable model reproduces the chain";
  else
    summary = "no contradiction at these angles (chain broken or degenerate)";
  j["summary"] = summary;
  return {render(j)};
}

Emitted run_sweep(const RunConfig& c)
{
  const auto grid = sweep(c.resolution, c.verify, c.jobs);
  auto chain_text = [](ChainCheck k) -> std::string {
    switch (k) {
    case ChainCheck::Holds: return "true";
    case ChainCheck::Fails: return "false";
    case ChainCheck::Unchecked: break;
    }
    return "";
  };

  const auto n = grid.values.rows();
  if (c.format == OutputFormat::Csv) {
    std::string out = "theta1,theta2,P,chain_ok\r\n";
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        out += format_number(grid.theta1_samples[i]) + ',' + format_number(grid.theta2_samples[j]) +
               ',' + format_number(grid.values(i, j)) + ',' + chain_text(grid.chain(i, j)) + "\r\n";
    return {out};
  }

  Json j = header(c, false);
  j["resolution"] = c.resolution;
  j["verify_chain"] = to_string(c.verify);
  Json points = Json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto flag = grid.chain(i, k);
      points.push_back({{"theta1", grid.theta1_samples[i]},
                        {"theta2", grid.theta2_samples[k]},
                        {"P", grid.values(i, k)},
                        {"chain_ok", flag == ChainCheck::Unchecked ? Json(nullptr)
                                                                   : Json(flag == ChainCheck::Holds)}});
    }
  }
  j["points"] = std::move(points);
  return {render(j)};
}

Emitted run_optimize(const RunConfig& c)
{
  const auto r = optimize(c.resolution, c.tolerance);
  Json j = header(c, false);
  j["tolerance"] = c.tolerance;
  j["theta1_star"] = r.theta1_star;
  j["theta2_star"] = r.theta2_star;
  j["p_star"] = r.p_star;
  j["iterations"] = r.iterations;
  j["grid_resolution"] = r.grid_resolution;
  j["grid_best"] = r.grid_best;
  return {render(j)};
}

}  // namespace

std::string format_number(double value)
{
  if (!std::isfinite(value))
    return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
  Emitted emitted;
  try {
    if (!std::isfinite(config.theta1) || !std::isfinite(config.theta2))
      throw UsageError("angles must be finite");
    if (config.format == OutputFormat::Csv && config.command != Command::Sweep &&
        config.command != Command::Simulate)
      throw UsageError("csv output is only available for sweep and simulate");

    switch (config.command) {
    case Command::Simulate: emitted = run_simulate(config); break;
    case Command::Hardy: emitted = run_hardy(config); break;
    case Command::Lhv: emitted = run_lhv(config); break;
    case Command::Sweep: emitted = run_sweep(config); break;
    case Command::Optimize: emitted = run_optimize(config); break;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUndefined;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.output_path << " for writing\n";
      return kExitUsage;
    }
    file << emitted.document;
  } else {
    out << emitted.document;
  }
  if (emitted.status == kExitUndefined)
    err << "error: conditioning event has zero probability at these angles\n";
  return emitted.status;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Two-source Hardy nonlocality simulator"};
  app.require_subcommand(1);

  RunConfig config;
  bool degrees = false;
  std::string case_text;
  std::string format_text;
  std::string verify_text = "sampled";
  std::string output_path;
  double theta1 = std::numbers::pi / 3;
  double theta2 = std::numbers::pi / 3;

  auto add_angles = [&](CLI::App* sub) {
    sub->add_option("--theta1", theta1, "Source beam splitter B1 angle (radians)");
    sub->add_option("--theta2", theta2, "Source beam splitter B2 angle (radians)");
    sub->add_flag("--degrees", degrees, "Interpret angles as degrees");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", output_path, "Write the document to this file");
  };

  auto* simulate = app.add_subcommand("simulate", "Output-state amplitudes for one canonical setting");
  add_angles(simulate);
  simulate->add_option("--case", case_text, "Canonical case A, B, C or D (default A)")
      ->check(CLI::IsMember({"A", "B", "C", "D", "a", "b", "c", "d"}));
  add_output(simulate);

  auto* hardy = app.add_subcommand("hardy", "Four-case Hardy chain report");
  add_angles(hardy);
  add_output(hardy);

  auto* lhv = app.add_subcommand("lhv", "Local hidden-variable enumeration against the chain");
  add_angles(lhv);
  add_output(lhv);

  auto* sweep_cmd = app.add_subcommand("sweep", "Grid of the case-D probability over (theta1, theta2)");
  sweep_cmd->add_option("--resolution", config.resolution, "Samples per axis")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 16));
  sweep_cmd->add_option("--jobs", config.jobs, "Worker threads (default: all processors)");
  sweep_cmd->add_option("--verify-chain", verify_text, "all, sampled or none")
      ->check(CLI::IsMember({"all", "sampled", "none"}));
  add_output(sweep_cmd);

  auto* optimize_cmd = app.add_subcommand("optimize", "Maximize the case-D probability");
  optimize_cmd->add_option("--resolution", config.resolution, "Coarse grid samples per axis")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 16));
  optimize_cmd->add_option("--tolerance", config.tolerance, "Golden-section bracket tolerance")
      ->check(CLI::Range(1e-12, 1.0));
  add_output(optimize_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (simulate->parsed())
    config.command = Command::Simulate;
  else if (hardy->parsed())
    config.command = Command::Hardy;
  else if (lhv->parsed())
    config.command = Command::Lhv;
  else if (sweep_cmd->parsed())
    config.command = Command::Sweep;
  else
    config.command = Command::Optimize;

  const double scale = degrees ? std::numbers::pi / 180 : 1.0;
  config.theta1 = theta1 * scale;
  config.theta2 = theta2 * scale;
  if (!case_text.empty())
    config.canonical_case = parse_case(case_text);
  if (format_text.empty())
    config.format = config.command == Command::Sweep ? OutputFormat::Csv : OutputFormat::Json;
  else
    config.format = format_text == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  config.verify = parse_verify_mode(verify_text).value_or(VerifyMode::Sampled);
  if (!output_path.empty())
    config.output_path = output_path;

  return run(config, out, err);
}

}  // namespace hardy::cli
