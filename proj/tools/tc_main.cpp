// tc - command line front end over the tavis_cummings C API.
//
//   tc evolve --atoms <1-4> --g <f> --omega <f> --t <start:end:dt>
//             --init atoms=<[ud]{n}>,field=<fock:m|coherent:a>
//             [--nmax <int>] [--format csv|json] [--out <path>]
//             [--time-unit absolute|inverse-g] [--config <json>]
//   tc verify [--atoms <1-4>] [--tau <list>] [--nmax <int>] [--tol <f>]
//             [--format json] [--out <path>] [--config <json>]
//
// Exit codes: 0 success, 1 configuration error, 2 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tavis_cummings.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitVerifyFailed = 2;

struct EvolveOptions {
  int atoms = 1;
  double g = 1.0;
  double omega = 1.0;
  int nmax = 16;
  std::string t_spec = "0:1:0.1";
  std::string init_spec;
  std::string time_unit = "absolute";
  std::string format = "csv";
  std::string out_path;
};

struct VerifyOptions {
  std::optional<int> atoms;
  std::string tau_list;
  int nmax = 0;
  double tol = 0.0;
  std::string format = "json";
  std::string out_path;
};

[[noreturn]] void config_error(const std::string& message) {
  std::cerr << "tc: " << message << "\n";
  std::exit(kExitConfig);
}

void parse_time_spec(const std::string& spec, tc_evolve_params& run) {
  double vals[3];
  int k = 0;
  std::istringstream in(spec);
  std::string part;
  while (std::getline(in, part, ':')) {
    if (k >= 3) config_error("--t expects start:end:dt");
    try {
      size_t used = 0;
      vals[k++] = std::stod(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      config_error("--t expects numeric start:end:dt, got " + spec);
    }
  }
  if (k != 3) config_error("--t expects start:end:dt");
  run.t_start = vals[0];
  run.t_end = vals[1];
  run.dt = vals[2];
}

void parse_init_spec(const std::string& spec, std::string& atoms, std::string& field) {
  std::istringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.rfind("atoms=", 0) == 0)
      atoms = part.substr(6);
    else if (part.rfind("field=", 0) == 0)
      field = part.substr(6);
    else
      config_error("--init expects atoms=<...>,field=<...>, got " + spec);
  }
  if (atoms.empty() || field.empty())
    config_error("--init needs both atoms= and field= parts");
}

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open config file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    config_error("bad config file: " + std::string(e.what()));
  }
}

// Config file keys mirror the flags; explicitly passed flags win.
void apply_evolve_config(const nlohmann::json& j, const CLI::App& cmd, EvolveOptions& o) {
  auto fallback = [&](const char* flag, auto& slot, const char* key) {
    if (cmd.count(flag) == 0 && j.contains(key)) j.at(key).get_to(slot);
  };
  fallback("--atoms", o.atoms, "atoms");
  fallback("--g", o.g, "g");
  fallback("--omega", o.omega, "omega");
  fallback("--nmax", o.nmax, "nmax");
  fallback("--time-unit", o.time_unit, "time_unit");
  fallback("--format", o.format, "format");
  fallback("--out", o.out_path, "out");
  if (cmd.count("--t") == 0 && j.contains("t")) {
    const auto& t = j.at("t");
    std::ostringstream os;
    os << t.at("start").get<double>() << ":" << t.at("end").get<double>() << ":"
       << t.at("dt").get<double>();
    o.t_spec = os.str();
  }
  if (cmd.count("--init") == 0 && j.contains("init")) {
    const auto& init = j.at("init");
    o.init_spec = "atoms=" + init.at("atoms").get<std::string>() +
                  ",field=" + init.at("field").get<std::string>();
  }
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) config_error("cannot open output file " + path);
  return file;
}

int run_evolve(const EvolveOptions& o) {
  std::string atoms, field;
  parse_init_spec(o.init_spec, atoms, field);

  tc_model_params params{o.atoms, o.omega, o.omega, o.g, o.nmax};
  tc_evolve_params run{};
  parse_time_spec(o.t_spec, run);
  run.times_in_inverse_g = (o.time_unit == "inverse-g") ? 1 : 0;
  run.atoms = atoms.c_str();
  run.field = field.c_str();
  run.auto_extend_nmax = 1;

  tc_timeseries* ts = nullptr;
  const tc_status status = tc_evolve(&params, &run, &ts);
  if (status != TC_OK) config_error(tc_last_error());

  const size_t rows = tc_timeseries_rows(ts);
  const size_t cols = tc_timeseries_cols(ts);

  std::ofstream file;
  std::ostream& out = open_output(o.out_path, file);
  out.precision(15);

  if (o.format == "csv") {
    for (size_t c = 0; c < cols; ++c)
      out << tc_timeseries_col_name(ts, c) << (c + 1 < cols ? "," : "\n");
    for (size_t r = 0; r < rows; ++r) {
      for (size_t c = 0; c < cols; ++c) {
        double v = 0.0;
        tc_timeseries_get(ts, r, c, &v);
        out << v << (c + 1 < cols ? "," : "\n");
      }
    }
  } else {  // json
    nlohmann::json j;
    j["params"] = {{"n_atoms", o.atoms}, {"omega", o.omega},  {"delta", o.omega},
                   {"g", o.g},           {"nmax", tc_timeseries_nmax(ts)}};
    j["init"] = {{"atoms", atoms}, {"field", field}};
    j["columns"] = nlohmann::json::array();
    for (size_t c = 0; c < cols; ++c) j["columns"].push_back(tc_timeseries_col_name(ts, c));
    j["records"] = nlohmann::json::array();
    for (size_t r = 0; r < rows; ++r) {
      nlohmann::json rec;
      for (size_t c = 0; c < cols; ++c) {
        double v = 0.0;
        tc_timeseries_get(ts, r, c, &v);
        rec[tc_timeseries_col_name(ts, c)] = v;
      }
      j["records"].push_back(std::move(rec));
    }
    out << j.dump(2) << "\n";
  }

  tc_timeseries_free(ts);
  return kExitOk;
}

int run_verify(const VerifyOptions& o) {
  std::vector<int> atoms;
  if (o.atoms) atoms.push_back(*o.atoms);
  std::vector<double> taus;
  if (!o.tau_list.empty()) {
    std::istringstream in(o.tau_list);
    std::string part;
    while (std::getline(in, part, ',')) {
      try {
        taus.push_back(std::stod(part));
      } catch (const std::exception&) {
        config_error("--tau expects a comma-separated list of numbers");
      }
    }
  }

  tc_verify_params params{};
  params.atoms = atoms.empty() ? nullptr : atoms.data();
  params.atoms_len = atoms.size();
  params.taus = taus.empty() ? nullptr : taus.data();
  params.taus_len = taus.size();
  params.nmax = o.nmax;
  params.tol = o.tol;

  char* report = nullptr;
  int all_passed = 0;
  const tc_status status = tc_verify(&params, &report, &all_passed);
  if (status != TC_OK) config_error(tc_last_error());

  std::ofstream file;
  std::ostream& out = open_output(o.out_path, file);
  out << report << "\n";
  tc_string_free(report);
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form Tavis-Cummings model simulator"};
  app.require_subcommand(1);

  EvolveOptions eo;
  std::string evolve_config, verify_config;
  CLI::App* evolve = app.add_subcommand("evolve", "propagate a state and emit observables");
  evolve->add_option("--atoms", eo.atoms, "number of atoms (1-4)");
  evolve->add_option("--g", eo.g, "coupling constant");
  evolve->add_option("--omega", eo.omega, "field frequency (resonant splitting)");
  evolve->add_option("--nmax", eo.nmax, "photon cutoff");
  evolve->add_option("--t", eo.t_spec, "time grid start:end:dt");
  evolve->add_option("--init", eo.init_spec, "atoms=<[ud]{n}>,field=<fock:m|coherent:a>");
  evolve->add_option("--time-unit", eo.time_unit, "absolute or inverse-g")
      ->check(CLI::IsMember({"absolute", "inverse-g"}));
  evolve->add_option("--format", eo.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  evolve->add_option("--out", eo.out_path, "output path (default stdout)");
  evolve->add_option("--config", evolve_config, "JSON config file (flags override)");

  VerifyOptions vo;
  int verify_atoms = 0;
  CLI::App* verify = app.add_subcommand("verify", "run the self-verification suite");
  verify->add_option("--atoms", verify_atoms, "restrict to one atom count (1-4)");
  verify->add_option("--tau", vo.tau_list, "comma-separated list of t*g values");
  verify->add_option("--nmax", vo.nmax, "photon cutoff");
  verify->add_option("--tol", vo.tol, "tolerance for the oracle/unitarity sweeps");
  verify->add_option("--format", vo.format, "json")->check(CLI::IsMember({"json"}));
  verify->add_option("--out", vo.out_path, "output path (default stdout)");
  verify->add_option("--config", verify_config, "JSON config file (flags override)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  if (evolve->parsed()) {
    if (!evolve_config.empty())
      apply_evolve_config(load_config(evolve_config), *evolve, eo);
    if (eo.init_spec.empty()) config_error("--init (or a config file) is required");
    return run_evolve(eo);
  }

  if (!verify_config.empty()) {
    const nlohmann::json j = load_config(verify_config);
    if (verify->count("--atoms") == 0 && j.contains("atoms")) verify_atoms = j.at("atoms");
    if (verify->count("--nmax") == 0 && j.contains("nmax")) vo.nmax = j.at("nmax");
    if (verify->count("--tol") == 0 && j.contains("tol")) vo.tol = j.at("tol");
    if (verify->count("--tau") == 0 && j.contains("taus")) {
      std::ostringstream os;
      for (double t : j.at("taus").get<std::vector<double>>()) os << t << ",";
      vo.tau_list = os.str();
      if (!vo.tau_list.empty()) vo.tau_list.pop_back();
    }
  }
  if (verify->count("--atoms") > 0 || verify_atoms > 0) vo.atoms = verify_atoms;
  return run_verify(vo);
}
