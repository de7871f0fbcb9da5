#pragma once

// Command-line layer: run configuration, config-file merging, scan drivers,
// CSV/JSON serialization, figure presets and the verification report.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eom/eom.hpp"

namespace eom::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kIoError = 3 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  void validate(const char* what) const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) || !(start < stop) ||
        !(step > 0.0)) {
      throw ParameterError(std::string(what) + ": need start < stop and step > 0");
    }
  }

  std::vector<double> expand() const {
    validate("grid");
    const double span = (stop - start) / step;
    if (span > 1e7) throw ParameterError("grid: more than 1e7 points");
    const auto n = static_cast<long>(std::floor(span + 1e-9));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) out.push_back(start + step * static_cast<double>(i));
    return out;
  }
};

/// "start:stop:step"
inline GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  std::istringstream in(text);
  std::string part[3];
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(in, part[i], ':') || part[i].empty()) {
      throw ParameterError("grid spec '" + text + "' is not start:stop:step");
    }
  }
  std::string rest;
  if (std::getline(in, rest)) throw ParameterError("grid spec '" + text + "' has extra fields");
  double* dst[3] = {&g.start, &g.stop, &g.step};
  for (int i = 0; i < 3; ++i) {
    std::size_t used = 0;
    try {
      *dst[i] = std::stod(part[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part[i].size()) throw ParameterError("grid spec '" + text + "': bad number");
  }
  g.validate("grid");
  return g;
}

enum class Model { restricted, unrestricted, both };

inline std::string to_string(Model m) {
  switch (m) {
    case Model::restricted: return "restricted";
    case Model::unrestricted: return "unrestricted";
    case Model::both: return "both";
  }
  return "both";
}

inline Model parse_model(const std::string& s) {
  if (s == "restricted") return Model::restricted;
  if (s == "unrestricted") return Model::unrestricted;
  if (s == "both") return Model::both;
  throw ParameterError("model must be restricted, unrestricted or both");
}

// Physical parameters as entered. OmegaMW and T stay unset until resolved so
// that changing Omega moves the defaults with it.
struct ParamsSpec {
  double S = 3.0;
  double Omega = 30.0;
  double detune = 0.1;
  std::optional<double> OmegaMW;
  double gamma = 2.0;
  std::optional<double> T;  // unset: 2 pi / Omega
  double m_tilde = 0.0;

  ModulatorParams resolve() const {
    ModulatorParams p;
    p.spin = Spin::from_value(S);
    p.Omega = Omega;
    p.OmegaMW = OmegaMW.value_or(Omega - detune);
    p.gamma = gamma;
    p.T = T.value_or(2.0 * std::numbers::pi / Omega);
    p.m_tilde = m_tilde;
    p.validate();
    return p;
  }
};

struct RunConfig {
  ParamsSpec params;
  double filter_half_width = 4.0;  // display units unless absolute
  GridSpec scan{-60.0, 60.0, 0.5};
  GridSpec gamma_grid{0.0, 60.0, 0.25};
  int dm = 0;
  Model model = Model::both;
  std::string out;  // empty: standard output
  std::string format = "csv";
  std::optional<double> display_unit;  // unset: Omega / 30
  bool absolute = false;

  double unit() const {
    const double u = display_unit.value_or(params.Omega / 30.0);
    if (!std::isfinite(u) || u <= 0.0) throw ParameterError("display_unit must be > 0");
    return u;
  }
  // Frequency scale applied to scan and filter values.
  double scale() const { return absolute ? 1.0 : unit(); }

  void validate() const {
    params.resolve();
    if (!std::isfinite(filter_half_width) || filter_half_width <= 0.0) {
      throw ParameterError("filter half width must be > 0");
    }
    scan.validate("scan");
    gamma_grid.validate("gamma grid");
    if (gamma_grid.start < 0.0) throw ParameterError("gamma grid must be >= 0");
    if (format != "csv" && format != "json") throw ParameterError("format must be csv or json");
    unit();
  }
};

inline json grid_to_json(const GridSpec& g) {
  return {{"start", g.start}, {"stop", g.stop}, {"step", g.step}};
}

inline GridSpec grid_from_json(const json& j, GridSpec g) {
  if (j.is_string()) return parse_grid(j.get<std::string>());
  if (!j.is_object()) throw ParameterError("grid must be an object or start:stop:step string");
  if (j.contains("start")) g.start = j.at("start").get<double>();
  if (j.contains("stop")) g.stop = j.at("stop").get<double>();
  if (j.contains("step")) g.step = j.at("step").get<double>();
  return g;
}

/// Overlay a JSON document onto cfg. Unknown keys are rejected so typos do
/// not silently fall back to defaults.
inline void merge_json(RunConfig& cfg, const json& doc) {
  if (!doc.is_object()) throw ParameterError("config must be a JSON object");
  auto check_keys = [](const json& obj, std::initializer_list<const char*> allowed, const char* where) {
    for (const auto& [key, _] : obj.items()) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) throw ParameterError(std::string("unknown config key '") + key + "' in " + where);
    }
  };
  try {
    check_keys(doc, {"params", "filter", "scan", "gamma_grid", "dm", "model", "output",
                     "display_unit", "absolute"}, "config");
    if (doc.contains("params")) {
      const json& p = doc.at("params");
      check_keys(p, {"S", "Omega", "OmegaMW", "detune", "gamma", "T", "m_tilde"}, "params");
      if (p.contains("OmegaMW") && p.contains("detune")) {
        throw ParameterError("params: OmegaMW and detune are mutually exclusive");
      }
      if (p.contains("S")) cfg.params.S = p.at("S").get<double>();
      if (p.contains("Omega")) cfg.params.Omega = p.at("Omega").get<double>();
      if (p.contains("detune")) {
        cfg.params.detune = p.at("detune").get<double>();
        cfg.params.OmegaMW.reset();
      }
      if (p.contains("OmegaMW")) cfg.params.OmegaMW = p.at("OmegaMW").get<double>();
      if (p.contains("gamma")) cfg.params.gamma = p.at("gamma").get<double>();
      if (p.contains("T")) cfg.params.T = p.at("T").get<double>();
      if (p.contains("m_tilde")) cfg.params.m_tilde = p.at("m_tilde").get<double>();
    }
    if (doc.contains("filter")) {
      const json& f = doc.at("filter");
      check_keys(f, {"half_width"}, "filter");
      if (f.contains("half_width")) cfg.filter_half_width = f.at("half_width").get<double>();
    }
    if (doc.contains("scan")) cfg.scan = grid_from_json(doc.at("scan"), cfg.scan);
    if (doc.contains("gamma_grid")) cfg.gamma_grid = grid_from_json(doc.at("gamma_grid"), cfg.gamma_grid);
    if (doc.contains("dm")) cfg.dm = doc.at("dm").get<int>();
    if (doc.contains("model")) cfg.model = parse_model(doc.at("model").get<std::string>());
    if (doc.contains("output")) {
      const json& o = doc.at("output");
      check_keys(o, {"path", "format"}, "output");
      if (o.contains("path")) cfg.out = o.at("path").get<std::string>();
      if (o.contains("format")) cfg.format = o.at("format").get<std::string>();
    }
    if (doc.contains("display_unit")) cfg.display_unit = doc.at("display_unit").get<double>();
    if (doc.contains("absolute")) cfg.absolute = doc.at("absolute").get<bool>();
  } catch (const json::exception& e) {
    throw ParameterError(std::string("config: ") + e.what());
  }
}

inline json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParameterError("config file '" + path + "': " + e.what());
  }
}

/// Effective configuration with every derived value filled in.
inline json manifest(const RunConfig& cfg) {
  const ModulatorParams p = cfg.params.resolve();
  return {
      {"params",
       {{"S", p.spin.value()},
        {"Omega", p.Omega},
        {"OmegaMW", p.OmegaMW},
        {"detune", p.detuning()},
        {"gamma", p.gamma},
        {"T", p.T},
        {"m_tilde", p.m_tilde}}},
      {"filter", {{"half_width", cfg.filter_half_width}}},
      {"scan", grid_to_json(cfg.scan)},
      {"gamma_grid", grid_to_json(cfg.gamma_grid)},
      {"dm", cfg.dm},
      {"model", to_string(cfg.model)},
      {"output", {{"path", cfg.out}, {"format", cfg.format}}},
      {"display_unit", cfg.unit()},
      {"absolute", cfg.absolute},
  };
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

inline std::string format_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + format_number(row[i]);
    s += '\n';
  }
  return s;
}

inline json table_to_json(const Table& t, const json& config) {
  json data = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
    data.push_back(std::move(obj));
  }
  return {{"config", config}, {"data", std::move(data)}};
}

inline std::string render(const Table& t, const RunConfig& cfg) {
  if (cfg.format == "json") return table_to_json(t, manifest(cfg)).dump(2) + "\n";
  return format_csv(t);
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

inline bool wants(Model m, Model column) { return m == Model::both || m == column; }

/// Filtered count-rate spectrum on the configured scan grid.
inline Table run_spectrum(const RunConfig& cfg) {
  cfg.validate();
  const ModulatorParams p = cfg.params.resolve();
  const double scale = cfg.scale();
  const std::vector<double> display = cfg.scan.expand();
  std::vector<double> absolute(display.size());
  for (std::size_t i = 0; i < display.size(); ++i) absolute[i] = display[i] * scale;
  FilterSpec f;
  f.half_width = cfg.filter_half_width * scale;
  const SpectralScan scan = spectral_scan(p, f, absolute);

  Table t;
  t.columns.push_back(cfg.absolute ? "omega_f" : "omega_f_display");
  if (wants(cfg.model, Model::restricted)) t.columns.push_back("p_rel_restricted");
  if (wants(cfg.model, Model::unrestricted)) t.columns.push_back("p_rel_unrestricted");
  for (std::size_t i = 0; i < display.size(); ++i) {
    std::vector<double> row{display[i]};
    if (wants(cfg.model, Model::restricted)) row.push_back(scan.restricted[i]);
    if (wants(cfg.model, Model::unrestricted)) row.push_back(scan.unrestricted[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// |R_{dm,0}|^2 and J_dm(mu)^2 over the configured coupling grid.
inline Table run_gamma_scan(const RunConfig& cfg) {
  cfg.validate();
  const ModulatorParams base = cfg.params.resolve();
  if (std::abs(cfg.dm) > base.spin.value()) {
    throw ParameterError("gamma-scan: |dm| must not exceed S");
  }
  const std::size_t c = base.spin.central_index();
  const std::size_t r = base.spin.index_of(cfg.dm);

  Table t;
  t.columns.push_back("gamma");
  if (wants(cfg.model, Model::restricted)) t.columns.push_back("p_restricted");
  if (wants(cfg.model, Model::unrestricted)) t.columns.push_back("p_unrestricted");
  for (double g : cfg.gamma_grid.expand()) {
    ModulatorParams p = base;
    p.gamma = g;
    std::vector<double> row{g};
    if (wants(cfg.model, Model::restricted)) {
      double v = r == c ? 1.0 : 0.0;
      if (!(p.detuning() == 0.0 && g == 0.0)) v = std::norm(propagator(p).R(r, c));
      row.push_back(v);
    }
    if (wants(cfg.model, Model::unrestricted)) {
      const double j = bessel_j(cfg.dm, modulation_index(p).mu);
      row.push_back(j * j);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// Preset configuration for figure n (1..5) with the reference parameters.
inline RunConfig figure_config(int n) {
  if (n < 1 || n > 5) throw ParameterError("figure selector must be 1..5");
  RunConfig cfg;
  cfg.params = ParamsSpec{};  // S = 3, Omega = 30, detune 0.1, T = 2 pi / Omega
  cfg.model = Model::both;
  cfg.absolute = false;
  constexpr double gammas[] = {2.0, 10.0, 24.25};
  if (n <= 3) {
    cfg.params.gamma = gammas[n - 1];
  } else {
    cfg.dm = n == 4 ? 0 : 2;
  }
  return cfg;
}

/// Writes figN.csv and figN_manifest.json into dir; returns the CSV path.
inline std::filesystem::path write_figure(int n, const std::filesystem::path& dir) {
  RunConfig cfg = figure_config(n);
  const std::string stem = "fig" + std::to_string(n);
  cfg.out = (dir / (stem + ".csv")).string();
  const Table t = n <= 3 ? run_spectrum(cfg) : run_gamma_scan(cfg);
  json m = manifest(cfg);
  m["figure"] = n;
  m["kind"] = n <= 3 ? "spectrum" : "gamma-scan";
  m["columns"] = t.columns;
  write_file(cfg.out, format_csv(t));
  write_file(dir / (stem + "_manifest.json"), m.dump(2) + "\n");
  return cfg.out;
}

struct VerifyItem {
  std::string name;
  double tolerance;
  double measured;
  bool passed;
};

/// Invariant suite. quick: algebra, unitarity, d(pi), exact revival.
/// full adds three-route Wigner agreement and the S = 200 Bessel limit.
/// inject_fault flips the sign of the d(pi) reference as a negative control.
inline std::vector<VerifyItem> run_verify(bool full, bool inject_fault) {
  std::vector<VerifyItem> items;
  auto add = [&](std::string name, double tol, double measured) {
    items.push_back({std::move(name), tol, measured, measured < tol});
  };

  double comm = 0.0;
  for (int twice : {1, 2, 3, 4, 6, 10}) {
    const auto s = Spin::from_twice(twice);
    const auto g = build_generators(s);
    const double S = s.value();
    comm = std::max(comm, max_abs_diff(commutator(g.A0, g.Aplus), g.Aplus));
    comm = std::max(comm, max_abs_diff(commutator(g.A0, g.Aminus), -1.0 * g.Aminus));
    comm = std::max(comm, max_abs_diff(commutator(g.Aplus, g.Aminus), 2.0 * g.A0));
    comm = std::max(comm, max_abs_diff(casimir(g), S * (S + 1.0) * ComplexMatrix::identity(s.dimension())));
  }
  add("su2 commutators and Casimir", 1e-12, comm);

  double unit = 0.0;
  for (double gamma : {2.0, 10.0, 24.25}) {
    for (int twice : {1, 2, 6, 10}) {
      auto p = figure_params(gamma);
      p.spin = Spin::from_twice(twice);
      unit = std::max(unit, unitarity_defect(propagator(p).R));
    }
  }
  add("propagator unitarity", 1e-12, unit);

  double dpi = 0.0;
  const double sign = inject_fault ? -1.0 : 1.0;
  for (int twice : {1, 2, 5, 6, 13}) {
    const auto s = Spin::from_twice(twice);
    const auto d = wigner_d_exponential(s, std::numbers::pi);
    for (std::size_t r = 0; r < s.dimension(); ++r)
      for (std::size_t c = 0; c < s.dimension(); ++c) {
        const double expected =
            r + c == static_cast<std::size_t>(twice) ? sign * (r % 2 == 0 ? 1.0 : -1.0) : 0.0;
        dpi = std::max(dpi, std::abs(d(r, c) - expected));
      }
  }
  add("wigner d(pi) anti-diagonal", 1e-12, dpi);

  double rev = 0.0;
  for (int twice : {6, 10}) {
    for (double frac : {8.0, 4.0}) {
      ModulatorParams p = figure_params(30.0 * (twice + 1) / frac);
      p.spin = Spin::from_twice(twice);
      p.OmegaMW = p.Omega;
      const auto occ = mode_occupations(p, 1.0);
      for (std::size_t k = 0; k < occ.size(); ++k)
        rev = std::max(rev, std::abs(occ[k] - (k == p.spin.central_index() ? 1.0 : 0.0)));
    }
  }
  add("exact revival at zero detuning", 1e-10, rev);

  if (full) {
    double routes = 0.0;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    for (int twice = 1; twice <= 20; ++twice) {
      const auto s = Spin::from_twice(twice);
      for (int i = 0; i < 20; ++i) {
        const double th = angle(rng);
        const auto e = wigner_d_exponential(s, th);
        routes = std::max(routes, e.max_abs_diff(wigner_d_factorial(s, th)));
        routes = std::max(routes, e.max_abs_diff(wigner_d_jacobi(s, th)));
      }
    }
    add("wigner three-route agreement", 1e-10, routes);

    std::vector<int> dms;
    for (int k = -5; k <= 5; ++k) dms.push_back(k);
    auto p = figure_params(2.0);
    p.spin = Spin::from_twice(400);
    double asym = 0.0;
    for (const auto& row : asymptotic_compare(p, dms)) asym = std::max(asym, std::abs(row.restricted - row.bessel));
    add("S=200 Bessel limit, gamma=2", 1e-2, asym);
  }
  return items;
}

inline int report_verify(const std::vector<VerifyItem>& items, std::ostream& out) {
  bool ok = true;
  for (const auto& it : items) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-32s tol=%.1e measured=%.3e\n", it.passed ? "PASS" : "FAIL",
                  it.name.c_str(), it.tolerance, it.measured);
    out << line;
    ok = ok && it.passed;
  }
  out << (ok ? "verify: all invariants hold\n" : "verify: FAILED\n");
  return ok ? kOk : kVerifyFailed;
}

inline void emit(const Table& t, const RunConfig& cfg, std::ostream& out) {
  const std::string text = render(t, cfg);
  if (cfg.out.empty() || cfg.out == "-") {
    out << text;
  } else {
    write_file(cfg.out, text);
  }
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Electro-optic modulator spectra: restricted su(2) and unrestricted Bessel models", "eom"};
  app.require_subcommand(1);

  std::optional<double> s, omega, omega_mw, detune, gamma, t, filter_hw, display_unit, m_tilde;
  std::optional<std::string> scan, model, out_path, format, config_path, gamma_grid;
  std::optional<int> dm;
  bool period_t = false;
  bool absolute = false;

  app.add_option("--config", config_path, "JSON config file (default: $EOM_CONFIG)");
  app.add_option("--s", s, "Spin S (half-integer); 2S+1 modes");
  app.add_option("--omega", omega, "Mode spacing Omega");
  auto* mw = app.add_option("--omega-mw", omega_mw, "Microwave frequency");
  auto* dt = app.add_option("--detune", detune, "Detuning omega = Omega - OmegaMW");
  mw->excludes(dt);
  app.add_option("--gamma", gamma, "Coupling gamma");
  auto* topt = app.add_option("--t", t, "Interaction time T");
  auto* pflag = app.add_flag("--period-t", period_t, "Set T = 2 pi / Omega");
  topt->excludes(pflag);
  app.add_option("--m-tilde", m_tilde, "Central mode index");
  app.add_option("--filter-hw", filter_hw, "Filter half width at 1/e (display units)");
  app.add_option("--scan", scan, "Filter detuning grid start:stop:step (display units)");
  app.add_option("--model", model, "restricted | unrestricted | both");
  app.add_option("--out", out_path, "Output path (default: stdout)");
  app.add_option("--format", format, "csv | json");
  app.add_option("--display-unit", display_unit, "Frequency per display unit (default Omega/30)");
  app.add_flag("--absolute", absolute, "Use absolute frequency units for --scan and --filter-hw");

  auto* spectrum = app.add_subcommand("spectrum", "Filtered photon count rate versus filter tuning");
  auto* gscan = app.add_subcommand("gamma-scan", "Sideband occupation versus coupling");
  gscan->add_option("--dm", dm, "Sideband offset");
  gscan->add_option("--gamma-grid", gamma_grid, "Coupling grid start:stop:step");
  auto* figures = app.add_subcommand("figures", "Write the preset figure datasets");
  int figure = 0;
  std::string out_dir = ".";
  figures->add_option("figure", figure, "Figure number 1..5")->required();
  figures->add_option("--out-dir", out_dir, "Directory for figN.csv and figN_manifest.json");
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  std::string level = "quick";
  bool inject_fault = false;
  verify->add_option("--level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--inject-fault", inject_fault, "Negative control: corrupt one reference value");
  for (auto* sub : {spectrum, gscan, figures, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "eom: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*verify) return report_verify(run_verify(level == "full", inject_fault), out);
    if (*figures) {
      const auto path = write_figure(figure, out_dir);
      err << "wrote " << path.string() << "\n";
      return kOk;
    }

    RunConfig cfg;
    std::string cfg_file = config_path.value_or("");
    if (cfg_file.empty()) {
      if (const char* env = std::getenv("EOM_CONFIG")) cfg_file = env;
    }
    if (!cfg_file.empty()) merge_json(cfg, load_config_file(cfg_file));

    if (s) cfg.params.S = *s;
    if (omega) cfg.params.Omega = *omega;
    if (detune) {
      cfg.params.detune = *detune;
      cfg.params.OmegaMW.reset();
    }
    if (omega_mw) cfg.params.OmegaMW = *omega_mw;
    if (gamma) cfg.params.gamma = *gamma;
    if (t) cfg.params.T = *t;
    if (period_t) cfg.params.T.reset();
    if (m_tilde) cfg.params.m_tilde = *m_tilde;
    if (filter_hw) cfg.filter_half_width = *filter_hw;
    if (scan) cfg.scan = parse_grid(*scan);
    if (gamma_grid) cfg.gamma_grid = parse_grid(*gamma_grid);
    if (dm) cfg.dm = *dm;
    if (model) cfg.model = parse_model(*model);
    if (out_path) cfg.out = *out_path;
    if (format) cfg.format = *format;
    if (display_unit) cfg.display_unit = *display_unit;
    if (absolute) cfg.absolute = true;

    const Table table = *spectrum ? run_spectrum(cfg) : run_gamma_scan(cfg);
    emit(table, cfg, out);
    return kOk;
  } catch (const IoError& e) {
    err << "eom: " << e.what() << "\n";
    return kIoError;
  } catch (const ParameterError& e) {
    err << "eom: invalid parameters: " << e.what() << "\n";
    return kInvalid;
  } catch (const CapabilityError& e) {
    err << "eom: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace eom::cli
