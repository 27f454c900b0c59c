// Command-line front end.  Talks to the solver library exclusively through
// the C API; owns config parsing, file layout, and JSON/CSV serialization.
//
// Outputs are a pure function of the config file: no timestamps, fixed key
// order, fixed float formatting, so identical inputs give identical bytes.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gburgers.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(gb_status s) {
  switch (s) {
    case GB_OK:
      return 0;
    case GB_ERR_NUMERICAL:
    case GB_ERR_INTERNAL:
      return 2;
    default:
      return 1;
  }
}

void call(gb_status s, const std::string& what) {
  if (s == GB_OK) return;
  throw CliError{exit_code_for(s), what + ": " + gb_last_error_message()};
}

template <typename T, void (*Destroy)(T*)>
class Handle {
 public:
  Handle() = default;
  ~Handle() { reset(); }
  Handle(Handle&& o) noexcept : p_(o.p_) { o.p_ = nullptr; }
  Handle& operator=(Handle&& o) noexcept {
    if (this != &o) {
      reset();
      p_ = o.p_;
      o.p_ = nullptr;
    }
    return *this;
  }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;

  T* get() const { return p_; }
  T** out() {
    reset();
    return &p_;
  }

 private:
  void reset() {
    if (p_ != nullptr) Destroy(p_);
    p_ = nullptr;
  }
  T* p_ = nullptr;
};

using GridH = Handle<gb_grid, gb_grid_destroy>;
using FieldH = Handle<gb_field, gb_field_destroy>;
using ResultH = Handle<gb_result, gb_result_destroy>;
using MesaH = Handle<gb_mesa, gb_mesa_destroy>;
using TableH = Handle<gb_table, gb_table_destroy>;
using ReportH = Handle<gb_report, gb_report_destroy>;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size()) {
    throw CliError{1, "config: key '" + key + "' has non-numeric value '" + text + "'"};
  }
  return v;
}

// Flat "key = value" file with '#' comments.  Every key must be consumed by
// the subcommand; leftovers are reported as errors so typos cannot pass
// silently.  Consumed values are mirrored, typed, into `resolved`.
class Config {
 public:
  static Config load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{1, "config: cannot open " + path};
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw CliError{1, "config: " + path + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'"};
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) {
        throw CliError{1, "config: " + path + ":" + std::to_string(lineno) + ": empty key"};
      }
      if (cfg.raw_.count(key) != 0) {
        throw CliError{1, "config: " + path + ":" + std::to_string(lineno) +
                              ": duplicate key '" + key + "'"};
      }
      cfg.raw_[key] = value;
    }
    return cfg;
  }

  bool has(const std::string& key) const { return raw_.count(key) != 0; }

  std::string get_string(const std::string& key) {
    const auto it = raw_.find(key);
    if (it == raw_.end()) throw CliError{1, "config: missing required key '" + key + "'"};
    consumed_.insert(key);
    resolved[key] = it->second;
    return it->second;
  }

  std::string get_string_or(const std::string& key, const std::string& fallback) {
    if (!has(key)) {
      resolved[key] = fallback;
      return fallback;
    }
    return get_string(key);
  }

  double get_double(const std::string& key) {
    const auto it = raw_.find(key);
    if (it == raw_.end()) throw CliError{1, "config: missing required key '" + key + "'"};
    consumed_.insert(key);
    const double v = to_double(key, it->second);
    resolved[key] = v;
    return v;
  }

  double get_double_or(const std::string& key, double fallback) {
    if (!has(key)) {
      resolved[key] = fallback;
      return fallback;
    }
    return get_double(key);
  }

  int get_int(const std::string& key) {
    const double v = get_double(key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
      throw CliError{1, "config: key '" + key + "' must be an integer"};
    }
    resolved[key] = i;
    return i;
  }

  bool get_bool_or(const std::string& key, bool fallback) {
    if (!has(key)) {
      resolved[key] = fallback;
      return fallback;
    }
    const std::string raw = trim(raw_.at(key));
    consumed_.insert(key);
    bool v = false;
    if (raw == "true" || raw == "on" || raw == "1") {
      v = true;
    } else if (raw == "false" || raw == "off" || raw == "0") {
      v = false;
    } else {
      throw CliError{1, "config: key '" + key + "' must be true/false/on/off, got '" + raw + "'"};
    }
    resolved[key] = v;
    return v;
  }

  std::vector<double> get_list(const std::string& key) {
    const std::string raw = get_string(key);
    std::vector<double> v;
    std::size_t pos = 0;
    while (pos <= raw.size()) {
      const auto comma = raw.find(',', pos);
      const std::string item =
          raw.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!trim(item).empty()) v.push_back(to_double(key, item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (v.empty()) throw CliError{1, "config: key '" + key + "' holds no values"};
    resolved[key] = v;
    return v;
  }

  void finish() const {
    std::vector<std::string> extras;
    for (const auto& [key, value] : raw_) {
      if (consumed_.count(key) == 0) extras.push_back(key);
    }
    if (!extras.empty()) {
      std::string msg = "config: unknown key(s):";
      for (const auto& k : extras) msg += " '" + k + "'";
      throw CliError{1, msg};
    }
  }

  ordered_json resolved = ordered_json::object();

 private:
  std::map<std::string, std::string> raw_;
  std::set<std::string> consumed_;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_time(double t) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}

GridH load_grid(Config& cfg) {
  const double xmin = cfg.get_double("grid.xmin");
  const double xmax = cfg.get_double("grid.xmax");
  const int n = cfg.get_int("grid.n");
  GridH g;
  call(gb_grid_create(xmin, xmax, n, g.out()), "grid");
  return g;
}

FieldH load_initial(Config& cfg, const GridH& grid) {
  const std::string variant = cfg.get_string("initial.variant");
  FieldH f;
  if (variant == "box") {
    const double h = cfg.get_double("initial.height");
    const double a = cfg.get_double("initial.a");
    const double b = cfg.get_double("initial.b");
    call(gb_field_from_box(grid.get(), h, a, b, f.out()), "initial");
  } else if (variant == "multibox") {
    // semicolon-separated "height,a,b" triples
    const std::string raw = cfg.get_string("initial.boxes");
    std::vector<double> hs;
    std::vector<double> as;
    std::vector<double> bs;
    ordered_json boxes = ordered_json::array();
    std::size_t pos = 0;
    while (pos <= raw.size()) {
      const auto semi = raw.find(';', pos);
      const std::string triple =
          trim(raw.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos));
      if (!triple.empty()) {
        double t[3];
        std::size_t q = 0;
        for (int j = 0; j < 3; ++j) {
          const auto comma = triple.find(',', q);
          if ((j < 2) != (comma != std::string::npos)) {
            throw CliError{1, "config: initial.boxes entry '" + triple +
                                  "' is not a 'height,a,b' triple"};
          }
          t[j] = to_double("initial.boxes",
                           triple.substr(q, comma == std::string::npos ? std::string::npos
                                                                       : comma - q));
          q = comma + 1;
        }
        hs.push_back(t[0]);
        as.push_back(t[1]);
        bs.push_back(t[2]);
        boxes.push_back({t[0], t[1], t[2]});
      }
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    if (hs.empty()) throw CliError{1, "config: initial.boxes holds no triples"};
    cfg.resolved["initial.boxes"] = boxes;
    call(gb_field_from_multibox(grid.get(), hs.data(), as.data(), bs.data(),
                                static_cast<int>(hs.size()), f.out()),
         "initial");
  } else if (variant == "bump") {
    const double h = cfg.get_double("initial.height");
    const double c = cfg.get_double("initial.center");
    const double w = cfg.get_double("initial.width");
    call(gb_field_from_bump(grid.get(), h, c, w, f.out()), "initial");
  } else if (variant == "samples") {
    const std::string path = cfg.get_string("initial.path");
    call(gb_field_from_samples(grid.get(), path.c_str(), f.out()), "initial");
  } else {
    throw CliError{1, "config: initial.variant must be box, multibox, bump or samples, got '" +
                          variant + "'"};
  }
  return f;
}

int scheme_id(const std::string& name) {
  if (name == "godunov_upwind") return GB_SCHEME_GODUNOV_UPWIND;
  if (name == "lax_friedrichs") return GB_SCHEME_LAX_FRIEDRICHS;
  throw CliError{1, "config: scheme.name must be godunov_upwind or lax_friedrichs, got '" +
                        name + "'"};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{1, "cannot open " + path.string() + " for writing"};
  out << text;
  if (!out) throw CliError{1, "failed writing " + path.string()};
}

void write_json(const fs::path& path, const ordered_json& j) { write_text(path, j.dump(2) + "\n"); }

void write_field(const FieldH& f, const fs::path& path) {
  call(gb_field_write_csv(f.get(), path.string().c_str()), "write " + path.string());
}

ordered_json report_json(const ReportH& rep) {
  int count = 0;
  call(gb_report_check_count(rep.get(), &count), "report");
  ordered_json checks = ordered_json::array();
  for (int i = 0; i < count; ++i) {
    char name[128];
    double slack = 0.0;
    double tolerance = 0.0;
    int pass = 0;
    call(gb_report_name(rep.get(), i, name, sizeof name), "report");
    call(gb_report_slack(rep.get(), i, &slack), "report");
    call(gb_report_tolerance(rep.get(), i, &tolerance), "report");
    call(gb_report_pass(rep.get(), i, &pass), "report");
    checks.push_back({{"name", name}, {"slack", slack}, {"tolerance", tolerance},
                      {"pass", pass != 0}});
  }
  int all = 0;
  call(gb_report_all_pass(rep.get(), &all), "report");
  return {{"checks", checks}, {"all_pass", all != 0}};
}

ordered_json table_json(const TableH& tab) {
  int rows = 0;
  call(gb_table_row_count(tab.get(), &rows), "table");
  char norm[256];
  call(gb_table_norm(tab.get(), norm, sizeof norm), "table");
  ordered_json jrows = ordered_json::array();
  for (int i = 0; i < rows; ++i) {
    double param = 0.0;
    double error = 0.0;
    double ratio = 0.0;
    call(gb_table_row(tab.get(), i, &param, &error, &ratio), "table");
    jrows.push_back({{"param", param}, {"error", error}, {"ratio", ratio}});
  }
  return {{"norm", norm}, {"rows", jrows}};
}

void write_table_csv(const TableH& tab, const fs::path& path) {
  int rows = 0;
  call(gb_table_row_count(tab.get(), &rows), "table");
  std::string text = "param,error,ratio\n";
  for (int i = 0; i < rows; ++i) {
    double param = 0.0;
    double error = 0.0;
    double ratio = 0.0;
    call(gb_table_row(tab.get(), i, &param, &error, &ratio), "table");
    text += fmt17(param) + "," + fmt17(error) + "," + fmt17(ratio) + "\n";
  }
  write_text(path, text);
}

struct RunHandles {
  GridH grid;
  FieldH u0;
  ResultH result;
  gb_run_params params{};
  std::vector<double> snapshots;
  bool viscous = false;
};

// Shared by `run` and `check`: build everything and execute the solve.
RunHandles do_run(Config& cfg) {
  RunHandles h;
  h.grid = load_grid(cfg);
  h.u0 = load_initial(cfg, h.grid);
  h.params.m = cfg.get_double("model.m");
  h.params.absorption = cfg.get_bool_or("model.absorption", true) ? 1 : 0;
  h.params.p = h.params.absorption != 0 ? cfg.get_double("model.p")
                                        : cfg.get_double_or("model.p", 2.0);
  h.params.t_end = cfg.get_double("time.t_end");
  h.snapshots = cfg.get_list("time.snapshots");
  h.params.snapshot_times = h.snapshots.data();
  h.params.n_snapshot_times = static_cast<int>(h.snapshots.size());
  h.params.scheme = scheme_id(cfg.get_string_or("scheme.name", "godunov_upwind"));
  h.params.cfl = cfg.get_double_or("scheme.cfl", 0.45);
  h.viscous = cfg.has("viscous.epsilon");
  if (h.viscous) h.params.epsilon = cfg.get_double("viscous.epsilon");
  cfg.finish();
  if (h.viscous) {
    call(gb_run_viscous(h.u0.get(), &h.params, h.result.out()), "run");
  } else {
    call(gb_run(h.u0.get(), &h.params, h.result.out()), "run");
  }
  return h;
}

ordered_json run_summary(const RunHandles& h, const fs::path& outdir, bool write_fields) {
  int count = 0;
  call(gb_result_snapshot_count(h.result.get(), &count), "result");
  ordered_json times = ordered_json::array();
  ordered_json mass = ordered_json::array();
  ordered_json absorbed = ordered_json::array();
  ordered_json outflow = ordered_json::array();
  for (int i = 0; i < count; ++i) {
    double t = 0.0;
    double v = 0.0;
    call(gb_result_time(h.result.get(), i, &t), "result");
    times.push_back(t);
    call(gb_result_mass_at(h.result.get(), i, &v), "result");
    mass.push_back(v);
    call(gb_result_absorbed_at(h.result.get(), i, &v), "result");
    absorbed.push_back(v);
    call(gb_result_outflow_at(h.result.get(), i, &v), "result");
    outflow.push_back(v);
    if (write_fields) {
      FieldH u;
      call(gb_result_snapshot(h.result.get(), i, u.out()), "result");
      write_field(u, outdir / ("u_t" + fmt_time(t) + ".csv"));
      FieldH psi;
      call(gb_result_psi_snapshot(h.result.get(), i, psi.out()), "result");
      write_field(psi, outdir / ("psi_t" + fmt_time(t) + ".csv"));
    }
  }
  double absorbed_total = 0.0;
  double outflow_total = 0.0;
  long steps = 0;
  call(gb_result_absorbed_mass(h.result.get(), &absorbed_total), "result");
  call(gb_result_outflow(h.result.get(), &outflow_total), "result");
  call(gb_result_step_count(h.result.get(), &steps), "result");

  int warning_count = 0;
  call(gb_result_warning_count(h.result.get(), &warning_count), "result");
  ordered_json warnings = ordered_json::array();
  for (int i = 0; i < warning_count; ++i) {
    char buf[512];
    call(gb_result_warning(h.result.get(), i, buf, sizeof buf), "result");
    warnings.push_back(buf);
  }

  ReportH audit;
  call(gb_audit_bounds(h.result.get(), audit.out()), "audit");

  ordered_json j;
  j["times"] = times;
  j["mass"] = mass;
  j["absorbed"] = absorbed;
  j["outflow"] = outflow;
  j["absorbed_total"] = absorbed_total;
  j["outflow_total"] = outflow_total;
  j["steps"] = steps;
  j["warnings"] = warnings;
  j["audit"] = report_json(audit);
  return j;
}

int cmd_run(const std::string& config_path, const fs::path& outdir) {
  Config cfg = Config::load(config_path);
  RunHandles h = do_run(cfg);
  fs::create_directories(outdir);
  ordered_json body = run_summary(h, outdir, true);

  ordered_json summary;
  summary["command"] = "run";
  summary["config"] = cfg.resolved;
  summary.update(body);
  write_json(outdir / "summary.json", summary);
  return 0;
}

int cmd_check(const std::string& config_path, const fs::path& outdir) {
  Config cfg = Config::load(config_path);
  RunHandles h = do_run(cfg);
  fs::create_directories(outdir);
  ordered_json body = run_summary(h, outdir, false);

  // Kruzhkov residuals on a 9-level lattice spanning [0, linf(u0)], plus the
  // conservation defect the k = 0 residual telescopes to.
  double linf0 = 0.0;
  call(gb_field_linf(h.u0.get(), &linf0), "check");
  double dx = 0.0;
  call(gb_grid_dx(h.grid.get(), &dx), "check");
  double residual_per_dx = 0.0;
  double defect_cap = 0.0;
  call(gb_tolerance("entropy_residual_dx", &residual_per_dx), "check");
  call(gb_tolerance("conservation_defect_abs", &defect_cap), "check");

  ordered_json klist = ordered_json::array();
  ordered_json rlist = ordered_json::array();
  double min_residual = 0.0;
  for (int r = 0; r <= 8; ++r) {
    const double k = linf0 * static_cast<double>(r) / 8.0;
    double resid = 0.0;
    call(gb_entropy_residual(h.result.get(), k, h.params.m, h.params.p, &resid), "check");
    klist.push_back(k);
    rlist.push_back(resid);
    min_residual = std::min(min_residual, resid);
  }
  double defect = 0.0;
  call(gb_conservation_defect(h.result.get(), &defect), "check");

  const bool entropy_pass = min_residual >= -residual_per_dx * dx;
  const bool defect_pass = defect <= defect_cap;
  const bool audit_pass = body["audit"]["all_pass"].get<bool>();
  const bool all_pass = entropy_pass && defect_pass && audit_pass;

  ordered_json summary;
  summary["command"] = "check";
  summary["config"] = cfg.resolved;
  summary.update(body);
  summary["entropy"] = {{"k", klist},
                        {"residual", rlist},
                        {"min_residual", min_residual},
                        {"threshold", -residual_per_dx * dx},
                        {"pass", entropy_pass}};
  summary["conservation"] = {{"defect", defect}, {"threshold", defect_cap},
                             {"pass", defect_pass}};
  summary["all_pass"] = all_pass;
  write_json(outdir / "summary.json", summary);
  return all_pass ? 0 : 3;
}

int cmd_mesa(const std::string& config_path, const fs::path& outdir) {
  Config cfg = Config::load(config_path);
  GridH grid = load_grid(cfg);
  FieldH u0 = load_initial(cfg, grid);
  cfg.finish();

  MesaH mesa;
  call(gb_mesa_project(u0.get(), mesa.out()), "mesa");
  FieldH v;
  FieldH psi;
  call(gb_mesa_v(mesa.get(), v.out()), "mesa");
  call(gb_mesa_psi(mesa.get(), psi.out()), "mesa");

  fs::create_directories(outdir);
  write_field(v, outdir / "v.csv");
  write_field(psi, outdir / "psi.csv");

  double input_mass = 0.0;
  double v_mass = 0.0;
  double v_max = 0.0;
  double psi_max = 0.0;
  call(gb_field_total_mass(u0.get(), &input_mass), "mesa");
  call(gb_field_total_mass(v.get(), &v_mass), "mesa");
  call(gb_field_linf(v.get(), &v_max), "mesa");
  call(gb_field_linf(psi.get(), &psi_max), "mesa");

  ordered_json summary;
  summary["command"] = "mesa";
  summary["config"] = cfg.resolved;
  summary["input_mass"] = input_mass;
  summary["v_mass"] = v_mass;
  summary["v_max"] = v_max;
  summary["psi_max"] = psi_max;
  write_json(outdir / "summary.json", summary);
  return 0;
}

int cmd_noncommute(const std::string& config_path, const fs::path& outdir) {
  Config cfg = Config::load(config_path);
  GridH grid = load_grid(cfg);
  FieldH u0 = load_initial(cfg, grid);
  cfg.finish();

  double gap = 0.0;
  call(gb_iterated_limits_gap(u0.get(), &gap), "noncommute");

  MesaH direct;
  call(gb_mesa_project(u0.get(), direct.out()), "noncommute");
  FieldH project_first;
  call(gb_mesa_v(direct.get(), project_first.out()), "noncommute");

  FieldH truncated;
  call(gb_truncate_at_one(u0.get(), truncated.out()), "noncommute");
  MesaH after;
  call(gb_mesa_project(truncated.get(), after.out()), "noncommute");
  FieldH truncate_first;
  call(gb_mesa_v(after.get(), truncate_first.out()), "noncommute");

  fs::create_directories(outdir);
  write_field(project_first, outdir / "project_first.csv");
  write_field(truncate_first, outdir / "truncate_first.csv");

  ordered_json summary;
  summary["command"] = "noncommute";
  summary["config"] = cfg.resolved;
  summary["gap"] = gap;
  write_json(outdir / "summary.json", summary);
  return 0;
}

std::pair<double, double> window_or_domain(Config& cfg, const GridH& grid) {
  double a = 0.0;
  double b = 0.0;
  if (cfg.has("norms.window")) {
    const auto w = cfg.get_list("norms.window");
    if (w.size() != 2) throw CliError{1, "config: norms.window must be 'a,b'"};
    a = w[0];
    b = w[1];
  } else {
    call(gb_grid_xmin(grid.get(), &a), "grid");
    call(gb_grid_xmax(grid.get(), &b), "grid");
    cfg.resolved["norms.window"] = {a, b};
  }
  return {a, b};
}

int cmd_limit_m(const std::string& config_path, const fs::path& outdir) {
  Config cfg = Config::load(config_path);
  GridH grid = load_grid(cfg);
  FieldH u0 = load_initial(cfg, grid);
  const double p = cfg.get_double("model.p");
  const auto values = cfg.get_list("study.values");
  const auto times = cfg.get_list("time.snapshots");
  const int scheme = scheme_id(cfg.get_string_or("scheme.name", "godunov_upwind"));
  const double cfl = cfg.get_double_or("scheme.cfl", 0.45);
  const auto [wa, wb] = window_or_domain(cfg, grid);
  cfg.finish();

  TableH tab;
  call(gb_study_limit_m(u0.get(), p, values.data(), static_cast<int>(values.size()),
                        times.data(), static_cast<int>(times.size()), wa, wb, scheme, cfl,
                        tab.out()),
       "limit-m");

  fs::create_directories(outdir);
  write_table_csv(tab, outdir / "table.csv");
  ordered_json summary;
  summary["command"] = "limit-m";
  summary["config"] = cfg.resolved;
  summary["table"] = table_json(tab);
  write_json(outdir / "summary.json", summary);
  return 0;
}

int cmd_limit_p(const std::string& config_path, const fs::path& outdir) {
  Config cfg = Config::load(config_path);
  GridH grid = load_grid(cfg);
  FieldH u0 = load_initial(cfg, grid);
  const double m = cfg.get_double("model.m");
  const auto values = cfg.get_list("study.values");
  const auto times = cfg.get_list("time.snapshots");
  const int scheme = scheme_id(cfg.get_string_or("scheme.name", "godunov_upwind"));
  const double cfl = cfg.get_double_or("scheme.cfl", 0.45);
  const auto [wa, wb] = window_or_domain(cfg, grid);
  cfg.finish();

  TableH tab;
  call(gb_study_limit_p(u0.get(), m, values.data(), static_cast<int>(values.size()),
                        times.data(), static_cast<int>(times.size()), wa, wb, scheme, cfl,
                        tab.out()),
       "limit-p");

  fs::create_directories(outdir);
  write_table_csv(tab, outdir / "table.csv");
  ordered_json summary;
  summary["command"] = "limit-p";
  summary["config"] = cfg.resolved;
  summary["table"] = table_json(tab);
  write_json(outdir / "summary.json", summary);
  return 0;
}

int cmd_viscous(const std::string& config_path, const fs::path& outdir) {
  Config cfg = Config::load(config_path);
  GridH grid = load_grid(cfg);
  FieldH u0 = load_initial(cfg, grid);

  gb_run_params params{};
  params.m = cfg.get_double("model.m");
  params.absorption = cfg.get_bool_or("model.absorption", true) ? 1 : 0;
  params.p =
      params.absorption != 0 ? cfg.get_double("model.p") : cfg.get_double_or("model.p", 2.0);
  params.t_end = cfg.get_double("time.t_end");
  const auto snapshots = cfg.get_list("time.snapshots");
  params.snapshot_times = snapshots.data();
  params.n_snapshot_times = static_cast<int>(snapshots.size());
  params.scheme = scheme_id(cfg.get_string_or("scheme.name", "godunov_upwind"));
  params.cfl = cfg.get_double_or("scheme.cfl", 0.45);
  const auto eps_values = cfg.get_list("study.values");
  cfg.finish();

  // Compare against the hyperbolic run at the final snapshot.
  const double t_eval = snapshots.back();
  TableH tab;
  call(gb_study_viscous(u0.get(), &params, eps_values.data(),
                        static_cast<int>(eps_values.size()), t_eval, tab.out()),
       "viscous");

  fs::create_directories(outdir);
  write_table_csv(tab, outdir / "table.csv");
  ordered_json summary;
  summary["command"] = "viscous";
  summary["config"] = cfg.resolved;
  summary["eval_time"] = t_eval;
  summary["table"] = table_json(tab);
  write_json(outdir / "summary.json", summary);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-volume laboratory for u_t + (u^m)_x = -u^p"};
  app.require_subcommand(1);

  struct SubSpec {
    std::string name;
    std::string desc;
    int (*fn)(const std::string&, const fs::path&);
  };
  const std::vector<SubSpec> specs = {
      {"run", "single solve: snapshot and psi CSVs plus summary.json", cmd_run},
      {"mesa", "height-1 projection of the initial data", cmd_mesa},
      {"limit-m", "error table against the large-m prediction", cmd_limit_m},
      {"limit-p", "error table against the large-p prediction", cmd_limit_p},
      {"noncommute", "gap between the two iterated limits", cmd_noncommute},
      {"check", "run plus bound audits and entropy residuals", cmd_check},
      {"viscous", "viscosity continuation against the hyperbolic run", cmd_viscous},
  };

  struct SubState {
    CLI::App* cmd = nullptr;
    std::string config;
    std::string out = ".";
    int (*fn)(const std::string&, const fs::path&) = nullptr;
  };
  std::vector<SubState> subs(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    subs[i].fn = specs[i].fn;
    subs[i].cmd = app.add_subcommand(specs[i].name, specs[i].desc);
    subs[i].cmd->add_option("--config", subs[i].config, "config file (key = value lines)")
        ->required();
    subs[i].cmd->add_option("--out", subs[i].out, "output directory (default: .)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the error and usage hint to stderr
    return 1;
  }

  try {
    for (const auto& sub : subs) {
      if (sub.cmd->parsed()) return sub.fn(sub.config, fs::path(sub.out));
    }
    std::cerr << "error: no subcommand selected\n";
    return 1;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
