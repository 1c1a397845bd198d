#include "moserlab/cli_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "moserlab/cosmo.hpp"
#include "moserlab/errors.hpp"
#include "moserlab/numeric.hpp"
#include "moserlab/stationary.hpp"
#include "moserlab/zero_sums.hpp"

#ifndef MOSERLAB_VERSION
#define MOSERLAB_VERSION "0.0.0"
#endif

namespace moserlab {

using ojson = nlohmann::ordered_json;

std::string_view version() { return MOSERLAB_VERSION; }

void Config::validate() const {
  if (!(t_lo >= kWorkingLo && t_lo < t_hi && t_hi <= kWorkingHi)) {
    throw DomainError("need 10 <= t_lo < t_hi <= 1e5, got t_lo = " + format_double(t_lo) +
                      ", t_hi = " + format_double(t_hi));
  }
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (!(kappa > 0.0) || !(c > 0.0)) throw DomainError("kappa and c must be positive");
  if (!(T_trunc_factor >= 2.0)) throw DomainError("T_trunc_factor must be at least 2");
  if (samples < 1) throw DomainError("samples must be at least 1");
  if (!(step > 0.0)) throw DomainError("step must be positive");
  if (!(beta > 0.0 && beta < 0.5)) throw DomainError("beta must lie in (0, 1/2)");
  if (t < 0.0 || T_trunc < 0.0 || min_abs_z < 0.0) {
    throw DomainError("t, T_trunc and min_abs_z must be non-negative");
  }
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

namespace {

std::string cell(double x) { return format_double(x); }
std::string cell(std::int64_t x) { return std::to_string(x); }
std::string cell(std::size_t x) { return std::to_string(x); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

ojson number_or_null(double x) { return std::isfinite(x) ? ojson(x) : ojson(nullptr); }

std::string_view format_name(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

ojson config_json(const Config& c) {
  ojson j;
  j["command"] = c.command;
  j["t_lo"] = c.t_lo;
  j["t_hi"] = c.t_hi;
  j["alpha"] = c.alpha;
  j["kappa"] = c.kappa;
  j["c"] = c.c;
  j["T_trunc_factor"] = c.T_trunc_factor;
  j["seed"] = c.seed;
  j["out_path"] = c.out_path;
  j["format"] = format_name(c.format);
  j["zeros_path"] = c.zeros_path;
  j["in_path"] = c.in_path;
  j["samples"] = c.samples;
  j["step"] = c.step;
  j["t"] = c.t;
  j["T_trunc"] = c.T_trunc;
  j["kernel"] = c.kernel;
  j["beta"] = c.beta;
  j["min_abs_z"] = c.min_abs_z;
  j["check_T"] = c.check_T;
  return j;
}

}  // namespace

std::string render_csv(const CsvTable& table) {
  std::string out;
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cells[i]);
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
  return out;
}

void write_csv(const CsvTable& table, const std::string& path) {
  write_file_atomic(path, render_csv(table));
}

std::string render_report_json(const VerificationReport& report, const Config& config) {
  ojson j;
  j["name"] = report.name;
  j["samples"] = report.samples;
  j["pass"] = report.pass;
  ojson stats = ojson::object();
  for (const auto& [k, v] : report.statistics) stats[k] = number_or_null(v);
  j["statistics"] = std::move(stats);
  j["notes"] = report.notes;
  j["config"] = config_json(config);
  j["version"] = std::string(version());
  return j.dump(2) + "\n";
}

VerificationReport parse_report_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw ParseError(std::string("report JSON: ") + e.what(), 0);
  }
  VerificationReport r;
  try {
    r.name = j.at("name").get<std::string>();
    r.samples = j.at("samples").get<std::int64_t>();
    r.pass = j.at("pass").get<bool>();
    for (const auto& [k, v] : j.at("statistics").items()) {
      r.statistics[k] = v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const ojson::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what(), 0);
  }
  return r;
}

void write_json(const VerificationReport& report, const Config& config, const std::string& path) {
  write_file_atomic(path, render_report_json(report, config));
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + tmp.string() + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw IoError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename onto '" + path + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw IoError("read failed for '" + path + "'");
  return ss.str();
}

std::string render_zero_table(const ZeroTable& table) {
  std::string out = "# moserlab zero table\n";
  out += "# range " + format_double(table.range().lo) + " " + format_double(table.range().hi) + "\n";
  out += "# refine_tol " + format_double(table.refine_tol()) + "\n";
  out += std::string("# source ") +
         (table.source() == ZeroSource::computed ? "computed" : "ingested") + "\n";
  for (double g : table.ordinates()) out += format_double(g) + "\n";
  return out;
}

ZeroTable parse_zero_table(std::string_view text) {
  ZeroTable raw = ingest_zeros(text);
  OrdinateRange range = raw.range();
  ZeroSource source = raw.source();
  double tol = raw.refine_tol();
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.rfind("# ", 0) != 0) continue;
    std::istringstream fields(line.substr(2));
    std::string key;
    fields >> key;
    if (key == "range") {
      if (!(fields >> range.lo >> range.hi) || !(range.lo <= range.hi)) {
        throw ParseError("bad range metadata", line_no);
      }
    } else if (key == "refine_tol") {
      if (!(fields >> tol) || tol < 0.0) throw ParseError("bad refine_tol metadata", line_no);
    } else if (key == "source") {
      std::string s;
      fields >> s;
      if (s == "computed") source = ZeroSource::computed;
      else if (s == "ingested") source = ZeroSource::ingested;
      else throw ParseError("bad source metadata", line_no);
    }
  }
  const auto ord = raw.ordinates();
  if (!ord.empty() && (ord.front() < range.lo || ord.back() > range.hi)) {
    throw ParseError("ordinates outside the declared range", 0);
  }
  return ZeroTable(std::vector<double>(ord.begin(), ord.end()), range, source, tol);
}

VerificationReport aggregate_reports(const std::string& name,
                                     const std::vector<VerificationReport>& parts) {
  VerificationReport all;
  all.name = name;
  for (const auto& p : parts) {
    all.samples += p.samples;
    for (const auto& [k, v] : p.statistics) all.statistics[p.name + "." + k] = v;
    all.set(p.name + ".pass", p.pass ? 1.0 : 0.0);
    for (const auto& n : p.notes) all.notes.push_back(p.name + ": " + n);
  }
  bool pass = evaluate_pass(all.statistics);
  for (const auto& p : parts) pass = pass && p.pass;
  all.pass = pass;
  return all;
}

namespace {

constexpr double kTableTolerance = 1e-9;

struct Session {
  Config cfg;
  std::ostream& out;
  std::ostream& err;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void emit(Session& s, const std::string& content) {
  if (s.cfg.out_path.empty()) {
    s.out << content;
  } else {
    write_file_atomic(s.cfg.out_path, content);
  }
}

void emit_csv(Session& s, const CsvTable& t) { emit(s, render_csv(t)); }

int emit_report(Session& s, const VerificationReport& r) {
  if (s.cfg.format == OutputFormat::json) {
    emit(s, render_report_json(r, s.cfg));
  } else {
    CsvTable t{{"key", "value"}, {}};
    t.rows.push_back({"name", r.name});
    t.rows.push_back({"samples", cell(r.samples)});
    t.rows.push_back({"pass", r.pass ? "1" : "0"});
    for (const auto& [k, v] : r.statistics) t.rows.push_back({k, cell(v)});
    emit_csv(s, t);
  }
  if (!r.pass) s.err << r.name << ": verification failed\n";
  return r.pass ? 0 : 1;
}

ZeroTable obtain_table(const Session& s, double need_hi) {
  const Config& c = s.cfg;
  if (!c.zeros_path.empty() && std::filesystem::exists(c.zeros_path)) {
    ZeroTable t = parse_zero_table(read_file(c.zeros_path));
    if (!t.covers_origin() || t.range().hi < need_hi) {
      throw IncompleteTable("cached table '" + c.zeros_path + "' covers [" +
                            format_double(t.range().lo) + ", " + format_double(t.range().hi) +
                            "], need (0, " + format_double(need_hi) + "]");
    }
    if (t.source() == ZeroSource::computed && t.refine_tol() > kTableTolerance) {
      throw IncompleteTable("cached table '" + c.zeros_path + "' has refine_tol " +
                            format_double(t.refine_tol()));
    }
    return t;
  }
  ZeroTable t = scan_zeros(kWorkingLo, std::max(need_hi, kWorkingLo + 1.0), {}, kTableTolerance);
  if (!c.zeros_path.empty()) write_file_atomic(c.zeros_path, render_zero_table(t));
  return t;
}

double sums_reach(const Config& c, double t) { return default_truncation(t, c.T_trunc_factor); }

CsvTable ordinate_csv(const ZeroTable& t) {
  CsvTable csv{{"index", "gamma"}, {}};
  for (std::size_t i = 0; i < t.size(); ++i) csv.rows.push_back({cell(i + 1), cell(t[i])});
  return csv;
}

int cmd_zeros_scan(Session& s) {
  const ScanResult r = scan_zeros_detailed(s.cfg.t_lo, s.cfg.t_hi, {}, kTableTolerance);
  emit_csv(s, ordinate_csv(r.table));
  if (!s.cfg.zeros_path.empty()) write_file_atomic(s.cfg.zeros_path, render_zero_table(r.table));
  if (!r.failures.empty() || !r.weak_zeros.empty()) {
    for (const auto& f : r.failures) {
      s.err << "block g_" << f.first_gram << "..g_" << f.last_gram << ": expected " << f.expected
            << " zeros, found " << f.found << "\n";
    }
    for (double w : r.weak_zeros) s.err << "possible multiple zero near " << format_double(w) << "\n";
    return 3;
  }
  return 0;
}

int cmd_zeros_ingest(Session& s) {
  if (s.cfg.in_path.empty()) throw UsageError("zeros ingest needs --in PATH");
  const ZeroTable t = parse_zero_table(read_file(s.cfg.in_path));
  emit_csv(s, ordinate_csv(t));
  if (!s.cfg.zeros_path.empty()) write_file_atomic(s.cfg.zeros_path, render_zero_table(t));
  return 0;
}

int cmd_zeros_check(Session& s) {
  std::vector<double> Ts = s.cfg.check_T.empty() ? std::vector<double>{s.cfg.t_hi} : s.cfg.check_T;
  const double reach = *std::max_element(Ts.begin(), Ts.end());
  const ZeroTable t = obtain_table(s, reach);
  CsvTable csv{{"T", "observed", "smooth", "deviation", "flagged"}, {}};
  bool flagged = false;
  for (double T : Ts) {
    const CompletenessReport r = completeness_check(t, T);
    flagged = flagged || r.flagged;
    csv.rows.push_back({cell(r.T), cell(r.observed), cell(r.smooth), cell(r.deviation),
                        r.flagged ? "1" : "0"});
  }
  emit_csv(s, csv);
  if (flagged) s.err << "zeros check: completeness deviation above 1\n";
  return flagged ? 1 : 0;
}

StationaryScan stationary_points(Session& s, const ZeroTable& table) {
  StationaryScan scan = scan_stationary(table, s.cfg.t_lo, s.cfg.t_hi);
  for (const auto& f : scan.faults) {
    s.err << "no stationary point found in gap (" << format_double(f.gamma_lo) << ", "
          << format_double(f.gamma_hi) << ")\n";
  }
  return scan;
}

int cmd_stationary_scan(Session& s) {
  const ZeroTable table = obtain_table(s, s.cfg.t_hi);
  const StationaryScan scan = stationary_points(s, table);
  CsvTable csv{{"t0", "gamma_lo", "gamma_hi", "z", "z2", "delta", "margin", "tilde"}, {}};
  for (const auto& p : scan.points) {
    const bool tilde = std::abs(p.z_value) > std::pow(p.t0, -s.cfg.alpha);
    csv.rows.push_back({cell(p.t0), cell(p.gamma_lo), cell(p.gamma_hi), cell(p.z_value),
                        cell(p.z2_value), cell(p.delta), cell(theorem1_margin(p, s.cfg.alpha)),
                        tilde ? "1" : "0"});
  }
  emit_csv(s, csv);
  return scan.faults.empty() ? 0 : 3;
}

int cmd_stationary_stats(Session& s) {
  const ZeroTable table = obtain_table(s, s.cfg.t_hi);
  std::vector<double> inside;
  for (double g : table.ordinates()) {
    if (g >= s.cfg.t_lo && g <= s.cfg.t_hi) inside.push_back(g);
  }
  if (inside.size() < 2) throw DomainError("fewer than two zeros in range");
  const ZeroTable sub(std::move(inside), {s.cfg.t_lo, s.cfg.t_hi}, table.source(),
                      table.refine_tol());
  const GapStatistics gs = gap_statistics(sub);
  const StationaryScan scan = stationary_points(s, table);
  const PeakStatistics ps = peak_statistics(scan.points, s.cfg.beta);
  if (s.cfg.format == OutputFormat::csv) {
    CsvTable csv{{"t_end", "running_max", "max_omega_ratio"}, {}};
    for (const auto& r : ps.trend) {
      csv.rows.push_back({cell(r.t_end), cell(r.running_max), cell(r.max_omega_ratio)});
    }
    emit_csv(s, csv);
    return 0;
  }
  VerificationReport r;
  r.name = "stationary_stats";
  r.samples = static_cast<std::int64_t>(scan.points.size());
  r.set("gaps", static_cast<double>(gs.gaps.size()));
  r.set("max_gap", gs.max_gap);
  r.set("max_gap_at", gs.max_gap_at);
  r.set("mean_gap", gs.mean_gap);
  r.set("max_littlewood_ratio", gs.max_littlewood_ratio);
  r.set("beta", ps.beta);
  for (std::size_t i = 0; i < ps.trend.size(); ++i) {
    char key[32];
    std::snprintf(key, sizeof key, "trend_%02zu", i);
    r.set(std::string(key) + "_t_end", ps.trend[i].t_end);
    r.set(std::string(key) + "_running_max", ps.trend[i].running_max);
    r.set(std::string(key) + "_max_omega_ratio", ps.trend[i].max_omega_ratio);
  }
  r.finalize();
  emit(s, render_report_json(r, s.cfg));
  return 0;
}

int cmd_sums_eval(Session& s) {
  const Kernel k = parse_kernel(s.cfg.kernel);
  const double T = s.cfg.T_trunc > 0.0 ? s.cfg.T_trunc : sums_reach(s.cfg, s.cfg.t);
  const ZeroTable table = obtain_table(s, T);
  const SpectralSum r = spectral_sum(k, s.cfg.t, table, T);
  CsvTable csv{{"kernel", "t", "partial", "tail", "total", "T_trunc", "tail_err"}, {}};
  csv.rows.push_back({std::string(kernel_name(k)), cell(r.t), cell(r.partial), cell(r.tail),
                      cell(r.total), cell(r.T_trunc), cell(r.tail_err)});
  emit_csv(s, csv);
  return 0;
}

VerificationReport run_verify(Session& s, const std::string& which) {
  const Config& c = s.cfg;
  const auto n = static_cast<std::size_t>(c.samples);
  if (which == "formula1") {
    const ZeroTable table = obtain_table(s, sums_reach(c, c.t_hi));
    return verify_formula1(table, c.t_lo, c.t_hi, n, c.seed, {}, c.T_trunc_factor);
  }
  if (which == "eq34") {
    if (c.t > 0.0) {
      const ZeroTable table = obtain_table(s, sums_reach(c, c.t));
      return verify_eq34_consistency(c.t, table, {}, c.T_trunc_factor);
    }
    const ZeroTable table = obtain_table(s, sums_reach(c, c.t_hi));
    return verify_eq34_sweep(table, c.t_lo, c.t_hi, n, c.seed, {}, c.T_trunc_factor);
  }
  if (which == "corollaries") {
    return verify_corollaries(obtain_table(s, c.t_hi), c.t_lo, c.t_hi);
  }
  if (which == "eq9" || which == "ab") {
    const ZeroTable table = obtain_table(s, sums_reach(c, c.t_hi));
    const StationaryScan scan = stationary_points(s, table);
    return which == "eq9" ? verify_eq9(scan.points, table, c.T_trunc_factor)
                          : verify_asymptotics_ab(scan.points, table, c.T_trunc_factor);
  }
  if (which == "theorem1") {
    const ZeroTable table = obtain_table(s, c.t_hi);
    const StationaryScan scan = stationary_points(s, table);
    return verify_theorem1(filter_tilde(scan.points, c.alpha), c.alpha);
  }
  if (which == "all") {
    const ZeroTable table = obtain_table(s, sums_reach(c, c.t_hi));
    const StationaryScan scan = stationary_points(s, table);
    std::vector<VerificationReport> parts;
    parts.push_back(verify_formula1_surrogate({1.0, 3.0, 7.0}, 1.0, 7.0, 100, c.seed));
    parts.push_back(verify_formula1(table, c.t_lo, c.t_hi, n, c.seed, {}, c.T_trunc_factor));
    parts.push_back(verify_eq34_sweep(table, c.t_lo, c.t_hi, n, c.seed, {}, c.T_trunc_factor));
    parts.push_back(verify_corollaries(table, c.t_lo, c.t_hi));
    parts.push_back(verify_eq9(scan.points, table, c.T_trunc_factor));
    parts.push_back(verify_asymptotics_ab(scan.points, table, c.T_trunc_factor));
    parts.push_back(verify_theorem1(filter_tilde(scan.points, c.alpha), c.alpha));
    return aggregate_reports("all", parts);
  }
  throw UsageError("unknown verification '" + which + "'");
}

int cmd_cosmo_profile(Session& s) {
  const Config& c = s.cfg;
  const ZeroTable table = obtain_table(s, sums_reach(c, c.t_hi));
  const CosmoParams params{c.kappa, c.c, 1};
  const auto samples = profile(c.t_lo, c.t_hi, c.step, params, table, c.T_trunc_factor);
  CsvTable csv{{"t", "R", "dR", "ddR", "rho", "p", "w", "model_err"}, {}};
  for (const auto& x : samples) {
    csv.rows.push_back({cell(x.t), cell(x.R), cell(x.dR), cell(x.ddR), cell(x.rho), cell(x.p),
                        cell(x.w), cell(x.model_err)});
  }
  emit_csv(s, csv);
  return 0;
}

int cmd_cosmo_intervals(Session& s) {
  const Config& c = s.cfg;
  const ZeroTable table = obtain_table(s, sums_reach(c, c.t_hi));
  const CosmoParams params{c.kappa, c.c, 1};
  const StationaryScan scan = stationary_points(s, table);
  std::vector<StationaryPoint> pts;
  for (const auto& p : filter_tilde(scan.points, c.alpha)) {
    if (std::abs(p.z_value) >= c.min_abs_z) pts.push_back(p);
  }
  struct Row {
    PressureInterval iv;
    bool ok = false;
  };
  std::vector<Row> rows(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    try {
      rows[i] = {pressure_interval(pts[i], params, table, c.T_trunc_factor), true};
    } catch (const NoIntervalError&) {
      rows[i] = {{pts[i].t0, 0.0, pts[i].t0, pts[i].t0}, false};
    }
  });
  CsvTable csv{{"t0", "gamma_lo", "gamma_hi", "delta", "lo", "hi", "status"}, {}};
  std::size_t failed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (!r.ok) ++failed;
    csv.rows.push_back({cell(r.iv.t0), cell(pts[i].gamma_lo), cell(pts[i].gamma_hi),
                        cell(r.iv.delta), cell(r.iv.lo), cell(r.iv.hi),
                        r.ok ? "ok" : "no_interval"});
  }
  emit_csv(s, csv);
  if (failed) s.err << failed << " stationary points without a pressure interval\n";
  return 0;
}

void add_common(CLI::App* a, Config& c, std::string& format, std::string& kernel) {
  a->add_option("--t-lo", c.t_lo, "lower end of the t range");
  a->add_option("--t-hi", c.t_hi, "upper end of the t range");
  a->add_option("--alpha", c.alpha, "tilde filter exponent");
  a->add_option("--kappa", c.kappa, "gravitational coupling");
  a->add_option("--c", c.c, "speed of light");
  a->add_option("--T-trunc-factor", c.T_trunc_factor, "spectral truncation factor");
  a->add_option("--seed", c.seed, "sampling seed");
  a->add_option("--out", c.out_path, "output file (default standard output)");
  a->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  a->add_option("--zeros", c.zeros_path, "zero table cache file");
  a->add_option("--samples", c.samples, "number of samples");
  a->add_option("--step", c.step, "profile grid step");
  a->add_option("--t", c.t, "evaluation point");
  a->add_option("--T-trunc", c.T_trunc, "explicit truncation height");
  a->add_option("--kernel", kernel, "spectral kernel")
      ->check(CLI::IsMember({"inv_sq_shift", "inv_diff", "t2_over_diff2", "g2_over_diff2", "riemann"}));
  a->add_option("--beta", c.beta, "peak exponent");
  a->add_option("--min-abs-z", c.min_abs_z, "minimum |Z(t0)| for intervals");
  a->add_option("--T", c.check_T, "count heights for zeros check");
  a->add_option("--in", c.in_path, "input zero list");
}

}  // namespace

int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  std::string format;
  std::string kernel = cfg.kernel;
  CLI::App app{"Numerical experiments on Z(t), its zeros and stationary points", "moserlab"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(version()));

  struct Group {
    std::string name, description;
    std::vector<std::string> leaves;
  };
  const std::vector<Group> groups = {
      {"zeros", "zero ordinates: scan, ingest, completeness check", {"scan", "ingest", "check"}},
      {"stationary", "roots of Z' between consecutive zeros", {"scan", "stats"}},
      {"sums", "sums over the zero multiset", {"eval"}},
      {"verify", "verification reports (JSON by default)",
       {"formula1", "eq34", "corollaries", "eq9", "ab", "theorem1", "all"}},
      {"cosmo", "Friedmann model with R = |Z|", {"profile", "intervals"}},
  };
  for (const auto& [group, description, leaves] : groups) {
    CLI::App* g = app.add_subcommand(group, description);
    g->require_subcommand(1, 1);
    for (const auto& leaf : leaves) add_common(g->add_subcommand(leaf), cfg, format, kernel);
  }

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* group = app.get_subcommands().front();
  const CLI::App* leaf = group->get_subcommands().front();
  cfg.command = group->get_name() + " " + leaf->get_name();
  cfg.kernel = kernel;
  const bool is_verify = group->get_name() == "verify";
  if (!format.empty()) {
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  } else {
    cfg.format = is_verify ? OutputFormat::json : OutputFormat::csv;
  }
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    err << "moserlab: " << e.what() << "\n";
    return 2;
  }

  Session s{cfg, out, err};
  try {
    const std::string& name = leaf->get_name();
    if (cfg.command == "zeros scan") return cmd_zeros_scan(s);
    if (cfg.command == "zeros ingest") return cmd_zeros_ingest(s);
    if (cfg.command == "zeros check") return cmd_zeros_check(s);
    if (cfg.command == "stationary scan") return cmd_stationary_scan(s);
    if (cfg.command == "stationary stats") return cmd_stationary_stats(s);
    if (cfg.command == "sums eval") return cmd_sums_eval(s);
    if (cfg.command == "cosmo profile") return cmd_cosmo_profile(s);
    if (cfg.command == "cosmo intervals") return cmd_cosmo_intervals(s);
    if (is_verify) return emit_report(s, run_verify(s, name));
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "moserlab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "moserlab: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace moserlab
