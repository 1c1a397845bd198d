#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "moserlab/verify.hpp"
#include "moserlab/zeros.hpp"

namespace moserlab {

std::string_view version();

enum class OutputFormat { csv, json };

struct Config {
  std::string command;  // e.g. "verify formula1"
  double t_lo = 10.0;
  double t_hi = 1000.0;
  double alpha = 1.0;
  double kappa = 1.0;
  double c = 1.0;
  double T_trunc_factor = 2.0;
  std::uint64_t seed = 0;
  std::string out_path;  // empty: standard output
  OutputFormat format = OutputFormat::csv;

  std::string zeros_path;        // zero table cache
  std::string in_path;           // zeros ingest
  std::int64_t samples = 1000;
  double step = 0.1;             // cosmo profile
  double t = 0.0;                // sums eval, verify eq34 (0: sweep)
  double T_trunc = 0.0;          // sums eval (0: default truncation)
  std::string kernel = "riemann";
  double beta = 0.25;            // stationary stats
  double min_abs_z = 0.0;        // cosmo intervals
  std::vector<double> check_T;   // zeros check (empty: t_hi)

  /// Throws DomainError on out-of-range fields.
  void validate() const;
};

/// 17 significant digits, "." decimal point; parses back bit-identically.
std::string format_double(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // cells already rendered
};

std::string render_csv(const CsvTable& table);
void write_csv(const CsvTable& table, const std::string& path);

/// JSON object with keys name, samples, pass, statistics, notes, config,
/// version, in that order. Non-finite statistics are written as null.
std::string render_report_json(const VerificationReport& report, const Config& config);
VerificationReport parse_report_json(std::string_view text);
void write_json(const VerificationReport& report, const Config& config, const std::string& path);

/// Write via a temporary file in the same directory and rename. Throws
/// IoError with the path in the message.
void write_file_atomic(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

/// Zero table text with "# range lo hi" and "# refine_tol x" comment lines,
/// readable by ingest_zeros.
std::string render_zero_table(const ZeroTable& table);
/// Parses a table written by render_zero_table, restoring range and source
/// metadata when present.
ZeroTable parse_zero_table(std::string_view text);

/// Merge sub-reports, prefixing statistics with "<name>." and ANDing pass.
VerificationReport aggregate_reports(const std::string& name,
                                     const std::vector<VerificationReport>& parts);

/// Parse and execute one subcommand. args[0] is the program name.
/// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
/// or domain error.
int run(const std::vector<std::string>& args);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moserlab
