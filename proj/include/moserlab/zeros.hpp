#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moserlab/rs_core.hpp"

namespace moserlab {

/// Ordinate of the lowest zero on the critical line; no zero lies below it.
inline constexpr double kFirstZeroOrdinate = 14.134725141734693;

enum class ZeroSource { computed, ingested };

struct OrdinateRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// Immutable sorted list of zero ordinates, complete on `range()`.
class ZeroTable {
 public:
  ZeroTable();
  ZeroTable(std::vector<double> ordinates, OrdinateRange range, ZeroSource source,
            double refine_tol);

  std::span<const double> ordinates() const noexcept { return *ordinates_; }
  std::size_t size() const noexcept { return ordinates_->size(); }
  bool empty() const noexcept { return ordinates_->empty(); }
  double operator[](std::size_t i) const { return (*ordinates_)[i]; }

  OrdinateRange range() const noexcept { return range_; }
  ZeroSource source() const noexcept { return source_; }
  double refine_tol() const noexcept { return refine_tol_; }

  /// True when nothing below range().lo is missing, i.e. the table starts at
  /// or below the lowest zero.
  bool covers_origin() const noexcept;

  /// Number of ordinates <= x.
  std::size_t count_up_to(double x) const noexcept;

  /// Index of the gap (ordinates[i], ordinates[i+1]) containing x, or npos.
  std::size_t gap_index(double x) const noexcept;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::shared_ptr<const std::vector<double>> ordinates_;
  OrdinateRange range_;
  ZeroSource source_ = ZeroSource::computed;
  double refine_tol_ = 0.0;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

/// g_n with theta(g_n) = n pi. Throws DomainError when g_n < 10.
double gram_point(long n);

/// Illinois regula falsi with bisection safeguard; returns the midpoint of
/// the final bracket of width <= tol.
double refine_root(const std::function<double(double)>& f, const Bracket& b, double tol);

/// refine_root applied to Z.
double refine_zero(const Bracket& b, double tol = 1e-9, const PrecisionPolicy& policy = {});

struct BlockFailure {
  long first_gram = 0;  // block spans [g_first, g_last]
  long last_gram = 0;
  int expected = 0;
  int found = 0;
};

struct ScanResult {
  ZeroTable table;
  std::vector<BlockFailure> failures;
  std::vector<double> weak_zeros;  // |Z'| < 1e-6 at the refined root
  std::size_t gram_points = 0;
  std::size_t good_gram_points = 0;  // (-1)^n Z(g_n) > 0
};

/// Sign-change scan over Gram blocks with adaptive subdivision, then
/// refinement of every bracket. Never throws for missing zeros; inspect
/// `failures`.
ScanResult scan_zeros_detailed(double t_lo, double t_hi, const PrecisionPolicy& policy = {},
                               double refine_tol = 1e-9);

/// As scan_zeros_detailed, but throws NumericFault when any block failed or
/// any root looks multiple.
ZeroTable scan_zeros(double t_lo, double t_hi, const PrecisionPolicy& policy = {},
                     double refine_tol = 1e-9);

struct CompletenessReport {
  double T = 0.0;
  double observed = 0.0;
  double smooth = 0.0;
  double deviation = 0.0;
  bool flagged = false;
};

/// Observed count against theta(T)/pi + 1. For tables that do not reach
/// down to the lowest zero both counts are taken from range().lo upward.
CompletenessReport completeness_check(const ZeroTable& table, double T);

/// One decimal ordinate per line; '#' lines and blank lines are skipped.
ZeroTable ingest_zeros(std::string_view text);

}  // namespace moserlab
