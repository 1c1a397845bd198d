#include "moserlab/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <mutex>
#include <sstream>
#include <string>

#include "moserlab/errors.hpp"
#include "moserlab/numeric.hpp"

namespace moserlab {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr int kMaxSubdivisionDepth = 12;
constexpr int kMaxGramExtension = 64;

double z_at(double t, const PrecisionPolicy& policy) {
  return detail::z_value(t, detail::plan_for(t, policy));
}

// theta has its minimum near 2 pi and increases beyond it, so every
// n >= -1 has exactly one solution above 2 pi.
double gram_unchecked(long n) {
  if (n < -1) throw DomainError("gram_point: no Gram point for n < -1");
  const long double target = static_cast<long double>(n) * kPiL;
  const auto f = [target](double t) {
    return static_cast<double>(detail::theta_extended(t) - target);
  };
  double lo = kTwoPi * 1.0001;
  double hi = std::max(20.0, 2.0 * lo);
  double f_hi = f(hi);
  while (f_hi < 0.0) {
    lo = hi;
    hi *= 2.0;
    f_hi = f(hi);
  }
  return brent_root(f, lo, hi, f(lo), f_hi, 1e-15 * hi);
}

bool same_sign(double a, double b) { return (a >= 0.0) == (b >= 0.0); }

struct GramSample {
  long n;
  double t;
  double z;
  bool good() const { return (n % 2 == 0) ? z > 0.0 : z < 0.0; }
};

struct BlockOutcome {
  std::vector<Bracket> brackets;
  bool ok = true;
  int found = 0;
};

// Subdivide a Gram block uniformly until it shows the expected number of
// sign changes or the depth limit is reached.
BlockOutcome search_block(std::span<const GramSample> block, const PrecisionPolicy& policy) {
  const int expected = static_cast<int>(block.size()) - 1;
  std::vector<double> ts, zs;
  for (const auto& g : block) {
    ts.push_back(g.t);
    zs.push_back(g.z);
  }
  BlockOutcome out;
  for (int depth = 0;; ++depth) {
    int changes = 0;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      if (!same_sign(zs[i], zs[i + 1])) ++changes;
    }
    if (changes >= expected || depth == kMaxSubdivisionDepth) {
      for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (!same_sign(zs[i], zs[i + 1])) out.brackets.push_back({ts[i], ts[i + 1], zs[i], zs[i + 1]});
      }
      out.found = changes;
      out.ok = changes >= expected;
      return out;
    }
    std::vector<double> nts, nzs;
    nts.reserve(2 * ts.size());
    nzs.reserve(2 * ts.size());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      nts.push_back(ts[i]);
      nzs.push_back(zs[i]);
      const double mid = 0.5 * (ts[i] + ts[i + 1]);
      nts.push_back(mid);
      nzs.push_back(z_at(mid, policy));
    }
    nts.push_back(ts.back());
    nzs.push_back(zs.back());
    ts = std::move(nts);
    zs = std::move(nzs);
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ZeroTable::ZeroTable() : ordinates_(std::make_shared<const std::vector<double>>()) {}

ZeroTable::ZeroTable(std::vector<double> ordinates, OrdinateRange range, ZeroSource source,
                     double refine_tol)
    : range_(range), source_(source), refine_tol_(refine_tol) {
  if (!(range.lo <= range.hi)) throw DomainError("ZeroTable: range.lo > range.hi");
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    const double g = ordinates[i];
    if (!std::isfinite(g) || g < range.lo || g > range.hi) {
      throw DomainError("ZeroTable: ordinate " + std::to_string(g) + " outside range");
    }
    if (i > 0 && !(g > ordinates[i - 1])) {
      throw DomainError("ZeroTable: ordinates not strictly increasing at index " +
                        std::to_string(i));
    }
  }
  ordinates_ = std::make_shared<const std::vector<double>>(std::move(ordinates));
}

bool ZeroTable::covers_origin() const noexcept {
  return range_.lo <= kFirstZeroOrdinate + 1e-9;
}

std::size_t ZeroTable::count_up_to(double x) const noexcept {
  return static_cast<std::size_t>(std::upper_bound(ordinates_->begin(), ordinates_->end(), x) -
                                  ordinates_->begin());
}

std::size_t ZeroTable::gap_index(double x) const noexcept {
  const std::size_t above = count_up_to(x);
  if (above == 0 || above >= ordinates_->size()) return npos;
  return above - 1;
}

double gram_point(long n) {
  const double g = gram_unchecked(n);
  if (g < kWorkingLo) {
    throw DomainError("gram_point: g_" + std::to_string(n) + " = " + std::to_string(g) +
                      " lies below 10");
  }
  return g;
}

double refine_root(const std::function<double(double)>& f, const Bracket& b, double tol) {
  if (!(b.lo < b.hi) || !(b.f_lo * b.f_hi < 0.0)) {
    throw InvalidBracket("refine_root: bracket [" + std::to_string(b.lo) + ", " +
                         std::to_string(b.hi) + "] does not straddle a sign change");
  }
  double a = b.lo, fa = b.f_lo, c = b.hi, fc = b.f_hi;
  int side = 0;
  double width_two_back = c - a, width_one_back = c - a;
  for (int iter = 0; iter < 400 && c - a > tol; ++iter) {
    double x = c - fc * (c - a) / (fc - fa);
    if (!(x > a && x < c) || (iter >= 2 && c - a > 0.5 * width_two_back)) {
      x = 0.5 * (a + c);
      side = 0;
    }
    // never sample closer than tol/2 to an endpoint, so the bracket closes
    x = std::clamp(x, a + 0.5 * tol, c - 0.5 * tol);
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (same_sign(fx, fc)) {
      c = x;
      fc = fx;
      if (side == 1) fa *= 0.5;
      side = 1;
    } else {
      a = x;
      fa = fx;
      if (side == -1) fc *= 0.5;
      side = -1;
    }
    width_two_back = width_one_back;
    width_one_back = c - a;
  }
  return 0.5 * (a + c);
}

double refine_zero(const Bracket& b, double tol, const PrecisionPolicy& policy) {
  policy.validate();
  return refine_root([&](double t) { return z_at(t, policy); }, b, tol);
}

ScanResult scan_zeros_detailed(double t_lo, double t_hi, const PrecisionPolicy& policy,
                               double refine_tol) {
  if (!(t_lo >= kWorkingLo) || !(t_hi <= kWorkingHi) || !(t_lo < t_hi)) {
    throw DomainError("scan_zeros: need 10 <= t_lo < t_hi <= 1e5");
  }
  policy.validate();

  long n_lo = static_cast<long>(std::floor(detail::theta_extended(t_lo) / kPiL));
  long n_hi = static_cast<long>(std::ceil(detail::theta_extended(t_hi) / kPiL));
  n_lo = std::max(n_lo, -1L);

  const auto sample = [&](long n) {
    const double t = gram_unchecked(n);
    return GramSample{n, t, z_at(t, policy)};
  };
  std::vector<GramSample> grams(static_cast<std::size_t>(n_hi - n_lo + 1));
  parallel_for(grams.size(), [&](std::size_t i) { grams[i] = sample(n_lo + static_cast<long>(i)); });

  // extend outward to good Gram points so that every block is closed
  for (int i = 0; i < kMaxGramExtension && !grams.front().good() && grams.front().n > -1; ++i) {
    grams.insert(grams.begin(), sample(grams.front().n - 1));
  }
  for (int i = 0; i < kMaxGramExtension && !grams.back().good(); ++i) {
    grams.push_back(sample(grams.back().n + 1));
  }

  std::vector<std::size_t> good;
  for (std::size_t i = 0; i < grams.size(); ++i) {
    if (grams[i].good()) good.push_back(i);
  }

  ScanResult result;
  result.gram_points = grams.size();
  result.good_gram_points = good.size();
  if (good.size() < 2) {
    result.failures.push_back({grams.front().n, grams.back().n,
                               static_cast<int>(grams.size()) - 1, 0});
    result.table = ZeroTable({}, {t_lo, t_hi}, ZeroSource::computed, refine_tol);
    return result;
  }

  const std::size_t n_blocks = good.size() - 1;
  std::vector<BlockOutcome> outcomes(n_blocks);
  parallel_for(n_blocks, [&](std::size_t b) {
    const std::span<const GramSample> block(grams.data() + good[b], good[b + 1] - good[b] + 1);
    outcomes[b] = search_block(block, policy);
  });

  std::vector<Bracket> brackets;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    const auto& o = outcomes[b];
    if (!o.ok) {
      result.failures.push_back({grams[good[b]].n, grams[good[b + 1]].n,
                                 static_cast<int>(good[b + 1] - good[b]), o.found});
    }
    for (const auto& br : o.brackets) {
      if (br.hi >= t_lo && br.lo <= t_hi) brackets.push_back(br);
    }
  }

  std::vector<double> roots(brackets.size());
  std::vector<char> weak(brackets.size(), 0);
  parallel_for(brackets.size(), [&](std::size_t i) {
    roots[i] = refine_zero(brackets[i], refine_tol, policy);
    const double slope = detail::z_with_derivatives(roots[i], detail::plan_for(roots[i], policy),
                                                    policy).first;
    weak[i] = std::abs(slope) < 1e-6;
  });

  std::vector<double> kept;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i] < t_lo || roots[i] > t_hi) continue;
    if (weak[i]) result.weak_zeros.push_back(roots[i]);
    kept.push_back(roots[i]);
  }
  result.table = ZeroTable(std::move(kept), {t_lo, t_hi}, ZeroSource::computed, refine_tol);
  return result;
}

ZeroTable scan_zeros(double t_lo, double t_hi, const PrecisionPolicy& policy, double refine_tol) {
  ScanResult r = scan_zeros_detailed(t_lo, t_hi, policy, refine_tol);
  if (!r.failures.empty() || !r.weak_zeros.empty()) {
    std::ostringstream msg;
    msg << "scan_zeros: ";
    for (const auto& f : r.failures) {
      msg << "Gram block [g_" << f.first_gram << ", g_" << f.last_gram << "] expected "
          << f.expected << " sign changes, isolated " << f.found << "; ";
    }
    for (double w : r.weak_zeros) msg << "possible multiple zero near " << w << "; ";
    throw NumericFault(msg.str());
  }
  return std::move(r.table);
}

CompletenessReport completeness_check(const ZeroTable& table, double T) {
  CompletenessReport r;
  r.T = T;
  const double smooth_T = static_cast<double>(detail::theta_extended(T) / kPiL) + 1.0;
  if (table.covers_origin()) {
    r.observed = static_cast<double>(table.count_up_to(T));
    r.smooth = smooth_T;
  } else {
    const double lo = table.range().lo;
    r.observed = static_cast<double>(table.count_up_to(T) - table.count_up_to(lo));
    r.smooth = smooth_T - (static_cast<double>(detail::theta_extended(lo) / kPiL) + 1.0);
  }
  r.deviation = r.observed - r.smooth;
  r.flagged = std::abs(r.deviation) > 1.0;
  return r;
}

ZeroTable ingest_zeros(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc() || ptr != line.data() + line.size() || !std::isfinite(v)) {
      throw ParseError("cannot parse ordinate '" + std::string(line) + "'", line_no);
    }
    if (!(v > 0.0)) throw ParseError("ordinate must be positive", line_no);
    if (!values.empty() && !(v > values.back())) {
      throw MonotonicityError("ordinates must be strictly increasing", line_no);
    }
    values.push_back(v);
  }
  const OrdinateRange range =
      values.empty() ? OrdinateRange{} : OrdinateRange{values.front(), values.back()};
  return ZeroTable(std::move(values), range, ZeroSource::ingested, 0.0);
}

}  // namespace moserlab
