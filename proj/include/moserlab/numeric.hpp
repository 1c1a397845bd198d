#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace moserlab {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double s = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - s) + x;
    } else {
      comp_ += (x - s) + sum_;
    }
    sum_ = s;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Summation block length; block results are combined in index order so the
/// result does not depend on how blocks are scheduled.
inline constexpr std::size_t kSumBlock = 4096;

/// Compensated sum of term(i) for i in [0, n), blocked by kSumBlock.
template <class Term>
double blocked_sum(std::size_t n, Term&& term) {
  CompensatedSum total;
  for (std::size_t begin = 0; begin < n; begin += kSumBlock) {
    const std::size_t end = begin + kSumBlock < n ? begin + kSumBlock : n;
    CompensatedSum block;
    for (std::size_t i = begin; i < end; ++i) block.add(term(i));
    total.add(block.value());
  }
  return total.value();
}

/// Worker count, capped by MOSERLAB_THREADS when set.
std::size_t worker_count();

/// Run body(i) for i in [0, n) on up to worker_count() threads. body must
/// only write to per-index state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Brent's method on a bracket with f(lo) * f(hi) <= 0. Returns the root
/// estimate once the bracket is below xtol or f vanishes.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double f_lo, double f_hi, double xtol, int max_iter = 200);

/// Deterministic uniform doubles in [0, 1), independent of the standard
/// library's distribution implementation.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : state_(seed) {}
  double next() noexcept;

 private:
  std::uint64_t state_;
};

/// Quantile with linear interpolation between order statistics.
double quantile(std::span<const double> sorted, double q);

}  // namespace moserlab
