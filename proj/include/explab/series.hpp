#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "explab/kleinian.hpp"
#include "explab/quotient.hpp"

namespace explab {

/// Streaming log(sum exp(x_i)) with a running maximum.
class LogSumExp {
 public:
  void add(double x) {
    if (x == -std::numeric_limits<double>::infinity()) return;
    if (x <= max_) {
      sum_ += std::exp(x - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - x) + 1.0;
      max_ = x;
    }
  }
  void merge(const LogSumExp& other) {
    if (other.sum_ == 0.0) return;
    if (sum_ == 0.0) {
      *this = other;
      return;
    }
    if (other.max_ <= max_) {
      sum_ += other.sum_ * std::exp(other.max_ - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - other.max_) + other.sum_;
      max_ = other.max_;
    }
  }
  bool empty() const { return sum_ == 0.0; }
  /// -inf for an empty sum.
  double value() const { return empty() ? -std::numeric_limits<double>::infinity() : max_ + std::log(sum_); }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
};

/// Truncated Poincare series sum_{|w| <= L} exp(-s d(0, w(0))), in log space.
struct SeriesEstimate {
  double s = 0.0;
  int cutoff = 0;
  double log_sum = 0.0;
  std::vector<double> per_length;  // log of the length-l layer, l = 0..cutoff
};

/// Series over displacements grouped by word length (lengths[i] is the
/// length of the word with displacement displacements[i]).
SeriesEstimate poincare_partial(std::span<const double> displacements, std::span<const int> lengths, double s);
SeriesEstimate poincare_partial(const MarkedGroup& group, double s, int max_length, int workers = 1);

/// Displacements of one orbit ball, optionally restricted to a kernel.
struct OrbitSample {
  int cutoff = 0;
  std::vector<double> displacements;   // selected entries, part order
  std::vector<std::uint8_t> lengths;   // word length of each selected entry
  std::vector<double> layer_min;       // min displacement per length over the whole group
  std::vector<std::uint64_t> layer_count;  // selected entries per length
  std::uint64_t non_identity_selected = 0;
};
OrbitSample sample_orbit(const MarkedGroup& group, int max_length, int workers = 1, const QuotientHom* kernel = nullptr);

/// (1/L) log sum_{|w| = L} exp(-s d(0, w(0))) over a cached length-L layer.
class LayerPressure {
 public:
  LayerPressure(const MarkedGroup& group, int length, int workers = 1);
  double operator()(double s) const;
  int length() const { return length_; }
  std::span<const double> layer() const { return layer_; }

 private:
  int length_;
  std::vector<double> layer_;
};

double pressure(const MarkedGroup& group, double s, int length, int workers = 1);

enum class DeltaMethod { pressure_root, counting_regression };
std::string_view to_string(DeltaMethod method);

struct DeltaEstimate {
  double value = 0.0;
  DeltaMethod method = DeltaMethod::pressure_root;
  int cutoff = 0;
  double residual = 0.0;
  /// Final bisection interval (pressure) or radius window (counting).
  std::array<double, 2> bracket{0.0, 0.0};
  std::map<std::string, double> diagnostics;
};

/// Bisection root of s -> pressure(s) on [0, s_hi], s_hi the first point of
/// the grid 0.1, 0.2, ..., 3.0 where the pressure is negative.
DeltaEstimate delta_via_pressure(const LayerPressure& pressure_fn, double tol = 1e-4);
DeltaEstimate delta_via_pressure(const MarkedGroup& group, int length, double tol = 1e-4, int workers = 1);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
  std::size_t points = 0;
};
/// Least squares of log(count) against radius; zero counts are skipped.
LinearFit fit_log_counts(std::span<const double> radii, std::span<const double> counts);

inline constexpr double kDefaultBinWidth = 0.5;

struct RadiusWindow {
  double lo = 0.0;
  double hi = 0.0;
};
/// [R/2, R] with R the least displacement among words of length exactly L.
/// When displacement grows along reduced extensions (audited for the
/// symmetric family), N(r) for r <= R is complete within the length-L ball.
RadiusWindow default_counting_window(const OrbitSample& sample);

/// Slope of log N(R) against R, N(R) = #{d <= R}, over radii R_lo, R_lo + w,
/// ..., <= R_hi. Needs at least 5 radii; throws EmptyWindow when every
/// count in the window is zero.
DeltaEstimate delta_via_counting(std::span<const double> displacements, double r_lo, double r_hi,
                                 double bin_width = kDefaultBinWidth);

/// Counting estimate on the full group with the default window.
DeltaEstimate delta_via_counting(const OrbitSample& sample, std::optional<RadiusWindow> window = std::nullopt,
                                 double bin_width = kDefaultBinWidth);

/// Counting estimate restricted to ker(phi). Throws EmptyKernel when the
/// ball holds no non-identity kernel element.
DeltaEstimate subgroup_delta(const MarkedGroup& group, const QuotientHom& phi, int max_length,
                             std::optional<RadiusWindow> window = std::nullopt, int workers = 1);

/// C(s) = 4^s e^{2 s t} (1 + e^{-s t}) / (1 - e^{-s t}), the closed form of
/// 2^{2s} sum_{n in Z} e^{-s (|n| - 2) t}. Throws InvalidArgument for s <= 0
/// or t <= 0.
double lemma1_constant(double s, double translation_length);
double log_lemma1_constant(double s, double translation_length);

}  // namespace explab
