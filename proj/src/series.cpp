#include "explab/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "explab/errors.hpp"

namespace explab {

namespace {

constexpr double kPressureGridStep = 0.1;
constexpr double kPressureGridMax = 3.0;
constexpr std::size_t kMinRadiusBins = 5;

}  // namespace

SeriesEstimate poincare_partial(std::span<const double> displacements, std::span<const int> lengths, double s) {
  if (s < 0.0) throw InvalidArgument("poincare_partial: s must be >= 0");
  if (displacements.size() != lengths.size()) throw InvalidArgument("poincare_partial: size mismatch");
  const int cutoff = lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
  std::vector<LogSumExp> layers(static_cast<std::size_t>(cutoff) + 1);
  for (std::size_t i = 0; i < displacements.size(); ++i) layers[lengths[i]].add(-s * displacements[i]);
  SeriesEstimate out;
  out.s = s;
  out.cutoff = cutoff;
  LogSumExp total;
  for (const auto& layer : layers) {
    out.per_length.push_back(layer.value());
    total.merge(layer);
  }
  out.log_sum = total.value();
  return out;
}

SeriesEstimate poincare_partial(const MarkedGroup& group, double s, int max_length, int workers) {
  if (s < 0.0) throw InvalidArgument("poincare_partial: s must be >= 0");
  using Layers = std::vector<LogSumExp>;
  const auto parts = orbit_map_parts(group, max_length, workers, Layers(static_cast<std::size_t>(max_length) + 1),
                                     [s](Layers& acc, std::span<const Letter> w, const Isometry&, double d) {
                                       acc[w.size()].add(-s * d);
                                     });
  Layers layers(static_cast<std::size_t>(max_length) + 1);
  for (const auto& part : parts) {
    for (std::size_t l = 0; l < layers.size(); ++l) layers[l].merge(part[l]);
  }
  SeriesEstimate out;
  out.s = s;
  out.cutoff = max_length;
  LogSumExp total;
  for (const auto& layer : layers) {
    out.per_length.push_back(layer.value());
    total.merge(layer);
  }
  out.log_sum = total.value();
  return out;
}

OrbitSample sample_orbit(const MarkedGroup& group, int max_length, int workers, const QuotientHom* kernel) {
  if (kernel && kernel->rank() != group.rank()) throw InvalidArgument("homomorphism rank differs from group rank");
  const auto n_layers = static_cast<std::size_t>(max_length) + 1;
  OrbitSample init;
  init.cutoff = max_length;
  init.layer_min.assign(n_layers, std::numeric_limits<double>::infinity());
  init.layer_count.assign(n_layers, 0);
  auto parts = orbit_map_parts(group, max_length, workers, init,
                               [kernel](OrbitSample& acc, std::span<const Letter> w, const Isometry&, double d) {
                                 acc.layer_min[w.size()] = std::min(acc.layer_min[w.size()], d);
                                 if (kernel && !kernel->in_kernel(w)) return;
                                 acc.displacements.push_back(d);
                                 acc.lengths.push_back(static_cast<std::uint8_t>(w.size()));
                                 ++acc.layer_count[w.size()];
                                 if (!w.empty()) ++acc.non_identity_selected;
                               });
  OrbitSample out = init;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.displacements.size();
  out.displacements.reserve(total);
  out.lengths.reserve(total);
  for (auto& p : parts) {
    out.displacements.insert(out.displacements.end(), p.displacements.begin(), p.displacements.end());
    out.lengths.insert(out.lengths.end(), p.lengths.begin(), p.lengths.end());
    for (std::size_t l = 0; l < n_layers; ++l) {
      out.layer_min[l] = std::min(out.layer_min[l], p.layer_min[l]);
      out.layer_count[l] += p.layer_count[l];
    }
    out.non_identity_selected += p.non_identity_selected;
    p = OrbitSample{};
  }
  return out;
}

LayerPressure::LayerPressure(const MarkedGroup& group, int length, int workers) : length_(length) {
  if (length < 1) throw InvalidArgument("pressure needs a positive word length");
  auto parts = orbit_map_parts(group, length, workers, std::vector<double>{},
                               [length](std::vector<double>& acc, std::span<const Letter> w, const Isometry&, double d) {
                                 if (static_cast<int>(w.size()) == length) acc.push_back(d);
                               });
  for (const auto& p : parts) layer_.insert(layer_.end(), p.begin(), p.end());
}

double LayerPressure::operator()(double s) const {
  LogSumExp acc;
  for (double d : layer_) acc.add(-s * d);
  return acc.value() / length_;
}

double pressure(const MarkedGroup& group, double s, int length, int workers) {
  return LayerPressure(group, length, workers)(s);
}

std::string_view to_string(DeltaMethod method) {
  return method == DeltaMethod::pressure_root ? "pressure_root" : "counting_regression";
}

DeltaEstimate delta_via_pressure(const LayerPressure& pressure_fn, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("delta_via_pressure: tol must be positive");
  const double p0 = pressure_fn(0.0);
  if (!(p0 > 0.0)) throw InvalidArgument("delta_via_pressure: pressure at s = 0 must be positive");
  double s_hi = 0.0;
  double p_hi = p0;
  for (int i = 1; kPressureGridStep * i <= kPressureGridMax + 1e-12; ++i) {
    s_hi = kPressureGridStep * i;
    p_hi = pressure_fn(s_hi);
    if (p_hi < 0.0) break;
  }
  if (!(p_hi < 0.0)) throw NoSignChange("pressure stays non-negative up to s = " + std::to_string(kPressureGridMax));

  double lo = 0.0;
  double hi = s_hi;
  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (pressure_fn(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  DeltaEstimate est;
  est.method = DeltaMethod::pressure_root;
  est.value = 0.5 * (lo + hi);
  est.cutoff = pressure_fn.length();
  est.bracket = {lo, hi};
  est.residual = std::abs(pressure_fn(est.value));
  est.diagnostics["pressure_at_lo"] = pressure_fn(lo);
  est.diagnostics["pressure_at_hi"] = pressure_fn(hi);
  est.diagnostics["grid_s_hi"] = s_hi;
  est.diagnostics["pressure_at_zero"] = p0;
  est.diagnostics["iterations"] = iterations;
  est.diagnostics["layer_size"] = static_cast<double>(pressure_fn.layer().size());
  return est;
}

DeltaEstimate delta_via_pressure(const MarkedGroup& group, int length, double tol, int workers) {
  return delta_via_pressure(LayerPressure(group, length, workers), tol);
}

LinearFit fit_log_counts(std::span<const double> radii, std::span<const double> counts) {
  if (radii.size() != counts.size()) throw InvalidArgument("fit_log_counts: size mismatch");
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (counts[i] > 0.0) {
      x.push_back(radii[i]);
      y.push_back(std::log(counts[i]));
    }
  }
  if (x.size() < 2) throw EmptyWindow("fewer than two radii with a positive count");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    sse += r * r;
  }
  fit.rms = std::sqrt(sse / n);
  fit.points = x.size();
  return fit;
}

RadiusWindow default_counting_window(const OrbitSample& sample) {
  const double r_hi = sample.layer_min.at(static_cast<std::size_t>(sample.cutoff));
  return {0.5 * r_hi, r_hi};
}

DeltaEstimate delta_via_counting(std::span<const double> displacements, double r_lo, double r_hi, double bin_width) {
  if (!(r_hi > r_lo)) throw InvalidArgument("delta_via_counting: need R_hi > R_lo");
  if (!(bin_width > 0.0)) throw InvalidArgument("delta_via_counting: bin width must be positive");
  std::vector<double> radii;
  for (int j = 0; r_lo + j * bin_width <= r_hi + 1e-12; ++j) radii.push_back(r_lo + j * bin_width);
  if (radii.size() < kMinRadiusBins) {
    throw InvalidArgument("delta_via_counting: radius window holds fewer than 5 bins");
  }
  std::vector<double> sorted(displacements.begin(), displacements.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> counts;
  for (double r : radii) {
    counts.push_back(static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), r) - sorted.begin()));
  }
  if (counts.back() == 0.0) throw EmptyWindow("no orbit points with displacement in the radius window");
  const LinearFit fit = fit_log_counts(radii, counts);
  DeltaEstimate est;
  est.method = DeltaMethod::counting_regression;
  est.value = fit.slope;
  est.residual = fit.rms;
  est.bracket = {r_lo, r_hi};
  est.diagnostics["intercept"] = fit.intercept;
  est.diagnostics["bins"] = static_cast<double>(fit.points);
  est.diagnostics["bin_width"] = bin_width;
  est.diagnostics["count_at_hi"] = counts.back();
  return est;
}

DeltaEstimate delta_via_counting(const OrbitSample& sample, std::optional<RadiusWindow> window, double bin_width) {
  const RadiusWindow w = window.value_or(default_counting_window(sample));
  DeltaEstimate est = delta_via_counting(sample.displacements, w.lo, w.hi, bin_width);
  est.cutoff = sample.cutoff;
  return est;
}

DeltaEstimate subgroup_delta(const MarkedGroup& group, const QuotientHom& phi, int max_length,
                             std::optional<RadiusWindow> window, int workers) {
  const OrbitSample sample = sample_orbit(group, max_length, workers, &phi);
  if (sample.non_identity_selected == 0) {
    throw EmptyKernel("no non-identity kernel element of length <= " + std::to_string(max_length));
  }
  DeltaEstimate est = delta_via_counting(sample, window);
  est.diagnostics["kernel_points"] = static_cast<double>(sample.displacements.size());

  // Qualitative divergence diagnostic: log of the truncated kernel series at
  // the estimated exponent for the last three cutoffs.
  std::vector<int> lengths(sample.lengths.begin(), sample.lengths.end());
  const SeriesEstimate series = poincare_partial(sample.displacements, lengths, std::max(est.value, 0.0));
  LogSumExp running;
  std::vector<double> cumulative;
  for (double layer : series.per_length) {
    running.add(layer);
    cumulative.push_back(running.value());
  }
  const std::size_t n = cumulative.size();
  if (n >= 3) {
    est.diagnostics["log_series_at_estimate_L-2"] = cumulative[n - 3];
    est.diagnostics["log_series_at_estimate_L-1"] = cumulative[n - 2];
    est.diagnostics["log_series_at_estimate_L"] = cumulative[n - 1];
  }
  return est;
}

double log_lemma1_constant(double s, double translation_length) {
  if (!(s > 0.0)) throw InvalidArgument("lemma1_constant: s must be positive (the series diverges at s <= 0)");
  if (!(translation_length > 0.0)) throw InvalidArgument("lemma1_constant: translation length must be positive");
  const double st = s * translation_length;
  return 2.0 * s * std::log(2.0) + 2.0 * st + std::log1p(std::exp(-st)) - std::log(-std::expm1(-st));
}

double lemma1_constant(double s, double translation_length) {
  return std::exp(log_lemma1_constant(s, translation_length));
}

}  // namespace explab
