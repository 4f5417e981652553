#include "explab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <unordered_set>

#include "explab/errors.hpp"
#include "explab/maps.hpp"

namespace explab {

namespace {

struct SlackAcc {
  std::uint64_t cases = 0;
  double worst = std::numeric_limits<double>::infinity();
  std::string witness;
};

// Frame in which the origin lies on the axis of h.
struct AxisFrame {
  MarkedGroup group;
  double translation_length;
};

AxisFrame axis_frame(const MarkedGroup& group, const ReducedWord& h) {
  const Isometry mh = evaluate(group, h);
  if (classify(mh).type != IsometryType::hyperbolic) throw InvalidArgument("h must be hyperbolic");
  MarkedGroup framed = group.conjugated(conjugate_to_standard(mh));
  const double t_h = classify(evaluate(framed, h)).translation_length;
  return {std::move(framed), t_h};
}

std::string describe_point(Complex z) {
  std::ostringstream out;
  out.precision(17);
  out << "x=(" << z.real() << "," << z.imag() << ")";
  return out.str();
}

}  // namespace

CheckReport check_triangle_conjugation(const MarkedGroup& group, const ReducedWord& h, int max_length, int workers) {
  if (h.empty()) throw InvalidArgument("check_triangle_conjugation: h must be non-trivial");
  const double d_h = evaluate(group, h).displacement();
  const auto parts = orbit_map_parts(group, max_length, workers, SlackAcc{},
                                     [&](SlackAcc& acc, std::span<const Letter> w, const Isometry&, double d_g) {
                                       const ReducedWord g(w);
                                       const double lhs = evaluate(group, conj_map(h, g)).displacement();
                                       const double slack = 2.0 * d_g + d_h - lhs;
                                       ++acc.cases;
                                       if (slack < acc.worst) {
                                         acc.worst = slack;
                                         acc.witness = "g=" + g.to_string();
                                       }
                                     });
  CheckReport report;
  report.name = "triangle_conjugation";
  for (const auto& p : parts) {
    report.cases += p.cases;
    if (p.worst < report.worst_slack) {
      report.worst_slack = p.worst;
      report.witness = p.witness;
    }
  }
  report.params["L"] = max_length;
  report.params["d_h"] = d_h;
  report.notes = "h=" + h.to_string();
  report.finish();
  return report;
}

CheckReport check_projection_cosine(std::uint64_t samples, std::uint64_t seed) {
  CheckReport report;
  report.name = "projection_cosine";
  const double two_log2 = 2.0 * std::log(2.0);
  auto audit = [&](Complex x, double angle) {
    const DiscPoint px(x);
    const Geodesic diameter(std::polar(1.0, angle), -std::polar(1.0, angle));
    const DiscPoint foot = project_to_geodesic(px, diameter).foot;
    const DiscPoint origin;
    const double slack = dist(origin, px) + two_log2 - dist(origin, foot) - dist(foot, px);
    report.record(slack, describe_point(x) + " angle=" + std::to_string(angle));
  };
  // Degenerate cases: x on the geodesic, and x on the orthogonal diameter.
  audit(Complex(std::tanh(2.0), 0.0), 0.0);
  audit(Complex(0.0, std::tanh(2.0)), 0.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.0, 15.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Complex x = std::polar(std::tanh(radius(rng) / 2.0), angle(rng));
    audit(x, angle(rng) / 2.0);
  }
  report.params["samples"] = static_cast<double>(samples);
  report.params["max_radius"] = 15.0;
  report.finish();
  return report;
}

CheckReport check_lemma1_coset(const MarkedGroup& group, const ReducedWord& h, double s, int max_length, int n_window) {
  if (!(s > 0.0)) throw InvalidArgument("check_lemma1_coset: s must be positive");
  if (n_window < 0) throw InvalidArgument("check_lemma1_coset: window must be >= 0");
  const AxisFrame frame = axis_frame(group, h);
  const double log_c = log_lemma1_constant(s, frame.translation_length);
  const Isometry mh = evaluate(frame.group, h);
  const Isometry mh_inv = mh.inverse();

  CheckReport report;
  report.name = "lemma1_coset";
  for (const CosetEntry& coset : coset_enumerate(frame.group, h, max_length)) {
    const Isometry g0 = evaluate(frame.group, coset.rep);
    LogSumExp lhs;
    lhs.add(-s * g0.displacement());
    Isometry up = g0;
    Isometry down = g0;
    for (int n = 1; n <= n_window; ++n) {
      up = mh * up;
      down = mh_inv * down;
      lhs.add(-s * up.displacement());
      lhs.add(-s * down.displacement());
    }
    const double rhs = log_c - s * coset.displacement;
    report.record(rhs - lhs.value(), "g0=" + coset.rep.to_string());
  }
  const double st = s * frame.translation_length;
  report.params["s"] = s;
  report.params["L"] = max_length;
  report.params["n_window"] = n_window;
  report.params["translation_length"] = frame.translation_length;
  report.params["log_C"] = log_c;
  report.params["tail_bound"] = 2.0 * std::exp(-st * n_window) / (-std::expm1(-st));
  report.notes = "h=" + h.to_string() +
                 "; truncated left side is a lower bound of the coset sum: failures are genuine, passes are partial evidence";
  report.finish();
  return report;
}

CheckReport check_main_chain(const MarkedGroup& group, const QuotientHom& phi, const ReducedWord& h, double s,
                             int max_length, int workers) {
  if (!(s > 0.0)) throw InvalidArgument("check_main_chain: s must be positive");
  if (h.empty() || !phi.in_kernel(h)) throw InvalidArgument("check_main_chain: h must be a non-trivial kernel element");
  const AxisFrame frame = axis_frame(group, h);
  const double t_h = frame.translation_length;

  const double lhs = poincare_partial(frame.group, s, max_length, workers).log_sum;
  const auto maxima = orbit_map_parts(frame.group, max_length, workers, 0.0,
                                      [](double& acc, std::span<const Letter>, const Isometry&, double d) {
                                        acc = std::max(acc, d);
                                      });
  const double ball_radius = *std::max_element(maxima.begin(), maxima.end());
  const double image_radius = 2.0 * ball_radius + t_h;

  CheckReport report;
  report.name = "main_chain";
  std::unordered_set<ReducedWord, ReducedWordHash> images;
  std::uint64_t outside = 0;
  std::string outside_witness;
  for (const CosetEntry& coset : coset_enumerate(frame.group, h, max_length)) {
    images.insert(conj_map(h, coset.rep));
  }
  std::vector<ReducedWord> ordered(images.begin(), images.end());
  std::sort(ordered.begin(), ordered.end(), ShortlexLess{});
  LogSumExp rhs_sum;
  for (const auto& rho : ordered) {
    const double d = evaluate(frame.group, rho).displacement();
    if (!phi.in_kernel(rho) || d > image_radius + kDefaultTolerance) {
      if (outside++ == 0) outside_witness = "rho=" + rho.to_string();
    }
    rhs_sum.add(-0.5 * s * d);
  }
  const int k = primitive_root(h).exponent + 1;
  const double rhs = std::log(static_cast<double>(k)) + log_lemma1_constant(s, t_h) + 0.5 * s * t_h + rhs_sum.value();
  report.record(rhs - lhs, "L=" + std::to_string(max_length));
  if (outside > 0) {
    report.worst_slack = -std::numeric_limits<double>::infinity();
    report.witness = outside_witness + " lies outside the kernel ball";
  }
  report.params["s"] = s;
  report.params["L"] = max_length;
  report.params["k"] = k;
  report.params["translation_length"] = t_h;
  report.params["log_lhs"] = lhs;
  report.params["log_rhs"] = rhs;
  report.params["images"] = static_cast<double>(ordered.size());
  report.params["ball_radius"] = ball_radius;
  report.params["image_radius_bound"] = image_radius;
  report.notes = "h=" + h.to_string() + " phi=" + phi.label();
  report.finish();
  return report;
}

CheckReport check_theorem_bound(const MarkedGroup& group, const QuotientHom& phi, int max_length, int workers) {
  const DeltaEstimate delta = delta_via_pressure(group, max_length, 1e-4, workers);
  const DeltaEstimate delta_hat = subgroup_delta(group, phi, max_length, std::nullopt, workers);
  CheckReport report;
  report.name = "theorem_bound";
  report.record(delta_hat.value - (0.5 * delta.value - kTheoremEstimatorSlack), "phi=" + phi.label());
  report.params["L"] = max_length;
  report.params["delta"] = delta.value;
  report.params["delta_hat"] = delta_hat.value;
  report.params["estimator_slack"] = kTheoremEstimatorSlack;
  report.notes = "delta: pressure_root; delta_hat: counting_regression on ker(" + phi.label() + ")";
  report.finish();
  return report;
}

}  // namespace explab
