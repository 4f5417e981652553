#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "explab/hypgeom.hpp"
#include "explab/kleinian.hpp"
#include "explab/quotient.hpp"
#include "explab/series.hpp"

namespace explab {

/// Outcome of one audited inequality. Slacks are signed (RHS - LHS, in log
/// space for series inequalities); the check passes iff the worst slack is
/// at least -tolerance.
struct CheckReport {
  std::string name;
  std::uint64_t cases = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  double tolerance = kDefaultTolerance;
  bool pass = true;
  std::map<std::string, double> params;
  std::string witness;  // case attaining the worst slack
  std::string notes;

  void record(double slack, const std::string& case_label) {
    ++cases;
    if (slack < worst_slack) {
      worst_slack = slack;
      witness = case_label;
    }
  }
  void finish() { pass = worst_slack >= -tolerance; }
};

/// d(0, g^-1 h g (0)) <= 2 d(0, g(0)) + d(0, h(0)) for every |g| <= L.
CheckReport check_triangle_conjugation(const MarkedGroup& group, const ReducedWord& h, int max_length, int workers = 1);

/// d(0,x) + 2 log 2 >= d(0,P) + d(P,x) for P the foot of x on a random
/// diameter, x at hyperbolic radius up to 15. Deterministic for a seed.
CheckReport check_projection_cosine(std::uint64_t samples, std::uint64_t seed = 20120101);

/// Per-coset relative series bound in the frame where the origin lies on the
/// axis of h:
///   sum_{|n| <= n_window} e^{-s d(h^n g0)} <= C(s, t_h) e^{-s d(<h> g0)}.
/// The truncated left side only under-counts, so a failure is genuine and a
/// pass is partial evidence; params["tail_bound"] bounds the missing mass
/// relative to e^{-s d(<h> g0)}.
CheckReport check_lemma1_coset(const MarkedGroup& group, const ReducedWord& h, double s, int max_length, int n_window);

/// sum_{|g| <= L} e^{-s d(g)} <= k C(s) e^{s t_h / 2} sum_rho e^{-s d(rho) / 2}
/// in the axis frame, with rho over the distinct images iota_h of the cosets
/// meeting the ball. Each image is checked to lie in the kernel and within
/// displacement 2 D_L + t_h, so the right side under-counts the full kernel
/// sum over that ball and a pass is sound.
CheckReport check_main_chain(const MarkedGroup& group, const QuotientHom& phi, const ReducedWord& h, double s,
                             int max_length, int workers = 1);

inline constexpr double kTheoremEstimatorSlack = 0.02;

/// delta_hat (counting on the kernel) >= delta (pressure root) / 2 - 0.02.
CheckReport check_theorem_bound(const MarkedGroup& group, const QuotientHom& phi, int max_length, int workers = 1);

}  // namespace explab
