// Acceptance suite: `acceptance N` runs criterion N, `acceptance` runs all.
// Each criterion prints exactly one line "CRITERION N: PASS|FAIL <details>".
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "explab/freegroup.hpp"
#include "explab/maps.hpp"
#include "explab/quotient.hpp"
#include "explab/series.hpp"
#include "explab/verify.hpp"

using namespace explab;

namespace {

struct Outcome {
  bool pass;
  std::string details;
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

int workers() { return default_worker_count(); }

const MarkedGroup& group() {
  static const MarkedGroup g = MarkedGroup::schottky_symmetric(2, 3.0);
  return g;
}

const ReducedWord& commutator() {
  static const ReducedWord h = ReducedWord::parse("abAB");
  return h;
}

Outcome word_arithmetic() {
  const auto t0 = Clock::now();
  std::uint64_t failures = 0;
  const auto words = enumerate_words(2, 6);
  for (int l = 0; l <= 6; ++l) {
    std::uint64_t n = 0;
    for_each_word_of_length(2, l, [&](std::span<const Letter> w) {
      ++n;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) failures += w[i].cancels(w[i + 1]);
    });
    const std::uint64_t expected = l == 0 ? 1 : 4 * static_cast<std::uint64_t>(std::pow(3, l - 1));
    failures += n != expected;
  }
  // Product against letter-by-letter cancellation, all u <= 6, v <= 3.
  const auto short_words = enumerate_words(2, 3);
  for (const auto& u : words) {
    failures += !concat(u, invert(u)).empty();
    for (const auto& v : short_words) {
      std::vector<Letter> raw(u.letters().begin(), u.letters().end());
      for (Letter x : v.letters()) {
        if (!raw.empty() && raw.back().cancels(x)) {
          raw.pop_back();
        } else {
          raw.push_back(x);
        }
      }
      failures += concat(u, v) != ReducedWord(raw);
    }
  }
  // Associativity over every triple of length <= 4.
  const auto mid_words = enumerate_words(2, 4);
  std::uint64_t triples = 0;
  for (const auto& u : mid_words) {
    for (const auto& v : mid_words) {
      const ReducedWord uv = concat(u, v);
      for (const auto& w : mid_words) {
        failures += concat(uv, w) != concat(u, concat(v, w));
        ++triples;
      }
    }
  }
  // Kernel normality: conjugates of kernel words stay in the kernel.
  std::uint64_t conjugations = 0;
  for (const auto& phi : {QuotientHom::abelianization(2), QuotientHom::parse("mod2", 2)}) {
    for (const auto& u : words) {
      if (!phi.in_kernel(u)) continue;
      for (const auto& g : short_words) {
        failures += !phi.in_kernel(conjugate_by(u, g));
        ++conjugations;
      }
    }
  }
  const double secs = seconds_since(t0);
  return {failures == 0 && secs < 10.0,
          fmt("words=%zu triples=%llu conjugations=%llu failures=%llu time=%.2fs (limit 10s)", words.size(),
              static_cast<unsigned long long>(triples), static_cast<unsigned long long>(conjugations),
              static_cast<unsigned long long>(failures), secs)};
}

Outcome triangle_audit() {
  const auto t0 = Clock::now();
  const CheckReport r = check_triangle_conjugation(group(), commutator(), 12, workers());
  const double secs = seconds_since(t0);
  return {r.worst_slack >= -1e-9 && r.cases == 1 + 2 * (531441ull - 1) && secs < 60.0,
          fmt("cases=%llu worst_slack=%.3e at %s time=%.2fs (limit 60s)", static_cast<unsigned long long>(r.cases),
              r.worst_slack, r.witness.c_str(), secs)};
}

Outcome cosine_audit() {
  const CheckReport r = check_projection_cosine(10000);
  return {r.worst_slack >= -1e-9 && r.cases >= 10000,
          fmt("cases=%llu worst_slack=%.6f", static_cast<unsigned long long>(r.cases), r.worst_slack)};
}

Outcome lemma1_audit() {
  bool pass = true;
  std::string details;
  for (double s : {0.2, 0.4, 0.6}) {
    const CheckReport r = check_lemma1_coset(group(), commutator(), s, 8, 20);
    pass = pass && r.pass;
    details += fmt("s=%.1f cosets=%llu worst_log_slack=%.4f; ", s, static_cast<unsigned long long>(r.cases),
                   r.worst_slack);
  }
  return {pass, details + "window=20 L=8"};
}

Outcome fiber_bound() {
  const auto phi = QuotientHom::abelianization(2);
  const FiberReport r1 = fiber_statistics(&group(), commutator(), phi, 8);
  const FiberReport r2 = fiber_statistics(&group(), power(commutator(), 2), phi, 8);
  const bool pass = r1.max_fiber <= 2 && r2.max_fiber <= 3 && r1.declared_bound == 2 && r2.declared_bound == 3 &&
                    r1.images_outside_kernel == 0 && r2.images_outside_kernel == 0;
  return {pass, fmt("h: cosets=%llu max_fiber=%llu (bound 2); h^2: cosets=%llu max_fiber=%llu (bound 3)",
                    static_cast<unsigned long long>(r1.cosets), static_cast<unsigned long long>(r1.max_fiber),
                    static_cast<unsigned long long>(r2.cosets), static_cast<unsigned long long>(r2.max_fiber))};
}

Outcome injectivity() {
  const InjectionReport r = injectivity_scan_free(commutator(), 2, 8, QuotientHom::abelianization(2));
  return {r.scanned == 13121 && r.ok(),
          fmt("scanned=%llu collisions=%zu kernel_failures=%zu length_formula_failures=%llu max_image_length=%zu",
              static_cast<unsigned long long>(r.scanned), r.collisions.size(), r.kernel_failures.size(),
              static_cast<unsigned long long>(r.length_formula_failures), r.max_image_length)};
}

Outcome finite_index() {
  const int L = 12;
  const DeltaEstimate hat = subgroup_delta(group(), QuotientHom::parse("mod2", 2), L, std::nullopt, workers());
  const DeltaEstimate counting = delta_via_counting(sample_orbit(group(), L, workers()));
  const DeltaEstimate pressure_est = delta_via_pressure(group(), L, 1e-4, workers());
  const double gap_counting = std::abs(hat.value - counting.value);
  const double gap_pressure = std::abs(hat.value - pressure_est.value);
  return {gap_counting <= 0.05 && gap_pressure <= 0.05,
          fmt("delta_hat(mod2)=%.5f delta_counting=%.5f delta_pressure=%.5f gaps=%.5f,%.5f (limit 0.05)", hat.value,
              counting.value, pressure_est.value, gap_counting, gap_pressure)};
}

Outcome theorem_bound() {
  const CheckReport r = check_theorem_bound(group(), QuotientHom::abelianization(2), 13, workers());
  const double delta = r.params.at("delta");
  const double lower = std::log(3.0) / 3.0;
  return {r.pass && delta >= lower,
          fmt("delta_hat(commutator)=%.5f >= 0.5*delta-0.02=%.5f; delta=%.5f >= log3/3=%.5f", r.params.at("delta_hat"),
              0.5 * delta - 0.02, delta, lower)};
}

Outcome cross_estimator() {
  const int L = 13;
  const DeltaEstimate p = delta_via_pressure(group(), L, 1e-4, workers());
  const DeltaEstimate c = delta_via_counting(sample_orbit(group(), L, workers()));
  const double gap = std::abs(p.value - c.value);
  return {gap <= 0.03, fmt("pressure=%.5f counting=%.5f window=[%.3f,%.3f] gap=%.5f (limit 0.03)", p.value, c.value,
                           c.bracket[0], c.bracket[1], gap)};
}

struct Digest {
  std::uint64_t count = 0;
  LogSumExp series;
  double max_d = 0.0;
};

Digest enumerate_ball(int w) {
  const auto parts = orbit_map_parts(group(), 14, w, Digest{},
                                     [](Digest& acc, std::span<const Letter>, const Isometry&, double d) {
                                       ++acc.count;
                                       acc.series.add(-0.5 * d);
                                       acc.max_d = std::max(acc.max_d, d);
                                     });
  Digest total;
  for (const auto& p : parts) {
    total.count += p.count;
    total.series.merge(p.series);
    total.max_d = std::max(total.max_d, p.max_d);
  }
  return total;
}

Outcome performance() {
  auto t0 = Clock::now();
  const Digest one = enumerate_ball(1);
  const double t1 = seconds_since(t0);
  t0 = Clock::now();
  const Digest four = enumerate_ball(4);
  const double t4 = seconds_since(t0);
  const bool identical = one.count == four.count && one.series.value() == four.series.value() && one.max_d == four.max_d;
  const double speedup = t1 / t4;
  const unsigned cores = std::thread::hardware_concurrency();
  return {identical && one.count == 9565937 && t4 <= 10.0 && speedup >= 3.0,
          fmt("words=%llu t1=%.3fs t4=%.3fs speedup=%.2fx (need >= 3) identical=%s hardware_threads=%u",
              static_cast<unsigned long long>(one.count), t1, t4, speedup, identical ? "yes" : "no", cores)};
}

const std::vector<std::function<Outcome()>>& criteria() {
  static const std::vector<std::function<Outcome()>> all{word_arithmetic, triangle_audit, cosine_audit, lemma1_audit,
                                                         fiber_bound,     injectivity,    finite_index, theorem_bound,
                                                         cross_estimator, performance};
  return all;
}

bool run(int n) {
  Outcome o;
  try {
    o = criteria()[static_cast<std::size_t>(n - 1)]();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("CRITERION %d: %s %s\n", n, o.pass ? "PASS" : "FAIL", o.details.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const int count = static_cast<int>(criteria().size());
  if (argc > 1) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > count) {
      std::fprintf(stderr, "usage: acceptance [1-%d]\n", count);
      return 2;
    }
    return run(n) ? 0 : 1;
  }
  bool all = true;
  for (int n = 1; n <= count; ++n) all = run(n) && all;
  return all ? 0 : 1;
}
