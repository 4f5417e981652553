#include <doctest.h>

#include <cmath>
#include <random>

#include "explab/errors.hpp"
#include "explab/series.hpp"

using namespace explab;
using doctest::Approx;

TEST_CASE("log-sum-exp") {
  LogSumExp a;
  CHECK(a.empty());
  CHECK(std::isinf(a.value()));
  a.add(0.0);
  a.add(std::log(3.0));
  CHECK(a.value() == Approx(std::log(4.0)).epsilon(1e-15));
  LogSumExp b;
  b.add(-1000.0);
  b.add(-1000.0);
  CHECK(b.value() == Approx(-1000.0 + std::log(2.0)).epsilon(1e-15));
  a.merge(b);
  CHECK(a.value() == Approx(std::log(4.0)).epsilon(1e-15));
}

TEST_CASE("poincare_partial examples") {
  const std::vector<double> one{0.0};
  const std::vector<int> l0{0};
  CHECK(poincare_partial(one, l0, 0.7).log_sum == 0.0);
  const double t = 3.0, s = 0.4;
  const std::vector<double> two{0.0, t};
  const std::vector<int> l01{0, 1};
  const auto e = poincare_partial(two, l01, s);
  CHECK(e.log_sum == Approx(std::log1p(std::exp(-s * t))).epsilon(1e-15));
  CHECK(e.per_length.size() == 2);
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> d(0.0, 30.0);
  std::vector<double> disp(1000);
  std::vector<int> lens(1000, 1);
  double naive = 0.0;
  for (auto& x : disp) {
    x = d(rng);
    naive += std::exp(-0.6 * x);
  }
  CHECK(std::abs(poincare_partial(disp, lens, 0.6).log_sum - std::log(naive)) <= 1e-12);
}

TEST_CASE("poincare_partial over the group matches the orbit") {
  const auto G = MarkedGroup::schottky_symmetric(2, 3.0);
  double naive = 0.0;
  for (const auto& e : orbit_enumerate(G, 6)) naive += std::exp(-0.5 * e.displacement);
  CHECK(poincare_partial(G, 0.5, 6, 2).log_sum == Approx(std::log(naive)).epsilon(1e-12));
}

TEST_CASE("pressure") {
  const auto G = MarkedGroup::schottky_symmetric(2, 3.0);
  for (int L : {1, 4, 8}) {
    CHECK(pressure(G, 0.0, L) == Approx(std::log(static_cast<double>(reduced_word_count(2, L))) / L).epsilon(1e-12));
  }
  for (double s : {0.0, 0.3, 1.1}) CHECK(pressure(G, s, 1) == Approx(std::log(4.0) - 3.0 * s).epsilon(1e-12));
  const LayerPressure P(G, 8);
  for (int i = 0; i < 10; ++i) CHECK(P(0.1 * (i + 1)) < P(0.1 * i));
  CHECK_THROWS_AS(LayerPressure(G, 0), InvalidArgument);
}

TEST_CASE("delta_via_pressure") {
  const auto G = MarkedGroup::schottky_symmetric(2, 3.0);
  const auto est = delta_via_pressure(G, 10, 1e-4);
  CHECK(est.value >= std::log(3.0) / 3.0);
  CHECK(est.bracket[1] - est.bracket[0] <= 1e-4);
  CHECK(est.method == DeltaMethod::pressure_root);
  double previous = est.value;
  for (double t : {4.0, 5.0}) {
    const double v = delta_via_pressure(MarkedGroup::schottky_symmetric(2, t), 10, 1e-4).value;
    CHECK(v < previous);
    previous = v;
  }
}

TEST_CASE("delta_via_counting") {
  std::vector<double> radii, counts;
  for (int r = 5; r <= 15; ++r) {
    radii.push_back(r);
    counts.push_back(std::exp(0.5 * r));
  }
  const auto fit = fit_log_counts(radii, counts);
  CHECK(fit.slope == Approx(0.5).epsilon(1e-6));
  CHECK(fit.points == 11);
  // Stream with N(R) = round(1000 e^{R/2}) at R = 5..15.
  std::vector<double> disp;
  for (int r = 5; r <= 15; ++r) {
    const auto target = static_cast<std::size_t>(std::llround(1e3 * std::exp(0.5 * r)));
    while (disp.size() < target) disp.push_back(r - 0.25);
  }
  const auto e = delta_via_counting(disp, 5.0, 15.0, 1.0);
  CHECK(e.value == Approx(0.5).epsilon(1e-4));
  auto doubled = disp;
  doubled.insert(doubled.end(), disp.begin(), disp.end());
  const auto e2 = delta_via_counting(doubled, 5.0, 15.0, 1.0);
  CHECK(e2.value == Approx(e.value).epsilon(1e-12));
  CHECK(e2.diagnostics.at("intercept") - e.diagnostics.at("intercept") == Approx(std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(delta_via_counting(disp, 0.0, 4.5, 1.0), EmptyWindow);
  CHECK_THROWS_AS(delta_via_counting(disp, 5.0, 6.0, 1.0), InvalidArgument);
}

TEST_CASE("subgroup_delta") {
  const auto G = MarkedGroup::schottky_symmetric(2, 3.0);
  const auto full = delta_via_counting(sample_orbit(G, 10));
  const auto trivial = subgroup_delta(G, QuotientHom::trivial(2), 10);
  CHECK(trivial.value == full.value);
  CHECK(trivial.method == DeltaMethod::counting_regression);
  const auto mod2 = subgroup_delta(G, QuotientHom::parse("mod2", 2), 12);
  CHECK(std::abs(mod2.value - delta_via_pressure(G, 12).value) <= 0.05);
  const auto ab = subgroup_delta(G, QuotientHom::abelianization(2), 12);
  CHECK(ab.value >= 0.5 * delta_via_pressure(G, 12).value - 0.02);
  CHECK_THROWS_AS(subgroup_delta(G, QuotientHom::abelianization(2), 3), EmptyKernel);
}

TEST_CASE("lemma1_constant") {
  const double s = 0.5, t = 3.0;
  double direct = 0.0;
  for (int n = -200; n <= 200; ++n) direct += std::exp(-s * (std::abs(n) - 2) * t);
  direct *= std::pow(2.0, 2.0 * s);
  CHECK(std::abs(lemma1_constant(s, t) - direct) <= 1e-10 * direct);
  double previous = 0.0;
  for (double x : {0.1, 0.05, 0.01, 0.001, 1e-4}) {
    const double c = lemma1_constant(x, t);
    CHECK(c > previous);
    previous = c;
  }
  // d/dt log C = 2s (1 - 1 / (2 sinh(st))): C decreases in t while
  // sinh(st) < 1/2 and increases beyond.
  CHECK(lemma1_constant(0.1, 2.0) > lemma1_constant(0.1, 3.0));
  CHECK(lemma1_constant(0.1, 3.0) > lemma1_constant(0.1, 4.0));
  CHECK(lemma1_constant(0.5, 2.0) < lemma1_constant(0.5, 3.0));
  CHECK(lemma1_constant(0.5, 3.0) < lemma1_constant(0.5, 4.0));
  const double t_star = std::asinh(0.5) / 0.5;
  CHECK(lemma1_constant(0.5, t_star) < lemma1_constant(0.5, t_star - 0.05));
  CHECK(lemma1_constant(0.5, t_star) < lemma1_constant(0.5, t_star + 0.05));
  CHECK(log_lemma1_constant(s, t) == Approx(std::log(lemma1_constant(s, t))).epsilon(1e-14));
  CHECK_THROWS_AS(lemma1_constant(0.0, t), InvalidArgument);
  CHECK_THROWS_AS(lemma1_constant(s, 0.0), InvalidArgument);
}
