#include <doctest.h>

#include <cmath>

#include "explab/errors.hpp"
#include "explab/report.hpp"
#include "explab/verify.hpp"

using namespace explab;

namespace {
ReducedWord W(const char* s) { return ReducedWord::parse(s); }
}  // namespace

TEST_CASE("triangle conjugation") {
  const auto G = MarkedGroup::schottky_symmetric(2, 3.0);
  const auto r0 = check_triangle_conjugation(G, W("abAB"), 0);
  CHECK(r0.cases == 1);
  CHECK(std::abs(r0.worst_slack) < 1e-12);
  const auto r = check_triangle_conjugation(G, W("abAB"), 8, 2);
  CHECK(r.pass);
  CHECK(r.cases == 1 + 2 * (6561 - 1));
  CHECK(r.worst_slack >= -1e-9);
  CHECK_THROWS_AS(check_triangle_conjugation(G, W("1"), 3), InvalidArgument);
}

TEST_CASE("projection cosine") {
  const auto r = check_projection_cosine(2000, 5);
  CHECK(r.pass);
  CHECK(r.cases == 2002);
  CHECK(r.worst_slack >= -1e-9);
  CHECK(r.worst_slack <= 2.0 * std::log(2.0));
  const auto again = check_projection_cosine(2000, 5);
  CHECK(again.worst_slack == r.worst_slack);
  CHECK(again.witness == r.witness);
}

TEST_CASE("lemma1 coset") {
  const auto G = MarkedGroup::schottky_symmetric(2, 3.0);
  const auto r0 = check_lemma1_coset(G, W("abAB"), 0.5, 0, 20);
  CHECK(r0.cases == 1);
  CHECK(r0.pass);
  // Coset of the identity in the axis frame: sum_n e^{-s |n| t} against C(s).
  const double t = r0.params.at("translation_length");
  double lhs = 0.0;
  for (int n = -20; n <= 20; ++n) lhs += std::exp(-0.5 * std::abs(n) * t);
  CHECK(r0.worst_slack == doctest::Approx(log_lemma1_constant(0.5, t) - std::log(lhs)).epsilon(1e-9));
  const auto r = check_lemma1_coset(G, W("abAB"), 0.5, 6, 20);
  CHECK(r.pass);
  CHECK(r.params.at("tail_bound") > 0.0);
  CHECK_THROWS_AS(check_lemma1_coset(G, W("abAB"), 0.0, 3, 20), InvalidArgument);
}

TEST_CASE("main chain") {
  const auto G = MarkedGroup::schottky_symmetric(2, 3.0);
  const auto phi = QuotientHom::abelianization(2);
  const auto r0 = check_main_chain(G, phi, W("abAB"), 0.5, 0);
  CHECK(r0.pass);
  CHECK(r0.params.at("images") == 1.0);
  double previous = -1e300;
  for (double s : {0.3, 0.5, 0.7}) {
    const auto r = check_main_chain(G, phi, W("abAB"), s, 8, 2);
    CHECK(r.pass);
    CHECK(r.worst_slack > previous);
    previous = r.worst_slack;
  }
  CHECK_THROWS_AS(check_main_chain(G, phi, W("ab"), 0.5, 3), InvalidArgument);
}

TEST_CASE("theorem bound") {
  const auto G = MarkedGroup::schottky_symmetric(2, 3.0);
  const auto trivial = check_theorem_bound(G, QuotientHom::trivial(2), 10);
  CHECK(trivial.pass);
  const auto mod2 = check_theorem_bound(G, QuotientHom::parse("mod2", 2), 11);
  CHECK(mod2.pass);
  CHECK(std::abs(mod2.params.at("delta_hat") - mod2.params.at("delta")) <= 0.05);
}

TEST_CASE("report json") {
  const auto r = check_projection_cosine(10, 1);
  const Json j = to_json(r);
  CHECK(j["name"] == "projection_cosine");
  CHECK(j["cases"] == 12);
  CHECK(j["pass"] == true);
  const auto text = dump_json(j);
  CHECK(Json::parse(text) == j);
  CHECK(text.back() == '\n');
  DeltaEstimate e;
  e.value = std::nan("");
  CHECK(to_json(e)["value"].is_null());
  CHECK(to_json(e)["method"] == "pressure_root");
}
