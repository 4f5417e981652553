#include <doctest.h>

#include <set>

#include "explab/errors.hpp"
#include "explab/maps.hpp"

using namespace explab;

namespace {
ReducedWord W(const char* s) { return ReducedWord::parse(s); }
}  // namespace

TEST_CASE("conj_map examples and coset invariance") {
  const auto h = W("abAB");
  CHECK(conj_map(h, W("1")) == h);
  CHECK(conj_map(h, h) == h);
  CHECK(conj_map(h, W("a")) == W("bABa"));
  CHECK_THROWS_AS(conj_map(W("1"), W("a")), InvalidArgument);
  for (const auto& g : enumerate_words(2, 5)) {
    for (long n = -3; n <= 3; ++n) REQUIRE(conj_map(h, concat(power(h, n), g)) == conj_map(h, g));
  }
}

TEST_CASE("conj_map displacement bound") {
  const auto G = MarkedGroup::schottky_symmetric(2, 3.0);
  const auto h = W("abAB");
  const double d_h = evaluate(G, h).displacement();
  for_each_orbit_point(G, 10, [&](std::span<const Letter> w, const Isometry&, double d_g) {
    REQUIRE(evaluate(G, conj_map(h, ReducedWord(w))).displacement() <= 2.0 * d_g + d_h + 1e-9);
  });
}

TEST_CASE("fiber statistics") {
  const auto G = MarkedGroup::schottky_symmetric(2, 3.0);
  const auto phi = QuotientHom::abelianization(2);
  const auto h = W("abAB");
  const auto r1 = fiber_statistics(&G, h, phi, 8);
  CHECK(r1.declared_bound == 2);
  CHECK(r1.max_fiber <= 2);
  CHECK(r1.images_outside_kernel == 0);
  CHECK(r1.bound_holds());
  const auto r2 = fiber_statistics(&G, power(h, 2), phi, 8);
  CHECK(r2.declared_bound == 3);
  CHECK(r2.max_fiber <= 3);
  CHECK(r2.images_outside_kernel == 0);
  std::uint64_t total = 0;
  for (const auto& [size, count] : r1.histogram) total += size * count;
  CHECK(total == r1.cosets);
  CHECK_THROWS_AS(fiber_statistics(&G, W("a"), phi, 4), InvalidArgument);
}

TEST_CASE("prop3_free examples") {
  const auto h0 = W("abAB");
  const auto a = prop3_free(W("a"), h0, 2);
  CHECK(a.alpha == Letter::make(0, +1));
  CHECK(a.image == W("aaabABAA"));
  CHECK(a.image.length() == 8);
  const auto e = prop3_free(W("1"), h0, 2);
  CHECK(e.alpha == Letter::make(0, +1));
  CHECK(e.image == W("aabABA"));
  // alpha ranges over at most four letters, each giving one conjugate of h0.
  std::set<ReducedWord, ShortlexLess> taus;
  for (const auto& g : enumerate_words(2, 4)) {
    const Letter x = prop3_free(g, h0, 2).alpha;
    taus.insert(conjugate_by(h0, invert(ReducedWord{x})));
  }
  CHECK(taus.size() <= 4);
  CHECK_THROWS_AS(prop3_free(W("a"), W("1"), 2), InvalidArgument);
}

TEST_CASE("prop3_free length formula, |g| <= 6") {
  for (const auto& h0 : {W("abAB"), W("ab"), W("aBBA")}) {
    for (const auto& g : enumerate_words(2, 6)) {
      REQUIRE(prop3_free(g, h0, 2).image.length() == 2 * g.length() + h0.length() + 2);
    }
  }
}

TEST_CASE("prop3_malnormal examples") {
  const auto H = SubgroupGraph::build(2, {W("abAB"), W("aaBAAb")});
  REQUIRE(malnormal_violations(H, 3).empty());
  const auto& h1 = H.generators()[0];
  const auto& h2 = H.generators()[1];
  const auto in_h = prop3_malnormal(h1, H);
  CHECK(in_h.tau == 1);
  CHECK(in_h.image == concat(concat(h1, h2), invert(h1)));
  const auto rep = prop3_malnormal(W("b"), H);
  CHECK(rep.h_part.empty());
  CHECK(rep.tau == 0);
  CHECK(rep.image == concat(concat(W("b"), h1), W("B")));
  const auto shifted = prop3_malnormal(concat(W("b"), h2), H);
  CHECK(shifted.coset_rep == W("b"));
  CHECK(shifted.tau == 0);
}

TEST_CASE("injectivity scans") {
  const auto phi = QuotientHom::abelianization(2);
  const auto free = injectivity_scan_free(W("abAB"), 2, 8, phi);
  CHECK(free.scanned == 13121);
  CHECK(free.collisions.empty());
  CHECK(free.kernel_failures.empty());
  CHECK(free.length_formula_failures == 0);
  CHECK(free.ok());
  const auto l0 = injectivity_scan_free(W("abAB"), 2, 0, phi);
  CHECK(l0.scanned == 1);
  CHECK(l0.ok());
  CHECK_THROWS_AS(injectivity_scan_free(W("ab"), 2, 3, phi), InvalidArgument);

  const auto H = SubgroupGraph::build(2, {W("abAB"), W("aaBAAb")});
  const auto mal = injectivity_scan_malnormal(H, 6, phi);
  CHECK(mal.collisions.empty());
  CHECK(mal.kernel_failures.empty());
  // <a^2, b> conjugates a^2 into itself by a: the gate rejects it.
  CHECK_THROWS_AS(injectivity_scan_malnormal(SubgroupGraph::build(2, {W("aa"), W("b")}), 4, QuotientHom::trivial(2)),
                  InvalidArgument);

  // A non-injective map is caught.
  const auto bad = injectivity_scan("square", [](const ReducedWord& g) { return conj_map(W("abAB"), g); }, 2, 4, phi);
  CHECK_FALSE(bad.collisions.empty());
}
