#include "explab/maps.hpp"

#include <algorithm>
#include <unordered_map>

#include "explab/errors.hpp"

namespace explab {

ReducedWord conj_map(const ReducedWord& h, const ReducedWord& g) {
  if (h.empty()) throw InvalidArgument("conj_map: h must be non-trivial");
  return conjugate_by(h, g);
}

FiberReport fiber_statistics(const MarkedGroup* group, const ReducedWord& h, const QuotientHom& phi, int max_length) {
  if (h.empty()) throw InvalidArgument("fiber_statistics: h must be non-trivial");
  if (!phi.in_kernel(h)) throw InvalidArgument("fiber_statistics: h is not in the kernel");
  if (group && classify(evaluate(*group, h)).type != IsometryType::hyperbolic) {
    throw InvalidArgument("fiber_statistics: h is not hyperbolic");
  }
  FiberReport report;
  report.h = h;
  report.max_length = max_length;
  report.declared_bound = primitive_root(h).exponent + 1;
  std::unordered_map<ReducedWord, std::uint64_t, ReducedWordHash> fibers;
  for (int l = 0; l <= max_length; ++l) {
    for_each_word_of_length(phi.rank(), l, [&](std::span<const Letter> letters) {
      ReducedWord g(letters);
      if (cyclic_coset_rep(h, g) != g) return;
      ++report.cosets;
      ReducedWord image = conj_map(h, g);
      if (!phi.in_kernel(image)) ++report.images_outside_kernel;
      ++fibers[std::move(image)];
    });
  }
  for (const auto& [image, size] : fibers) {
    ++report.histogram[size];
    report.max_fiber = std::max(report.max_fiber, size);
  }
  return report;
}

FreeInjection prop3_free(const ReducedWord& g, const ReducedWord& h0, int rank) {
  if (rank < 2) throw InvalidArgument("prop3_free: the free group must have rank > 1");
  if (h0.empty()) throw InvalidArgument("prop3_free: h0 must be non-trivial");
  std::vector<Letter> excluded{h0.front().inverse(), h0.back()};
  if (!g.empty()) excluded.push_back(g.back().inverse());
  for (Letter alpha : {Letter::make(0, +1), Letter::make(0, -1), Letter::make(1, +1), Letter::make(1, -1)}) {
    if (std::find(excluded.begin(), excluded.end(), alpha) != excluded.end()) continue;
    const ReducedWord a{alpha};
    const ReducedWord tau = concat(concat(a, h0), invert(a));
    return {alpha, concat(concat(g, tau), invert(g))};
  }
  throw Error("prop3_free: no admissible letter");  // three exclusions never cover four letters
}

MalnormalInjection prop3_malnormal(const ReducedWord& g, const SubgroupGraph& H) {
  if (H.generators().size() != 2) throw InvalidArgument("prop3_malnormal: H must have exactly two generators");
  MalnormalInjection out;
  out.coset_rep = H.coset_canonical_rep(g);
  const ReducedWord h = concat(invert(out.coset_rep), g);
  auto rewritten = H.rewrite(h);
  if (!rewritten) throw Error("prop3_malnormal: g_j^-1 g is not in H (" + g.to_string() + ")");
  out.h_part = *rewritten;
  out.tau = (!out.h_part.empty() && out.h_part.back().generator() == 0) ? 1 : 0;
  const ReducedWord& tau = H.generators()[static_cast<std::size_t>(out.tau)];
  out.image = concat(concat(g, tau), invert(g));
  return out;
}

InjectionReport injectivity_scan(const std::string& name, const InjectionMap& map, int rank, int max_length,
                                 const QuotientHom& phi,
                                 const std::function<std::size_t(const ReducedWord&)>& expected_length) {
  if (phi.rank() != rank) throw InvalidArgument("injectivity_scan: homomorphism rank differs from word rank");
  InjectionReport report;
  report.map_name = name;
  report.max_length = max_length;
  std::unordered_map<ReducedWord, ReducedWord, ReducedWordHash> seen;
  for (int l = 0; l <= max_length; ++l) {
    for_each_word_of_length(rank, l, [&](std::span<const Letter> letters) {
      ReducedWord g(letters);
      ReducedWord image = map(g);
      ++report.scanned;
      report.max_image_length = std::max(report.max_image_length, image.length());
      if (expected_length && image.length() != expected_length(g)) ++report.length_formula_failures;
      if (!phi.in_kernel(image)) report.kernel_failures.push_back(g);
      auto [it, inserted] = seen.try_emplace(std::move(image), g);
      if (!inserted) report.collisions.emplace_back(it->second, g);
    });
  }
  return report;
}

InjectionReport injectivity_scan_free(const ReducedWord& h0, int rank, int max_length, const QuotientHom& phi) {
  if (h0.empty() || !phi.in_kernel(h0)) throw InvalidArgument("injectivity_scan: h0 must be a non-trivial kernel element");
  const std::size_t h0_len = h0.length();
  return injectivity_scan(
      "prop3_free(h0=" + h0.to_string() + ")",
      [&](const ReducedWord& g) { return prop3_free(g, h0, rank).image; }, rank, max_length, phi,
      [h0_len](const ReducedWord& g) { return 2 * g.length() + h0_len + 2; });
}

InjectionReport injectivity_scan_malnormal(const SubgroupGraph& H, int max_length, const QuotientHom& phi) {
  if (H.generators().size() != 2) throw InvalidArgument("injectivity_scan: H must have exactly two generators");
  for (const auto& h : H.generators()) {
    if (h.empty() || !phi.in_kernel(h)) throw InvalidArgument("injectivity_scan: H generators must be non-trivial kernel elements");
  }
  const auto violations = malnormal_violations(H, kMalnormalGateBound);
  if (!violations.empty()) {
    throw InvalidArgument("injectivity_scan: H is not malnormal, witness g=" + violations.front().g.to_string() +
                          " h=" + violations.front().h.to_string());
  }
  return injectivity_scan(
      "prop3_malnormal(H=<" + H.generators()[0].to_string() + "," + H.generators()[1].to_string() + ">)",
      [&](const ReducedWord& g) { return prop3_malnormal(g, H).image; }, H.rank(), max_length, phi);
}

}  // namespace explab
