#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "explab/freegroup.hpp"
#include "explab/kleinian.hpp"
#include "explab/quotient.hpp"
#include "explab/stallings.hpp"

namespace explab {

/// iota_h(g) = g^-1 h g. Constant on right cosets <h> g.
ReducedWord conj_map(const ReducedWord& h, const ReducedWord& g);

struct FiberReport {
  ReducedWord h;
  int max_length = 0;
  std::uint64_t cosets = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // fiber size -> number of images
  std::uint64_t max_fiber = 0;
  /// primitive exponent of h plus one; <h> has index exponent in the
  /// centralizer <root> in a torsion-free purely hyperbolic group.
  int declared_bound = 0;
  std::uint64_t images_outside_kernel = 0;
  bool bound_holds() const { return max_fiber <= static_cast<std::uint64_t>(declared_bound); }
};

/// Groups the canonical representatives of <h>\Gamma of length <= max_length
/// by their image under iota_h. Throws InvalidArgument if h is trivial, not
/// in ker(phi), or (when a group is supplied) not hyperbolic.
FiberReport fiber_statistics(const MarkedGroup* group, const ReducedWord& h, const QuotientHom& phi, int max_length);

struct FreeInjection {
  Letter alpha;
  ReducedWord image;  // g alpha h0 alpha^-1 g^-1
};

/// Injection into the normal subgroup for a free group of rank >= 2: alpha
/// is the first of a < A < b < B avoiding the inverse of the last letter of
/// g, the inverse of the first letter of h0 and the last letter of h0.
FreeInjection prop3_free(const ReducedWord& g, const ReducedWord& h0, int rank);

struct MalnormalInjection {
  int tau = 0;  // 0 -> h1, 1 -> h2
  ReducedWord coset_rep;
  ReducedWord h_part;  // over the decoration alphabet a = h1, b = h2
  ReducedWord image;   // g tau g^-1
};

/// Injection through a rank-two malnormal subgroup H = <h1, h2>: write
/// g = g_j h with g_j the canonical left-coset representative, take
/// tau = h2 if the last H-letter of h is h1^{+-1}, else h1 (also for h = 1).
MalnormalInjection prop3_malnormal(const ReducedWord& g, const SubgroupGraph& H);

struct InjectionReport {
  std::string map_name;
  int max_length = 0;
  std::uint64_t scanned = 0;
  std::vector<std::pair<ReducedWord, ReducedWord>> collisions;
  std::vector<ReducedWord> kernel_failures;
  std::size_t max_image_length = 0;
  /// Inputs whose image length differs from 2|g| + |h0| + 2 (free case only).
  std::uint64_t length_formula_failures = 0;
  bool ok() const { return collisions.empty() && kernel_failures.empty() && length_formula_failures == 0; }
};

using InjectionMap = std::function<ReducedWord(const ReducedWord&)>;

/// Applies `map` to every reduced word of length <= max_length over `rank`
/// generators, recording collisions and images outside ker(phi).
/// `expected_length`, when set, is checked against every image length.
InjectionReport injectivity_scan(const std::string& name, const InjectionMap& map, int rank, int max_length,
                                 const QuotientHom& phi,
                                 const std::function<std::size_t(const ReducedWord&)>& expected_length = {});

/// Free-case scan with h0 fixed; requires h0 in ker(phi).
InjectionReport injectivity_scan_free(const ReducedWord& h0, int rank, int max_length, const QuotientHom& phi);

inline constexpr int kMalnormalGateBound = 4;

/// Malnormal-case scan; rejects H (InvalidArgument) when bounded search up to
/// kMalnormalGateBound already finds a malnormality violation, or when h1, h2
/// are not in ker(phi).
InjectionReport injectivity_scan_malnormal(const SubgroupGraph& H, int max_length, const QuotientHom& phi);

}  // namespace explab
