#pragma once

#include <cmath>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "explab/freegroup.hpp"
#include "explab/hypgeom.hpp"
#include "explab/parallel.hpp"

namespace explab {

struct IsometricCircle {
  Complex center;
  double radius = 0.0;
};

/// k hyperbolic generators bound to the letters a, b, c, ..., certified
/// Schottky (hence discrete, free and purely hyperbolic) by pairwise disjoint
/// isometric circles of the generators and their inverses.
class MarkedGroup {
 public:
  /// Generator j is the boost of length t along the diameter at angle pi j / k.
  /// Throws CertificateFailed when the circles overlap.
  static MarkedGroup schottky_symmetric(int rank, double t);
  /// Arbitrary generators; certificate checked the same way.
  static MarkedGroup from_generators(std::vector<Isometry> generators);

  /// Same abstract group with every generator replaced by m g m^-1, i.e. the
  /// orbit of m^-1(0) seen from the origin. Conjugation preserves
  /// discreteness and freeness, so the original certificate is kept.
  MarkedGroup conjugated(const Isometry& m) const;

  int rank() const { return rank_; }
  const Isometry& matrix(Letter x) const { return letters_[x.code()]; }
  const Isometry& generator(int j) const { return letters_[2 * j]; }
  /// Translation length of the symmetric family, NaN for custom generators.
  double translation_parameter() const { return t_; }
  const std::vector<IsometricCircle>& certificate() const { return circles_; }
  bool conjugated_frame() const { return conjugated_; }
  double max_generator_displacement() const;
  std::string description() const;

 private:
  int rank_ = 0;
  double t_ = std::nan("");
  std::vector<Isometry> letters_;  // indexed by letter code
  std::vector<IsometricCircle> circles_;
  bool conjugated_ = false;
};

/// Ordered product of generator matrices along the word.
Isometry evaluate(const MarkedGroup& group, std::span<const Letter> word);
inline Isometry evaluate(const MarkedGroup& group, const ReducedWord& w) { return evaluate(group, w.letters()); }

struct OrbitEntry {
  ReducedWord word;
  Isometry matrix;
  double displacement = 0.0;
};

/// Work unit of an orbit enumeration: either every word shorter than the
/// split depth (the root part) or the subtree below one prefix of exactly
/// that length. Parts depend only on (rank, max_length), never on the worker
/// count, so merging per-part results in part order is reproducible.
struct OrbitPart {
  std::vector<Letter> prefix;
  bool root = false;
};

inline constexpr int kOrbitSplitDepth = 2;

std::vector<OrbitPart> orbit_parts(int rank, int max_length);

namespace detail {

template <class Visit>
void orbit_subtree(const MarkedGroup& group, int max_length, std::vector<Letter>& word, const Isometry& m, Visit& visit) {
  visit(std::span<const Letter>(word), m, m.displacement());
  if (static_cast<int>(word.size()) == max_length) return;
  const int codes = 2 * group.rank();
  for (int c = 0; c < codes; ++c) {
    const Letter x = Letter::from_code(c);
    if (!word.empty() && word.back().cancels(x)) continue;
    word.push_back(x);
    orbit_subtree(group, max_length, word, m * group.matrix(x), visit);
    word.pop_back();
  }
}

template <class Visit>
void root_words(const MarkedGroup& group, int depth_limit, std::vector<Letter>& word, const Isometry& m, Visit& visit) {
  visit(std::span<const Letter>(word), m, m.displacement());
  if (static_cast<int>(word.size()) + 1 >= depth_limit) return;
  const int codes = 2 * group.rank();
  for (int c = 0; c < codes; ++c) {
    const Letter x = Letter::from_code(c);
    if (!word.empty() && word.back().cancels(x)) continue;
    word.push_back(x);
    root_words(group, depth_limit, word, m * group.matrix(x), visit);
    word.pop_back();
  }
}

}  // namespace detail

/// Visits visit(span<const Letter> word, const Isometry& m, double displacement)
/// for every word of the part, building each matrix with one product from
/// its parent. Order: depth-first, parent before children, letter order.
template <class Visit>
void traverse_part(const MarkedGroup& group, int max_length, const OrbitPart& part, Visit&& visit) {
  std::vector<Letter> word;
  word.reserve(static_cast<std::size_t>(max_length) + 1);
  if (part.root) {
    detail::root_words(group, std::min(kOrbitSplitDepth, max_length + 1), word, Isometry::identity(), visit);
    return;
  }
  word = part.prefix;
  detail::orbit_subtree(group, max_length, word, evaluate(group, part.prefix), visit);
}

/// Runs visit(acc, word, m, displacement) over the whole ball of radius
/// max_length, one accumulator per part; returns the accumulators in part
/// order for the caller to merge.
template <class Acc, class Visit>
std::vector<Acc> orbit_map_parts(const MarkedGroup& group, int max_length, int workers, const Acc& init, Visit visit) {
  const auto parts = orbit_parts(group.rank(), max_length);
  std::vector<Acc> acc(parts.size(), init);
  parallel_for(parts.size(), workers, [&](std::size_t i) {
    Acc& local = acc[i];
    traverse_part(group, max_length, parts[i],
                  [&](std::span<const Letter> w, const Isometry& m, double d) { visit(local, w, m, d); });
  });
  return acc;
}

/// Sequential visit of the whole ball in part order.
template <class Visit>
void for_each_orbit_point(const MarkedGroup& group, int max_length, Visit&& visit) {
  for (const auto& part : orbit_parts(group.rank(), max_length)) traverse_part(group, max_length, part, visit);
}

/// Every orbit entry with |word| <= max_length in shortlex order, dropping
/// entries whose displacement exceeds `radius` when radius >= 0.
std::vector<OrbitEntry> orbit_enumerate(const MarkedGroup& group, int max_length, double radius = -1.0);

/// Orbit dump: header "word,displacement", one row per entry.
void write_orbit_csv(std::ostream& out, const std::vector<OrbitEntry>& entries);

struct CosetEntry {
  ReducedWord rep;       // shortlex-least element of <h> rep
  double displacement;   // min displacement over the coset
  long window;           // |n| range searched for the minimum
};

/// Symmetric window of powers n with |n| <= window for the displacement
/// minimum of <h> g. Any n with d(h^n g) <= d(g) obeys
/// |n| t_h <= d(h^n) <= d(h^n g) + d(g) <= 2 d(g).
long coset_window(double displacement_of_g, double translation_length_of_h);

/// min over |n| <= window of d(h^n g).
double coset_min_displacement(const MarkedGroup& group, const ReducedWord& h, const ReducedWord& g, long window);

/// One entry per right coset <h> g meeting the word ball of radius
/// max_length, in shortlex order of the representatives.
std::vector<CosetEntry> coset_enumerate(const MarkedGroup& group, const ReducedWord& h, int max_length);

}  // namespace explab
