#include "explab/kleinian.hpp"

#include <algorithm>
#include <numbers>
#include <ostream>
#include <sstream>

#include "explab/errors.hpp"

namespace explab {

namespace {

// Isometric circle of z -> (a z + b)/(conj(b) z + conj(a)): |conj(b) z + conj(a)| = 1.
IsometricCircle isometric_circle(const Isometry& m) {
  return {-std::conj(m.a()) / std::conj(m.b()), 1.0 / std::abs(m.b())};
}

std::vector<IsometricCircle> certify(const std::vector<Isometry>& letters) {
  std::vector<IsometricCircle> circles;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!(std::abs(letters[i].b()) > 0.0)) {
      throw CertificateFailed("generator fixes the origin; it has no isometric circle");
    }
    if (classify(letters[i]).type != IsometryType::hyperbolic) {
      throw CertificateFailed("generator " + std::to_string(i / 2) + " is not hyperbolic");
    }
    circles.push_back(isometric_circle(letters[i]));
  }
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      const double gap = std::abs(circles[i].center - circles[j].center);
      if (!(gap > circles[i].radius + circles[j].radius)) {
        std::ostringstream msg;
        msg << "isometric circles " << i << " and " << j << " overlap (center gap " << gap << " <= radius sum "
            << circles[i].radius + circles[j].radius << ")";
        throw CertificateFailed(msg.str());
      }
    }
  }
  return circles;
}

}  // namespace

MarkedGroup MarkedGroup::from_generators(std::vector<Isometry> generators) {
  if (generators.size() < 2) throw InvalidArgument("a marked group needs at least two generators");
  if (static_cast<int>(generators.size()) > kMaxRank) throw InvalidArgument("too many generators");
  MarkedGroup g;
  g.rank_ = static_cast<int>(generators.size());
  for (const auto& m : generators) {
    g.letters_.push_back(m.renormalized());
    g.letters_.push_back(m.renormalized().inverse());
  }
  g.circles_ = certify(g.letters_);
  return g;
}

MarkedGroup MarkedGroup::schottky_symmetric(int rank, double t) {
  if (rank < 2) throw InvalidArgument("schottky_symmetric: rank must be >= 2");
  if (!(t > 0.0)) throw InvalidArgument("schottky_symmetric: t must be positive");
  std::vector<Isometry> gens;
  for (int j = 0; j < rank; ++j) gens.push_back(Isometry::boost(t, std::numbers::pi * j / rank));
  MarkedGroup g = from_generators(std::move(gens));
  g.t_ = t;
  return g;
}

MarkedGroup MarkedGroup::conjugated(const Isometry& m) const {
  MarkedGroup g = *this;
  const Isometry m_inv = m.inverse();
  for (auto& x : g.letters_) x = (m * x * m_inv).renormalized();
  g.conjugated_ = true;
  return g;
}

double MarkedGroup::max_generator_displacement() const {
  double out = 0.0;
  for (const auto& m : letters_) out = std::max(out, m.displacement());
  return out;
}

std::string MarkedGroup::description() const {
  std::ostringstream out;
  if (!std::isnan(t_)) {
    out << "schottky_symmetric(k=" << rank_ << ", t=" << t_ << ")";
  } else {
    out << "schottky(k=" << rank_ << ", custom generators)";
  }
  if (conjugated_) out << " [conjugated frame]";
  return out.str();
}

Isometry evaluate(const MarkedGroup& group, std::span<const Letter> word) {
  Isometry m;
  for (Letter x : word) {
    if (x.generator() >= group.rank()) throw InvalidArgument("word uses a generator beyond the group rank");
    m = m * group.matrix(x);
  }
  return m;
}

std::vector<OrbitPart> orbit_parts(int rank, int max_length) {
  if (max_length < 0) throw InvalidArgument("orbit enumeration needs max_length >= 0");
  std::vector<OrbitPart> parts;
  parts.push_back({{}, true});
  if (max_length >= kOrbitSplitDepth) {
    for_each_word_of_length(rank, kOrbitSplitDepth, [&](std::span<const Letter> w) {
      parts.push_back({std::vector<Letter>(w.begin(), w.end()), false});
    });
  }
  return parts;
}

std::vector<OrbitEntry> orbit_enumerate(const MarkedGroup& group, int max_length, double radius) {
  std::vector<OrbitEntry> out;
  for_each_orbit_point(group, max_length, [&](std::span<const Letter> w, const Isometry& m, double d) {
    if (radius < 0.0 || d <= radius) out.push_back({ReducedWord(w), m, d});
  });
  std::stable_sort(out.begin(), out.end(),
                   [](const OrbitEntry& x, const OrbitEntry& y) { return shortlex_less(x.word, y.word); });
  return out;
}

void write_orbit_csv(std::ostream& out, const std::vector<OrbitEntry>& entries) {
  out << "word,displacement\n";
  char buf[64];
  for (const auto& e : entries) {
    std::snprintf(buf, sizeof buf, "%.17g", e.displacement);
    out << e.word.to_string() << ',' << buf << '\n';
  }
}

long coset_window(double displacement_of_g, double translation_length_of_h) {
  return static_cast<long>(std::ceil(2.0 * displacement_of_g / translation_length_of_h)) + 2;
}

double coset_min_displacement(const MarkedGroup& group, const ReducedWord& h, const ReducedWord& g, long window) {
  const Isometry mh = evaluate(group, h);
  const Isometry mh_inv = mh.inverse();
  const Isometry mg = evaluate(group, g);
  double best = mg.displacement();
  Isometry up = mg;
  Isometry down = mg;
  for (long n = 1; n <= window; ++n) {
    up = mh * up;
    down = mh_inv * down;
    best = std::min({best, up.displacement(), down.displacement()});
  }
  return best;
}

std::vector<CosetEntry> coset_enumerate(const MarkedGroup& group, const ReducedWord& h, int max_length) {
  if (h.empty()) throw InvalidArgument("coset_enumerate: h must be non-trivial");
  const Classification c = classify(evaluate(group, h));
  if (c.type != IsometryType::hyperbolic) throw InvalidArgument("coset_enumerate: h must be hyperbolic");
  std::vector<CosetEntry> out;
  for (int l = 0; l <= max_length; ++l) {
    for_each_word_of_length(group.rank(), l, [&](std::span<const Letter> letters) {
      ReducedWord g(letters);
      if (cyclic_coset_rep(h, g) != g) return;
      const long window = coset_window(evaluate(group, g).displacement(), c.translation_length);
      out.push_back({g, coset_min_displacement(group, h, g, window), window});
    });
  }
  return out;
}

}  // namespace explab
