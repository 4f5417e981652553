#pragma once

// Orientation-preserving isometries of the Poincare disc, stored as SU(1,1)
// matrices [[a, b], [conj(b), conj(a)]] acting by z -> (a z + b) / (conj(b) z + conj(a)).

#include <complex>
#include <string>
#include <string_view>

namespace explab {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

class DiscPoint {
 public:
  DiscPoint() = default;
  /// Throws InvalidArgument unless |z| < 1.
  explicit DiscPoint(Complex z);
  Complex z() const { return z_; }
  /// 1 - |z|^2, computed as (1 - |z|)(1 + |z|).
  double conformal_gap() const;

 private:
  Complex z_{0.0, 0.0};
};

class Isometry {
 public:
  Isometry() = default;  // identity
  Isometry(Complex a, Complex b) : a_(a), b_(b) {}

  static Isometry identity() { return {}; }
  /// Translation by `t` along the diameter at angle `angle`.
  static Isometry boost(double t, double angle = 0.0);
  static Isometry rotation(double theta);
  /// The isometry sending 0 to w: z -> (z + w) / (1 + conj(w) z).
  static Isometry translation_to(Complex w);

  Complex a() const { return a_; }
  Complex b() const { return b_; }

  Isometry inverse() const { return {std::conj(a_), -b_}; }
  /// Product, renormalized onto |a|^2 - |b|^2 = 1 while that determinant is
  /// still resolvable in double precision.
  Isometry operator*(const Isometry& rhs) const;

  Complex apply(Complex z) const;
  DiscPoint apply(DiscPoint z) const;

  /// d(0, m(0)) = 2 log(|a| + |b|); safe for |a| far beyond the point where
  /// m(0) rounds onto the unit circle.
  double displacement() const;
  double trace() const { return 2.0 * a_.real(); }
  double determinant() const { return std::norm(a_) - std::norm(b_); }
  /// |det - 1| relative to |a|^2 + |b|^2.
  double det_drift() const;
  Isometry renormalized() const;

  /// "Re a Im a Re b Im b" with 17 significant digits.
  std::string serialize() const;
  static Isometry parse(std::string_view text);

 private:
  Complex a_{1.0, 0.0};
  Complex b_{0.0, 0.0};
};

/// Hyperbolic distance, via 2 asinh(|z1 - z2| / sqrt(gap1 gap2)).
double dist(DiscPoint z1, DiscPoint z2);
double dist(Complex z1, Complex z2);

enum class IsometryType { identity, elliptic, parabolic, hyperbolic };
std::string_view to_string(IsometryType type);

struct Classification {
  IsometryType type = IsometryType::identity;
  double translation_length = 0.0;  // hyperbolic only
  bool ambiguous = false;           // | |trace| - 2 | close to the tolerance
};
Classification classify(const Isometry& m, double tol = kDefaultTolerance);

/// Oriented geodesic between two distinct boundary points.
class Geodesic {
 public:
  /// Throws InvalidArgument unless |p| = |q| = 1 (1e-12) and p != q.
  Geodesic(Complex p, Complex q);
  Complex start() const { return p_; }
  Complex end() const { return q_; }

 private:
  Complex p_;
  Complex q_;
};

/// Axis of a hyperbolic isometry, attracting fixed point as start().
/// Throws InvalidArgument for non-hyperbolic input.
Geodesic axis(const Isometry& m, double tol = kDefaultTolerance);

struct Projection {
  DiscPoint foot;
  /// Arclength along the geodesic from its point nearest the origin,
  /// positive towards end().
  double coordinate = 0.0;
};
Projection project_to_geodesic(DiscPoint z, const Geodesic& g);

/// Returns m with m h m^-1 a boost along the real diameter (attracting
/// point at +1). Throws InvalidArgument for non-hyperbolic h.
Isometry conjugate_to_standard(const Isometry& h, double tol = kDefaultTolerance);

}  // namespace explab
