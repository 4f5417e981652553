#include "explab/hypgeom.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "explab/errors.hpp"

namespace explab {

namespace {

// Beyond this |a|^2 the computed determinant is dominated by rounding in a
// and b, so renormalizing would inject noise instead of removing drift.
constexpr double kRenormalizeLimit = 1e6;

}  // namespace

DiscPoint::DiscPoint(Complex z) : z_(z) {
  if (!(std::abs(z) < 1.0)) throw InvalidArgument("disc point must satisfy |z| < 1");
}

double DiscPoint::conformal_gap() const {
  const double r = std::abs(z_);
  return (1.0 - r) * (1.0 + r);
}

Isometry Isometry::boost(double t, double angle) {
  return {Complex(std::cosh(t / 2.0), 0.0), std::sinh(t / 2.0) * std::polar(1.0, angle)};
}

Isometry Isometry::rotation(double theta) { return {std::polar(1.0, theta / 2.0), Complex(0.0, 0.0)}; }

Isometry Isometry::translation_to(Complex w) {
  const double r = std::abs(w);
  if (!(r < 1.0)) throw InvalidArgument("translation target must lie in the open disc");
  const double scale = 1.0 / std::sqrt((1.0 - r) * (1.0 + r));
  return {Complex(scale, 0.0), w * scale};
}

Isometry Isometry::operator*(const Isometry& rhs) const {
  Isometry out(a_ * rhs.a_ + b_ * std::conj(rhs.b_), a_ * rhs.b_ + b_ * std::conj(rhs.a_));
  if (std::norm(out.a_) <= kRenormalizeLimit) out = out.renormalized();
  return out;
}

Isometry Isometry::renormalized() const {
  const double det = determinant();
  if (!(det > 0.0)) return *this;
  const double s = 1.0 / std::sqrt(det);
  return {a_ * s, b_ * s};
}

double Isometry::det_drift() const {
  return std::abs(determinant() - 1.0) / (std::norm(a_) + std::norm(b_));
}

Complex Isometry::apply(Complex z) const { return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_)); }

DiscPoint Isometry::apply(DiscPoint z) const { return DiscPoint(apply(z.z())); }

double Isometry::displacement() const { return 2.0 * std::log(std::abs(a_) + std::abs(b_)); }

std::string Isometry::serialize() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g", a_.real(), a_.imag(), b_.real(), b_.imag());
  return buf;
}

Isometry Isometry::parse(std::string_view text) {
  std::string s(text);
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(s);
  double v[4];
  for (double& x : v) {
    if (!(in >> x)) throw InvalidArgument("isometry needs four numbers: Re a, Im a, Re b, Im b");
  }
  std::string rest;
  if (in >> rest) throw InvalidArgument("trailing text after isometry");
  return {Complex(v[0], v[1]), Complex(v[2], v[3])};
}

double dist(Complex z1, Complex z2) { return dist(DiscPoint(z1), DiscPoint(z2)); }

double dist(DiscPoint z1, DiscPoint z2) {
  const double chord = std::abs(z1.z() - z2.z());
  return 2.0 * std::asinh(chord / std::sqrt(z1.conformal_gap() * z2.conformal_gap()));
}

std::string_view to_string(IsometryType type) {
  switch (type) {
    case IsometryType::identity: return "identity";
    case IsometryType::elliptic: return "elliptic";
    case IsometryType::parabolic: return "parabolic";
    case IsometryType::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

Classification classify(const Isometry& m, double tol) {
  const double abs_trace = std::abs(m.trace());
  Classification c;
  c.ambiguous = std::abs(abs_trace - 2.0) <= 100.0 * tol;
  if (std::abs(abs_trace - 2.0) <= tol) {
    c.type = std::abs(m.b()) <= tol ? IsometryType::identity : IsometryType::parabolic;
  } else if (abs_trace < 2.0) {
    c.type = IsometryType::elliptic;
  } else {
    c.type = IsometryType::hyperbolic;
    c.translation_length = 2.0 * std::acosh(std::abs(m.a().real()));
  }
  return c;
}

Geodesic::Geodesic(Complex p, Complex q) : p_(p), q_(q) {
  if (std::abs(std::abs(p) - 1.0) > 1e-12 || std::abs(std::abs(q) - 1.0) > 1e-12) {
    throw InvalidArgument("geodesic endpoints must lie on the unit circle");
  }
  if (std::abs(p - q) <= 1e-12) throw InvalidArgument("geodesic endpoints must be distinct");
}

Geodesic axis(const Isometry& m, double tol) {
  if (classify(m, tol).type != IsometryType::hyperbolic) throw InvalidArgument("axis: isometry is not hyperbolic");
  // Fixed points solve conj(b) z^2 - 2i Im(a) z - b = 0.
  Complex a = m.a();
  Complex b = m.b();
  if (a.real() < 0.0) {
    a = -a;
    b = -b;
  }
  const double root = std::sqrt((a.real() - 1.0) * (a.real() + 1.0));
  Complex z1 = (Complex(0.0, a.imag()) + root) / std::conj(b);
  Complex z2 = (Complex(0.0, a.imag()) - root) / std::conj(b);
  z1 /= std::abs(z1);
  z2 /= std::abs(z2);
  // Attracting fixed point: |derivative| = 1 / |conj(b) z + conj(a)|^2 < 1.
  if (std::abs(std::conj(b) * z1 + std::conj(a)) > std::abs(std::conj(b) * z2 + std::conj(a))) return {z1, z2};
  return {z2, z1};
}

Projection project_to_geodesic(DiscPoint z, const Geodesic& g) {
  // T(z) = (z - p)/(z - q) carries the disc onto a half-plane bounded by a
  // line through 0 and the geodesic onto the orthogonal ray; there the foot
  // of T(z) is |T(z)| times the ray direction and arclength is log|T(z)|.
  const Complex p = g.start();
  const Complex q = g.end();
  auto to_plane = [&](Complex w) { return (w - p) / (w - q); };
  const Complex mid = std::abs(p + q) > 1e-8 ? (p + q) / std::abs(p + q) : Complex(0.0, 1.0) * p;
  const Complex line = to_plane(mid) / std::abs(to_plane(mid));
  Complex ray = Complex(0.0, 1.0) * line;
  const Complex origin_image = p / q;
  if ((std::conj(ray) * origin_image).real() < 0.0) ray = -ray;

  const Complex zeta = to_plane(z.z());
  const Complex foot_image = std::abs(zeta) * ray;
  const Complex foot = (p - q * foot_image) / (1.0 - foot_image);
  return {DiscPoint(foot), std::log(std::abs(zeta))};
}

Isometry conjugate_to_standard(const Isometry& h, double tol) {
  const Geodesic ax = axis(h, tol);
  const Complex f = project_to_geodesic(DiscPoint(), ax).foot.z();
  const Isometry recenter = Isometry::translation_to(f).inverse();
  const Complex p = recenter.apply(ax.start());
  return (Isometry::rotation(-std::arg(p)) * recenter).renormalized();
}

}  // namespace explab
