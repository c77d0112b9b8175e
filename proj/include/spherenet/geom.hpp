#pragma once

// Spherical geometry kernel for partition nets on the unit sphere S^2.
//
// Orientation and sign convention, used everywhere in this library:
// an arc is directed from start to end; at a point x with unit tangent t the
// leftward surface direction is x × t. The signed geodesic curvature kappa is
// taken with respect to that leftward direction, so kappa > 0 means the
// supporting circle's near pole lies on the left of the direction of travel.
// An interface separating a higher-pressure region (left) from a
// lower-pressure one (right) then has kappa = pressure(left) - pressure(right).
//
// Tolerances: construction 1e-12, boundary closure 1e-10, geometric identity
// checks 1e-9.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace spherenet {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kClosureTol = 1e-10;
inline constexpr double kIdentityTol = 1e-9;

class geom_error : public std::domain_error {
 public:
  explicit geom_error(const std::string& what) : std::domain_error(what) {}
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend Vec3 operator*(const Vec3& v, double s) { return s * v; }
  friend Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (n == 0.0) throw geom_error("cannot normalize the zero vector");
  return (1.0 / n) * v;
}

// Rotates v by angle around a unit axis (Rodrigues).
inline Vec3 rotate(const Vec3& v, const Vec3& axis, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return c * v + s * cross(axis, v) + ((1.0 - c) * dot(axis, v)) * axis;
}

// Unit vector on S^2. Constructors normalize their input and reject the zero
// vector; a stored point satisfies |x^2+y^2+z^2 - 1| < 1e-12.
class SpherePoint {
 public:
  SpherePoint() : v_{0.0, 0.0, 1.0} {}
  SpherePoint(double x, double y, double z) : SpherePoint(Vec3{x, y, z}) {}
  explicit SpherePoint(const Vec3& v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw geom_error("sphere point must be a finite nonzero vector");
    }
    v_ = (1.0 / n) * v;
  }

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    return a.v_.x == b.v_.x && a.v_.y == b.v_.y && a.v_.z == b.v_.z;
  }

 private:
  Vec3 v_;
};

// Great-circle distance in [0, pi], stable near both ends of the range.
inline double spherical_distance(const SpherePoint& p, const SpherePoint& q) {
  return std::atan2(norm(cross(p.vec(), q.vec())), dot(p.vec(), q.vec()));
}

// Least boundary length enclosing area A on the unit sphere.
inline double isoperimetric_profile(double area) {
  if (!(area >= 0.0 && area <= kFourPi)) {
    throw geom_error("isoperimetric profile: area outside [0, 4*pi]");
  }
  return std::sqrt(area * (kFourPi - area));
}

// Boundary-length lower bound for a region of area k split into parts of
// area t and k - t.
inline double split_profile(double k, double t) {
  if (!(k > 0.0 && k <= kTwoPi)) throw geom_error("split profile: k outside (0, 2*pi]");
  if (!(t >= 0.0 && t <= k)) throw geom_error("split profile: t outside [0, k]");
  return std::sqrt(t * (kFourPi - t)) + std::sqrt((k - t) * (kFourPi - k + t));
}

// A full circle on the sphere: spherical center and angular radius in (0, pi).
// Full circles are represented by CircleSpec, never by a degenerate Arc.
struct CircleSpec {
  SpherePoint center;
  double radius = 0.0;

  double geodesic_curvature() const { return std::cos(radius) / std::sin(radius); }
  double perimeter() const { return kTwoPi * std::sin(radius); }
  double enclosed_area() const { return kTwoPi * (1.0 - std::cos(radius)); }
};

// The circle enclosing the given area about `center` (isoperimetric equality
// case).
inline CircleSpec circle_for_area(double area, const SpherePoint& center = SpherePoint{0.0, 0.0, 1.0}) {
  if (!(area > 0.0 && area < kFourPi)) {
    throw geom_error("circle_for_area: area outside (0, 4*pi)");
  }
  return CircleSpec{center, std::acos(1.0 - area / kTwoPi)};
}

// Directed constant-curvature arc between two distinct sphere points.
//
// The supporting circle has spherical radius r = arccot(kappa) in (0, pi) and
// its pole on the left of the direction of travel; the arc sweeps the central
// angle counterclockwise about that pole. Of the two arcs joining start to
// end on the supporting circle, minor selects the one with central angle
// <= pi.
class Arc {
 public:
  static Arc between(const SpherePoint& start, const SpherePoint& end, double kappa, bool minor) {
    const Vec3 p = start.vec();
    const Vec3 q = end.vec();
    const double cos_half = 0.5 * norm(p + q);   // cos(d/2)
    const double sin_half = 0.5 * norm(p - q);   // sin(d/2)
    if (sin_half < 1e-12) {
      throw geom_error("degenerate arc: coincident endpoints (full circles are CircleSpec)");
    }
    const double hyp = std::hypot(1.0, kappa);
    const double cos_r = kappa / hyp;
    const double sin_r = 1.0 / hyp;
    if (cos_half < 1e-9) {
      if (kappa == 0.0) {
        throw geom_error("ambiguous geodesic: antipodal endpoints admit infinitely many great-circle arcs");
      }
      throw geom_error("no such circle: endpoints antipodal but requested curvature is nonzero");
    }
    double alpha = cos_r / cos_half;
    if (std::abs(alpha) > 1.0 + 1e-12) {
      throw geom_error("no such circle: endpoint chord exceeds the circle's planar diameter");
    }
    alpha = std::clamp(alpha, -1.0, 1.0);
    const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    const Vec3 u = normalized(p + q);
    const Vec3 w = normalized(cross(p, q));

    const Vec3 pole_left = normalized(alpha * u + beta * w);
    const double sweep_left = ccw_sweep(p, q, pole_left, cos_r);
    // Mirror pole: the two candidate sweeps add to 2*pi.
    Vec3 pole = pole_left;
    double sweep = sweep_left;
    if (beta > 0.0) {
      const bool left_is_minor = sweep_left <= kPi;
      if (minor != left_is_minor) {
        pole = normalized(alpha * u - beta * w);
        sweep = ccw_sweep(p, q, pole, cos_r);
      }
    }
    Arc a;
    a.start_ = start;
    a.end_ = end;
    a.kappa_ = kappa;
    a.minor_ = minor;
    a.pole_ = pole;
    a.radius_ = std::atan2(1.0, kappa);
    a.sweep_ = sweep;
    a.length_ = sweep * sin_r;
    return a;
  }

  const SpherePoint& start() const { return start_; }
  const SpherePoint& end() const { return end_; }
  double kappa() const { return kappa_; }
  bool minor() const { return minor_; }
  // Pole of the supporting circle on the left of the direction of travel.
  const Vec3& pole() const { return pole_; }
  double radius() const { return radius_; }
  double sweep() const { return sweep_; }
  double length() const { return length_; }

  // Point at fraction f in [0, 1] of the sweep.
  SpherePoint point_at(double f) const {
    return SpherePoint(rotate(start_.vec(), pole_, f * sweep_));
  }

  // Unit tangents in the direction of travel.
  Vec3 tangent_start() const { return normalized(cross(pole_, start_.vec())); }
  Vec3 tangent_end() const { return normalized(cross(pole_, end_.vec())); }

  // Same point set traversed end-to-start; the sign of kappa flips.
  Arc reversed() const {
    Arc a;
    a.start_ = end_;
    a.end_ = start_;
    a.kappa_ = -kappa_;
    a.minor_ = minor_;
    a.pole_ = -pole_;
    a.radius_ = kPi - radius_;
    a.sweep_ = sweep_;
    a.length_ = length_;
    return a;
  }

 private:
  Arc() = default;

  // Central angle in (0, 2*pi) swept counterclockwise about `pole` from p to q.
  static double ccw_sweep(const Vec3& p, const Vec3& q, const Vec3& pole, double cos_r) {
    const Vec3 e1 = normalized(p - cos_r * pole);
    const Vec3 e2 = cross(pole, e1);
    const Vec3 qp = q - cos_r * pole;
    double ang = std::atan2(dot(qp, e2), dot(qp, e1));
    if (ang <= 0.0) ang += kTwoPi;
    return ang;
  }

  SpherePoint start_, end_;
  double kappa_ = 0.0;
  bool minor_ = true;
  Vec3 pole_{0.0, 0.0, 1.0};
  double radius_ = 0.0;
  double sweep_ = 0.0;
  double length_ = 0.0;
};

inline Arc arc_between(const SpherePoint& p, const SpherePoint& q, double kappa, bool minor) {
  return Arc::between(p, q, kappa, minor);
}

// Signed turning angle in (-pi, pi) from the incoming tangent to the outgoing
// tangent at their shared vertex. Positive turns are to the left, so a convex
// corner of a region traversed with the region on the left turns positively.
inline double exterior_angle(const Arc& incoming, const Arc& outgoing) {
  const Vec3 v = incoming.end().vec();
  if (norm(v - outgoing.start().vec()) > 1e-9) {
    throw geom_error("exterior angle: arcs do not share a vertex");
  }
  const Vec3 tin = incoming.tangent_end();
  const Vec3 tout = outgoing.tangent_start();
  return std::atan2(dot(cross(tin, tout), v), dot(tin, tout));
}

// Closed chain of arcs traversed with the enclosed region on the left.
class PolygonBoundary {
 public:
  explicit PolygonBoundary(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    if (arcs_.empty()) throw geom_error("polygon boundary: no arcs");
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const Arc& a = arcs_[i];
      const Arc& b = arcs_[(i + 1) % arcs_.size()];
      if (norm(a.end().vec() - b.start().vec()) > kClosureTol) {
        throw geom_error("polygon boundary: arc chain does not close (gap at arc " + std::to_string(i) + ")");
      }
    }
  }

  const std::vector<Arc>& arcs() const { return arcs_; }

  std::vector<double> exterior_angles() const {
    std::vector<double> angles;
    angles.reserve(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      angles.push_back(exterior_angle(arcs_[i], arcs_[(i + 1) % arcs_.size()]));
    }
    return angles;
  }

  double perimeter() const {
    double sum = 0.0;
    for (const Arc& a : arcs_) sum += a.length();
    return sum;
  }

 private:
  std::vector<Arc> arcs_;
};

// Gauss-Bonnet area of the region on the left of the boundary:
// A = 2*pi - sum(kappa_e * length_e) - sum(exterior angles).
inline double polygon_area(const PolygonBoundary& boundary) {
  double curvature_flux = 0.0;
  for (const Arc& a : boundary.arcs()) curvature_flux += a.kappa() * a.length();
  double turning = 0.0;
  for (double ang : boundary.exterior_angles()) turning += ang;
  return kTwoPi - curvature_flux - turning;
}

}  // namespace spherenet
