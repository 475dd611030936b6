#pragma once

#include "activerf/geometry.hpp"
#include "activerf/image_io.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace activerf {

struct Sphere {
  Vec3 center = Vec3::Zero();
  double radius = 0.5;
};

struct Box {
  Vec3 center = Vec3::Zero();
  Vec3 half_extents = Vec3::Constant(0.25);
};

struct Primitive {
  std::variant<Sphere, Box> shape;
  double albedo = 0.8;
};

/// Union of analytic primitives, bounded within [-1,1]^3.
struct SdfScene {
  std::vector<Primitive> primitives;

  /// Throws InvalidGeometry when empty, unbounded or albedo outside [0,1].
  void validate() const;

  static SdfScene single_sphere(double radius = 0.35, double albedo = 0.8);
  /// A sphere resting on a box.
  static SdfScene sphere_and_box();
  /// sphere_and_box() with a third, nearly black (albedo 0.05) sphere.
  static SdfScene with_dark_primitive();
};

double primitive_distance(const Primitive& primitive, const Vec3& x);
/// Exact signed distance of the union.
double sdf_eval(const SdfScene& scene, const Vec3& x);
/// Index of the primitive closest to x.
std::size_t closest_primitive(const SdfScene& scene, const Vec3& x);

struct Hit {
  double t = 0.0;
  Vec3 point = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();
  double albedo = 0.0;
};

/// Marches until |sdf| < 1e-6 (hit) or t > t_far (miss). Normal is the
/// normalized central-difference gradient of the SDF.
std::optional<Hit> sphere_trace(const SdfScene& scene, const Ray& ray, double t_far, double t_start = 0.0);

struct ShadeOptions {
  double ambient = 0.2;
  double diffuse = 0.6;
  Vec3 env_light = Vec3(0.4, 0.3, 0.85).normalized();
  bool shadows = true;
  bool falloff = true;
  /// Scales the projected intensity; 1 reproduces the bare formula.
  double projector_power = 1.0;
};

struct ShadedPair {
  double env = 0.0;
  double act = 0.0;
};

/// Ambient + Lambertian environment term, plus the projected pattern with
/// Lambert cosine, shadow test and 1/d^2 falloff. `projector_pose` is the
/// projector-to-world pose for this view.
ShadedPair shade(const SdfScene& scene, const Hit& hit, const RigidPose& projector_pose,
                 const PinholeIntrinsics& projector, const Image& pattern_gt, const ShadeOptions& options);

/// Bilinear lookup with pixel centers at integer + 0.5 and zero outside.
double bilinear(const Image& image, const Vec2& p);

}  // namespace activerf
