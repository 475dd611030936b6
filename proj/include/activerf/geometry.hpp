#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <random>
#include <stdexcept>
#include <vector>

namespace activerf {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

class OutOfImage : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InvalidGeometry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pinhole intrinsics in pixels. Pixel (i, j) covers [i, i+1) x [j, j+1); its
/// center sits at (i + 0.5, j + 0.5).
struct PinholeIntrinsics {
  double fx = 1.0;
  double fy = 1.0;
  double cx = 0.5;
  double cy = 0.5;
  int width = 1;
  int height = 1;

  /// Throws InvalidGeometry if fx, fy <= 0 or the principal point is outside
  /// the image.
  void validate() const;
  bool contains(const Vec2& p) const {
    return p.x() >= 0.0 && p.y() >= 0.0 && p.x() < width && p.y() < height;
  }
};

/// Rigid device-to-world transform. Device frame is right-handed: x right,
/// y up, the device looks along -z; image v grows downward. World points map
/// as x_w = R x_d + t.
struct RigidPose {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static RigidPose identity() { return {}; }
  /// Throws InvalidGeometry unless the upper-left block is a proper rotation
  /// within 1e-9.
  static RigidPose from_matrix(const Mat4& m);
  /// Pose placed at `eye`, looking at `target`, with `up` roughly upward.
  static RigidPose look_at(const Vec3& eye, const Vec3& target, const Vec3& up);

  void validate() const;
  Mat4 matrix() const;
  RigidPose inverse() const;
  /// this * other: applies `other` first.
  RigidPose compose(const RigidPose& other) const;
  Vec3 apply(const Vec3& x) const { return rotation * x + translation; }
};

struct Ray {
  Vec3 origin = Vec3::Zero();
  Vec3 direction = -Vec3::UnitZ();

  Vec3 at(double t) const { return origin + t * direction; }
};

/// Sample depths along a ray together with their spacings. The last spacing
/// equals (t_far - t_near) / N.
struct SampleGrid {
  double t_near = 0.0;
  double t_far = 1.0;
  std::vector<double> t;
  std::vector<double> delta;
};

/// Projector rigidly attached to a camera. `camera_from_projector` maps
/// projector-frame points into the camera frame.
struct ProjectorModel {
  PinholeIntrinsics intrinsics;
  RigidPose camera_from_projector;

  RigidPose world_pose(const RigidPose& camera_pose) const { return camera_pose.compose(camera_from_projector); }
  /// Projector offset by `baseline` along the camera x axis and turned about
  /// the camera y axis so its optical axis crosses the camera axis at
  /// `convergence_distance`.
  static RigidPose toe_in_rig(double baseline, double convergence_distance);
};

/// Ray through sub-pixel (u, v). Throws OutOfImage outside [0,w) x [0,h).
Ray ray_from_pixel(const PinholeIntrinsics& intr, const RigidPose& pose, const Vec2& pixel);

/// Unit direction in the device frame through sub-pixel (u, v).
Vec3 device_direction(const PinholeIntrinsics& intr, const Vec2& pixel);

enum class ProjectionStatus { Ok, PointBehindDevice, OutsidePattern };

struct Projection {
  Vec2 pixel = Vec2::Zero();
  double depth = 0.0;  // forward distance along the optical axis
  ProjectionStatus status = ProjectionStatus::Ok;

  bool ok() const { return status == ProjectionStatus::Ok; }
};

/// Projects a world point with a world-to-device transform. When the point is
/// behind the device `pixel` is left at zero.
Projection project_point(const PinholeIntrinsics& intr, const RigidPose& world_to_device,
                         const Vec3& x);

/// sin/cos features for frequencies 2^j * pi, j = 0..L-1, grouped by
/// frequency then function then component: [sin(f0 v), cos(f0 v), sin(f1 v), ...].
/// With `include_input` the raw vector is prepended.
std::vector<double> positional_encode(const std::vector<double>& v, int num_freqs,
                                      bool include_input = false);
/// Writes the encoding of `v` (k components) into `out`, which must have room
/// for encoded_size(k, L, include_input) values.
void positional_encode_into(const double* v, int k, int num_freqs, bool include_input, double* out);
inline int encoded_size(int k, int num_freqs, bool include_input) {
  return 2 * num_freqs * k + (include_input ? k : 0);
}

/// Bin midpoints when rng is null, otherwise one uniform draw per bin.
SampleGrid stratified_sample(double t_near, double t_far, int n, std::mt19937_64* rng = nullptr);

}  // namespace activerf
