#pragma once

#include "activerf/fields.hpp"
#include "activerf/image_io.hpp"
#include "activerf/renderer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace activerf {

enum class DepthRule { WeightedSum, MaxWeight, TruncOccupancy };

/// "wsum", "maxw", "trunc".
std::string to_string(DepthRule rule);
/// Throws std::invalid_argument for an unknown name.
DepthRule parse_depth_rule(const std::string& name);

/// sum w_i t_i, divided by max(sum w_i, 1e-8) when `normalize`. Empty when
/// the accumulated weight is below 0.5.
std::optional<double> depth_weighted_sum(const RaySampleBatch& batch, bool normalize = true);
/// t at the largest weight, first index on ties. Empty when max w < 0.05.
std::optional<double> depth_max_weight(const RaySampleBatch& batch);
/// t of the first sample with sigma > threshold. Throws std::invalid_argument
/// for threshold <= 0.
std::optional<double> depth_trunc_occupancy(const RaySampleBatch& batch, double threshold);

struct DepthOptions {
  DepthRule rule = DepthRule::MaxWeight;
  double threshold = 10.0;  // trunc-occupancy density threshold
  bool normalize = true;    // weighted-sum normalization
};

std::optional<double> extract_ray_depth(const RaySampleBatch& batch, const DepthOptions& options);

/// Distance along the unit pixel ray, row-major; 0 marks invalid pixels.
struct DepthMap {
  PinholeIntrinsics camera;
  RigidPose pose;  // camera-to-world
  double t_near = 0.0;
  double t_far = 0.0;
  std::vector<double> depth;
  std::vector<std::uint8_t> valid;

  DepthMap() = default;
  DepthMap(const PinholeIntrinsics& camera, const RigidPose& pose, double t_near, double t_far);

  /// Stores d when it lies in (t_near, t_far]; otherwise marks the pixel
  /// invalid.
  void set(int x, int y, std::optional<double> d);
  bool is_valid(int x, int y) const { return valid[index(x, y)] != 0; }
  double at(int x, int y) const { return depth[index(x, y)]; }
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * camera.width + x; }
  std::size_t valid_count() const;

  Image image() const;
  /// Pixels of `image` <= 0 are invalid.
  static DepthMap from_image(const Image& image, const PinholeIntrinsics& camera, const RigidPose& pose,
                             double t_near, double t_far);
};

/// Renders every pixel of a view (env-only, midpoint samples) and applies a
/// depth rule.
DepthMap extract_depth(const FieldSet& fields, const PinholeIntrinsics& camera, const RigidPose& pose,
                       const ProjectorModel& projector, const RenderConfig& render, const DepthOptions& options);

/// All three rules from one render. Index with static_cast<int>(DepthRule).
std::vector<DepthMap> extract_depth_all(const FieldSet& fields, const PinholeIntrinsics& camera,
                                        const RigidPose& pose, const ProjectorModel& projector,
                                        const RenderConfig& render, const DepthOptions& options);

/// Mean |d - d_gt| over pixels valid in both maps, and how many there were.
struct DepthError {
  double mean_abs = 0.0;
  std::size_t count = 0;
};
DepthError depth_error(const DepthMap& estimate, const DepthMap& truth);

}  // namespace activerf
