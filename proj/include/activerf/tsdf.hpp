#pragma once

#include "activerf/depth.hpp"
#include "activerf/pointcloud.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace activerf {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Regular grid of voxel centers origin + (i, j, k) * voxel.
struct TsdfSpec {
  Vec3 origin = Vec3::Constant(-0.5);
  double voxel = 0.005;
  int nx = 200, ny = 200, nz = 200;
  double truncation = 0.02;

  /// Throws ConfigError for non-positive sizes or truncation < 2 voxels.
  void validate() const;
  /// Grid covering [lo, hi] with truncation = trunc_voxels * voxel.
  static TsdfSpec covering(const Vec3& lo, const Vec3& hi, double voxel, double trunc_voxels = 4.0);
  std::size_t voxel_count() const { return static_cast<std::size_t>(nx) * ny * nz; }
  Vec3 center(int i, int j, int k) const { return origin + voxel * Vec3(i, j, k); }
};

/// Projective TSDF stored as an integer sum of fixed-point observations and an
/// observation count, so fusion is exactly independent of view order.
class TsdfVolume {
 public:
  explicit TsdfVolume(const TsdfSpec& spec);

  const TsdfSpec& spec() const { return spec_; }
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * spec_.ny + j) * spec_.nx + i;
  }
  /// Normalized distance in [-1, 1]; 1 where never observed.
  double tsdf(std::size_t idx) const;
  double weight(std::size_t idx) const { return static_cast<double>(count_[idx]); }

  /// Adds one view: voxels in front of the observed surface or less than the
  /// truncation distance behind it receive min(1, (d - r) / truncation).
  void integrate(const DepthMap& depth);
  /// Adds one fixed-point observation to a voxel. Exposed for tests.
  void observe(std::size_t idx, double value);

 private:
  TsdfSpec spec_;
  std::vector<std::int64_t> sum_;
  std::vector<std::uint32_t> count_;
};

TsdfVolume tsdf_fuse(const std::vector<DepthMap>& maps, const TsdfSpec& spec);

/// Linear-interpolated zero crossings on grid edges whose endpoints are both
/// observed and lie on opposite sides of zero.
PointCloud extract_points(const TsdfVolume& volume);

}  // namespace activerf
