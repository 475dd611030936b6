#pragma once

#include "activerf/geometry.hpp"

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace activerf {

using PointCloud = std::vector<Vec3>;

class EmptyCloud : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws std::invalid_argument on a non-finite coordinate.
void require_finite(const PointCloud& cloud);

/// One centroid per occupied voxel, ordered by voxel index.
PointCloud voxel_downsample(const PointCloud& cloud, double voxel = 0.003);

/// Static kd-tree for exact nearest-neighbor distance queries.
class KdTree {
 public:
  explicit KdTree(const PointCloud& points);
  ~KdTree();
  KdTree(KdTree&&) noexcept;
  KdTree& operator=(KdTree&&) noexcept;

  /// Euclidean distance to the nearest stored point. Throws EmptyCloud when
  /// the tree is empty.
  double nearest_distance(const Vec3& q) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// For each point of `from`, the distance to its nearest neighbor in `to`.
std::vector<double> nn_distances(const PointCloud& from, const PointCloud& to);
std::vector<double> nn_distances_brute(const PointCloud& from, const PointCloud& to);

/// Symmetric mean nearest-neighbor distance in millimeters. Throws EmptyCloud.
double chamfer(const PointCloud& a, const PointCloud& b);
/// Percent of nearest-neighbor distances of both directions, pooled, below
/// `thresh` meters. Throws EmptyCloud.
double inlier_pct(const PointCloud& a, const PointCloud& b, double thresh);

struct CloudMetrics {
  double cd_mm = 0.0;
  double p_lt_10mm = 0.0;
  double p_lt_50mm = 0.0;
};
/// All three metrics from one pair of NN passes.
CloudMetrics evaluate_clouds(const PointCloud& recon, const PointCloud& truth);

/// Pearson correlation of two equally long sequences; 0 when either is
/// constant.
double ncc(std::span<const double> a, std::span<const double> b);

}  // namespace activerf
