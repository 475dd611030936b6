#pragma once

#include "activerf/geometry.hpp"
#include "activerf/image_io.hpp"
#include "activerf/scene.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace activerf {

/// Camera, projector and orbit. The projector sits `baseline` meters to the
/// camera's right, toed in to aim at the orbit center.
struct RigSpec {
  PinholeIntrinsics camera{80.0, 80.0, 32.0, 32.0, 64, 64};
  PinholeIntrinsics projector{128.0, 128.0, 64.0, 64.0, 128, 128};
  double baseline = 0.45;
  double orbit_radius = 1.5;
  double elevation_deg = 30.0;
  int views = 20;
  int holdout_views = 2;
  double t_near = 0.9;
  double t_far = 2.1;

  void validate() const;
  RigidPose camera_from_projector() const {
    return ProjectorModel::toe_in_rig(baseline, orbit_radius);
  }
  ProjectorModel projector_model() const { return {projector, camera_from_projector()}; }
};

/// Camera-to-world poses on a ring at fixed elevation looking at the origin,
/// z up, azimuths spaced evenly starting at `azimuth_offset_deg`.
std::vector<RigidPose> orbit_poses(const RigSpec& rig, int count, double azimuth_offset_deg = 0.0);

/// Binary dots with probability `dot_density` per pixel, blurred by a
/// Gaussian of `blur_sigma` pixels and rescaled to a peak of 1.
Image make_dot_pattern(int width, int height, std::uint64_t seed, double dot_density = 0.25,
                       double blur_sigma = 1.0);

struct GtView {
  Image env;
  Image act;
  Image depth;  // distance along the unit ray; 0 where the ray misses
};

GtView render_gt_view(const SdfScene& scene, const RigSpec& rig, const RigidPose& camera_pose,
                      const Image& pattern_gt, const ShadeOptions& options);

struct Frame {
  RigidPose pose;
  std::string img_env;
  std::string img_act;
  std::string depth_gt;
};

/// On-disk description of a generated dataset. Relative paths are resolved
/// against `root`.
struct DatasetManifest {
  std::filesystem::path root;
  PinholeIntrinsics camera;
  PinholeIntrinsics projector;
  RigidPose rig_transform;  // camera_from_projector
  double t_near = 0.0;
  double t_far = 1.0;
  std::vector<Frame> frames;
  std::vector<Frame> holdout_frames;
  std::string pattern_gt;

  ProjectorModel projector_model() const { return {projector, rig_transform}; }
};

/// Renders every training and holdout view, writes PFM images, GT depth, the
/// GT pattern and manifest.json into `out_dir`.
DatasetManifest generate_dataset(const SdfScene& scene, const RigSpec& rig, const Image& pattern_gt,
                                 const std::filesystem::path& out_dir, const ShadeOptions& options = {});

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);
/// Throws std::runtime_error if the file is malformed or a referenced file is
/// missing.
DatasetManifest load_manifest(const std::filesystem::path& path);

struct ViewImages {
  RigidPose pose;
  Image env;
  Image act;
  Image depth;
};

/// A manifest with all images in memory.
struct Dataset {
  DatasetManifest manifest;
  std::vector<ViewImages> train;
  std::vector<ViewImages> holdout;
  Image pattern_gt;
};

Dataset load_dataset(const std::filesystem::path& dir);

}  // namespace activerf
