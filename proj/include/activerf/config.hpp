#pragma once

#include "activerf/dataset.hpp"
#include "activerf/depth.hpp"
#include "activerf/fields.hpp"
#include "activerf/renderer.hpp"
#include "activerf/scene.hpp"
#include "activerf/trainer.hpp"
#include "activerf/tsdf.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>

namespace activerf {

/// A named preset ("single_sphere", "sphere_and_box", "with_dark_primitive")
/// or, when `preset` is empty, an explicit primitive list.
struct SceneSpec {
  std::string preset = "sphere_and_box";
  std::vector<Primitive> primitives;

  SdfScene build() const;
};

struct PatternSpec {
  std::uint64_t seed = 7;
  double dot_density = 0.25;
  double blur_sigma = 1.0;
};

struct DepthConfig {
  DepthOptions options;
  /// Samples per ray when extracting depth; 0 reuses the training count.
  int samples = 128;
};

struct TsdfConfig {
  double voxel = 0.005;
  double trunc_voxels = 4.0;
  Vec3 lo = Vec3::Constant(-0.5);
  Vec3 hi = Vec3::Constant(0.5);

  TsdfSpec spec() const { return TsdfSpec::covering(lo, hi, voxel, trunc_voxels); }
};

struct ExperimentConfig {
  std::string name = "experiment";
  SceneSpec scene;
  RigSpec rig;
  PatternSpec pattern;
  ShadeOptions shade;
  FieldConfig fields;
  TrainConfig train;
  RenderConfig render;
  DepthConfig depth;
  TsdfConfig tsdf;
  double downsample_voxel = 0.003;
  std::string output_dir = "out";
  /// Training seed; also stored in train.seed.
  std::uint64_t seed = 0;

  /// Throws ConfigError when any section is invalid.
  void validate() const;
  /// Render settings for depth extraction.
  RenderConfig depth_render() const;
};

/// Every key is written; reading rejects unknown keys with ConfigError naming
/// the offending path.
nlohmann::json to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

std::string dump_config(const ExperimentConfig& config);
/// Throws ConfigError for unreadable, malformed or invalid files.
ExperimentConfig load_config(const std::filesystem::path& path);
void save_config(const ExperimentConfig& config, const std::filesystem::path& path);

}  // namespace activerf
