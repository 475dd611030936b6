#pragma once

#include "activerf/config.hpp"
#include "activerf/dataset.hpp"
#include "activerf/depth.hpp"
#include "activerf/pointcloud.hpp"
#include "activerf/trainer.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace activerf {

/// Progress lines; empty to stay quiet.
using Logger = std::function<void(const std::string&)>;

/// A modification of the base experiment used by ablations.
struct Variant {
  bool use_active = true;
  bool use_brdf = true;
  /// Baseline as a multiple of the orbit radius; unset keeps the rig's.
  std::optional<double> baseline_factor;
  /// Training views; 0 keeps the config's.
  int views = 0;
};

ExperimentConfig apply_variant(const ExperimentConfig& base, const Variant& variant);

/// 64-bit FNV-1a, used to name cache directories.
std::uint64_t fnv1a(const std::string& text);
/// Canonical JSON of everything that determines the dataset.
std::string dataset_key(const ExperimentConfig& config);
/// Canonical JSON of everything that determines a trained model.
std::string training_key(const ExperimentConfig& config);

/// Generates the dataset into `dir` and records its key in dataset_key.json.
DatasetManifest generate_for(const ExperimentConfig& config, const std::filesystem::path& dir);
/// <root>/datasets/<hash>, generated unless a dataset with the same key exists.
std::filesystem::path ensure_dataset(const ExperimentConfig& config, const std::filesystem::path& root,
                                     const Logger& log = {});

struct TrainedRun {
  std::filesystem::path dir;
  ExperimentConfig config;
  std::unique_ptr<FieldSet> fields;
  std::vector<LogRow> log;
};

/// Trains into `dir` (config.json, train_log.csv, checkpoints).
TrainedRun train_run(const ExperimentConfig& config, const Dataset& data, const std::filesystem::path& dir,
                     const Logger& log = {});
/// Loads checkpoint.bin, config.json and train_log.csv from a run directory.
TrainedRun load_run(const std::filesystem::path& dir);
/// <root>/runs/<hash>, trained unless a finished run with the same key exists.
TrainedRun ensure_trained(const ExperimentConfig& config, const Dataset& data, const std::filesystem::path& root,
                          const Logger& log = {});

std::unique_ptr<FieldSet> fields_from_checkpoint(const std::filesystem::path& path, const ExperimentConfig& config,
                                                 const PinholeIntrinsics& projector);
std::vector<LogRow> read_train_log(const std::filesystem::path& path);

/// GT depth of every training view of the dataset.
std::vector<DepthMap> gt_depth_maps(const Dataset& data);
/// Depth maps at every training pose of the dataset, one vector per rule
/// (index static_cast<int>(DepthRule)).
std::array<std::vector<DepthMap>, 3> predicted_depth_maps(const FieldSet& fields, const Dataset& data,
                                                         const ExperimentConfig& config, const DepthOptions& options);
/// TSDF fusion, zero-crossing extraction and voxel downsampling.
PointCloud fuse_cloud(const std::vector<DepthMap>& maps, const ExperimentConfig& config);

struct MetricsRow {
  std::string scene;
  std::string method;
  CloudMetrics metrics;
  std::optional<double> psnr;
};

std::string metrics_header();
std::string format_row(const MetricsRow& row);
void write_metrics_csv(const std::filesystem::path& path, const std::vector<MetricsRow>& rows);
std::vector<MetricsRow> read_metrics_csv(const std::filesystem::path& path);

std::string scene_label(const ExperimentConfig& config);

/// Ablations: "components", "depth-rule", "threshold", "baseline", "views".
std::vector<std::string> ablation_names();
/// Trains (or reuses) every variant of one ablation under `root` and returns
/// one metrics row per variant. Throws ConfigError for an unknown name.
std::vector<MetricsRow> sweep(const ExperimentConfig& base, const std::string& ablation,
                              const std::filesystem::path& root, const Logger& log = {});

/// Projector pixels that light a visible, unshadowed GT surface point in at
/// least one training view (bilinear footprint), row-major.
std::vector<std::uint8_t> illumination_mask(const Dataset& data, const SdfScene& scene);
/// NCC between the learned and GT pattern over the mask.
double pattern_ncc(const PatternTensor& learned, const Image& truth, const std::vector<std::uint8_t>& mask);
/// Pattern NCC of every checkpoint_<iter>.bin in a run directory, in order.
std::vector<std::pair<int, double>> pattern_ncc_series(const TrainedRun& run, const Dataset& data,
                                                       const std::vector<std::uint8_t>& mask);

}  // namespace activerf
