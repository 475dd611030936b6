#pragma once

#include "activerf/dataset.hpp"
#include "activerf/fields.hpp"
#include "activerf/renderer.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace activerf {

class TrainingDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrainConfig {
  int iterations = 20000;
  /// Iterations before this fraction use only the env term and update only
  /// the radiance field.
  double stage1_fraction = 0.3;
  int rays_per_iteration = 64;
  double lr_radiance = 5e-4;
  double lr_brdf = 5e-4;
  double lr_pattern = 5e-3;
  std::uint64_t seed = 0;
  int log_interval = 1000;
  /// false trains on the env term only for the whole run.
  bool use_active = true;
  /// Number of training views used, spread evenly over the dataset's views;
  /// 0 means all.
  int views = 0;

  void validate() const;
  int stage1_iterations() const;
};

struct LossReport {
  double env = 0.0;
  double final = 0.0;
  double total = 0.0;
  int iteration = 0;
};

/// Mean squared error of each term over the batch, summed. Throws
/// ad::ShapeError when the four inputs differ in length.
LossReport loss(std::span<const double> c_final, std::span<const double> c_env,
                std::span<const double> c_final_gt, std::span<const double> c_env_gt);

struct LogRow {
  int iteration = 0;
  double loss_env = 0.0;
  double loss_final = 0.0;
  double loss_total = 0.0;
  double psnr_holdout = 0.0;
};

/// Where train() writes. Empty `dir` keeps everything in memory.
struct TrainOutput {
  std::filesystem::path dir;
  /// Stored verbatim in every checkpoint.
  std::string config_json = "{}";
};

struct TrainResult {
  std::unique_ptr<FieldSet> fields;
  std::vector<LossReport> history;  // one per iteration
  std::vector<LogRow> log;          // one per logging interval and at the end
};

/// Called at every logging interval and after the last iteration.
using LogHook = std::function<void(const LogRow&, const FieldSet&)>;

/// Indices of `count` views spread evenly over `total`.
std::vector<std::size_t> view_subset(std::size_t total, int count);

/// Mean PSNR (peak 1) of env-only renders over the dataset's holdout views;
/// falls back to the first training view when there are none.
double holdout_psnr(const FieldSet& fields, const Dataset& data, const RenderConfig& render);

/// Two-stage optimization. Writes train_log.csv, checkpoint_<iter>.bin at
/// logging intervals and checkpoint.bin at the end when output.dir is set.
/// Throws TrainingDiverged (after dumping the batch to nan_batch.json) on a
/// non-finite loss.
TrainResult train(const Dataset& data, const FieldConfig& field_config, const RenderConfig& render,
                  const TrainConfig& config, const TrainOutput& output = {}, const LogHook& hook = {});

/// Parameter groups of a field set.
std::vector<ad::Tensor> radiance_parameters(const FieldSet& fields);
std::vector<ad::Tensor> brdf_parameters(const FieldSet& fields);

}  // namespace activerf
