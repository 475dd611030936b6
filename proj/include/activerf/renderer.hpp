#pragma once

#include "activerf/autodiff.hpp"
#include "activerf/fields.hpp"
#include "activerf/geometry.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace activerf {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class ActiveEval { PerSample, SurfacePoint };
enum class Falloff { None, InverseSquare };
enum class RenderMode { EnvOnly, WithActive };

struct RenderConfig {
  int samples = 64;
  double t_near = 0.9;
  double t_far = 2.1;
  int rays_per_batch = 64;
  double truncation = 1.0;
  /// World positions are divided by this before encoding so that every sample
  /// lands in [-1,1]^3.
  double scene_scale = 1.2;
  ActiveEval active_eval = ActiveEval::PerSample;
  Falloff falloff = Falloff::None;
  /// When false the BRDF is replaced by the constant 1.
  bool use_brdf = true;

  /// Throws std::invalid_argument for N < 2, an empty depth range or a
  /// non-positive batch size.
  void validate() const;
};

/// Per-ray samples and their compositing quantities.
struct RaySampleBatch {
  SampleGrid grid;
  std::vector<Vec3> x;
  std::vector<double> sigma;
  std::vector<double> c_env;
  std::vector<double> transmittance;
  std::vector<double> weights;
  std::vector<double> active;  // s_i * c_act_i, empty in env-only mode
};

struct TransmittanceWeights {
  std::vector<double> transmittance;  // T_i
  std::vector<double> weights;        // w_i = T_i (1 - exp(-sigma_i delta_i))
  double residual = 1.0;              // T_{N+1}, transmittance past the last sample
};

/// Throws DomainError on negative density and std::invalid_argument on length
/// mismatch or non-positive spacing.
TransmittanceWeights transmittance_weights(const std::vector<double>& sigma, const std::vector<double>& delta);

/// Differentiable counterpart over [R,N] densities with constant spacings.
/// Returns the weights [R,N] and the transmittances [R,N] (the latter as a
/// constant).
struct TapeWeights {
  ad::Tensor weights;
  ad::Tensor transmittance;
};
TapeWeights transmittance_weights(ad::Tape& tape, const ad::Tensor& sigma, const ad::Tensor& delta);

double composite_env(const std::vector<double>& w, const std::vector<double>& c_env);
/// min(sum_i w_i (c_env_i + active_i), truncation).
double composite_final(const std::vector<double>& w, const std::vector<double>& c_env,
                       const std::vector<double>& active, double truncation = 1.0);

/// Per-sample projector lookup geometry for one ray.
struct ProjectorSamples {
  std::vector<Vec2> coords;      // pattern pixel coordinates (far outside when behind)
  std::vector<double> falloff;   // 0 behind the projector
  std::vector<Vec3> incident;    // unit direction projector -> point
};

ProjectorSamples project_samples(const std::vector<Vec3>& x, const PinholeIntrinsics& projector,
                                 const RigidPose& projector_pose, Falloff falloff);

/// s_i * c_act_i for each sample position seen along `d_out` (point -> camera).
std::vector<double> active_radiance(const std::vector<Vec3>& x, const RigidPose& projector_pose,
                                    const FieldSet& fields, const Vec3& d_out, const RenderConfig& config);

/// One training or inference batch. Rays may come from different views; each
/// carries its own projector pose.
struct RayBatch {
  std::vector<Ray> rays;
  std::vector<RigidPose> projector_poses;  // projector-to-world, one per ray
  std::vector<SampleGrid> grids;
};

struct RenderOutput {
  ad::Tensor c_env;          // [R,1]
  ad::Tensor c_final;        // [R,1], undefined in env-only mode
  ad::Tensor weights;        // [R,N]
  ad::Tensor transmittance;  // [R,N]
  ad::Tensor density;        // [R,N]
  ad::Tensor color;          // [R,N]
  ad::Tensor active;         // [R,N] per-sample s*c_act, or [R,1] in surface-point mode
};

/// Full differentiable pipeline: samples -> field queries -> compositing.
RenderOutput render_rays(ad::Tape& tape, const FieldSet& fields, const RayBatch& batch, RenderMode mode,
                         const RenderConfig& config);

/// Builds stratified (rng) or midpoint (rng == nullptr) grids for every ray.
RayBatch make_batch(std::vector<Ray> rays, std::vector<RigidPose> projector_poses, const RenderConfig& config,
                    std::mt19937_64* rng);

/// Unpacks ray r of a rendered batch.
RaySampleBatch sample_batch(const RenderOutput& out, const RayBatch& batch, std::size_t r);

struct PixelRender {
  double color = 0.0;
  RaySampleBatch samples;
};

/// Renders one pixel with midpoint sampling.
PixelRender render_pixel(const FieldSet& fields, const PinholeIntrinsics& camera, const RigidPose& camera_pose,
                         const ProjectorModel& projector, const Vec2& pixel, RenderMode mode,
                         const RenderConfig& config);

struct RenderedImage {
  std::vector<double> env;    // row-major, width*height
  std::vector<double> final;  // empty in env-only mode
  std::vector<RaySampleBatch> samples;  // filled when requested
};

/// Renders every pixel center of a view in chunks, without recording.
RenderedImage render_view(const FieldSet& fields, const PinholeIntrinsics& camera, const RigidPose& camera_pose,
                          const ProjectorModel& projector, RenderMode mode, const RenderConfig& config,
                          bool keep_samples = false);

}  // namespace activerf
