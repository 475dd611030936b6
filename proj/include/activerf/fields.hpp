#pragma once

#include "activerf/autodiff.hpp"
#include "activerf/geometry.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace activerf {

class DirectionNotUnit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldConfig {
  int radiance_layers = 4;
  int radiance_width = 64;
  int color_width = 32;
  int brdf_layers = 4;
  int brdf_width = 64;
  int pos_freqs = 10;
  int dir_freqs = 4;

  /// 4 x 64 radiance trunk, 4 x 64 BRDF.
  static FieldConfig desk() { return {}; }
  /// 8 x 128 radiance trunk, 6 x 128 BRDF.
  static FieldConfig large() { return {8, 128, 64, 6, 128, 10, 4}; }

  int pos_features() const { return encoded_size(3, pos_freqs, true); }
  int dir_features() const { return encoded_size(3, dir_freqs, true); }
};

using NamedTensor = std::pair<std::string, ad::Tensor>;

/// Encodes rows of 3-vectors (raw input prepended) into a constant [M, 3+6L]
/// tensor.
ad::Tensor encode_rows(const std::vector<Vec3>& rows, int num_freqs);

class Linear {
 public:
  Linear() = default;
  /// Weights and biases drawn from U(-b, b), b = sqrt(6 / in).
  Linear(int in, int out, std::mt19937_64& rng);

  ad::Tensor forward(ad::Tape& tape, const ad::Tensor& x) const;
  int in() const { return static_cast<int>(weight_.shape()[0]); }
  int out() const { return static_cast<int>(weight_.shape()[1]); }
  void collect(const std::string& prefix, std::vector<NamedTensor>& out) const;

 private:
  ad::Tensor weight_;  // [in, out]
  ad::Tensor bias_;    // [1, out]
};

/// Grayscale radiance and density. Density depends on position only; the
/// color branch additionally sees the encoded view direction.
class RadianceField {
 public:
  struct Output {
    ad::Tensor color;    // [M,1], sigmoid
    ad::Tensor density;  // [M,1], softplus
  };

  RadianceField(const FieldConfig& config, std::mt19937_64& rng);

  Output forward(ad::Tape& tape, const ad::Tensor& pos_enc, const ad::Tensor& dir_enc) const;
  ad::Tensor density(ad::Tape& tape, const ad::Tensor& pos_enc) const;
  std::vector<NamedTensor> parameters() const;
  const FieldConfig& config() const { return config_; }

 private:
  ad::Tensor trunk(ad::Tape& tape, const ad::Tensor& pos_enc) const;

  FieldConfig config_;
  std::vector<Linear> trunk_;
  Linear density_head_;
  Linear color_hidden_;
  Linear color_head_;
};

/// Scalar reflectance s in [0,1] for (position, incident, exit) directions.
class BrdfField {
 public:
  BrdfField(const FieldConfig& config, std::mt19937_64& rng);

  /// Input is [pos_enc | d_in_enc | d_out_enc]; returns [M,1].
  ad::Tensor forward(ad::Tape& tape, const ad::Tensor& pos_enc, const ad::Tensor& din_enc,
                     const ad::Tensor& dout_enc) const;
  std::vector<NamedTensor> parameters() const;
  const FieldConfig& config() const { return config_; }

 private:
  FieldConfig config_;
  std::vector<Linear> layers_;
  Linear head_;
};

/// Learnable projector image. Values are kept non-negative by clamping after
/// each optimizer step.
class PatternTensor {
 public:
  /// 0.5 plus U(-0.05, 0.05) noise.
  PatternTensor(const PinholeIntrinsics& projector, std::mt19937_64& rng);
  /// Wraps given values; the grid shape must match the projector image size.
  PatternTensor(const PinholeIntrinsics& projector, std::vector<double> values);

  const PinholeIntrinsics& projector() const { return projector_; }
  int width() const { return projector_.width; }
  int height() const { return projector_.height; }
  const ad::Tensor& grid() const { return grid_; }
  ad::Tensor& grid() { return grid_; }

  /// Differentiable lookup at [M,2] pixel coordinates.
  ad::Tensor sample(ad::Tape& tape, const ad::Tensor& coords) const;
  void clamp_non_negative();

 private:
  PinholeIntrinsics projector_;
  ad::Tensor grid_;  // [H, W]
};

/// The three learnable objects of one reconstruction.
struct FieldSet {
  FieldConfig config;
  RadianceField radiance;
  BrdfField brdf;
  PatternTensor pattern;

  FieldSet(const FieldConfig& config, const PinholeIntrinsics& projector, std::mt19937_64& rng);

  /// Names are prefixed "radiance.", "brdf." and "pattern.".
  std::vector<NamedTensor> parameters() const;
  /// Copies values from `tensors` by name. Throws std::runtime_error on a
  /// missing name or shape mismatch.
  void load(const std::vector<NamedTensor>& tensors);
};

/// Single-point convenience: (c_env, sigma) at x seen along unit direction d.
std::pair<double, double> eval_radiance(const RadianceField& field, const Vec3& x, const Vec3& d);
/// Throws DirectionNotUnit when either direction is off unit length by more
/// than 1e-6.
double eval_brdf(const BrdfField& field, const Vec3& x, const Vec3& d_in, const Vec3& d_out);
/// Bilinear pattern value at sub-pixel p; 0 beyond the border.
double sample_pattern(const PatternTensor& pattern, const Vec2& p);

}  // namespace activerf
