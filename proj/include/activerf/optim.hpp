#pragma once

#include "activerf/autodiff.hpp"

#include <span>
#include <vector>

namespace activerf {

struct AdamConfig {
  double lr = 5e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  long step = 0;
};

/// One bias-corrected Adam update of `param` in place.
void adam_step(std::span<double> param, std::span<const double> grad, AdamState& state,
               const AdamConfig& config);

/// Adam over a group of tensors sharing one learning rate.
class Adam {
 public:
  Adam(std::vector<ad::Tensor> params, AdamConfig config);

  void step();
  void zero_grad();
  const AdamConfig& config() const { return config_; }
  const std::vector<ad::Tensor>& params() const { return params_; }

 private:
  std::vector<ad::Tensor> params_;
  std::vector<AdamState> states_;
  AdamConfig config_;
};

}  // namespace activerf
