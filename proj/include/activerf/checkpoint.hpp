#pragma once

#include "activerf/fields.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace activerf {

/// Binary checkpoint, all integers and floats little-endian:
///
///   magic    8 bytes  "ARFCKPT\0"
///   version  u32      1
///   config   u64 byte length, then UTF-8 JSON text
///   count    u32      number of tensors
///   tensor   u32 name length, name bytes,
///            u32 rank, u64 dims[rank],
///            f64 values[prod(dims)] in row-major order
struct Checkpoint {
  std::string config_json;
  std::vector<NamedTensor> tensors;
};

void save_checkpoint(const std::filesystem::path& path, const std::string& config_json,
                     const std::vector<NamedTensor>& tensors);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace activerf
