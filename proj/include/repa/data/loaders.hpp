#pragma once

#include <filesystem>
#include <vector>

#include "repa/data/dataset.hpp"

namespace repa {

/// Reads an IDX image file (magic 0x00000803, dims N x rows x cols) and its
/// IDX label file (magic 0x00000801). Pixels are divided by 255.
ImageDataset load_idx(const std::filesystem::path& images_path, const std::filesystem::path& labels_path,
                      std::size_t class_count = 10);

/// Reads CIFAR-10 binary batches: 3073-byte records of one label byte and
/// 3072 channel-major pixel bytes (R, G, B planes of 32x32).
ImageDataset load_cifar_binary(const std::vector<std::filesystem::path>& paths);

}  // namespace repa
