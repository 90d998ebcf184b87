#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "repa/nn/tensor.hpp"

namespace repa {

enum class StepKind { Identity, Rotate, GaussianBlur, GaussianNoise, Invert, Contrast, Brightness };

std::string to_string(StepKind kind);
/// Throws ConfigError for unknown names.
StepKind parse_step_kind(const std::string& name);

/// One image transform. `parameter` is degrees for rotate, σ for blur and
/// noise, a factor for contrast, an offset for brightness; ignored otherwise.
struct AugmentationStep {
    StepKind kind = StepKind::Identity;
    float parameter = 0.0f;

    bool operator==(const AugmentationStep&) const = default;
};

struct AugmentationPipeline {
    std::string name = "identity";
    std::vector<AugmentationStep> steps;

    bool is_identity() const;
    bool operator==(const AugmentationPipeline&) const = default;
};

/// Applies the steps in order to one (H, W, C) image with values in [0, 1].
/// Every step clamps its output to [0, 1]; noise draws come from `seed`.
Tensor apply_pipeline(const AugmentationPipeline& pipeline, const Tensor& image, std::uint64_t seed);

/// identity, rotate ±15°, blur σ ∈ {0.5, 1.0}, noise σ ∈ {0.05, 0.1}, invert,
/// contrast 1.5, brightness +0.2.
std::vector<AugmentationPipeline> default_catalog();

nlohmann::json pipeline_to_json(const AugmentationPipeline& p);
AugmentationPipeline pipeline_from_json(const nlohmann::json& doc);

}  // namespace repa
