#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "repa/nn/parameters.hpp"
#include "repa/nn/tensor.hpp"

namespace repa {

/// Which heads are attached to the shared encoder.
///   CLF: encoder + classifier
///   AE:  encoder + decoder
///   SAE: encoder + classifier + decoder
enum class HeadMode { CLF, AE, SAE };

std::string to_string(HeadMode mode);
HeadMode parse_head_mode(const std::string& text);

/// Convolutional encoder with optional classification and reconstruction heads.
///
/// encoder:    conv3x3(c1) -> ReLU -> maxpool2 -> conv3x3(c2) -> ReLU -> maxpool2
///             -> flatten -> linear(E)
/// classifier: linear(E -> class_count) -> softmax
/// decoder:    linear(E -> c2*H/4*W/4) -> ReLU -> reshape -> upsample2
///             -> conv3x3(c1) -> ReLU -> upsample2 -> conv3x3(C) -> sigmoid
///
/// Inputs are (N, H, W, C) with H and W divisible by 4.
struct NetworkSpec {
    std::size_t height = 28;
    std::size_t width = 28;
    std::size_t channels = 1;
    std::size_t embedding_dim = 32;
    std::size_t class_count = 10;
    HeadMode head_mode = HeadMode::SAE;
    float reconstruction_weight = 1.0f;
    std::size_t conv1_channels = 16;
    std::size_t conv2_channels = 32;

    bool has_classifier() const { return head_mode != HeadMode::AE; }
    bool has_decoder() const { return head_mode != HeadMode::CLF; }

    /// Throws ConfigError on zero sizes, non-multiple-of-4 inputs or λ < 0.
    void validate() const;

    /// Ordered (name, shape) list of every parameter present for this head mode.
    Layout layout() const;
    std::size_t parameter_count() const { return layout_numel(layout()); }

    /// Flattened size of the encoder's last feature map (c2 * H/4 * W/4).
    std::size_t feature_size() const { return conv2_channels * (height / 4) * (width / 4); }

    bool operator==(const NetworkSpec&) const = default;
};

/// Glorot-uniform weights (bound sqrt(6 / (fan_in + fan_out))), zero biases.
ModelParameters init_params(const NetworkSpec& spec, std::uint64_t seed);

template <typename T>
struct ForwardOutput {
    BasicTensor<T> embeddings;                     // (N, E)
    std::optional<BasicTensor<T>> class_probs;     // (N, class_count) iff classifier
    std::optional<BasicTensor<T>> reconstruction;  // (N, H, W, C) iff decoder
};

/// Full forward pass through every head the NetworkSpec defines.
template <typename T>
ForwardOutput<T> forward(const ParamVector<T>& params, const NetworkSpec& spec, const BasicTensor<T>& batch);

/// Encoder only; (N, E).
template <typename T>
BasicTensor<T> encode(const ParamVector<T>& params, const NetworkSpec& spec, const BasicTensor<T>& batch);

/// Encoder + classifier, skipping the decoder; (N, class_count).
template <typename T>
BasicTensor<T> predict_proba(const ParamVector<T>& params, const NetworkSpec& spec, const BasicTensor<T>& batch);

/// CLF: mean cross-entropy; AE: mean squared reconstruction error;
/// SAE: cross-entropy + λ · MSE. Probabilities are floored at 1e-12.
/// `labels` may be empty only when `spec` has no classifier.
template <typename T>
double loss(const NetworkSpec& spec, const ForwardOutput<T>& outputs, std::span<const int> labels,
            const BasicTensor<T>& inputs);

template <typename T>
struct BackwardResult {
    double loss = 0.0;
    ParamVector<T> grads;
};

template <typename T>
BackwardResult<T> backward(const ParamVector<T>& params, const NetworkSpec& spec, const BasicTensor<T>& batch,
                           std::span<const int> labels);

/// Piecewise-linear state of a full forward pass: the on/off state of every
/// ReLU and the winning index of every max-pool window. Two parameter points
/// with equal patterns lie in the same smooth region of the loss.
template <typename T>
std::vector<std::uint32_t> activation_pattern(const ParamVector<T>& params, const NetworkSpec& spec,
                                              const BasicTensor<T>& batch);

inline constexpr double kProbabilityFloor = 1e-12;

}  // namespace repa
