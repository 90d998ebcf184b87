#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "repa/nn/network.hpp"

namespace repa {

/// FedProx penalty μ/2 ‖θ − anchor‖². Its gradient μ(θ − anchor) is added to
/// every SGD step.
struct ProximalTerm {
    float mu = 0.0f;
    std::span<const float> anchor;
};

struct LocalTrainOptions {
    int epochs = 1;
    float lr = 0.05f;
    std::size_t batch_size = 32;
    std::optional<ProximalTerm> prox;
    std::uint64_t seed = 0;
};

struct LocalTrainResult {
    ModelParameters params;
    /// Mean data loss (without the proximal penalty) over each epoch's batches.
    std::vector<double> epoch_loss;
    std::size_t steps = 0;
};

/// Plain minibatch SGD: epochs × ceil(N / batch_size) steps, each epoch over a
/// fresh permutation drawn from (seed, epoch). `labels` may be empty only for
/// networks without a classifier.
LocalTrainResult train_local(ModelParameters params, const NetworkSpec& spec, const Tensor& images,
                             std::span<const int> labels, const LocalTrainOptions& options);

/// Mean loss of the network on a full dataset, evaluated in chunks of `batch_size`.
double dataset_loss(const ModelParameters& params, const NetworkSpec& spec, const Tensor& images,
                    std::span<const int> labels, std::size_t batch_size = 256);

}  // namespace repa
