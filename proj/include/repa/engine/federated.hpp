#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "repa/clustering/kmeans.hpp"
#include "repa/data/dataset.hpp"
#include "repa/nn/network.hpp"

namespace repa {

struct TrainingConfig {
    std::size_t rounds = 30;
    double fraction_fit = 1.0;
    int local_epochs = 1;
    float lr = 0.05f;
    std::size_t batch_size = 32;
    float mu = 0.0f;
    std::size_t warmup_rounds = 3;
    std::uint64_t seed = 0;

    /// Throws ConfigError when a field is out of range.
    void validate() const;
    bool operator==(const TrainingConfig&) const = default;
};

/// One model per non-empty cluster, keyed by cluster index.
using ClusterModelSet = std::map<std::size_t, ModelParameters>;

/// A client with its pipeline already applied to both splits, so rounds can
/// reuse the exposed images instead of re-augmenting them.
struct PreparedClient {
    std::size_t id = 0;
    bool training = true;
    ImageDataset train;  // empty for holdout clients
    ImageDataset validation;
};

std::vector<PreparedClient> prepare_clients(const std::vector<ClientDataset>& clients, unsigned threads = 1);

struct ClusterRoundStats {
    std::size_t cluster = 0;
    std::vector<std::size_t> participants;
    bool skipped = false;  // no training clients to sample
    double mean_local_loss = 0.0;
    std::size_t val_correct = 0, val_total = 0;
    std::size_t ho_correct = 0, ho_total = 0;

    double val_accuracy() const;  // NaN without validation images
    double ho_accuracy() const;   // NaN without holdout clients
};

struct RoundReport {
    std::size_t round = 0;
    std::string phase;  // "warmup" or "clustered"
    std::vector<ClusterRoundStats> clusters;

    /// Accuracy pooled over every cluster: total correct / total images.
    double val_accuracy() const;
    double ho_accuracy() const;
};

/// Σ w_i θ_i / Σ w_i, accumulated in double in the order given.
ModelParameters fedavg_aggregate(std::span<const ModelParameters> params, std::span<const double> weights);

/// ⌈fraction_fit · |members|⌉ ids drawn without replacement, returned sorted.
/// An empty member list yields an empty draw.
std::vector<std::size_t> sample_participants(std::span<const std::size_t> training_members, double fraction_fit,
                                             std::size_t round, std::size_t cluster, std::uint64_t seed);

/// Number of argmax-correct predictions; ties go to the lowest class index.
std::size_t count_correct(const ModelParameters& params, const NetworkSpec& spec, const ImageDataset& data,
                          std::size_t batch_size = 256);
/// Fraction of argmax-correct predictions. Throws InputError on an empty or unlabeled dataset.
double evaluate(const ModelParameters& params, const NetworkSpec& spec, const ImageDataset& data);

struct RoundContext {
    std::size_t round = 0;
    std::string phase = "clustered";
    unsigned threads = 1;
};

struct RoundResult {
    ClusterModelSet models;
    RoundReport report;
};

/// One federated round over every cluster in `models`. Participants train
/// locally with the FedProx anchor set to their cluster model, then each
/// cluster aggregates its updates in ascending client-id order. Clusters
/// without training clients keep their model.
RoundResult run_round(const ClusterModelSet& models, const std::vector<PreparedClient>& clients,
                      const ClusterAssignment& assignment, const NetworkSpec& spec, const TrainingConfig& cfg,
                      const RoundContext& ctx);

/// Models for every cluster that has at least one assigned client, all copies of `init`.
ClusterModelSet replicate_model(const ModelParameters& init, const ClusterAssignment& assignment);

/// Every client in cluster 0.
ClusterAssignment single_cluster(const std::vector<PreparedClient>& clients);

/// CSV with one row per (clustered round, cluster). Warm-up rounds are left
/// to the JSON log.
std::string rounds_csv(const std::vector<RoundReport>& history);
nlohmann::json rounds_json(const std::vector<RoundReport>& history);

}  // namespace repa
