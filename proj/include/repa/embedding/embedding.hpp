#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <span>
#include <vector>

#include <json.hpp>

#include "repa/data/dataset.hpp"
#include "repa/nn/network.hpp"

namespace repa {

/// Which per-dimension statistics REPA concatenates, in the fixed order
/// [mean, std, quantile_q for each q].
/// How a quantile is read off a finite sample.
///   Midpoint: inverse of the empirical CDF, averaging the two neighbouring
///             order statistics where the CDF hits q exactly. Depends only on
///             the empirical distribution, so duplicating every point changes nothing.
///   Linear:   interpolation at h = (n − 1)q between order statistics.
enum class QuantileRule { Midpoint, Linear };
std::string to_string(QuantileRule rule);
QuantileRule parse_quantile_rule(const std::string& text);

/// Quantile q of an ascending sample.
double sample_quantile(std::span<const float> sorted, double q, QuantileRule rule);

struct StatisticsConfig {
    bool include_mean = true;
    bool include_std = false;
    std::vector<double> quantiles = {0.25, 0.5, 0.75};
    QuantileRule quantile_rule = QuantileRule::Midpoint;

    /// Throws ConfigError if nothing is enabled or the quantiles are not
    /// strictly increasing inside (0, 1).
    void validate() const;
    std::size_t statistic_count() const;
    bool operator==(const StatisticsConfig&) const = default;
};

enum class EmbeddingMethod { REPA, WD };

std::string to_string(EmbeddingMethod method);
EmbeddingMethod parse_embedding_method(const std::string& text);

struct ClientEmbedding {
    std::size_t client_id = 0;
    EmbeddingMethod method = EmbeddingMethod::REPA;
    std::vector<float> vector;

    std::size_t dim() const { return vector.size(); }
    bool operator==(const ClientEmbedding&) const = default;
};

/// Per-dimension statistics of an (N, E) point cloud. std is the population
/// standard deviation; quantiles interpolate linearly between order statistics.
std::vector<float> embedding_statistics(const Tensor& points, const StatisticsConfig& cfg);

/// REPA client embedding: statistics over the encoder outputs of the client's
/// profile split (pipeline applied). Needs neither labels nor training and
/// never modifies the encoder.
ClientEmbedding repa_embed(const ModelParameters& params, const NetworkSpec& spec, const ClientDataset& client,
                           const StatisticsConfig& cfg, std::size_t batch_size = 256);

struct WeightDeltaOptions {
    int fine_tune_epochs = 1;
    float lr = 0.05f;
    std::size_t batch_size = 32;
    std::uint64_t seed = 0;
};

/// Weight-difference embedding θ − θ_i after fine-tuning the global model on
/// the client's train split. Throws CapabilityError for holdout or unlabeled
/// clients and for networks without a classifier.
ClientEmbedding wd_embed(const ModelParameters& global, const NetworkSpec& spec, const ClientDataset& client,
                         const WeightDeltaOptions& options);

/// `<base>.json` (client ids, method, config, dim) and `<base>.bin`
/// (row-major float32, one row per client).
void save_embeddings(const std::filesystem::path& base, const std::vector<ClientEmbedding>& embeddings,
                     const nlohmann::json& config);

struct StoredEmbeddings {
    std::vector<ClientEmbedding> embeddings;
    nlohmann::json config;
};

StoredEmbeddings load_embeddings(const std::filesystem::path& base);

}  // namespace repa
