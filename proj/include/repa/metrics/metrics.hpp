#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "repa/clustering/kmeans.hpp"
#include "repa/data/dataset.hpp"
#include "repa/nn/network.hpp"

namespace repa {

/// Symmetric pairwise similarity matrix over `client_ids`, row-major.
struct SimilarityMatrix {
    std::vector<std::size_t> client_ids;
    std::vector<double> values;

    std::size_t size() const { return client_ids.size(); }
    double at(std::size_t i, std::size_t j) const { return values[i * size() + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * size() + j]; }
};

/// Cosine similarity. Throws InputError on a zero vector or a length mismatch.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

/// Cosine similarity of two per-class count vectors, in [0, 1].
double label_skew_similarity(const DistributionVector& a, const DistributionVector& b);

/// Jensen–Shannon divergence with base-2 logarithms, in [0, 1].
double jensen_shannon(std::span<const double> p, std::span<const double> q);

/// Numerically stable softmax of one embedding.
std::vector<double> softmax(std::span<const float> logits);

/// One side of a concept-drift comparison: a pipeline and the seed its
/// stochastic steps draw from.
struct DriftProfile {
    AugmentationPipeline pipeline;
    std::uint64_t augmentation_seed = 0;
};

/// 1 − mean JSD between softmaxed probe embeddings of the same reference image
/// under the two pipelines.
double concept_drift_similarity(const DriftProfile& a, const DriftProfile& b, const ImageDataset& reference,
                                const ModelParameters& probe, const NetworkSpec& spec);

SimilarityMatrix label_skew_similarity_matrix(const std::vector<ClientDataset>& clients);

/// Pairwise concept-drift similarity; probe embeddings are computed once per
/// distinct (pipeline, seed) profile.
SimilarityMatrix concept_drift_similarity_matrix(const std::vector<ClientDataset>& clients,
                                                 const ImageDataset& reference, const ModelParameters& probe,
                                                 const NetworkSpec& spec, unsigned threads = 1);

SimilarityMatrix embedding_similarity_matrix(const std::vector<ClientEmbedding>& embeddings);

/// Rows/columns of `m` restricted and reordered to `ids`.
SimilarityMatrix restrict_matrix(const SimilarityMatrix& m, std::span<const std::size_t> ids);

/// Pearson correlation of the strict upper triangles. Both matrices must list
/// the same clients in the same order, at least three of them.
double correlation(const SimilarityMatrix& dataset_sims, const SimilarityMatrix& embedding_sims);

/// Unweighted mean over non-empty clusters of the mean within-cluster pairwise
/// cosine similarity of distribution vectors. Singleton clusters count as 1.
double uniformity(const ClusterAssignment& assignment, const std::map<std::size_t, DistributionVector>& dvs);

struct GenerationOptions {
    double noise_amplitude = 0.1;
    double scale_min = 0.5;
    double scale_max = 1.5;
    /// Pins the noise vector n or the scale s instead of drawing them.
    std::optional<std::vector<std::int64_t>> noise;
    std::optional<double> scale;
};

struct GeneratedClient {
    ClientDataset client;
    std::vector<std::int64_t> noise;
    double scale = 1.0;
    /// Per-class counts the sampler was asked for.
    DistributionVector target;
};

/// A fresh training client whose per-class counts are round((d + n) · s),
/// drawn from `pool` without replacement, sharing the reference's pipeline.
/// Throws SamplingError if the pool cannot supply a class.
GeneratedClient generate_similar_client(const ClientDataset& reference, const ImageDataset& pool, std::uint64_t seed,
                                        std::size_t new_id, const GenerationOptions& options = {});

using EmbedFn = std::function<std::vector<float>(const ClientDataset&)>;

struct RobustnessOptions {
    std::size_t iterations = 100;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    GenerationOptions generation;
};

struct RobustnessResult {
    std::size_t cluster = 0;
    std::size_t successes = 0;
    std::size_t iterations = 0;
    double value() const { return iterations ? static_cast<double>(successes) / static_cast<double>(iterations) : 0.0; }
};

/// Fraction of generated look-alikes of random cluster members that the
/// clustering model places back into `cluster`. `embed` must be thread-safe.
RobustnessResult robustness(std::size_t cluster, const std::vector<const ClientDataset*>& members, const EmbedFn& embed,
                            const KMeansModel& model, const ImageDataset& pool, const RobustnessOptions& options);

struct MeanAndError {
    double mean = 0.0;
    double standard_error = 0.0;
};

/// Sample mean and standard error of the mean (zero for a single value).
MeanAndError mean_and_error(std::span<const double> values);

void save_similarity_matrix(const std::filesystem::path& base, const SimilarityMatrix& m);
SimilarityMatrix load_similarity_matrix(const std::filesystem::path& base);

}  // namespace repa
