#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "repa/embedding/embedding.hpp"
#include "repa/engine/federated.hpp"
#include "repa/metrics/metrics.hpp"

namespace repa {

struct DatasetConfig {
    std::string kind = "mnist_idx";  // mnist_idx | cifar_binary
    std::filesystem::path images;
    std::filesystem::path labels;
    std::vector<std::filesystem::path> files;
    std::size_t limit = 0;  // keep only the first `limit` images; 0 keeps all
};

struct PartitionConfig {
    std::string scheme = "pathological";  // pathological | label_skew
    std::size_t n_clients = 100;
    std::size_t classes_per_client = 2;
    std::size_t shards_per_client = 2;
    std::size_t major_classes_per_client = 2;
    double major_mass = 0.9;
    std::size_t samples_per_client = 100;
    double holdout_fraction = 0.0;
    bool concept_drift = false;  // assign pipelines from the default catalog
};

struct EmbedderConfig {
    StatisticsConfig statistics;
    int wd_fine_tune_epochs = 1;
    float wd_lr = 0.05f;
};

struct ClusteringConfig {
    std::size_t k = 10;
    std::size_t restarts = 10;
    std::size_t max_iter = 300;
    double tol = 1e-6;
};

enum class MethodKind { REPA, WD, FedAvg };
std::string to_string(MethodKind kind);

struct MethodConfig {
    std::string name;
    MethodKind kind = MethodKind::REPA;
};

struct MetricsConfig {
    bool uniformity = true;
    bool robustness = false;
    std::size_t robustness_iterations = 100;
    bool correlation = false;
    std::string similarity = "label_skew";  // label_skew | concept_drift
    std::size_t probe_images = 100;
    double noise_amplitude = 0.1;
    double scale_min = 0.5;
    double scale_max = 1.5;
};

/// Everything that defines a run. Paths are stored absolute, resolved against
/// the directory of the file they were read from.
struct ExperimentConfig {
    std::uint64_t seed = 0;
    std::filesystem::path output = "runs/default";
    DatasetConfig dataset;
    PartitionConfig partition;
    NetworkSpec network;
    EmbedderConfig embedder;
    ClusteringConfig clustering;
    TrainingConfig training;
    std::vector<MethodConfig> methods = {{"repa", MethodKind::REPA}};
    MetricsConfig metrics;

    /// Source line of every key read from the file, by dotted path.
    std::map<std::string, int> lines;
    std::string source = "<config>";

    /// Cross-field checks (including dataset files existing). Throws
    /// ConfigError naming the offending key's line when it is known.
    void validate() const;

    /// Replaces the master seed and every seed derived from it.
    void set_seed(std::uint64_t master);

    /// Seed for a named stage; a pure function of the master seed.
    std::uint64_t stage_seed(std::string_view stage, std::initializer_list<std::uint64_t> indices = {}) const;

    /// "file:line: " for a key, or "file: " if the key was not in the file.
    std::string where(const std::string& key) const;
};

/// Parses YAML text. Relative paths resolve against `base_dir`. Unknown keys,
/// wrong types and out-of-range values raise ConfigError with a line number.
ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir,
                              const std::string& source_name = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical YAML: fixed key order, shortest round-trip numbers. With
/// `include_output = false` the output directory is left out, which is the
/// form stored as a run's snapshot.
std::string to_yaml(const ExperimentConfig& cfg, bool include_output = true);

}  // namespace repa
