#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "repa/engine/config.hpp"

namespace repa {

struct RunOptions {
    unsigned threads = 1;
    /// Reuse artifacts already present in the output directory.
    bool resume = false;
    /// Progress messages; nullptr keeps the run silent.
    std::ostream* log = nullptr;
};

struct MetricRow {
    std::string method;
    std::string metric;
    std::optional<std::size_t> cluster;
    double value = 0.0;
};

struct MethodSummary {
    std::string method;
    std::string kind;
    std::size_t k = 1;
    std::size_t rounds = 0;
    std::size_t warmup_rounds = 0;
    double val_acc = 0.0;
    double ho_acc = 0.0;
    std::optional<double> uniformity;
    std::optional<double> robustness_mean;
    std::optional<double> robustness_se;
    std::map<std::size_t, double> robustness_per_cluster;
    std::optional<double> correlation;
    std::vector<std::string> notes;
};

nlohmann::json summary_to_json(const std::vector<MethodSummary>& s);

/// Names accepted by `--only`.
inline const std::set<std::string> kMetricNames = {"uniformity", "robustness", "correlation"};

/// Artifacts of one experiment under `cfg.output`:
///   config.yaml                 canonical config snapshot (no output path)
///   partition.json              client manifest
///   warmup/global.{json,bin}    warm-up model, warmup/rounds.json its log
///   <method>/embeddings.*       client embeddings (repa and wd methods)
///   <method>/kmeans.*, <method>/assignment.json
///   <method>/rounds.csv, <method>/rounds.json, <method>/models/cluster_<k>.*
///   metrics.csv, summary.json
/// Each stage reads its inputs from those files, so staged and monolithic
/// execution produce the same bytes.
class Workspace {
public:
    Workspace(ExperimentConfig cfg, RunOptions options);
    ~Workspace();
    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

    const ExperimentConfig& config() const { return cfg_; }
    const std::filesystem::path& dir() const { return cfg_.output; }

    /// Every stage in order, then metrics and the summary.
    std::vector<MethodSummary> run();

    void stage_partition();
    void stage_warmup();
    void stage_embed(const MethodConfig& method);
    void stage_cluster(const MethodConfig& method);
    void stage_train(const MethodConfig& method);
    /// Computes the selected metrics (all enabled ones when `only` is empty).
    std::vector<MetricRow> stage_metrics(const MethodConfig& method, const std::set<std::string>& only = {});

    /// Rewrites metrics.csv, or appends to it.
    void write_metrics(const std::vector<MetricRow>& rows, bool append) const;

    /// Loads the dataset pool (cached).
    const ImageDataset& pool();
    const std::vector<ClientDataset>& clients();
    const ModelParameters& warmup_model();
    std::vector<ClientEmbedding> embeddings(const MethodConfig& method) const;
    ClusterAssignment assignment(const MethodConfig& method) const;
    KMeansModel kmeans(const MethodConfig& method) const;
    std::vector<RoundReport> history(const MethodConfig& method) const;

private:
    struct State;

    std::filesystem::path path(const std::string& relative) const { return cfg_.output / relative; }
    void prepare_directory();
    void log(const std::string& message) const;
    bool reuse(const std::filesystem::path& artifact) const;
    const std::vector<PreparedClient>& prepared();
    MethodSummary summarize(const MethodConfig& method, const std::vector<MetricRow>& rows) const;

    ExperimentConfig cfg_;
    RunOptions options_;
    std::unique_ptr<State> state_;
};

/// Monolithic run into cfg.output.
std::vector<MethodSummary> run_experiment(const ExperimentConfig& cfg, const RunOptions& options = {});

/// Reads the history stored in a rounds JSON log.
std::vector<RoundReport> rounds_from_json(const nlohmann::json& doc);

/// Plain-text table of the summary records; values printed exactly as stored.
std::string format_report(const nlohmann::json& summary);

}  // namespace repa
