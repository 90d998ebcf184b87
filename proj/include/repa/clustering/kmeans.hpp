#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <vector>

#include <json.hpp>

#include "repa/embedding/embedding.hpp"

namespace repa {

/// K-Means model over standardized embeddings. Distances are computed after
/// mapping x to (x − shift) / scale; centroids live in that space.
struct KMeansModel {
    std::size_t k = 0;
    Tensor centroids;  // (k, d), standardized space
    std::vector<double> shift;
    std::vector<double> scale;
    double inertia = 0.0;

    std::size_t dim() const { return shift.size(); }

    /// Centroid j mapped back to embedding space.
    std::vector<float> centroid_preimage(std::size_t j) const;
};

/// α: client id -> cluster index.
struct ClusterAssignment {
    std::map<std::size_t, std::size_t> cluster_of;

    std::size_t at(std::size_t client_id) const;
    /// Client ids per cluster, ascending, for clusters 0..k-1.
    std::vector<std::vector<std::size_t>> members(std::size_t k) const;
    bool operator==(const ClusterAssignment&) const = default;
};

struct KMeansOptions {
    std::size_t k = 10;
    std::size_t restarts = 10;
    std::size_t max_iter = 300;
    double tol = 1e-6;
    std::uint64_t seed = 0;
};

struct KMeansFit {
    KMeansModel model;
    ClusterAssignment assignment;
    /// Inertia after every assignment step of the winning restart.
    std::vector<double> inertia_trace;
};

/// Standardizes dimensions (zero-variance ones get scale 1), runs k-means++
/// seeding and Lloyd iterations per restart, keeps the lowest-inertia restart.
/// Emptied clusters are reseeded at the point farthest from its centroid.
KMeansFit kmeans_fit(const std::vector<ClientEmbedding>& embeddings, const KMeansOptions& options);

/// Nearest centroid under standardized Euclidean distance; ties go to the lowest index.
std::size_t kmeans_predict(const KMeansModel& model, std::span<const float> embedding);
std::size_t kmeans_predict(const KMeansModel& model, const ClientEmbedding& embedding);

void save_kmeans(const std::filesystem::path& base, const KMeansModel& model);
KMeansModel load_kmeans(const std::filesystem::path& base);

nlohmann::json assignment_to_json(const ClusterAssignment& a);
ClusterAssignment assignment_from_json(const nlohmann::json& doc);

}  // namespace repa
