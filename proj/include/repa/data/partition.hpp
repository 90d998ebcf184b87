#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "repa/data/dataset.hpp"

namespace repa {

struct PathologicalOptions {
    std::size_t n_clients = 100;
    std::size_t classes_per_client = 2;
    std::size_t shards_per_client = 2;
    double holdout_fraction = 0.0;
    std::uint64_t seed = 0;
};

struct LabelSkewOptions {
    std::size_t n_clients = 60;
    std::size_t major_classes_per_client = 2;
    double major_mass = 0.9;
    std::size_t samples_per_client = 100;
    double holdout_fraction = 0.0;
    std::uint64_t seed = 0;
};

inline constexpr double kValidationFraction = 0.2;

/// Sort by label, cut n_clients × shards_per_client equal class-pure shards,
/// deal them to clients by a seeded shuffle. No client ends up with more than
/// classes_per_client classes.
std::vector<ClientDataset> partition_pathological(const ImageDataset& src, const PathologicalOptions& options);

/// Each client draws samples_per_client labels: with probability major_mass
/// from its seeded major classes, otherwise from the rest; images are taken
/// without replacement across the whole population.
std::vector<ClientDataset> partition_label_skew(const ImageDataset& src, const LabelSkewOptions& options);

/// Gives every client a pipeline from `catalog`, round-robin over a seeded
/// permutation of the catalog.
std::vector<ClientDataset> assign_concept_drift(std::vector<ClientDataset> clients,
                                                const std::vector<AugmentationPipeline>& catalog, std::uint64_t seed);

/// Splits `rows` of `src` into a client with an 80/20 train/validation split,
/// stratified by label.
ClientDataset make_client(std::size_t id, const ImageDataset& src, std::span<const std::size_t> rows,
                          std::uint64_t split_seed);

/// Marks the last ceil(holdout_fraction · n) clients of a seeded permutation as
/// holdout, dropping their train split.
void assign_holdout(std::vector<ClientDataset>& clients, double holdout_fraction, std::uint64_t seed);

/// Client ids, roles, source indices per split, pipelines and seeds.
nlohmann::json partition_manifest(const std::vector<ClientDataset>& clients, const nlohmann::json& parameters);

/// Rebuilds clients from a manifest and the pool their indices refer to.
std::vector<ClientDataset> clients_from_manifest(const nlohmann::json& manifest, const ImageDataset& source);

}  // namespace repa
