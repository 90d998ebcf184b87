#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "repa/data/augment.hpp"
#include "repa/nn/tensor.hpp"

namespace repa {

/// Images (N, H, W, C) scaled to [0, 1] with integer labels in [0, class_count).
/// An empty `labels` vector marks an unlabeled dataset. `source_index[i]`
/// records where image i came from in the pool it was drawn from, so partitions
/// can be persisted as index lists.
struct ImageDataset {
    Tensor images;
    std::vector<int> labels;
    std::size_t class_count = 10;
    std::vector<std::size_t> source_index;

    std::size_t size() const { return images.rank() == 4 ? images.dim(0) : 0; }
    bool empty() const { return size() == 0; }
    bool labeled() const { return !labels.empty() || empty(); }
    Shape image_shape() const { return {images.dim(1), images.dim(2), images.dim(3)}; }

    /// Rows `rows` of this dataset; source indices are carried over.
    ImageDataset subset(std::span<const std::size_t> rows) const;

    /// Throws InputError unless shapes, label ranges and index counts agree.
    void validate() const;
};

/// Per-class sample counts.
struct DistributionVector {
    std::vector<std::int64_t> counts;

    std::int64_t total() const;
    std::size_t nonzero() const;
    bool operator==(const DistributionVector&) const = default;
};

DistributionVector distribution_vector(const ImageDataset& d);

/// Picks the rows of `pool` whose source indices are listed, in that order.
ImageDataset select_by_source(const ImageDataset& pool, std::span<const std::size_t> source_indices);

enum class ClientRole { Training, Holdout };

std::string to_string(ClientRole role);

/// One federated client. Training clients hold a train and a validation split;
/// holdout clients only a validation split. The augmentation pipeline is
/// applied whenever images are exposed, never to the stored data.
struct ClientDataset {
    std::size_t id = 0;
    ClientRole role = ClientRole::Training;
    std::optional<ImageDataset> train;
    ImageDataset validation;
    AugmentationPipeline pipeline;
    /// Seed for stochastic pipeline steps; the per-image seed is derived from
    /// it and the image's source index, so equal pipelines on equal images agree.
    std::uint64_t augmentation_seed = 0;
    bool labels_visible = true;

    bool is_training() const { return role == ClientRole::Training; }

    /// The split the client profiles itself with: train for training clients,
    /// validation for holdout clients.
    const ImageDataset& profile_split() const;

    /// Distribution over everything the client holds (train + validation).
    DistributionVector distribution() const;

    /// Throws InputError if the role/split invariants are violated.
    void validate() const;
};

/// `split` with the client's pipeline applied to every image.
ImageDataset expose(const ClientDataset& client, const ImageDataset& split);

/// Seed used for the pipeline on an image with the given source index.
std::uint64_t image_seed(std::uint64_t augmentation_seed, std::size_t source_index);

}  // namespace repa
