#pragma once

#include <filesystem>

#include <json.hpp>

#include "repa/nn/network.hpp"

namespace repa {

nlohmann::json spec_to_json(const NetworkSpec& spec);
NetworkSpec spec_from_json(const nlohmann::json& doc);

struct StoredModel {
    NetworkSpec spec;
    ModelParameters params;
    nlohmann::json provenance;
};

/// Writes `<base>.json` (layout, spec, provenance) and `<base>.bin`
/// (little-endian float32 values in layout order).
void save_model(const std::filesystem::path& base, const ModelParameters& params, const NetworkSpec& spec,
                const nlohmann::json& provenance = nlohmann::json::object());

StoredModel load_model(const std::filesystem::path& base);

}  // namespace repa
