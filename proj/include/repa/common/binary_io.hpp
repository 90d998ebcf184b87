#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace repa {

/// Writes values as little-endian IEEE-754 float32.
void write_f32_file(const std::filesystem::path& path, std::span<const float> values);

/// Reads a little-endian float32 sidecar; throws FormatError if the length
/// does not match `expected_count`.
std::vector<float> read_f32_file(const std::filesystem::path& path, std::size_t expected_count);

/// Reads and parses a JSON document, wrapping parse failures in FormatError.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Writes `doc` with two-space indentation and a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace repa
