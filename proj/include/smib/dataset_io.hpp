#pragma once

#include <filesystem>
#include <string>

#include "smib/types.hpp"

namespace smib {

// {"targeted": [[x, y, ...], ...], "untargeted": [...], "query": [...]}
// Parsed datasets are checked with validate_dataset. Throws ParseError / IoError.
LabeledDataset parse_dataset_json(const std::string& text);
LabeledDataset load_dataset(const std::filesystem::path& path);

std::string dataset_to_json(const LabeledDataset& d);
void save_dataset(const LabeledDataset& d, const std::filesystem::path& path);

}  // namespace smib
