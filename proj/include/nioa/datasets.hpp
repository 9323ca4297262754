#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nioa/graph.hpp"

namespace nioa {

// Bundled benchmark networks: "karate", "dolphin", "football". The edge lists
// live under data/ in the repository (see data/README.md for provenance) and
// are compiled into the binary so every command works from any directory.
// Throws std::out_of_range for unknown names.
const Graph& builtin_dataset(std::string_view name);

// Raw edge-list text of a bundled dataset (as stored in data/).
std::string_view builtin_dataset_text(std::string_view name);

const std::vector<std::string>& builtin_dataset_names();

// Conventional community count used as the default K: karate 2, dolphin 2,
// football 12.
int default_k(std::string_view name);

} // namespace nioa
