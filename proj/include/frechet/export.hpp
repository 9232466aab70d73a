#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "frechet/reachability.hpp"

namespace frechet {

// Machine-readable dump of the outlier free-space diagram: every stored
// reachable interval with its (i, j, span, h) key, every reachable grid
// point, and the start/ending points.
nlohmann::json freespace_json(const ReachTable& table);

// One 2-D panel per height layer: free space in white, reachable intervals
// highlighted, start and ending points marked.
std::string freespace_svg(const ReachTable& table);

}  // namespace frechet
