#pragma once

#include <cstdint>
#include <vector>

#include "dcollapse/workspace.hpp"

namespace dcollapse::kernels {

/// Ids of alive d-collapsible faces, ascending. Reference implementation.
std::vector<std::uint32_t> collapsible_ids_serial(const Workspace& ws, int d);

/// Same result as the serial scan, computed with OpenMP threads.
std::vector<std::uint32_t> collapsible_ids_parallel(const Workspace& ws, int d);

/// Dispatches to the parallel scan above a size threshold.
std::vector<std::uint32_t> collapsible_ids(const Workspace& ws, int d);

}  // namespace dcollapse::kernels
