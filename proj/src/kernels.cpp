#include "dcollapse/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace dcollapse::kernels {

std::vector<std::uint32_t> collapsible_ids_serial(const Workspace& ws, int d) {
  std::vector<std::uint32_t> out;
  const auto n = static_cast<std::uint32_t>(ws.face_count());
  for (std::uint32_t i = 0; i < n; ++i)
    if (ws.is_collapsible(i, d)) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> collapsible_ids_parallel(const Workspace& ws, int d) {
  const auto n = static_cast<std::int64_t>(ws.face_count());
  std::vector<std::vector<std::uint32_t>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
    // Static chunks keep each thread's hits ascending, so a concat + sort
    // of nearly sorted runs is cheap.
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      auto id = static_cast<std::uint32_t>(i);
      if (ws.is_collapsible(id, d)) mine.push_back(id);
    }
  }
  std::vector<std::uint32_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> collapsible_ids(const Workspace& ws, int d) {
  constexpr std::size_t kParallelThreshold = 20000;
  if (ws.face_count() < kParallelThreshold) return collapsible_ids_serial(ws, d);
  return collapsible_ids_parallel(ws, d);
}

}  // namespace dcollapse::kernels
