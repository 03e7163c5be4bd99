#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace invsg {

struct SccResult {
  // component[v] for each vertex; components numbered by least vertex.
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
};

// Iterative Tarjan over an implicit graph: out_degree(v) edges, the i-th of
// which is neighbor(v, i). No recursion, so vertex counts of 10^5 and more
// are fine.
SccResult strongly_connected_components(
    std::uint32_t vertex_count,
    const std::function<std::uint32_t(std::uint32_t)>& out_degree,
    const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& neighbor);

// Renumbers a partition so that classes appear in order of their least
// member.
std::vector<std::uint32_t> canonical_partition(const std::vector<std::uint32_t>& labels,
                                               std::uint32_t* count = nullptr);

}  // namespace invsg
