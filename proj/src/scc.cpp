#include "invsg/scc.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace invsg {

namespace {
constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
}

SccResult strongly_connected_components(
    std::uint32_t vertex_count,
    const std::function<std::uint32_t(std::uint32_t)>& out_degree,
    const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& neighbor) {
  std::vector<std::uint32_t> index(vertex_count, kUnvisited);
  std::vector<std::uint32_t> low(vertex_count, 0);
  std::vector<bool> on_stack(vertex_count, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::uint32_t> raw(vertex_count, 0);
  std::uint32_t next_index = 0;
  std::uint32_t next_component = 0;

  struct Frame {
    std::uint32_t vertex;
    std::uint32_t edge;
  };
  std::vector<Frame> call;

  for (std::uint32_t root = 0; root < vertex_count; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      const std::uint32_t v = f.vertex;
      if (f.edge < out_degree(v)) {
        const std::uint32_t w = neighbor(v, f.edge++);
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          raw[w] = next_component;
        } while (w != v);
        ++next_component;
      }
      call.pop_back();
      if (!call.empty()) {
        const std::uint32_t parent = call.back().vertex;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }

  SccResult result;
  result.component = canonical_partition(raw, &result.count);
  return result;
}

std::vector<std::uint32_t> canonical_partition(const std::vector<std::uint32_t>& labels,
                                               std::uint32_t* count) {
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  std::vector<std::uint32_t> out(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] =
        renumber.try_emplace(labels[v], static_cast<std::uint32_t>(renumber.size()));
    out[v] = it->second;
  }
  if (count != nullptr) *count = static_cast<std::uint32_t>(renumber.size());
  return out;
}

}  // namespace invsg
