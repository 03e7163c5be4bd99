#include "invsg/green.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "invsg/scc.hpp"

namespace invsg {

namespace {


void check_generates(std::size_t n, std::span<const ElementId> gens,
                     const std::vector<ElementId>& right) {
  std::vector<bool> seen(n, false);
  std::deque<ElementId> queue;
  for (ElementId g : gens) {
    if (!seen[g]) {
      seen[g] = true;
      queue.push_back(g);
    }
  }
  std::size_t reached = queue.size();
  const std::size_t k = gens.size();
  while (!queue.empty()) {
    ElementId a = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      ElementId b = right[a * k + i];
      if (!seen[b]) {
        seen[b] = true;
        ++reached;
        queue.push_back(b);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::GeneratorsDoNotGenerate,
                "generators reach " + std::to_string(reached) + " of " +
                    std::to_string(n) + " elements");
  }
}

}  // namespace

CayleyGraph CayleyGraph::build(const InvolutorySemigroup& s,
                               std::span<const ElementId> generators) {
  CayleyGraph g;
  g.size_ = s.size();
  g.generators_.assign(generators.begin(), generators.end());
  for (ElementId x : g.generators_) {
    if (x >= s.size()) {
      throw Error(ErrorCode::GeneratorsDoNotGenerate, "generator out of range", {x});
    }
  }
  const std::size_t k = g.generators_.size();
  g.right_.resize(g.size_ * k);
  g.left_.resize(g.size_ * k);
  for (ElementId a = 0; a < g.size_; ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      g.right_[a * k + i] = s.product(a, g.generators_[i]);
      g.left_[a * k + i] = s.product(g.generators_[i], a);
    }
  }
  check_generates(g.size_, g.generators_, g.right_);
  return g;
}

CayleyGraph CayleyGraph::build(const OracleSemigroup& s) {
  CayleyGraph g;
  g.size_ = s.size();
  g.generators_ = s.generators();
  const std::size_t k = g.generators_.size();
  g.right_.resize(g.size_ * k);
  g.left_.resize(g.size_ * k);
  for (ElementId a = 0; a < g.size_; ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      g.right_[a * k + i] = s.product(a, g.generators_[i]);
      g.left_[a * k + i] = s.product(g.generators_[i], a);
    }
  }
  check_generates(g.size_, g.generators_, g.right_);
  return g;
}

std::vector<ElementId> default_generators(const InvolutorySemigroup& s) {
  if (!s.generators().empty()) return s.generators();
  if (s.size() > kAllElementsGeneratorLimit) {
    throw Error(ErrorCode::GeneratorsDoNotGenerate,
                "no generator list recorded and the semigroup has more than " +
                    std::to_string(kAllElementsGeneratorLimit) + " elements");
  }
  std::vector<ElementId> all(s.size());
  std::iota(all.begin(), all.end(), ElementId{0});
  return all;
}

namespace {

std::vector<std::uint32_t> join_partitions(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint32_t* count) {
  const std::size_t n = a.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite_by = [&](const std::vector<std::uint32_t>& part) {
    std::map<std::uint32_t, std::uint32_t> first;
    for (std::uint32_t v = 0; v < n; ++v) {
      auto [it, inserted] = first.try_emplace(part[v], v);
      if (!inserted) {
        std::uint32_t x = find(v);
        std::uint32_t y = find(it->second);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
  };
  unite_by(a);
  unite_by(b);
  std::vector<std::uint32_t> roots(n);
  for (std::uint32_t v = 0; v < n; ++v) roots[v] = find(v);
  return canonical_partition(roots, count);
}

constexpr std::uint32_t kReductionLimit = 20000;

void build_j_order(const CayleyGraph& graph, GreensData& d) {
  const std::uint32_t m = d.j_count;
  std::vector<std::vector<std::uint32_t>> succ(m);
  const std::size_t k = graph.generators().size();
  for (ElementId a = 0; a < graph.size(); ++a) {
    const std::uint32_t ca = d.j_class[a];
    for (std::size_t i = 0; i < k; ++i) {
      for (ElementId b : {graph.right(a, i), graph.left(a, i)}) {
        if (d.j_class[b] != ca) succ[ca].push_back(d.j_class[b]);
      }
    }
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  if (m > kReductionLimit) {
    d.j_order_reduced = false;
    for (std::uint32_t c = 0; c < m; ++c) {
      for (std::uint32_t t : succ[c]) d.j_order.emplace_back(c, t);
    }
    return;
  }
  // Kahn order, then descendant bitsets in reverse topological order.
  std::vector<std::uint32_t> indeg(m, 0);
  for (auto& s : succ) {
    for (std::uint32_t t : s) ++indeg[t];
  }
  std::vector<std::uint32_t> order;
  std::deque<std::uint32_t> ready;
  for (std::uint32_t c = 0; c < m; ++c) {
    if (indeg[c] == 0) ready.push_back(c);
  }
  while (!ready.empty()) {
    std::uint32_t c = ready.front();
    ready.pop_front();
    order.push_back(c);
    for (std::uint32_t t : succ[c]) {
      if (--indeg[t] == 0) ready.push_back(t);
    }
  }
  if (order.size() != m) throw std::logic_error("J-order condensation has a cycle");
  const std::size_t words = (m + 63) / 64;
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(m) * words, 0);
  auto bit = [&](std::uint32_t c, std::uint32_t t) {
    return (reach[c * words + t / 64] >> (t % 64)) & 1U;
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::uint32_t c = *it;
    for (std::uint32_t t : succ[c]) {
      reach[c * words + t / 64] |= std::uint64_t{1} << (t % 64);
      for (std::size_t w = 0; w < words; ++w) reach[c * words + w] |= reach[t * words + w];
    }
  }
  for (std::uint32_t c = 0; c < m; ++c) {
    for (std::uint32_t t : succ[c]) {
      bool covered = true;
      for (std::uint32_t u : succ[c]) {
        if (u != t && bit(u, t)) {
          covered = false;
          break;
        }
      }
      if (covered) d.j_order.emplace_back(c, t);
    }
  }
}

}  // namespace

GreensData greens(const CayleyGraph& graph) {
  GreensData d;
  d.generators = graph.generators();
  const auto n = static_cast<std::uint32_t>(graph.size());
  const auto k = static_cast<std::uint32_t>(graph.generators().size());

  auto r = strongly_connected_components(
      n, [k](std::uint32_t) { return k; },
      [&](std::uint32_t v, std::uint32_t i) { return graph.right(v, i); });
  auto l = strongly_connected_components(
      n, [k](std::uint32_t) { return k; },
      [&](std::uint32_t v, std::uint32_t i) { return graph.left(v, i); });
  auto j = strongly_connected_components(
      n, [k](std::uint32_t) { return 2 * k; },
      [&](std::uint32_t v, std::uint32_t i) {
        return i < k ? graph.right(v, i) : graph.left(v, i - k);
      });
  d.r_class = std::move(r.component);
  d.r_count = r.count;
  d.l_class = std::move(l.component);
  d.l_count = l.count;
  d.j_class = std::move(j.component);
  d.j_count = j.count;

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> h;
  d.h_class.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    auto [it, inserted] = h.try_emplace({d.r_class[v], d.l_class[v]},
                                        static_cast<std::uint32_t>(h.size()));
    d.h_class[v] = it->second;
  }
  d.h_count = static_cast<std::uint32_t>(h.size());
  d.d_class = join_partitions(d.r_class, d.l_class, &d.d_count);
  if (d.d_class != d.j_class) {
    throw std::logic_error("D and J partitions differ on a finite semigroup");
  }
  build_j_order(graph, d);
  return d;
}

GreensData greens(const InvolutorySemigroup& s,
                  std::span<const ElementId> generators) {
  std::vector<ElementId> gens(generators.begin(), generators.end());
  if (gens.empty()) gens = default_generators(s);
  return greens(CayleyGraph::build(s, gens));
}

namespace {

// Breadth-first search of S^1 a S^1; stops early once `target` is reached.
template <typename Next>
std::vector<ElementId> ideal_search(std::size_t n, std::size_t k, ElementId a,
                                    std::optional<ElementId> target, Next next,
                                    bool* found) {
  std::vector<bool> seen(n, false);
  std::vector<ElementId> out{a};
  seen[a] = true;
  if (target && *target == a) {
    *found = true;
    return out;
  }
  for (std::size_t head = 0; head < out.size(); ++head) {
    const ElementId x = out[head];
    for (std::size_t i = 0; i < 2 * k; ++i) {
      const ElementId y = next(x, i);
      if (seen[y]) continue;
      seen[y] = true;
      out.push_back(y);
      if (target && *target == y) {
        *found = true;
        return out;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<ElementId> principal_ideal(const CayleyGraph& graph, ElementId a) {
  const std::size_t k = graph.generators().size();
  bool found = false;
  auto out = ideal_search(
      graph.size(), k, a, std::nullopt,
      [&](ElementId x, std::size_t i) {
        return i < k ? graph.right(x, i) : graph.left(x, i - k);
      },
      &found);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> principal_ideal(const InvolutorySemigroup& s,
                                       std::span<const ElementId> generators,
                                       ElementId a) {
  std::vector<ElementId> gens(generators.begin(), generators.end());
  if (gens.empty()) gens = default_generators(s);
  return principal_ideal(CayleyGraph::build(s, gens), a);
}

bool j_leq(const CayleyGraph& graph, ElementId a, ElementId b) {
  const std::size_t k = graph.generators().size();
  bool found = false;
  ideal_search(
      graph.size(), k, b, a,
      [&](ElementId x, std::size_t i) {
        return i < k ? graph.right(x, i) : graph.left(x, i - k);
      },
      &found);
  return found;
}

bool strictly_above_j(const CayleyGraph& graph, ElementId a, ElementId b) {
  return j_leq(graph, b, a) && !j_leq(graph, a, b);
}

bool j_leq(const OracleSemigroup& s, ElementId a, ElementId b) {
  const auto& gens = s.generators();
  const std::size_t k = gens.size();
  bool found = false;
  ideal_search(
      s.size(), k, b, a,
      [&](ElementId x, std::size_t i) {
        return i < k ? s.product(x, gens[i]) : s.product(gens[i - k], x);
      },
      &found);
  return found;
}

bool strictly_above_j(const OracleSemigroup& s, ElementId a, ElementId b) {
  return j_leq(s, b, a) && !j_leq(s, a, b);
}

EggboxView eggbox(const InvolutorySemigroup& s, const GreensData& g,
                  ElementId element) {
  EggboxView v;
  v.d_class = g.d_class[element];
  for (ElementId a = 0; a < s.size(); ++a) {
    if (g.d_class[a] != v.d_class) continue;
    if (std::find(v.rows.begin(), v.rows.end(), g.r_class[a]) == v.rows.end()) {
      v.rows.push_back(g.r_class[a]);
    }
    if (std::find(v.columns.begin(), v.columns.end(), g.l_class[a]) ==
        v.columns.end()) {
      v.columns.push_back(g.l_class[a]);
    }
  }
  v.cells.assign(v.rows.size(),
                 std::vector<std::vector<ElementId>>(v.columns.size()));
  v.has_idempotent.assign(v.rows.size(), std::vector<bool>(v.columns.size(), false));
  for (ElementId a = 0; a < s.size(); ++a) {
    if (g.d_class[a] != v.d_class) continue;
    auto row = std::find(v.rows.begin(), v.rows.end(), g.r_class[a]) - v.rows.begin();
    auto col = std::find(v.columns.begin(), v.columns.end(), g.l_class[a]) -
               v.columns.begin();
    v.cells[row][col].push_back(a);
    if (s.product(a, a) == a) v.has_idempotent[row][col] = true;
  }
  return v;
}

std::string render_eggbox(const InvolutorySemigroup& s, const EggboxView& view,
                          bool annotate_star) {
  std::vector<std::vector<std::string>> text(view.rows.size());
  std::vector<std::size_t> width(view.columns.size(), 1);
  std::size_t count = 0;
  for (std::size_t r = 0; r < view.rows.size(); ++r) {
    for (std::size_t c = 0; c < view.columns.size(); ++c) {
      std::string cell;
      for (ElementId a : view.cells[r][c]) {
        if (!cell.empty()) cell += ",";
        cell += s.label(a);
        if (annotate_star) cell += "{*" + s.label(s.star(a)) + "}";
        ++count;
      }
      if (view.has_idempotent[r][c]) cell = "[e:" + cell + "]";
      width[c] = std::max(width[c], cell.size());
      text[r].push_back(std::move(cell));
    }
  }
  std::ostringstream out;
  out << "D-class " << view.d_class << ": " << count << " elements, "
      << view.rows.size() << "x" << view.columns.size() << "\n";
  std::string rule = "+";
  for (std::size_t w : width) rule += std::string(w + 2, '-') + "+";
  out << rule << "\n";
  for (std::size_t r = 0; r < text.size(); ++r) {
    out << "|";
    for (std::size_t c = 0; c < text[r].size(); ++c) {
      out << " " << text[r][c] << std::string(width[c] - text[r][c].size(), ' ')
          << " |";
    }
    out << "\n" << rule << "\n";
  }
  return out.str();
}

StabilityResult stability_check(
    const InvolutorySemigroup& s, const GreensData& g,
    std::span<const std::pair<ElementId, ElementId>> pairs) {
  for (auto [a, b] : pairs) {
    const ElementId ab = s.product(a, b);
    const bool right_ok = g.j_class[a] != g.j_class[ab] || g.r_class[a] == g.r_class[ab];
    const bool left_ok = g.j_class[b] != g.j_class[ab] || g.l_class[b] == g.l_class[ab];
    if (!right_ok || !left_ok) return {false, std::make_pair(a, b)};
  }
  return {};
}

StabilityResult stability_check_all(const InvolutorySemigroup& s,
                                    const GreensData& g) {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  pairs.reserve(s.size() * s.size());
  for (ElementId a = 0; a < s.size(); ++a) {
    for (ElementId b = 0; b < s.size(); ++b) pairs.emplace_back(a, b);
  }
  return stability_check(s, g, pairs);
}

bool miller_clifford_check(const InvolutorySemigroup& s, const GreensData& g,
                           ElementId a, ElementId b) {
  if (g.d_class[a] != g.d_class[b]) {
    throw Error(ErrorCode::NotSameDClass,
                std::to_string(a) + " and " + std::to_string(b) +
                    " lie in different D-classes",
                {a, b});
  }
  const ElementId ab = s.product(a, b);
  const bool product_side = g.r_class[ab] == g.r_class[a] && g.l_class[ab] == g.l_class[b];
  bool idempotent_side = false;
  for (ElementId e = 0; e < s.size() && !idempotent_side; ++e) {
    idempotent_side = s.product(e, e) == e && g.l_class[e] == g.l_class[a] &&
                      g.r_class[e] == g.r_class[b];
  }
  return product_side == idempotent_side;
}

bool is_completely_simple(const InvolutorySemigroup& s) {
  if (!is_regular(s)) return false;
  return greens(s).j_count == 1;
}

namespace {

bool projections_cover(const InvolutorySemigroup& s,
                       const std::vector<std::uint32_t>& cls, std::uint32_t count) {
  std::vector<bool> regular(count, false);
  std::vector<bool> has_projection(count, false);
  for (ElementId a = 0; a < s.size(); ++a) {
    if (s.product(a, a) != a) continue;
    regular[cls[a]] = true;
    if (s.star(a) == a) has_projection[cls[a]] = true;
  }
  for (std::uint32_t c = 0; c < count; ++c) {
    if (regular[c] && !has_projection[c]) return false;
  }
  return true;
}

}  // namespace

bool has_projection_in_every_regular_l_class(const InvolutorySemigroup& s) {
  auto g = greens(s);
  return projections_cover(s, g.l_class, g.l_count);
}

bool has_projection_in_every_regular_r_class(const InvolutorySemigroup& s) {
  auto g = greens(s);
  return projections_cover(s, g.r_class, g.r_count);
}

}  // namespace invsg
