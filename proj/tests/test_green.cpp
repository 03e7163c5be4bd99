#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "invsg/green.hpp"
#include "invsg/scc.hpp"

using namespace invsg;
using namespace invsg::testing;

namespace {

enum : ElementId { Z = 0, E11 = 1, E12 = 2, E21 = 3, E22 = 4, I = 5 };

std::vector<ElementId> brute_ideal(const InvolutorySemigroup& s, ElementId a) {
  std::set<ElementId> out = {a};
  for (ElementId x = 0; x < s.size(); ++x) {
    out.insert(s.product(x, a));
    out.insert(s.product(a, x));
    for (ElementId y = 0; y < s.size(); ++y) out.insert(s.product(s.product(x, a), y));
  }
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("iterative SCC", "[green][scc]") {
  // 0 -> 1 -> 2 -> 0, 2 -> 3, 3 -> 4 -> 3
  const std::vector<std::vector<std::uint32_t>> adj = {{1}, {2}, {0, 3}, {4}, {3}, {}};
  const SccResult r = strongly_connected_components(
      6, [&](std::uint32_t v) { return static_cast<std::uint32_t>(adj[v].size()); },
      [&](std::uint32_t v, std::uint32_t i) { return adj[v][i]; });
  CHECK(r.count == 3);
  CHECK(r.component == std::vector<std::uint32_t>{0, 0, 0, 1, 1, 2});

  // A long cycle and a long path: deep enough to break a recursive version.
  const std::uint32_t n = 300000;
  const SccResult cycle = strongly_connected_components(
      n, [](std::uint32_t) { return 1u; }, [&](std::uint32_t v, std::uint32_t) { return (v + 1) % n; });
  CHECK(cycle.count == 1);
  const SccResult path = strongly_connected_components(
      n, [&](std::uint32_t v) { return v + 1 < n ? 1u : 0u; },
      [](std::uint32_t v, std::uint32_t) { return v + 1; });
  CHECK(path.count == n);

  std::uint32_t count = 0;
  CHECK(canonical_partition({7, 3, 7, 9}, &count) == std::vector<std::uint32_t>{0, 1, 0, 2});
  CHECK(count == 3);
}

TEST_CASE("Green's relations of the twisted semilattice", "[green]") {
  const std::vector<ElementId> gens = {0, 1};
  const GreensData g = greens(tsl(), gens);
  CHECK(g.j_count == 3);
  CHECK(g.j_order.size() == 2);
  const std::uint32_t je = g.j_class[0], jf = g.j_class[1], j0 = g.j_class[2];
  CHECK(std::count(g.j_order.begin(), g.j_order.end(), std::pair{je, j0}) == 1);
  CHECK(std::count(g.j_order.begin(), g.j_order.end(), std::pair{jf, j0}) == 1);
  const CayleyGraph graph = CayleyGraph::build(tsl(), gens);
  CHECK_FALSE(j_leq(graph, 0, 1));
  CHECK_FALSE(j_leq(graph, 1, 0));
}

TEST_CASE("Green's relations of the Brandt monoid", "[green]") {
  const GreensData g = greens(b21());
  CHECK(g.j_count == 3);
  CHECK(g.j_class[E11] == g.j_class[E12]);
  CHECK(g.j_class[E11] == g.j_class[E21]);
  CHECK(g.j_class[E11] == g.j_class[E22]);
  CHECK(g.j_class[I] != g.j_class[E11]);
  CHECK(g.j_class[Z] != g.j_class[E11]);
  CHECK(g.j_order.size() == 2);
  CHECK(std::count(g.j_order.begin(), g.j_order.end(), std::pair{g.j_class[I], g.j_class[E11]}));
  CHECK(std::count(g.j_order.begin(), g.j_order.end(), std::pair{g.j_class[E11], g.j_class[Z]}));
  CHECK(g.r_class[E11] == g.r_class[E12]);
  CHECK(g.l_class[E11] == g.l_class[E21]);
  CHECK(g.h_count == 6);
}

TEST_CASE("a group is a single class of every relation", "[green]") {
  const GreensData g = greens(cyclic_group(4));
  CHECK(g.r_count == 1);
  CHECK(g.l_count == 1);
  CHECK(g.h_count == 1);
  CHECK(g.d_count == 1);
  CHECK(g.j_count == 1);
  CHECK(g.j_order.empty());
}

TEST_CASE("generators must generate", "[green]") {
  const std::vector<ElementId> gens = {E12};
  try {
    greens(b21(), gens);
    FAIL("accepted a non-generating set");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GeneratorsDoNotGenerate);
  }
}

TEST_CASE("principal ideals and the J-order", "[green]") {
  const InvolutorySemigroup s = b21();
  const auto gens = default_generators(s);
  CHECK(principal_ideal(s, gens, Z) == std::vector<ElementId>{Z});
  CHECK(principal_ideal(s, gens, E12) == std::vector<ElementId>{Z, E11, E12, E21, E22});
  CHECK(principal_ideal(s, gens, I).size() == 6);

  const CayleyGraph tb_graph = CayleyGraph::build(tb(), default_generators(tb()));
  CHECK(strictly_above_j(tb_graph, E11, tb().product(tb().star(E11), E11)));
  CHECK(strictly_above_j(as_oracle(tb()), E11, Z));

  const CayleyGraph b_graph = CayleyGraph::build(s, gens);
  for (ElementId e : idempotents(s)) {
    CHECK_FALSE(strictly_above_j(b_graph, e, s.product(s.star(e), e)));
    CHECK_FALSE(strictly_above_j(b_graph, e, e));
  }
}

TEST_CASE("targeted and graph-based J comparisons agree", "[green][property]") {
  for (const auto& s : corpus(100)) {
    const CayleyGraph graph = CayleyGraph::build(s, default_generators(s));
    const OracleSemigroup o = as_oracle(s);
    const GreensData g = greens(graph);
    CAPTURE(s.name());
    for (ElementId a = 0; a < s.size(); a += 3) {
      for (ElementId b = 0; b < s.size(); b += 2) {
        CHECK(j_leq(graph, a, b) == j_leq(o, a, b));
        CHECK(strictly_above_j(graph, a, b) == strictly_above_j(o, a, b));
        if (j_leq(graph, a, b) && j_leq(graph, b, a)) CHECK(g.j_class[a] == g.j_class[b]);
      }
    }
  }
}

TEST_CASE("Green's data invariants", "[green][property]") {
  for (const auto& s : corpus(700)) {
    const GreensData g = greens(s);
    CAPTURE(s.name());
    CHECK(g.d_class == g.j_class);
    CHECK(g.d_count == g.j_count);
    for (ElementId a = 0; a < s.size(); ++a) {
      for (ElementId b = 0; b < s.size(); b += std::max<std::size_t>(1, s.size() / 40)) {
        const bool same_h = g.h_class[a] == g.h_class[b];
        CHECK(same_h == (g.r_class[a] == g.r_class[b] && g.l_class[a] == g.l_class[b]));
        if (g.r_class[a] == g.r_class[b]) CHECK(g.l_class[s.star(a)] == g.l_class[s.star(b)]);
      }
    }
    for (const auto& [upper, lower] : g.j_order) CHECK(upper != lower);
    // Acyclic: a topological order exists.
    std::vector<std::uint32_t> indegree(g.j_count, 0);
    for (const auto& edge : g.j_order) ++indegree[edge.second];
    std::vector<std::uint32_t> ready;
    for (std::uint32_t c = 0; c < g.j_count; ++c) {
      if (indegree[c] == 0) ready.push_back(c);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
      const std::uint32_t c = ready.back();
      ready.pop_back();
      ++seen;
      for (const auto& [u, l] : g.j_order) {
        if (u == c && --indegree[l] == 0) ready.push_back(l);
      }
    }
    CHECK(seen == g.j_count);
  }
}

TEST_CASE("principal ideals match brute force", "[green][property]") {
  for (const auto& s : corpus(200)) {
    const auto gens = default_generators(s);
    CAPTURE(s.name());
    for (ElementId a = 0; a < s.size(); ++a) CHECK(principal_ideal(s, gens, a) == brute_ideal(s, a));
  }
}

TEST_CASE("stability", "[green]") {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId a = 0; a < 6; ++a) {
    for (ElementId b = 0; b < 6; ++b) pairs.emplace_back(a, b);
  }
  CHECK(stability_check(b21(), greens(b21()), pairs).ok);
  CHECK(stability_check_all(trivial_semigroup(), greens(trivial_semigroup())).ok);
  CHECK(stability_check_all(tsl(), greens(tsl())).ok);
  for (const auto& s : corpus(100)) {
    CAPTURE(s.name());
    CHECK(stability_check_all(s, greens(s)).ok);
  }
}

TEST_CASE("Miller-Clifford", "[green]") {
  const GreensData g = greens(b21());
  CHECK(miller_clifford_check(b21(), g, E12, E21));
  CHECK(miller_clifford_check(b21(), g, E11, E11));
  CHECK(miller_clifford_check(b21(), g, E12, E12));
  try {
    miller_clifford_check(b21(), g, E12, I);
    FAIL("accepted elements of different D-classes");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSameDClass);
  }
}

TEST_CASE("eggbox views", "[green]") {
  const InvolutorySemigroup s = b21();
  const GreensData g = greens(s);
  const EggboxView v = eggbox(s, g, E12);
  REQUIRE(v.rows.size() == 2);
  REQUIRE(v.columns.size() == 2);
  CHECK(v.cells[0][0] == std::vector<ElementId>{E11});
  CHECK(v.cells[0][1] == std::vector<ElementId>{E12});
  CHECK(v.cells[1][0] == std::vector<ElementId>{E21});
  CHECK(v.cells[1][1] == std::vector<ElementId>{E22});
  CHECK(v.has_idempotent[0][0]);
  CHECK(v.has_idempotent[1][1]);
  CHECK_FALSE(v.has_idempotent[0][1]);
  CHECK_FALSE(v.has_idempotent[1][0]);
  CHECK(render_eggbox(s, v) ==
        "D-class 1: 4 elements, 2x2\n"
        "+---------+---------+\n"
        "| [e:E11] | E12     |\n"
        "+---------+---------+\n"
        "| E21     | [e:E22] |\n"
        "+---------+---------+\n");

  const InvolutorySemigroup c = cyclic_group(3);
  const EggboxView one = eggbox(c, greens(c), 1);
  CHECK(one.rows.size() == 1);
  CHECK(one.columns.size() == 1);
  CHECK(one.cells[0][0].size() == 3);
}

TEST_CASE("eggbox cells partition their D-class", "[green][property]") {
  for (const auto& s : corpus(100)) {
    const GreensData g = greens(s);
    CAPTURE(s.name());
    for (ElementId a = 0; a < s.size(); ++a) {
      const EggboxView v = eggbox(s, g, a);
      std::vector<ElementId> members;
      for (const auto& row : v.cells) {
        for (const auto& cell : row) members.insert(members.end(), cell.begin(), cell.end());
      }
      std::sort(members.begin(), members.end());
      std::vector<ElementId> expected;
      for (ElementId b = 0; b < s.size(); ++b) {
        if (g.d_class[b] == g.d_class[a]) expected.push_back(b);
      }
      CHECK(members == expected);
      // Cells holding an idempotent are groups.
      for (std::size_t r = 0; r < v.cells.size(); ++r) {
        for (std::size_t c = 0; c < v.cells[r].size(); ++c) {
          if (!v.has_idempotent[r][c]) continue;
          const auto& cell = v.cells[r][c];
          for (ElementId x : cell) {
            for (ElementId y : cell) {
              CHECK(std::binary_search(cell.begin(), cell.end(), s.product(x, y)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("idempotent cells around a regular element of a type-B semigroup", "[green]") {
  for (const auto& s : {b21(), *load_semigroup("mn:2:3:t").table}) {
    const GreensData g = greens(s);
    const auto idem = idempotents(s);
    auto cell_has_idempotent = [&](std::uint32_t r, std::uint32_t l) {
      return std::any_of(idem.begin(), idem.end(), [&](ElementId e) {
        return g.r_class[e] == r && g.l_class[e] == l;
      });
    };
    CAPTURE(s.name());
    for (ElementId x = 0; x < s.size(); ++x) {
      const auto y = regularity_witness(s, x);
      REQUIRE(y);
      const ElementId e = s.product(x, *y);
      const ElementId f = s.product(*y, x);
      CHECK(cell_has_idempotent(g.r_class[e], g.l_class[s.star(e)]));
      CHECK(cell_has_idempotent(g.r_class[s.star(f)], g.l_class[f]));
    }
  }
}
