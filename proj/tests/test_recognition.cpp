#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "dagbook/dag.hpp"
#include "dagbook/generators.hpp"
#include "dagbook/recognition.hpp"
#include "doctest.h"

using namespace dagbook;

namespace {

std::set<std::pair<int, int>> edge_set(const Dag& g) {
  std::set<std::pair<int, int>> out;
  for (const Edge& e : g.edges) out.insert({e.source, e.target});
  return out;
}

}  // namespace

TEST_CASE("peel single edge") {
  Dag g(2, {{0, 1}});
  ConstructionSequence seq = peel_outerplanar(g, {0, 1});
  CHECK(seq.nodes.empty());
  CHECK(seq.root == -1);
  CHECK(edge_set(seq.replay()) == edge_set(g));
}

TEST_CASE("peel transitive triangle") {
  Dag g(3, {{0, 1}, {1, 2}, {0, 2}});
  ConstructionSequence seq = peel_outerplanar(g, {0, 2});
  REQUIRE(seq.nodes.size() == 1);
  CHECK(seq.nodes[0].kind == OpKind::O1);
  CHECK(seq.nodes[0].apex == 1);
  CHECK(seq.nodes[0].base == Edge{0, 2});
  CHECK(edge_set(seq.replay()) == edge_set(g));
  CHECK(seq.format() == "O1 base=0,2 apex=1 parent=-1\n");
}

TEST_CASE("peel errors") {
  // a path is not maximal outerplanar
  CHECK_THROWS_AS(peel_outerplanar(Dag(3, {{0, 1}, {1, 2}}), {0, 1}),
                  std::invalid_argument);
  // base must be an edge
  CHECK_THROWS_AS(peel_outerplanar(Dag(3, {{0, 1}, {1, 2}, {0, 2}}), {2, 0}),
                  std::invalid_argument);
  // K4 is a 2-tree but not outerplanar
  Dag k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(try_peel_outerplanar(k4, {0, 1}).has_value());
}

TEST_CASE("peel round trip over generated families") {
  for (std::uint64_t seed = 0; seed < 20; seed++) {
    for (int n : {2, 3, 4, 7, 12, 40}) {
      for (auto gen : {gen_transitive_odag, gen_single_source_odag, gen_monotone_odag,
                       gen_outerpath, gen_any_odag}) {
        Dag g = gen(n, seed);
        ConstructionSequence seq = peel_outerplanar(g, g.edges[0]);
        CHECK(edge_set(seq.replay()) == edge_set(g));
        // maximal outerplanar: 2n-3 edges, n-2 stellations
        CHECK(g.edge_count() == 2 * n - 3);
        CHECK(static_cast<int>(seq.nodes.size()) == n - 2);
      }
    }
  }
}

TEST_CASE("stellation direction patterns replay") {
  for (std::uint64_t seed = 0; seed < 10; seed++) {
    Dag g = gen_any_odag(15, seed);
    ConstructionSequence seq = peel_outerplanar(g, g.edges[0]);
    for (const StellationOp& node : seq.nodes) {
      Edge left = node.source_side_edge();
      Edge right = node.target_side_edge();
      switch (node.kind) {
        case OpKind::O1:
          CHECK(left == Edge{node.base.source, node.apex});
          CHECK(right == Edge{node.apex, node.base.target});
          break;
        case OpKind::O2:
          CHECK(left == Edge{node.base.source, node.apex});
          CHECK(right == Edge{node.base.target, node.apex});
          break;
        case OpKind::O3:
          CHECK(left == Edge{node.apex, node.base.source});
          CHECK(right == Edge{node.apex, node.base.target});
          break;
      }
      CHECK(g.has_edge(left.source, left.target));
      CHECK(g.has_edge(right.source, right.target));
    }
  }
}

TEST_CASE("classify the transitive triangle") {
  ClassTags tags = classify(Dag(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(tags.maximal_outerplanar);
  CHECK(tags.transitive_only);
  CHECK(tags.single_source);
  CHECK(tags.single_sink);
  CHECK(tags.outerpath);
}

TEST_CASE("generator and classifier agree") {
  for (std::uint64_t seed = 0; seed < 15; seed++) {
    for (int n : {2, 3, 5, 9, 25}) {
      CHECK(classify(gen_transitive_odag(n, seed)).transitive_only);
      CHECK(classify(gen_single_source_odag(n, seed)).single_source);
      CHECK(decompose_as(gen_single_source_odag(n, seed), OdagClass::SingleSource)
                .has_value());
      CHECK(classify(gen_monotone_odag(n, seed)).monotone);
      CHECK(classify(gen_outerpath(n, seed)).outerpath);
      if (n >= 3) {
        ClassTags t3 = classify(gen_up3tree(n, seed));
        CHECK(t3.three_tree);
        CHECK(t3.face_consistent_3tree);
      }
    }
  }
}

TEST_CASE("classify of the reverse swaps source and sink flags") {
  for (std::uint64_t seed = 0; seed < 10; seed++) {
    Dag g = gen_any_odag(14, seed);
    ClassTags tags = classify(g);
    ClassTags rtags = classify(reverse(g));
    CHECK(tags.single_source == rtags.single_sink);
    CHECK(tags.single_sink == rtags.single_source);
    CHECK(tags.monotone == rtags.monotone);
    CHECK(tags.outerpath == rtags.outerpath);
    CHECK(tags.maximal_outerplanar == rtags.maximal_outerplanar);

    Dag t = gen_up3tree(14, seed);
    CHECK(classify(t).three_tree == classify(reverse(t)).three_tree);
  }
}

TEST_CASE("reverse maps O2 constructions to O3 constructions") {
  for (std::uint64_t seed = 0; seed < 10; seed++) {
    Dag g = gen_single_source_odag(12, seed);
    ConstructionSequence seq = peel_outerplanar(g, g.edges[0]);
    Dag r = reverse(g);
    Edge rbase = {g.edges[0].target, g.edges[0].source};
    ConstructionSequence rseq = peel_outerplanar(r, rbase);
    int o2 = 0, o3 = 0, ro2 = 0, ro3 = 0;
    for (const auto& node : seq.nodes) {
      o2 += node.kind == OpKind::O2;
      o3 += node.kind == OpKind::O3;
    }
    for (const auto& node : rseq.nodes) {
      ro2 += node.kind == OpKind::O2;
      ro3 += node.kind == OpKind::O3;
    }
    CHECK(o2 == ro3);
    CHECK(o3 == ro2);
  }
}

TEST_CASE("peel oriented triangle as 3-tree") {
  Dag g(3, {{0, 1}, {1, 2}, {0, 2}});
  ThreeTreeDecomposition dec = peel_3tree(g);
  CHECK(dec.insertions.empty());
  CHECK(dec.outer_triangle == std::array<int, 3>{0, 1, 2});
  CHECK(dec.face_consistent);
}

TEST_CASE("peel K4 with transitive host") {
  // apex 3 inside (0, 1, 2): edges (0,3), (3,2), (3,1)
  Dag g(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 2}, {3, 1}});
  ThreeTreeDecomposition dec = peel_3tree(g);
  REQUIRE(dec.insertions.size() == 1);
  CHECK(dec.face_consistent);
  CHECK(edge_set(dec.replay()) == edge_set(g));
}

TEST_CASE("3-tree peel round trip and consistency on generated instances") {
  for (std::uint64_t seed = 0; seed < 25; seed++) {
    for (int n : {3, 4, 5, 8, 20, 60}) {
      Dag g = gen_up3tree(n, seed);
      ThreeTreeDecomposition dec = peel_3tree(g);
      CHECK(dec.face_consistent);
      CHECK(edge_set(dec.replay()) == edge_set(g));
      CHECK(dec.vertex_count() == n);
    }
  }
}

TEST_CASE("3-tree peel rejects non-3-trees") {
  CHECK_FALSE(try_peel_3tree(Dag(4, {{0, 1}, {1, 2}, {2, 3}})).has_value());
  // maximal outerplanar on 5 vertices is not a 3-tree
  CHECK_FALSE(try_peel_3tree(gen_any_odag(5, 1)).has_value());
}

TEST_CASE("st upward check") {
  CHECK(st_upward_check(Dag(3, {{0, 1}, {1, 2}, {0, 2}})));
  // two sources: unsupported
  CHECK_THROWS_AS(st_upward_check(Dag(3, {{0, 2}, {1, 2}})), std::invalid_argument);
  // the twist gadgets are planar but stop being st-planar from k = 3 on
  CHECK(st_upward_check(gen_twist_gadget(2)));
  CHECK_FALSE(st_upward_check(gen_twist_gadget(3)));
  CHECK_FALSE(st_upward_check(gen_twist_gadget(4)));
}

TEST_CASE("planarity test") {
  CHECK(is_planar(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  std::vector<Edge> k5;
  for (int i = 0; i < 5; i++) {
    for (int j = i + 1; j < 5; j++) k5.push_back({i, j});
  }
  CHECK_FALSE(is_planar(5, k5));
}
