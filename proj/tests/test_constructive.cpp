#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "dagbook/constructive.hpp"

#include "dagbook/generators.hpp"
#include "dagbook/io.hpp"
#include "dagbook/recognition.hpp"
#include "dagbook/twist.hpp"
#include "doctest.h"

using namespace dagbook;

namespace {

const LayoutOptions kChecked{true};

ConstructionSequence sequence_for(const Dag& g, OdagClass cls) {
  auto seq = decompose_as(g, cls);
  REQUIRE(seq.has_value());
  return *seq;
}

}  // namespace

TEST_CASE("single edge orders") {
  Dag g(2, {{0, 1}});
  ConstructionSequence seq = peel_outerplanar(g, {0, 1});
  for (const auto& order : {order_single_source(g, seq, kChecked),
                            order_monotone(g, seq, kChecked),
                            order_outerpath(g, seq, kChecked)}) {
    CHECK(order.order.order.sequence() == std::vector<int>{0, 1});
    CHECK(order.twist.k() == 1);
    CHECK(order.order.check_structure().empty());
  }
}

TEST_CASE("transitive triangle single-source order") {
  Dag g(3, {{0, 2}, {0, 1}, {1, 2}});  // base (0,2), apex 1 between
  ConstructionSequence seq = peel_outerplanar(g, {0, 2});
  AnnotatedOrder order = order_single_source(g, seq, kChecked);
  CHECK(order.order.order.sequence() == std::vector<int>{0, 1, 2});
  CHECK(order.twist.k() == 1);
  CHECK(order.bound == 3);
}

TEST_CASE("sink-apex triangle stack table") {
  // base (0,1), apex 2 below both: pages are (0,1) -> 1, (0,2) -> 0, (1,2) -> 1
  Dag g(3, {{0, 1}, {0, 2}, {1, 2}});
  ConstructionSequence seq = peel_outerplanar(g, {0, 1});
  REQUIRE(seq.nodes.size() == 1);
  REQUIRE(seq.nodes[0].kind == OpKind::O2);
  StackLayout layout = stacks_single_source(g, seq, kChecked);
  CHECK(layout.order.sequence() == std::vector<int>{0, 1, 2});
  CHECK(layout.page_of == std::vector<int>{1, 0, 1});
  CHECK(validate_layout(g, layout).ok);
}

TEST_CASE("single-source orders over generated instances") {
  for (std::uint64_t seed = 0; seed < 40; seed++) {
    for (int n : {2, 3, 6, 15, 60, 200}) {
      Dag g = gen_single_source_odag(n, seed);
      ConstructionSequence seq = sequence_for(g, OdagClass::SingleSource);
      LayoutOptions options;
      options.check_frames = n <= 15;
      AnnotatedOrder order = order_single_source(g, seq, options);
      CHECK(is_linear_extension(g, order.order.order));
      CHECK(order.twist.k() <= 3);
      CHECK(order.order.check_structure().empty());

      StackLayout layout = stacks_single_source(g, seq, options);
      CHECK(layout.pages <= 4);
      CHECK(validate_layout(g, layout).ok);
      CHECK(layout.order.position == order.order.order.position);
    }
  }
}

TEST_CASE("single-source rejects O3 constructions") {
  for (std::uint64_t seed = 0; seed < 20; seed++) {
    Dag g = gen_monotone_odag(12, seed);
    ConstructionSequence seq = sequence_for(g, OdagClass::Monotone);
    if (!seq.uses_only({OpKind::O1, OpKind::O2})) {
      CHECK_THROWS_AS(order_single_source(g, seq, {}), std::invalid_argument);
      return;
    }
  }
  FAIL("no monotone instance with O3 found");
}

TEST_CASE("monotone small case by brute force") {
  // three sink-apex stellations along a fan
  Dag g(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  ConstructionSequence seq = sequence_for(g, OdagClass::Monotone);
  AnnotatedOrder order = order_monotone(g, seq, kChecked);
  int brute = max_twist_bruteforce(g, order.order.order).k();
  CHECK(order.twist.k() == brute);
  CHECK(brute <= 2);
}

TEST_CASE("monotone orders over generated instances") {
  for (std::uint64_t seed = 0; seed < 40; seed++) {
    for (int n : {2, 3, 6, 15, 60, 200}) {
      Dag g = gen_monotone_odag(n, seed);
      ConstructionSequence seq = sequence_for(g, OdagClass::Monotone);
      LayoutOptions options;
      options.check_frames = n <= 15;
      AnnotatedOrder order = order_monotone(g, seq, options);
      CHECK(is_linear_extension(g, order.order.order));
      CHECK(order.twist.k() <= 4);
      CHECK(order.order.check_structure().empty());
    }
  }
}

TEST_CASE("monotone rejects O1") {
  Dag g(3, {{0, 2}, {0, 1}, {1, 2}});
  ConstructionSequence seq = peel_outerplanar(g, {0, 2});
  REQUIRE(seq.nodes[0].kind == OpKind::O1);
  CHECK_THROWS_AS(order_monotone(g, seq, {}), std::invalid_argument);
}

TEST_CASE("monotone reversal symmetry") {
  for (std::uint64_t seed = 0; seed < 20; seed++) {
    Dag g = gen_monotone_odag(40, seed);
    Dag r = reverse(g);
    ConstructionSequence rseq = sequence_for(r, OdagClass::Monotone);
    AnnotatedOrder rorder = order_monotone(r, rseq, {});
    LinearOrder mirrored = rorder.order.order.reversed();
    CHECK(is_linear_extension(g, mirrored));
    CHECK(max_twist(g, mirrored).k() <= 4);
  }
}

TEST_CASE("outerpath small case by brute force") {
  Dag g = gen_outerpath(4, 3);
  ConstructionSequence seq = sequence_for(g, OdagClass::Outerpath);
  AnnotatedOrder order = order_outerpath(g, seq, kChecked);
  CHECK(max_twist_bruteforce(g, order.order.order).k() == order.twist.k());
  CHECK(order.twist.k() <= 2);
}

TEST_CASE("outerpath orders over generated instances") {
  for (std::uint64_t seed = 0; seed < 40; seed++) {
    for (int n : {2, 3, 6, 15, 60, 200}) {
      Dag g = gen_outerpath(n, seed);
      ConstructionSequence seq = sequence_for(g, OdagClass::Outerpath);
      LayoutOptions options;
      options.check_frames = n <= 15;
      AnnotatedOrder order = order_outerpath(g, seq, options);
      CHECK(is_linear_extension(g, order.order.order));
      CHECK(order.twist.k() <= 4);
    }
  }
}

TEST_CASE("outerpath rejects branching trees") {
  for (std::uint64_t seed = 0; seed < 50; seed++) {
    Dag g = gen_any_odag(12, seed);
    ConstructionSequence seq = peel_outerplanar(g, g.edges[0]);
    if (!seq.is_path_tree()) {
      CHECK_THROWS_AS(order_outerpath(g, seq, {}), std::invalid_argument);
      return;
    }
  }
  FAIL("no branching instance found");
}

TEST_CASE("oriented triangle 3-tree order") {
  Dag g(3, {{0, 1}, {1, 2}, {0, 2}});
  AnnotatedOrder order = order_up3tree(g, peel_3tree(g), kChecked);
  CHECK(order.order.order.sequence() == std::vector<int>{0, 1, 2});
  CHECK(order.twist.k() == 1);
  CHECK(order.bound == 5);
}

TEST_CASE("K4 with apex before middle") {
  // outer (0,1,2), apex 3, edge (3,1) toward the middle
  Dag g(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 1}, {3, 2}});
  ThreeTreeDecomposition dec;
  dec.outer_triangle = {0, 1, 2};
  dec.insertions.push_back({{0, 1, 2}, 3, {Edge{0, 3}, Edge{3, 1}, Edge{3, 2}}, true});
  dec.face_consistent = true;
  AnnotatedOrder order = order_up3tree(g, dec, kChecked);
  CHECK(order.order.order.sequence() == std::vector<int>{0, 3, 1, 2});
  CHECK(max_twist_bruteforce(g, order.order.order).k() <= 2);
}

TEST_CASE("up3tree orders over generated instances") {
  for (std::uint64_t seed = 0; seed < 40; seed++) {
    for (int n : {3, 4, 8, 20, 80, 300}) {
      Dag g = gen_up3tree(n, seed);
      ThreeTreeDecomposition dec = peel_3tree(g);
      REQUIRE(dec.face_consistent);
      LayoutOptions options;
      options.check_frames = n <= 20;
      AnnotatedOrder order = order_up3tree(g, dec, options);
      CHECK(is_linear_extension(g, order.order.order));
      CHECK(order.twist.k() <= 5);
      CHECK(order.order.check_structure().empty());
      REQUIRE(order.order.parts.size() == 5);
      CHECK(order.order.parts[2].label == PartLabel::M);
    }
  }
}

TEST_CASE("up3tree refuses inconsistent decompositions") {
  Dag g(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 1}, {3, 2}});
  ThreeTreeDecomposition dec;
  dec.outer_triangle = {0, 1, 2};
  dec.insertions.push_back({{0, 1, 2}, 3, {Edge{0, 3}, Edge{3, 1}, Edge{3, 2}}, false});
  dec.face_consistent = false;
  CHECK_THROWS_AS(order_up3tree(g, dec, {}), std::invalid_argument);
}

TEST_CASE("orders are deterministic") {
  for (int n : {20, 77}) {
    Dag g = gen_monotone_odag(n, 5);
    ConstructionSequence seq = sequence_for(g, OdagClass::Monotone);
    CHECK(order_monotone(g, seq, {}).order.order.position ==
          order_monotone(g, seq, {}).order.order.position);

    Dag t = gen_up3tree(n, 5);
    ThreeTreeDecomposition dec = peel_3tree(t);
    CHECK(order_up3tree(t, dec, {}).order.order.position ==
          order_up3tree(t, dec, {}).order.order.position);
  }
}

TEST_CASE("parts formatting from a produced order") {
  Dag g = gen_single_source_odag(8, 2);
  ConstructionSequence seq = sequence_for(g, OdagClass::SingleSource);
  AnnotatedOrder order = order_single_source(g, seq, {});
  std::string parts = format_parts(order.order);
  CHECK(parts.rfind("parts: H1=", 0) == 0);
  REQUIRE(order.order.parts.size() == 6);
  CHECK(order.order.parts[0].length() == 0);  // H1 empty for single-source
  CHECK(order.order.parts[2].length() == 0);  // H2 empty for single-source
}
