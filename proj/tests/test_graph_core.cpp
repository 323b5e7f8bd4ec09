#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "dagbook/dag.hpp"
#include "dagbook/generators.hpp"
#include "dagbook/io.hpp"
#include "dagbook/layout.hpp"
#include "dagbook/order.hpp"
#include "dagbook/twist.hpp"
#include "doctest.h"

using namespace dagbook;

namespace {

// random DAG: edges sampled as forward pairs of a random permutation
Dag random_dag(SplitMix64& rng, int max_n, int max_m) {
  int n = 2 + static_cast<int>(rng.below(max_n - 1));
  std::vector<int> perm(n);
  for (int i = 0; i < n; i++) perm[i] = i;
  for (int i = n - 1; i > 0; i--) {
    std::swap(perm[i], perm[rng.below(i + 1)]);
  }
  Dag g;
  g.n = n;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; i++) {
    for (int j = i + 1; j < n; j++) pairs.push_back({perm[i], perm[j]});
  }
  for (int i = static_cast<int>(pairs.size()) - 1; i > 0; i--) {
    std::swap(pairs[i], pairs[rng.below(i + 1)]);
  }
  int m = static_cast<int>(rng.below(std::min<int>(max_m, pairs.size()) + 1));
  for (int i = 0; i < m; i++) g.edges.push_back({pairs[i].first, pairs[i].second});
  return g;
}

LinearOrder random_extension(const Dag& g, SplitMix64& rng) {
  std::vector<int> indeg(g.n, 0);
  auto adj = g.out_adjacency();
  for (const Edge& e : g.edges) indeg[e.target]++;
  std::vector<int> ready, seq;
  for (int v = 0; v < g.n; v++) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    size_t pick = rng.below(ready.size());
    int v = ready[pick];
    ready.erase(ready.begin() + pick);
    seq.push_back(v);
    for (int w : adj[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  return LinearOrder::from_sequence(seq);
}

}  // namespace

TEST_CASE("validate_dag basics") {
  CHECK(validate_dag(Dag(2, {{0, 1}})).ok);

  DagValidation cycle = validate_dag(Dag(2, {{0, 1}, {1, 0}}));
  CHECK_FALSE(cycle.ok);  // both directions of one pair: not simple

  DagValidation real_cycle = validate_dag(Dag(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK_FALSE(real_cycle.ok);
  CHECK(real_cycle.cycle.size() == 3);

  CHECK(validate_dag(Dag(3, {{0, 1}, {1, 2}, {0, 2}})).ok);
  CHECK_FALSE(validate_dag(Dag(2, {{0, 0}})).ok);
  CHECK_FALSE(validate_dag(Dag(1, {{0, 1}})).ok);
}

TEST_CASE("is_linear_extension") {
  Dag g(2, {{0, 1}});
  CHECK(is_linear_extension(g, LinearOrder::from_sequence({0, 1})));
  CHECK_FALSE(is_linear_extension(g, LinearOrder::from_sequence({1, 0})));
  CHECK_THROWS_AS(is_linear_extension(g, LinearOrder::from_sequence({0, 1, 2})),
                  std::invalid_argument);
}

TEST_CASE("edges_cross patterns") {
  // order a, c, b, d: (a,b) and (c,d) interleave
  LinearOrder sigma = LinearOrder::from_sequence({0, 2, 1, 3});
  CHECK(edges_cross(sigma, {0, 1}, {2, 3}));
  CHECK(edges_cross(sigma, {2, 3}, {0, 1}));  // symmetric

  LinearOrder flat = LinearOrder::from_sequence({0, 1, 2, 3});
  CHECK_FALSE(edges_cross(flat, {0, 1}, {2, 3}));  // disjoint spans
  CHECK(edges_cross(flat, {0, 2}, {1, 3}));
  CHECK_FALSE(edges_cross(flat, {0, 3}, {1, 2}));  // nested
  CHECK_FALSE(edges_cross(flat, {0, 2}, {2, 3}));  // shared endpoint
  CHECK_FALSE(edges_cross(flat, {0, 1}, {0, 2}));
}

TEST_CASE("max_twist basics") {
  Dag single(2, {{0, 1}});
  LinearOrder sigma = LinearOrder::from_sequence({0, 1});
  CHECK(max_twist(single, sigma).k() == 1);

  Dag empty(3, {});
  CHECK(max_twist_bruteforce(empty, LinearOrder::from_sequence({0, 1, 2})).k() == 0);

  Dag two(4, {{0, 2}, {1, 3}});
  LinearOrder flat = LinearOrder::from_sequence({0, 1, 2, 3});
  CHECK(max_twist(two, flat).k() == 2);
  CHECK(max_twist_bruteforce(two, flat).k() == 2);

  CHECK_THROWS_AS(max_twist(single, LinearOrder::from_sequence({1, 0})),
                  std::invalid_argument);
}

TEST_CASE("twist gadget certificate is the matching") {
  Dag g = gen_twist_gadget(3);
  // the unique extension is u1 u2 u3 v1 v2 v3 = 0..5
  LinearOrder sigma = LinearOrder::from_sequence({0, 1, 2, 3, 4, 5});
  REQUIRE(is_linear_extension(g, sigma));
  TwistCertificate cert = max_twist(g, sigma);
  TwistCertificate brute = max_twist_bruteforce(g, sigma);
  CHECK(cert.k() == 3);
  CHECK(brute.k() == 3);
  REQUIRE(cert.edges.size() == 3);
  for (int i = 0; i < 3; i++) {
    CHECK(cert.edges[i] == Edge{i, 3 + i});
  }
}

TEST_CASE("max_twist_of_subset") {
  Dag g(4, {{0, 2}, {1, 3}, {0, 3}});
  LinearOrder flat = LinearOrder::from_sequence({0, 1, 2, 3});
  CHECK(max_twist_of_subset(g, flat, [](const Edge&) { return false; }).k() == 0);
  CHECK(max_twist_of_subset(g, flat, [](const Edge& e) { return e.source == 0; }).k() ==
        1);
}

TEST_CASE("max_twist equals brute force on random instances") {
  SplitMix64 rng(20240901);
  for (int trial = 0; trial < 1000; trial++) {
    Dag g = random_dag(rng, 10, 15);
    LinearOrder sigma = random_extension(g, rng);
    TwistCertificate fast = max_twist(g, sigma);
    TwistCertificate slow = max_twist_bruteforce(g, sigma);
    REQUIRE(fast.k() == slow.k());
    REQUIRE(is_twist(sigma, fast.edges));
    REQUIRE(is_twist(sigma, slow.edges));
  }
}

TEST_CASE("validate_layout") {
  Dag triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  StackLayout layout;
  layout.order = LinearOrder::from_sequence({0, 1, 2});
  layout.page_of = {0, 0, 0};
  layout.pages = 1;
  CHECK(validate_layout(triangle, layout).ok);

  Dag twist(4, {{0, 2}, {1, 3}});
  StackLayout bad;
  bad.order = LinearOrder::from_sequence({0, 1, 2, 3});
  bad.page_of = {0, 0};
  bad.pages = 1;
  LayoutValidation verdict = validate_layout(twist, bad);
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.message.find("cross") != std::string::npos);

  bad.page_of = {0, -1};
  verdict = validate_layout(twist, bad);
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.message.find("no page") != std::string::npos);
}

TEST_CASE("reverse properties") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; trial++) {
    Dag g = random_dag(rng, 8, 12);
    Dag back = reverse(reverse(g));
    CHECK(back.n == g.n);
    REQUIRE(back.edges.size() == g.edges.size());
    for (size_t i = 0; i < g.edges.size(); i++) {
      CHECK(back.edges[i] == g.edges[i]);
    }
    // a reversed layout of the reversed graph is valid iff the original was
    LinearOrder sigma = random_extension(g, rng);
    StackLayout layout;
    layout.order = sigma;
    layout.pages = std::max(1, g.edge_count());
    for (int i = 0; i < g.edge_count(); i++) layout.page_of.push_back(i);
    CHECK(validate_layout(g, layout).ok);
    CHECK(validate_layout(reverse(g), reverse_layout(layout)).ok);
  }
}

TEST_CASE("graph text format round trip") {
  Dag g(4, {{0, 2}, {1, 3}, {0, 3}});
  std::ostringstream out;
  write_dag(out, g);
  std::istringstream in(out.str());
  Dag back = read_dag(in);
  CHECK(back.n == g.n);
  REQUIRE(back.edges.size() == g.edges.size());
  for (size_t i = 0; i < g.edges.size(); i++) CHECK(back.edges[i] == g.edges[i]);

  std::istringstream commented("# corpus file\ndag 2 1 # header\n0 1\n");
  Dag small = read_dag(commented);
  CHECK(small.n == 2);
  CHECK(small.edges.size() == 1);

  std::istringstream bad("dag 2\n");
  CHECK_THROWS(read_dag(bad));
}

TEST_CASE("layout text format round trip") {
  Dag g(4, {{0, 2}, {1, 3}, {0, 3}});
  StackLayout layout;
  layout.order = LinearOrder::from_sequence({0, 1, 2, 3});
  layout.page_of = {0, 1, 0};
  layout.pages = 2;
  std::ostringstream out;
  write_layout(out, g, layout);
  std::istringstream in(out.str());
  StackLayout back = read_layout(in, g);
  CHECK(back.order.sequence() == layout.order.sequence());
  CHECK(back.page_of == layout.page_of);
  CHECK(back.pages == 2);
}

TEST_CASE("partitioned order structure") {
  PartitionedOrder po;
  po.order = LinearOrder::from_sequence({0, 1, 2});
  po.parts = {{PartLabel::H1, 0, 0}, {PartLabel::S, 0, 1}, {PartLabel::H2, 1, 1},
              {PartLabel::H3, 1, 2}, {PartLabel::T, 2, 3}, {PartLabel::H4, 3, 3}};
  CHECK(po.check_structure().empty());
  CHECK(po.label_of_vertex(0) == PartLabel::S);
  CHECK(format_parts(po) == "parts: H1=0..0 s=0 H2=1..1 H3=1..2 t=2 H4=3..3");
  po.parts[1].end = 2;
  CHECK_FALSE(po.check_structure().empty());
}
