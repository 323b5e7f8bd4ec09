#pragma once

#include <cstdint>

#include "dagbook/dag.hpp"

namespace dagbook {

/// splitmix64; the fixed generator behind every seeded corpus, chosen so
/// corpora reproduce bit-exactly across platforms and releases. Bounded
/// draws are next() % bound.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Maximal outerplanar DAG built from base edge 0->1 by stellating a
/// uniformly drawn free outer edge with a uniformly drawn transitive
/// operation. Vertices are numbered in creation order; n >= 2.
Dag gen_transitive_odag(int n, std::uint64_t seed);

/// As above with operations drawn from {transitive, sink-apex}; the result
/// has the single source 0.
Dag gen_single_source_odag(int n, std::uint64_t seed);

/// As above with operations drawn from {sink-apex, source-apex}.
Dag gen_monotone_odag(int n, std::uint64_t seed);

/// As above with all three operations.
Dag gen_any_odag(int n, std::uint64_t seed);

/// Maximal outerpath DAG: every stellation continues from exactly one of
/// the two freshly added edges (seeded choice), keeping the weak dual a
/// path; operations drawn from all three kinds.
Dag gen_outerpath(int n, std::uint64_t seed);

/// Face-consistent 3-tree DAG grown from the triangle 0->1->2, 0->2 by
/// inserting each apex x into a uniformly drawn face with local source a
/// and local sink c as (a,x), (x,c) plus a seeded direction to the middle
/// vertex; n >= 3.
Dag gen_up3tree(int n, std::uint64_t seed);

/// Two directed paths u_1..u_k and v_1..v_k, the bridge u_k -> v_1, and the
/// matching u_i -> v_i. The single linear extension carries the matching as
/// a k-twist, so the stack number is exactly k. k = 1 degenerates to one
/// edge.
Dag gen_twist_gadget(int k);

}  // namespace dagbook
