#pragma once

#include <optional>
#include <string>

#include "dagbook/dag.hpp"
#include "dagbook/generators.hpp"
#include "dagbook/sat.hpp"

namespace dagbook {

enum class WitnessClass {
  SsSinkUpwardOdag,       // single source, single sink, st-planar
  UpwardOdag,             // upward sieve via source/sink augmentation
  FaceConsistent3Tree,
};

std::string witness_class_name(WitnessClass cls);
std::optional<WitnessClass> parse_witness_class(const std::string& name);

struct SearchOptions {
  int n_max = 6;
  int target_k = 3;
  std::int64_t budget = 1000000;  // candidates examined before giving up
  int jobs = 1;
  std::uint64_t seed = 1;  // randomized sampling beyond the exhaustive range
  SolverConfig solver;
};

struct SearchOutcome {
  std::optional<Dag> witness;
  std::int64_t examined = 0;
};

/// Looks for a graph of the class with stack number >= target_k, certified
/// by unsat at target_k - 1. Exhaustive over topologies x acyclic
/// orientations (dihedral isomorphs skipped) up to 7 vertices, seeded
/// sampling beyond. No witness within budget is not a nonexistence proof.
SearchOutcome search_witness(WitnessClass cls, const SearchOptions& options);

/// Every triangulated polygon on vertices 0..n-1 in cycle order, as
/// undirected edge lists (u < v): the outer cycle plus n-3 diagonals.
std::vector<std::vector<Edge>> enumerate_triangulation_topologies(int n);

/// A seeded acyclic orientation of an undirected edge list (drawn masks are
/// retried until acyclic; falls back to the as-listed orientation).
Dag orient_acyclic(const std::vector<Edge>& topology, int n, SplitMix64& rng);

/// Sufficient upward-planarity sieve: planarity after adding a super-source
/// joined to all sources, a super-sink joined from all sinks, and the
/// source-to-sink edge. Exact for single-source single-sink graphs, where
/// it reduces to st_upward_check.
bool upward_sieve(const Dag& g);

struct VerifyResult {
  bool verified = false;                // stack number >= k certified
  std::optional<StackLayout> witness;   // a k-page layout when one was found
};

/// Certifies stack number >= k by unsat at k-1 (k <= 1 holds for any graph
/// with an edge); also reports a k-page witness layout when sat at k.
VerifyResult verify_at_least(const Dag& g, int k, const SolverConfig& config = {});

}  // namespace dagbook
