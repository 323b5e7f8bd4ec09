#include "dagbook/search.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <set>

#include "dagbook/recognition.hpp"

namespace dagbook {

std::string witness_class_name(WitnessClass cls) {
  switch (cls) {
    case WitnessClass::SsSinkUpwardOdag: return "ss-sink-upward-odag";
    case WitnessClass::UpwardOdag: return "upward-odag";
    case WitnessClass::FaceConsistent3Tree: return "face-consistent-3tree";
  }
  return "?";
}

std::optional<WitnessClass> parse_witness_class(const std::string& name) {
  if (name == "ss-sink-upward-odag") return WitnessClass::SsSinkUpwardOdag;
  if (name == "upward-odag") return WitnessClass::UpwardOdag;
  if (name == "face-consistent-3tree") return WitnessClass::FaceConsistent3Tree;
  return std::nullopt;
}

namespace {

// Cross product of triangle choices over the pending polygon ranges.
void triangulate_ranges(std::vector<std::array<int, 2>>& todo,
                        std::vector<Edge>& diagonals, const std::vector<Edge>& cycle,
                        std::vector<std::vector<Edge>>& out) {
  if (todo.empty()) {
    std::vector<Edge> edges = cycle;
    edges.insert(edges.end(), diagonals.begin(), diagonals.end());
    out.push_back(std::move(edges));
    return;
  }
  auto [lo, hi] = todo.back();
  todo.pop_back();
  for (int k = lo + 1; k < hi; k++) {
    size_t diag_mark = diagonals.size();
    size_t todo_mark = todo.size();
    if (k - lo >= 2) {
      diagonals.push_back({lo, k});
      todo.push_back({lo, k});
    }
    if (hi - k >= 2) {
      diagonals.push_back({k, hi});
      todo.push_back({k, hi});
    }
    triangulate_ranges(todo, diagonals, cycle, out);
    todo.resize(todo_mark);
    diagonals.resize(diag_mark);
  }
  todo.push_back({lo, hi});
}

}  // namespace

std::vector<std::vector<Edge>> enumerate_triangulation_topologies(int n) {
  std::vector<std::vector<Edge>> out;
  if (n < 2) return out;
  std::vector<Edge> cycle;
  for (int i = 0; i + 1 < n; i++) cycle.push_back({i, i + 1});
  if (n >= 3) cycle.push_back({0, n - 1});
  if (n <= 3) {
    out.push_back(cycle);
    return out;
  }
  std::vector<std::array<int, 2>> todo = {{0, n - 1}};
  std::vector<Edge> diagonals;
  triangulate_ranges(todo, diagonals, cycle, out);
  return out;
}

Dag orient_acyclic(const std::vector<Edge>& topology, int n, SplitMix64& rng) {
  const int m = static_cast<int>(topology.size());
  if (m <= 64) {
    for (int attempt = 0; attempt < 1000; attempt++) {
      std::uint64_t mask = rng.next();
      Dag g;
      g.n = n;
      for (int i = 0; i < m; i++) {
        Edge e = topology[i];
        if ((mask >> i) & 1ull) std::swap(e.source, e.target);
        g.edges.push_back(e);
      }
      if (!topological_order(g).empty()) return g;
    }
  }
  Dag g;
  g.n = n;
  g.edges = topology;  // u < v everywhere, trivially acyclic
  return g;
}

bool upward_sieve(const Dag& g) {
  auto sources = g.sources();
  auto sinks = g.sinks();
  if (sources.empty() || sinks.empty()) return false;
  std::vector<Edge> edges = g.edges;
  int super_source = g.n, super_sink = g.n + 1;
  for (int s : sources) edges.push_back({super_source, s});
  for (int t : sinks) edges.push_back({t, super_sink});
  edges.push_back({super_source, super_sink});
  return is_planar(g.n + 2, edges);
}

VerifyResult verify_at_least(const Dag& g, int k, const SolverConfig& config) {
  VerifyResult result;
  if (k <= 1) {
    result.verified = g.edge_count() > 0 || k <= 0;
  } else {
    SolveResult lower =
        solve_layout(g, encode(g, k - 1, config.encode_options), config);
    result.verified = lower.status == SolveStatus::Unsat;
  }
  SolveResult upper =
      solve_layout(g, encode(g, std::max(k, 1), config.encode_options), config);
  if (upper.status == SolveStatus::Sat) result.witness = upper.decoded;
  return result;
}

namespace {

bool passes_filter(const Dag& g, WitnessClass cls) {
  switch (cls) {
    case WitnessClass::SsSinkUpwardOdag:
      return g.sources().size() == 1 && g.sinks().size() == 1 && st_upward_check(g);
    case WitnessClass::UpwardOdag:
      return upward_sieve(g);
    case WitnessClass::FaceConsistent3Tree: {
      auto dec = try_peel_3tree(g);
      return dec && dec->face_consistent;
    }
  }
  return false;
}

bool meets_target(const Dag& g, int target_k, const SolverConfig& solver) {
  if (target_k <= 1) return g.edge_count() > 0;
  SolveResult result =
      solve_layout(g, encode(g, target_k - 1, solver.encode_options), solver);
  return result.status == SolveStatus::Unsat;
}

// canonical key under the dihedral group of the outer polygon
std::vector<std::uint32_t> dihedral_key(const Dag& g) {
  std::vector<std::uint32_t> best;
  const int n = g.n;
  std::vector<std::uint32_t> key(g.edges.size());
  for (int reflect = 0; reflect < 2; reflect++) {
    for (int shift = 0; shift < n; shift++) {
      for (size_t i = 0; i < g.edges.size(); i++) {
        const Edge& e = g.edges[i];
        int u = reflect ? (shift - e.source + 2 * n) % n : (e.source + shift) % n;
        int v = reflect ? (shift - e.target + 2 * n) % n : (e.target + shift) % n;
        key[i] = static_cast<std::uint32_t>(u) << 16 | static_cast<std::uint32_t>(v);
      }
      std::sort(key.begin(), key.end());
      if (best.empty() || key < best) best = key;
    }
  }
  return best;
}

std::optional<Dag> exhaustive_odag_search(WitnessClass cls, const SearchOptions& options,
                                          std::int64_t& examined) {
  for (int n = 2; n <= std::min(options.n_max, 7); n++) {
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& topology : enumerate_triangulation_topologies(n)) {
      const int m = static_cast<int>(topology.size());
      for (std::uint64_t mask = 0; mask < (1ull << m); mask++) {
        if (examined >= options.budget) return std::nullopt;
        Dag g;
        g.n = n;
        for (int i = 0; i < m; i++) {
          Edge e = topology[i];
          if ((mask >> i) & 1ull) std::swap(e.source, e.target);
          g.edges.push_back(e);
        }
        if (topological_order(g).empty()) continue;
        examined++;
        if (!seen.insert(dihedral_key(g)).second) continue;
        if (!passes_filter(g, cls)) continue;
        if (meets_target(g, options.target_k, options.solver)) return g;
      }
    }
  }
  return std::nullopt;
}

std::optional<Dag> exhaustive_3tree_search(const SearchOptions& options,
                                           std::int64_t& examined) {
  struct State {
    Dag g;
    std::vector<std::array<int, 3>> faces;  // (source, middle, sink)
  };
  std::optional<Dag> found;

  // all face-consistent construction sequences of the requested size
  auto recurse = [&](auto&& self, const State& state, int remaining) -> void {
    if (found || examined >= options.budget) return;
    if (remaining == 0) {
      examined++;
      if (passes_filter(state.g, WitnessClass::FaceConsistent3Tree) &&
          meets_target(state.g, options.target_k, options.solver)) {
        found = state.g;
      }
      return;
    }
    const int x = state.g.n;
    for (size_t f = 0; f < state.faces.size() && !found; f++) {
      for (int dir = 0; dir < 2; dir++) {
        auto [a, b, c] = state.faces[f];
        State next = state;
        next.g.n++;
        next.g.edges.push_back({a, x});
        next.g.edges.push_back(dir == 0 ? Edge{x, b} : Edge{b, x});
        next.g.edges.push_back({x, c});
        if (dir == 0) {
          next.faces[f] = {a, x, b};
          next.faces.push_back({x, b, c});
        } else {
          next.faces[f] = {a, b, x};
          next.faces.push_back({b, x, c});
        }
        next.faces.push_back({a, x, c});
        self(self, next, remaining - 1);
        if (found || examined >= options.budget) return;
      }
    }
  };

  State base;
  base.g.n = 3;
  base.g.edges = {{0, 1}, {1, 2}, {0, 2}};
  base.faces = {{0, 1, 2}};
  for (int n = 3; n <= std::min(options.n_max, 7) && !found; n++) {
    recurse(recurse, base, n - 3);
  }
  return found;
}

Dag sample_candidate(WitnessClass cls, int n_max, std::uint64_t seed) {
  if (cls == WitnessClass::FaceConsistent3Tree) {
    return gen_up3tree(std::max(n_max, 4), seed);
  }
  return gen_any_odag(std::max(n_max, 3), seed);
}

std::optional<Dag> sampled_search(WitnessClass cls, const SearchOptions& options,
                                  std::int64_t& examined) {
  const int jobs = std::max(options.jobs, 1);
  const std::int64_t batch = 64;
  std::int64_t attempt = 0;
  while (examined < options.budget) {
    // one shard of seeds per worker; the lowest successful attempt wins
    std::vector<std::future<std::pair<std::int64_t, std::optional<Dag>>>> futures;
    for (int j = 0; j < jobs; j++) {
      std::int64_t from = attempt + j * batch;
      futures.push_back(std::async(std::launch::async, [&, from]() {
        for (std::int64_t i = from; i < from + batch; i++) {
          std::uint64_t seed = options.seed * 0x100000001b3ull + i;
          Dag g = sample_candidate(cls, options.n_max, seed);
          if (passes_filter(g, cls) &&
              meets_target(g, options.target_k, options.solver)) {
            return std::make_pair(i, std::optional<Dag>(g));
          }
        }
        return std::make_pair<std::int64_t, std::optional<Dag>>(-1, std::nullopt);
      }));
    }
    std::int64_t best_attempt = -1;
    std::optional<Dag> best;
    for (auto& future : futures) {
      auto [idx, dag] = future.get();
      if (dag && (best_attempt == -1 || idx < best_attempt)) {
        best_attempt = idx;
        best = dag;
      }
    }
    examined += jobs * batch;
    attempt += jobs * batch;
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace

SearchOutcome search_witness(WitnessClass cls, const SearchOptions& options) {
  SearchOutcome outcome;
  std::optional<Dag> found;
  if (cls == WitnessClass::FaceConsistent3Tree) {
    found = exhaustive_3tree_search(options, outcome.examined);
  } else {
    found = exhaustive_odag_search(cls, options, outcome.examined);
  }
  if (!found && options.n_max > 7 && outcome.examined < options.budget) {
    found = sampled_search(cls, options, outcome.examined);
  }
  outcome.witness = found;
  return outcome;
}

}  // namespace dagbook
