#include "dagbook/constructive.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dagbook {

std::string layout_class_name(LayoutClass cls) {
  switch (cls) {
    case LayoutClass::SingleSource: return "single-source";
    case LayoutClass::Monotone: return "monotone";
    case LayoutClass::Outerpath: return "outerpath";
    case LayoutClass::UpwardThreeTree: return "up3tree";
  }
  return "?";
}

namespace {

[[noreturn]] void frame_fail(const std::string& what) {
  throw std::logic_error("frame invariant violated: " + what);
}

// Splice lists over the vertex arena. Links are undirected (a traversal
// knows its direction from the previous vertex), so reversal is O(1).
class ChainArena {
 public:
  struct Chain {
    int head = -1, tail = -1, len = 0;
  };

  explicit ChainArena(int n) : link_(n, {-1, -1}) {}

  static Chain single(int v) { return {v, v, 1}; }

  Chain concat(Chain a, Chain b) {
    if (a.len == 0) return b;
    if (b.len == 0) return a;
    attach(a.tail, b.head);
    attach(b.head, a.tail);
    return {a.head, b.tail, a.len + b.len};
  }

  static Chain reversed(Chain c) {
    std::swap(c.head, c.tail);
    return c;
  }

  void walk(Chain c, std::vector<int>& out) const {
    int prev = -1, cur = c.head;
    for (int i = 0; i < c.len; i++) {
      out.push_back(cur);
      int next = link_[cur][0] == prev ? link_[cur][1] : link_[cur][0];
      prev = cur;
      cur = next;
    }
  }

 private:
  void attach(int u, int v) {
    if (link_[u][0] == -1) {
      link_[u][0] = v;
    } else if (link_[u][1] == -1) {
      link_[u][1] = v;
    } else {
      frame_fail("vertex spliced twice");
    }
  }

  std::vector<std::array<int, 2>> link_;
};

using Chain = ChainArena::Chain;

// ---------------------------------------------------------------------------
// Per-frame invariant checking (check_frames mode)

enum Cat { CH1 = 0, CS = 1, CH2 = 2, CH3 = 3, CT = 4, CH4 = 5, CM = 6 };

struct FrameSnapshot {
  std::vector<int> seq;      // local order, in the space the frame was solved in
  std::vector<Edge> edges;   // subtree edges, original directions
  std::array<int, 4> lens{}; // h1..h4 (five-part frames use lens[0], lens[1])
  bool flipped = false;
};

struct CatSet {
  unsigned mask = 0;
  CatSet(std::initializer_list<Cat> cats) {
    for (Cat c : cats) mask |= 1u << c;
  }
  bool has(int c) const { return (mask >> c) & 1u; }
};

struct FrameView {
  std::vector<int> cat;       // by vertex id (only subtree vertices valid)
  std::vector<int> pos;       // local positions by vertex id
  std::vector<Edge> edges;    // effective directions
  int vertex_count = 0;
};

// Effective sequence/edges with six-part categories [H1,s,H2,H3,t,H4].
FrameView make_six_view(const FrameSnapshot& snap, int n) {
  FrameView view;
  view.cat.assign(n, -1);
  view.pos.assign(n, 0);
  std::vector<int> seq = snap.seq;
  view.edges = snap.edges;
  std::array<int, 4> lens = snap.lens;
  if (snap.flipped) {
    std::reverse(seq.begin(), seq.end());
    for (Edge& e : view.edges) std::swap(e.source, e.target);
    std::swap(lens[0], lens[3]);
    std::swap(lens[1], lens[2]);
  }
  view.vertex_count = static_cast<int>(seq.size());
  std::array<int, 6> bounds{};  // end position of H1,s,H2,H3,t,H4
  bounds[0] = lens[0];
  bounds[1] = bounds[0] + 1;
  bounds[2] = bounds[1] + lens[1];
  bounds[3] = bounds[2] + lens[2];
  bounds[4] = bounds[3] + 1;
  bounds[5] = bounds[4] + lens[3];
  if (bounds[5] != view.vertex_count) frame_fail("part sizes do not cover the frame");
  for (int p = 0; p < view.vertex_count; p++) {
    int c = 0;
    while (p >= bounds[c]) c++;
    view.cat[seq[p]] = c;
    view.pos[seq[p]] = p;
  }
  return view;
}

// Five-part categories [s,H1,m,H2,t] mapped onto CS,CH1,CM,CH2,CT.
FrameView make_five_view(const FrameSnapshot& snap, int n) {
  FrameView view;
  view.cat.assign(n, -1);
  view.pos.assign(n, 0);
  std::vector<int> seq = snap.seq;
  view.edges = snap.edges;
  std::array<int, 2> lens = {snap.lens[0], snap.lens[1]};
  if (snap.flipped) {
    std::reverse(seq.begin(), seq.end());
    for (Edge& e : view.edges) std::swap(e.source, e.target);
    std::swap(lens[0], lens[1]);
  }
  view.vertex_count = static_cast<int>(seq.size());
  std::array<int, 5> bounds{};
  std::array<int, 5> cats = {CS, CH1, CM, CH2, CT};
  bounds[0] = 1;
  bounds[1] = bounds[0] + lens[0];
  bounds[2] = bounds[1] + 1;
  bounds[3] = bounds[2] + lens[1];
  bounds[4] = bounds[3] + 1;
  if (bounds[4] != view.vertex_count) frame_fail("part sizes do not cover the frame");
  for (int p = 0; p < view.vertex_count; p++) {
    int c = 0;
    while (p >= bounds[c]) c++;
    view.cat[seq[p]] = cats[c];
    view.pos[seq[p]] = p;
  }
  return view;
}

using SetPair = std::pair<CatSet, CatSet>;

int twist_of(const FrameView& view, std::initializer_list<SetPair> sets) {
  std::vector<Edge> filtered;
  for (const Edge& e : view.edges) {
    for (const SetPair& sp : sets) {
      if (sp.first.has(view.cat[e.source]) && sp.second.has(view.cat[e.target])) {
        filtered.push_back(e);
        break;
      }
    }
  }
  return max_twist_of_edges(filtered, view.pos).k();
}

void expect_twist(const FrameView& view, std::initializer_list<SetPair> sets,
                  int bound, const char* name) {
  int k = twist_of(view, sets);
  if (k > bound) {
    std::ostringstream msg;
    msg << name << ": twist " << k << " exceeds " << bound;
    frame_fail(msg.str());
  }
}

void expect_empty(const FrameView& view, std::initializer_list<SetPair> sets,
                  const char* name) {
  for (const Edge& e : view.edges) {
    for (const SetPair& sp : sets) {
      if (sp.first.has(view.cat[e.source]) && sp.second.has(view.cat[e.target])) {
        frame_fail(std::string(name) + ": edge set expected empty");
      }
    }
  }
}

void check_single_source_frame(const FrameSnapshot& snap, int n) {
  FrameView view = make_six_view(snap, n);
  expect_twist(view, {{{CS, CH3}, {CH4}}}, 1, "ss I.1");
  expect_twist(view, {{{CH1, CS, CH2, CH3, CT, CH4}, {CH1, CS, CH2, CH3, CT, CH4}}}, 3,
               "ss I.2");
}

void check_monotone_frame(const FrameSnapshot& snap, int n) {
  FrameView view = make_six_view(snap, n);
  expect_empty(view, {{{CH1}, {CH3}}, {{CH2}, {CH3}}, {{CH2}, {CH4}}}, "mono I.1");
  expect_twist(view, {{{CH1, CS}, {CT, CH4}}}, 1, "mono I.2");
  expect_twist(view, {{{CH1}, {CH2, CT, CH4}}}, 2, "mono I.3");
  expect_twist(view, {{{CH1, CS, CH3}, {CH4}}}, 2, "mono I.4");
  expect_twist(view, {{{CH1, CS, CH2, CH3, CT, CH4}, {CH1, CS, CH2, CH3, CT, CH4}}}, 4,
               "mono I.5");
}

void check_outerpath_frame(const FrameSnapshot& snap, int n) {
  FrameView view = make_six_view(snap, n);
  std::array<int, 4> lens = snap.lens;
  if (snap.flipped) {
    std::swap(lens[0], lens[3]);
    std::swap(lens[1], lens[2]);
  }
  if (lens[1] != 0 && lens[2] != 0) frame_fail("path I.0: H2 and H3 both non-empty");
  expect_twist(view, {{{CH2}, {CT, CH4}}}, 1, "path I.2a");
  expect_twist(view, {{{CH1, CS}, {CH3}}}, 1, "path I.2b");
  expect_twist(view, {{{CH1, CS, CH2}, {CH3, CT, CH4}}}, 2, "path I.3");
  expect_twist(view, {{{CH1}, {CH2}}, {{CH2}, {CT, CH4}}}, 3, "path I.4a");
  expect_twist(view, {{{CH1, CS}, {CH3}}, {{CH3}, {CH4}}}, 3, "path I.4b");
  expect_twist(view, {{{CH1, CS, CH2, CH3}, {CH4}}}, 3, "path I.5");
  expect_twist(view, {{{CH1}, {CH2, CH3, CT, CH4}}}, 3, "path I.6");
  expect_twist(view, {{{CH1, CS, CH2, CH3, CT, CH4}, {CH1, CS, CH2, CH3, CT, CH4}}}, 4,
               "path I.7");
}

void check_up3tree_frame(const FrameSnapshot& snap, int n) {
  FrameView view = make_five_view(snap, n);
  expect_twist(view, {{{CS, CH1}, {CH2, CT}}}, 2, "up3t I.1");
  expect_twist(view, {{{CS, CH1, CM, CH2, CT}, {CS, CH1, CM, CH2, CT}}}, 5, "up3t I.2");
}

// ---------------------------------------------------------------------------
// Shared solve machinery for the stellation-tree recursions

struct SixFrame {
  Chain h1, h2, h3, h4;
  int s = -1, t = -1;
  bool has_s_to_h4 = false;
};

int effective_vertex(const Edge& e, bool flip, bool source) {
  bool pick_source = source != flip;
  return pick_source ? e.source : e.target;
}

SixFrame leaf_frame(const Edge& e, bool flip) {
  SixFrame frame;
  frame.s = effective_vertex(e, flip, true);
  frame.t = effective_vertex(e, flip, false);
  return frame;
}

// [H1,s,H2,H3,t,H4] -> reversed graph's [rev H4, t, rev H3, rev H2, s, rev H1].
SixFrame mirror_six(const SixFrame& f) {
  SixFrame m;
  m.h1 = ChainArena::reversed(f.h4);
  m.s = f.t;
  m.h2 = ChainArena::reversed(f.h3);
  m.h3 = ChainArena::reversed(f.h2);
  m.t = f.s;
  m.h4 = ChainArena::reversed(f.h1);
  return m;
}

void expect(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

void check_sequence_shape(const Dag& g, const ConstructionSequence& seq) {
  expect(seq.vertex_count() == g.n, "construction sequence does not match vertex count");
  expect(g.edge_count() == 2 * g.n - 3 || (g.n == 2 && g.edge_count() == 1),
         "construction sequence does not match edge count");
  for (size_t i = 0; i < seq.nodes.size(); i++) {
    const StellationOp& node = seq.nodes[i];
    expect(node.left < static_cast<int>(i) && node.right < static_cast<int>(i),
           "construction sequence nodes are not child-first");
  }
  expect((seq.root == -1) == seq.nodes.empty(), "construction sequence root mismatch");
  if (seq.root != -1) {
    expect(seq.root == static_cast<int>(seq.nodes.size()) - 1,
           "construction sequence root must be the last node");
  }
}

struct SolveState {
  std::vector<SixFrame> result;
  std::vector<bool> requested_flip, combine_flip;
  std::vector<FrameSnapshot> snapshots;       // check mode
  std::vector<std::vector<Edge>> edge_lists;  // check mode
};

// Downward pass: requested flips from the root, plus the per-node flip the
// combine actually runs in (toggled where a case is solved via reversal).
void assign_flips(const ConstructionSequence& seq, LayoutClass cls, SolveState& state) {
  const int count = static_cast<int>(seq.nodes.size());
  state.requested_flip.assign(count, false);
  state.combine_flip.assign(count, false);
  for (int i = count - 1; i >= 0; i--) {
    const StellationOp& node = seq.nodes[i];
    bool flip = state.requested_flip[i];
    OpKind kind = flip ? reversed_op_kind(node.kind) : node.kind;
    if (cls == LayoutClass::SingleSource) {
      expect(kind != OpKind::O3, "single-source construction contains O3");
    } else if (cls == LayoutClass::Monotone) {
      expect(kind != OpKind::O1, "monotone construction contains O1");
      if (kind == OpKind::O3) {
        flip = !flip;
        kind = OpKind::O2;
      }
    } else {  // Outerpath
      expect(node.left == -1 || node.right == -1, "stellation tree is not a path");
      if (kind == OpKind::O3) {
        flip = !flip;
        kind = OpKind::O2;
      }
      if (kind == OpKind::O1) {
        bool child_on_eff_target = flip ? node.left != -1 : node.right != -1;
        if (child_on_eff_target) flip = !flip;
      }
    }
    state.combine_flip[i] = flip;
    if (node.left != -1) state.requested_flip[node.left] = flip;
    if (node.right != -1) state.requested_flip[node.right] = flip;
  }
}

// Child frame in the combine space, with its snapshot bookkeeping.
struct ChildRef {
  SixFrame frame;
  std::vector<Edge> edges;  // check mode only
};

ChildRef take_child(SolveState& state, int idx, const Edge& leaf_edge, bool flip,
                    bool checking) {
  ChildRef ref;
  if (idx == -1) {
    ref.frame = leaf_frame(leaf_edge, flip);
    if (checking) ref.edges = {leaf_edge};
  } else {
    ref.frame = state.result[idx];
    if (checking) ref.edges = std::move(state.edge_lists[idx]);
  }
  return ref;
}

void snapshot_frame(const ChainArena& arena, const SixFrame& f, std::vector<Edge> edges,
                    bool flipped, FrameSnapshot& out) {
  out.seq.clear();
  arena.walk(f.h1, out.seq);
  out.seq.push_back(f.s);
  arena.walk(f.h2, out.seq);
  arena.walk(f.h3, out.seq);
  out.seq.push_back(f.t);
  arena.walk(f.h4, out.seq);
  out.edges = std::move(edges);
  out.lens = {f.h1.len, f.h2.len, f.h3.len, f.h4.len};
  out.flipped = flipped;
}

// Case bookkeeping for the single-source stack assignment.
struct PagePlan {
  std::array<int, 4> left_perm;
  std::array<int, 4> right_perm;
};

constexpr std::array<int, 4> kIdentity = {0, 1, 2, 3};

std::array<int, 4> compose_swap34(const std::array<int, 4>& p) {
  std::array<int, 4> out;
  for (int i = 0; i < 4; i++) {
    int v = p[i];
    out[i] = v == 2 ? 3 : v == 3 ? 2 : v;
  }
  return out;
}

struct SixSolveResult {
  SixFrame root_frame;
  SolveState state;
  std::vector<PagePlan> page_plans;  // single-source only
};

SixSolveResult solve_six(const Dag& g, const ConstructionSequence& seq, LayoutClass cls,
                         ChainArena& arena, const LayoutOptions& options) {
  check_sequence_shape(g, seq);
  const bool checking = options.check_frames;
  const int count = static_cast<int>(seq.nodes.size());

  SixSolveResult out;
  SolveState& state = out.state;
  state.result.resize(count);
  assign_flips(seq, cls, state);
  if (checking) {
    state.snapshots.resize(count);
    state.edge_lists.resize(count);
  }
  if (cls == LayoutClass::SingleSource) out.page_plans.resize(count);

  for (int i = 0; i < count; i++) {
    const StellationOp& node = seq.nodes[i];
    const bool flip = state.combine_flip[i];
    const OpKind kind = flip ? reversed_op_kind(node.kind) : node.kind;
    const Edge source_side = node.source_side_edge();
    const Edge target_side = node.target_side_edge();
    // children in effective orientation: gleft hangs off (s, x)
    const int gleft_idx = flip ? node.right : node.left;
    const int gright_idx = flip ? node.left : node.right;
    const Edge gleft_edge = flip ? target_side : source_side;
    const Edge gright_edge = flip ? source_side : target_side;

    ChildRef gleft = take_child(state, gleft_idx, gleft_edge, flip, checking);
    ChildRef gright = take_child(state, gright_idx, gright_edge, flip, checking);
    const SixFrame& G = gleft.frame;
    const SixFrame& R = gright.frame;
    const int s = effective_vertex(node.base, flip, true);
    const int t = effective_vertex(node.base, flip, false);
    const int x = node.apex;

    SixFrame combined;
    combined.s = s;
    combined.t = t;

    if (cls == LayoutClass::SingleSource) {
      if (kind == OpKind::O2) {
        // sigma = [s, t, R3, G3, x, G4, R4]
        combined.h4 = arena.concat(
            arena.concat(arena.concat(R.h3, G.h3), ChainArena::single(x)),
            arena.concat(G.h4, R.h4));
        combined.has_s_to_h4 = true;  // (s, x) lands in H4
        out.page_plans[i] = {kIdentity, {1, 3, 2, 0}};
      } else {  // O1
        // sigma = [s, G3, x, G4, R3, t, R4]
        combined.h3 = arena.concat(
            arena.concat(G.h3, ChainArena::single(x)), arena.concat(G.h4, R.h3));
        combined.h4 = R.h4;
        combined.has_s_to_h4 = false;
        PagePlan plan = {kIdentity, {3, 1, 2, 0}};
        if (R.has_s_to_h4) {
          // E(H3 -> H4) of the combined frame sits on stack 4; swap 3 and 4
          // so the stack invariant holds for the parent.
          plan.left_perm = compose_swap34(plan.left_perm);
          plan.right_perm = compose_swap34(plan.right_perm);
        }
        out.page_plans[i] = plan;
      }
      if (!(combined.h3.len == 0 || !combined.has_s_to_h4)) {
        frame_fail("ss observation: H3 non-empty and E(s->H4) non-empty");
      }
    } else if (cls == LayoutClass::Monotone) {
      // kind == O2 here; sigma = [G1, s, G2, R1, t, R2, G3, R3, x, R4, G4]
      combined.h1 = G.h1;
      combined.h2 = G.h2;
      combined.h3 = R.h1;
      Chain mid = arena.concat(arena.concat(R.h2, G.h3), R.h3);
      Chain tail = arena.concat(R.h4, G.h4);
      combined.h4 = arena.concat(arena.concat(mid, ChainArena::single(x)), tail);
    } else {  // Outerpath
      if (kind == OpKind::O2) {
        if (gright_idx == -1) {
          // Case 1a: sigma = [G1, s, G2, t, G3, x, G4]
          combined.h1 = G.h1;
          combined.h2 = G.h2;
          combined.h4 = arena.concat(arena.concat(G.h3, ChainArena::single(x)), G.h4);
        } else {
          // Case 1b: sigma = [s, R1, t, R2, R3, x, R4]
          combined.h3 = R.h1;
          combined.h4 = arena.concat(
              arena.concat(R.h2, R.h3),
              arena.concat(ChainArena::single(x), R.h4));
        }
      } else {
        // Case 2a: sigma = [G1, s, G2, G3, x, G4, t]
        combined.h1 = G.h1;
        combined.h2 = arena.concat(
            arena.concat(G.h2, G.h3),
            arena.concat(ChainArena::single(x), G.h4));
      }
    }

    if (checking) {
      std::vector<Edge> edges = std::move(gleft.edges);
      edges.insert(edges.end(), gright.edges.begin(), gright.edges.end());
      edges.push_back(node.base);
      snapshot_frame(arena, combined, edges, flip, state.snapshots[i]);
      state.edge_lists[i] = state.snapshots[i].edges;
      switch (cls) {
        case LayoutClass::SingleSource:
          check_single_source_frame(state.snapshots[i], g.n);
          break;
        case LayoutClass::Monotone:
          check_monotone_frame(state.snapshots[i], g.n);
          break;
        default:
          check_outerpath_frame(state.snapshots[i], g.n);
          break;
      }
    }

    if (flip != state.requested_flip[i]) combined = mirror_six(combined);
    state.result[i] = combined;
  }

  out.root_frame = seq.root == -1 ? leaf_frame(seq.base_edge, false)
                                  : state.result[seq.root];
  return out;
}

AnnotatedOrder finalize_six(const Dag& g, const SixFrame& frame, const ChainArena& arena,
                            LayoutClass cls, int bound) {
  std::vector<int> sequence;
  sequence.reserve(g.n);
  arena.walk(frame.h1, sequence);
  sequence.push_back(frame.s);
  arena.walk(frame.h2, sequence);
  arena.walk(frame.h3, sequence);
  sequence.push_back(frame.t);
  arena.walk(frame.h4, sequence);

  AnnotatedOrder out;
  out.layout_class = cls;
  out.bound = bound;
  out.order.order = LinearOrder::from_sequence(sequence);
  int at = 0;
  auto push_part = [&](PartLabel label, int len) {
    out.order.parts.push_back({label, at, at + len});
    at += len;
  };
  push_part(PartLabel::H1, frame.h1.len);
  push_part(PartLabel::S, 1);
  push_part(PartLabel::H2, frame.h2.len);
  push_part(PartLabel::H3, frame.h3.len);
  push_part(PartLabel::T, 1);
  push_part(PartLabel::H4, frame.h4.len);
  std::string structure = out.order.check_structure();
  if (!structure.empty()) frame_fail(structure);

  out.twist = max_twist(g, out.order.order);
  if (out.twist.k() > bound) {
    frame_fail(layout_class_name(cls) + " order has twist " +
               std::to_string(out.twist.k()) + " > " + std::to_string(bound));
  }
  return out;
}

}  // namespace

AnnotatedOrder order_single_source(const Dag& g, const ConstructionSequence& seq,
                                   const LayoutOptions& options) {
  ChainArena arena(g.n);
  SixSolveResult solved = solve_six(g, seq, LayoutClass::SingleSource, arena, options);
  return finalize_six(g, solved.root_frame, arena, LayoutClass::SingleSource, 3);
}

StackLayout stacks_single_source(const Dag& g, const ConstructionSequence& seq,
                                 const LayoutOptions& options) {
  ChainArena arena(g.n);
  SixSolveResult solved = solve_six(g, seq, LayoutClass::SingleSource, arena, options);
  AnnotatedOrder annotated =
      finalize_six(g, solved.root_frame, arena, LayoutClass::SingleSource, 3);

  std::unordered_map<std::uint64_t, int> edge_index;
  for (int i = 0; i < g.edge_count(); i++) {
    edge_index[directed_edge_key(g.edges[i].source, g.edges[i].target)] = i;
  }
  auto index_of = [&](const Edge& e) {
    auto it = edge_index.find(directed_edge_key(e.source, e.target));
    if (it == edge_index.end()) {
      throw std::invalid_argument("construction sequence edge not in graph");
    }
    return it->second;
  };

  StackLayout layout;
  layout.order = annotated.order.order;
  layout.page_of.assign(g.edge_count(), -1);

  // Top-down composition of the per-case stack renamings; each edge is
  // assigned at the frame whose triangle introduced it.
  const int count = static_cast<int>(seq.nodes.size());
  std::vector<std::array<int, 4>> comp(count);
  layout.page_of[index_of(seq.base_edge)] = seq.root == -1 ? 0 : 1;
  for (int i = count - 1; i >= 0; i--) {
    const StellationOp& node = seq.nodes[i];
    std::array<int, 4> c = i == seq.root ? kIdentity : comp[i];
    comp[i] = c;
    const PagePlan& plan = solved.page_plans[i];
    // triangle edges per the case tables: (s,x) on stack 1, the other on 2
    layout.page_of[index_of(node.source_side_edge())] = c[0];
    layout.page_of[index_of(node.target_side_edge())] = c[1];
    if (node.left != -1) {
      for (int j = 0; j < 4; j++) comp[node.left][j] = c[plan.left_perm[j]];
    }
    if (node.right != -1) {
      for (int j = 0; j < 4; j++) comp[node.right][j] = c[plan.right_perm[j]];
    }
  }

  int max_page = 0;
  for (int p : layout.page_of) max_page = std::max(max_page, p);
  layout.pages = max_page + 1;

  LayoutValidation validation = validate_layout(g, layout);
  if (!validation.ok) frame_fail("single-source stacks: " + validation.message);
  if (layout.pages > 4) frame_fail("single-source stacks used more than 4 pages");

  if (options.check_frames) {
    // Stack-invariant containments per frame, in frame-local page space.
    for (int i = 0; i < count; i++) {
      const FrameSnapshot& snap = solved.state.snapshots[i];
      FrameView view = make_six_view(snap, g.n);
      std::array<int, 4> inverse;
      for (int j = 0; j < 4; j++) inverse[comp[i][j]] = j;
      for (const Edge& e : view.edges) {
        int local = inverse[layout.page_of[index_of(e)]];
        int cs = view.cat[e.source], ct = view.cat[e.target];
        if (cs == CS && (ct == CH3 || ct == CH4) && local != 0) {
          frame_fail("ss stacks: E(s->H3, s->H4) off stack 1");
        }
        if (((cs == CH3 && ct == CT) || (cs == CT && ct == CH4)) && local != 1) {
          frame_fail("ss stacks: E(H3->t, t->H4) off stack 2");
        }
        if (cs == CH3 && ct == CH4 && local != 2) {
          frame_fail("ss stacks: E(H3->H4) off stack 3");
        }
      }
    }
  }
  return layout;
}

AnnotatedOrder order_monotone(const Dag& g, const ConstructionSequence& seq,
                              const LayoutOptions& options) {
  ChainArena arena(g.n);
  SixSolveResult solved = solve_six(g, seq, LayoutClass::Monotone, arena, options);
  return finalize_six(g, solved.root_frame, arena, LayoutClass::Monotone, 4);
}

AnnotatedOrder order_outerpath(const Dag& g, const ConstructionSequence& seq,
                               const LayoutOptions& options) {
  ChainArena arena(g.n);
  SixSolveResult solved = solve_six(g, seq, LayoutClass::Outerpath, arena, options);
  return finalize_six(g, solved.root_frame, arena, LayoutClass::Outerpath, 4);
}

// ---------------------------------------------------------------------------
// Upward planar 3-trees

namespace {

struct FaceNode {
  std::array<int, 3> verts;  // (source, middle, sink), original directions
  int apex = -1;             // -1 for an empty face
  Edge apex_mid_edge;        // edge between apex and middle, original direction
  int child_r = -1, child_g = -1, child_b = -1;
};

struct FiveFrame {
  Chain h1, h2;
  int s = -1, m = -1, t = -1;
};

std::uint64_t face_key(int a, int b, int c) {
  std::array<int, 3> v = {a, b, c};
  std::sort(v.begin(), v.end());
  return (static_cast<std::uint64_t>(v[0]) << 42) |
         (static_cast<std::uint64_t>(v[1]) << 21) | static_cast<std::uint64_t>(v[2]);
}

struct DirectionMap {
  std::unordered_map<std::uint64_t, bool> forward;  // key(u,v), u<v -> u->v?

  explicit DirectionMap(const Dag& g) {
    for (const Edge& e : g.edges) {
      int u = e.source, v = e.target;
      bool fwd = u < v;
      if (!fwd) std::swap(u, v);
      forward[unordered_edge_key(u, v)] = fwd;
    }
  }

  Edge directed(int u, int v) const {
    int a = std::min(u, v), b = std::max(u, v);
    auto it = forward.find(unordered_edge_key(a, b));
    if (it == forward.end()) {
      throw std::invalid_argument("decomposition references a missing edge");
    }
    return it->second ? Edge{a, b} : Edge{b, a};
  }
};

// (source, middle, sink) of triangle {a,b,c}.
std::array<int, 3> orient_face(const DirectionMap& dirs, int a, int b, int c) {
  std::array<int, 3> v = {a, b, c};
  std::array<int, 3> outdeg{};
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) {
      if (i != j && dirs.directed(v[i], v[j]).source == v[i]) outdeg[i]++;
    }
  }
  std::array<int, 3> result = {-1, -1, -1};
  for (int i = 0; i < 3; i++) {
    if (outdeg[i] <= 2) result[2 - outdeg[i]] = v[i];
  }
  if (result[0] == -1 || result[1] == -1 || result[2] == -1) {
    throw std::invalid_argument("cyclically oriented face");
  }
  return result;
}

std::vector<FaceNode> build_face_tree(const Dag& g, const ThreeTreeDecomposition& dec) {
  DirectionMap dirs(g);
  std::unordered_map<std::uint64_t, int> apex_of_face;
  for (size_t i = 0; i < dec.insertions.size(); i++) {
    const auto& h = dec.insertions[i].host;
    if (!apex_of_face.emplace(face_key(h[0], h[1], h[2]), static_cast<int>(i)).second) {
      throw std::invalid_argument("two insertions share a host face");
    }
  }

  std::vector<FaceNode> faces;
  size_t consumed = 0;
  std::vector<int> todo;
  faces.push_back({dec.outer_triangle, -1, {}, -1, -1, -1});
  todo.push_back(0);
  while (!todo.empty()) {
    int idx = todo.back();
    todo.pop_back();
    auto [s, m, t] = faces[idx].verts;
    auto it = apex_of_face.find(face_key(s, m, t));
    if (it == apex_of_face.end()) continue;
    const ApexInsertion& ins = dec.insertions[it->second];
    consumed++;
    int x = ins.apex;
    faces[idx].apex = x;
    faces[idx].apex_mid_edge = dirs.directed(x, m);
    auto add_face = [&](int a, int b, int c) {
      faces.push_back({orient_face(dirs, a, b, c), -1, {}, -1, -1, -1});
      todo.push_back(static_cast<int>(faces.size()) - 1);
      return static_cast<int>(faces.size()) - 1;
    };
    int child_r = add_face(s, x, t);
    int child_g = add_face(s, x, m);
    int child_b = add_face(x, m, t);
    faces[idx].child_r = child_r;
    faces[idx].child_g = child_g;
    faces[idx].child_b = child_b;
  }
  if (consumed != dec.insertions.size()) {
    throw std::invalid_argument("insertion hosts do not form a face tree");
  }
  return faces;
}

FiveFrame mirror_five(const FiveFrame& f) {
  FiveFrame m;
  m.s = f.t;
  m.h1 = ChainArena::reversed(f.h2);
  m.m = f.m;
  m.h2 = ChainArena::reversed(f.h1);
  m.t = f.s;
  return m;
}

}  // namespace

AnnotatedOrder order_up3tree(const Dag& g, const ThreeTreeDecomposition& dec,
                             const LayoutOptions& options) {
  expect(dec.face_consistent, "decomposition is not face-consistent");
  expect(dec.vertex_count() == g.n, "decomposition does not match vertex count");
  expect(g.edge_count() == 3 * g.n - 6, "decomposition does not match edge count");

  std::vector<FaceNode> faces = build_face_tree(g, dec);
  const int count = static_cast<int>(faces.size());
  const bool checking = options.check_frames;

  // parents precede children, so flips go forward and combines go backward
  std::vector<bool> requested(count, false), combine_flip(count, false);
  for (int i = 0; i < count; i++) {
    const FaceNode& face = faces[i];
    if (face.apex == -1) continue;
    bool flip = requested[i];
    bool apex_to_mid = face.apex_mid_edge.source == face.apex;
    if (apex_to_mid == flip) flip = !flip;  // effective (m, x): solve reversed
    combine_flip[i] = flip;
    requested[face.child_r] = flip;
    requested[face.child_g] = flip;
    requested[face.child_b] = flip;
  }

  ChainArena arena(g.n);
  std::vector<FiveFrame> result(count);
  std::vector<std::vector<Edge>> apex_edges(checking ? count : 0);
  DirectionMap dirs(g);

  for (int i = count - 1; i >= 0; i--) {
    const FaceNode& face = faces[i];
    const bool flip = face.apex == -1 ? requested[i] : combine_flip[i];
    FiveFrame frame;
    frame.s = flip ? face.verts[2] : face.verts[0];
    frame.m = face.verts[1];
    frame.t = flip ? face.verts[0] : face.verts[2];

    if (face.apex != -1) {
      const int x = face.apex;
      // effective children: G and B swap when solving the reversed graph
      const FiveFrame& R = result[face.child_r];
      const FiveFrame& G = result[flip ? face.child_b : face.child_g];
      const FiveFrame& B = result[flip ? face.child_g : face.child_b];
      if (R.s != frame.s || R.m != x || R.t != frame.t || G.s != frame.s || G.m != x ||
          G.t != frame.m || B.s != x || B.m != frame.m || B.t != frame.t) {
        throw std::invalid_argument("face labels inconsistent with edge directions");
      }
      // sigma = [s, R1, G1, x, G2, R2, B1, m, B2, t]
      Chain left = arena.concat(R.h1, G.h1);
      Chain mid = arena.concat(G.h2, R.h2);
      frame.h1 = arena.concat(arena.concat(left, ChainArena::single(x)),
                              arena.concat(mid, B.h1));
      frame.h2 = B.h2;
    }

    if (checking) {
      std::vector<Edge>& mine = apex_edges[i];
      if (face.apex != -1) {
        mine = std::move(apex_edges[face.child_r]);
        for (int child : {face.child_g, face.child_b}) {
          mine.insert(mine.end(), apex_edges[child].begin(), apex_edges[child].end());
        }
        auto it = std::find_if(dec.insertions.begin(), dec.insertions.end(),
                               [&](const ApexInsertion& ins) { return ins.apex == face.apex; });
        for (const Edge& e : it->edges) mine.push_back(e);
      }
      FrameSnapshot snap;
      snap.seq.clear();
      snap.seq.push_back(frame.s);
      arena.walk(frame.h1, snap.seq);
      snap.seq.push_back(frame.m);
      arena.walk(frame.h2, snap.seq);
      snap.seq.push_back(frame.t);
      snap.edges = mine;
      snap.edges.push_back(dirs.directed(face.verts[0], face.verts[1]));
      snap.edges.push_back(dirs.directed(face.verts[1], face.verts[2]));
      snap.edges.push_back(dirs.directed(face.verts[0], face.verts[2]));
      snap.lens = {frame.h1.len, frame.h2.len, 0, 0};
      snap.flipped = flip;
      check_up3tree_frame(snap, g.n);
    }

    if (face.apex != -1 && flip != requested[i]) frame = mirror_five(frame);
    result[i] = frame;
  }

  const FiveFrame& root = result[0];
  std::vector<int> sequence;
  sequence.reserve(g.n);
  sequence.push_back(root.s);
  arena.walk(root.h1, sequence);
  sequence.push_back(root.m);
  arena.walk(root.h2, sequence);
  sequence.push_back(root.t);

  AnnotatedOrder out;
  out.layout_class = LayoutClass::UpwardThreeTree;
  out.bound = 5;
  out.order.order = LinearOrder::from_sequence(sequence);
  int at = 0;
  auto push_part = [&](PartLabel label, int len) {
    out.order.parts.push_back({label, at, at + len});
    at += len;
  };
  push_part(PartLabel::S, 1);
  push_part(PartLabel::H1, root.h1.len);
  push_part(PartLabel::M, 1);
  push_part(PartLabel::H2, root.h2.len);
  push_part(PartLabel::T, 1);
  std::string structure = out.order.check_structure();
  if (!structure.empty()) frame_fail(structure);

  out.twist = max_twist(g, out.order.order);
  if (out.twist.k() > 5) {
    frame_fail("up3tree order has twist " + std::to_string(out.twist.k()) + " > 5");
  }
  return out;
}

}  // namespace dagbook
