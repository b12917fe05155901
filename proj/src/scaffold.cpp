#include "cgt/scaffold.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cgt {

namespace {

constexpr int kCoreVerts = 8;

// Perfect matchings on {0..7}, enumerated pair-by-pair from the smallest
// unmatched point. 105 of them, in a fixed order.
std::vector<std::array<std::array<int, 2>, 4>> stub_matchings() {
  std::vector<std::array<std::array<int, 2>, 4>> out;
  std::array<std::array<int, 2>, 4> cur{};
  std::array<bool, 8> used{};
  auto rec = [&](auto&& self, int depth) -> void {
    int a = -1;
    for (int i = 0; i < 8; ++i)
      if (!used[i]) { a = i; break; }
    if (a < 0) {
      out.push_back(cur);
      return;
    }
    used[a] = true;
    for (int b = a + 1; b < 8; ++b) {
      if (used[b]) continue;
      used[b] = true;
      cur[depth] = {a, b};
      self(self, depth + 1);
      used[b] = false;
    }
    used[a] = false;
  };
  rec(rec, 0);
  // cyclically-adjacent pairs double an 8-cycle edge in the cascade family;
  // put matchings with fewer of those first so simple cores come early
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    auto doubled = [](const auto& m) {
      int k = 0;
      for (const auto& p : m) {
        int d = p[1] - p[0];
        k += d == 1 || d == 7;
      }
      return k;
    };
    return doubled(x) < doubled(y);
  });
  return out;
}

struct Builder {
  ShapeTopology t;
  std::vector<uint8_t> rot_lock;  // grows with vertices
  std::vector<int> pinned_sig_edges;  // ladder edges stay at +1

  int add_vertex() {
    t.base_rot.emplace_back();
    rot_lock.push_back(0);
    return t.nv++;
  }
  int add_edge(int u, int v) {
    int e = static_cast<int>(t.ends.size());
    t.ends.push_back({u, v});
    t.base_rot[u].push_back(2 * e + 0);
    t.base_rot[v].push_back(2 * e + 1);
    return e;
  }
  // splice `count` pendant-holding subdivision vertices into edge e,
  // keeping the rotation slot of each original endpoint
  void subdivide_with_pendants(int e, int count) {
    if (count <= 0) return;
    int v = t.ends[e][1];
    std::vector<int> chain;
    for (int k = 0; k < count; ++k) chain.push_back(add_vertex());
    // rewrite edge e as (u, chain[0]); v's slot is taken over by the last
    // chain edge so the cyclic order at v is untouched
    t.ends[e][1] = chain[0];
    t.base_rot[chain[0]].push_back(2 * e + 1);
    int prev = chain[0];
    for (int k = 1; k < count; ++k) {
      add_edge(prev, chain[k]);
      prev = chain[k];
    }
    int closing = static_cast<int>(t.ends.size());
    t.ends.push_back({prev, v});
    t.base_rot[prev].push_back(2 * closing + 0);
    auto& rot_v = t.base_rot[v];
    *std::find(rot_v.begin(), rot_v.end(), 2 * e + 1) = 2 * closing + 1;
    for (int k = 0; k < count; ++k) {
      int p = add_vertex();
      int stem = add_edge(chain[k], p);
      t.stems.push_back(stem);
      t.pendants.push_back(p);
      rot_lock[p] = 1;
    }
  }
  bool connected() const {
    if (t.nv == 0) return false;
    std::vector<int> comp(t.nv, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : t.base_rot[v]) {
        int w = t.ends[d >> 1][(d & 1) ^ 1];
        if (comp[w] < 0) {
          comp[w] = 0;
          stack.push_back(w);
        }
      }
    }
    return std::none_of(comp.begin(), comp.end(), [](int c) { return c < 0; });
  }
  void finish_free_lists() {
    // free rotations: every unlocked trivalent vertex
    for (int v = 0; v < t.nv; ++v)
      if (!rot_lock[v] && t.base_rot[v].size() == 3) t.free_rot_vertices.push_back(v);
    // signature freedom: cotree edges of a BFS spanning tree, minus pinned
    // ladder edges; stems are bridges and always land in the tree
    std::vector<int> parent(t.nv, -2);
    std::vector<uint8_t> skip(t.ends.size(), 0);
    for (int e : pinned_sig_edges) skip[e] = 1;
    std::vector<uint8_t> tree_edge(t.ends.size(), 0);
    std::vector<int> queue{0};
    parent[0] = -1;
    std::size_t qi = 0;
    while (qi < queue.size()) {
      int v = queue[qi++];
      for (int d : t.base_rot[v]) {
        int e = d >> 1;
        int w = t.ends[e][(d & 1) ^ 1];
        if (parent[w] == -2) {
          parent[w] = v;
          tree_edge[e] = 1;
          queue.push_back(w);
        }
      }
    }
    for (int e = 0; e < static_cast<int>(t.ends.size()); ++e)
      if (!tree_edge[e] && !skip[e]) t.sig_free_edges.push_back(e);
  }
};

// ---- cascade family: an 8-cycle plus a chord matching, three pendant
// subdivisions, and (for s >= 3) a ladder spliced into two host edges ----

struct CascadeChoice {
  int matching;
  int host1, host2;     // core edge indices carrying the ladder (-1 when no rungs)
  std::array<int, 3> subdivided;  // core edge indices, sorted
  int checker_phase;    // rail coloring variants when a ladder is present
};

bool build_cascade_topology(const Scaffold& sc, const CascadeChoice& ch,
                            const std::array<std::array<int, 2>, 4>& matching,
                            ShapeTopology& out) {
  Builder b;
  for (int i = 0; i < kCoreVerts; ++i) b.add_vertex();
  std::vector<int> core_edges;
  for (int i = 0; i < 8; ++i) core_edges.push_back(b.add_edge(i, (i + 1) % 8));
  for (const auto& pr : matching) core_edges.push_back(b.add_edge(pr[0], pr[1]));

  if (sc.rung_count > 0) {
    int rail_len = sc.rung_count;
    auto splice_rail = [&](int host) {
      int u = b.t.ends[host][0];
      (void)u;
      int v = b.t.ends[host][1];
      std::vector<int> rail;
      for (int k = 0; k < rail_len; ++k) rail.push_back(b.add_vertex());
      auto& rot_v = b.t.base_rot[v];
      rot_v.erase(std::find(rot_v.begin(), rot_v.end(), 2 * host + 1));
      b.t.ends[host][1] = rail[0];
      b.t.base_rot[rail[0]].push_back(2 * host + 1);
      for (int k = 1; k < rail_len; ++k)
        b.pinned_sig_edges.push_back(b.add_edge(rail[k - 1], rail[k]));
      b.pinned_sig_edges.push_back(b.add_edge(rail.back(), v));
      return rail;
    };
    auto top = splice_rail(core_edges[ch.host1]);
    auto bot = splice_rail(core_edges[ch.host2]);
    int c0 = 1;
    for (int k = 0; k < sc.rung_count; ++k) {
      int e = b.add_edge(top[k], bot[k]);
      b.pinned_sig_edges.push_back(e);
      GroupElement cur = zero(sc.group);
      cur.r.back() = c0 + k;
      // vertical arcs alternate in direction: flip the stored sign on odd rungs
      if (k % 2 == 1) cur = negate(sc.group, cur);
      b.t.fixed_currents.push_back({e, element_index(sc.group, cur)});
      // checkerboard rail rotations, locked; the same swap on both layers
      // is the drawn alternation (the V-last frame flips sense across rungs)
      int ct = (k + ch.checker_phase) % 2;
      auto& rt = b.t.base_rot[top[k]];
      auto& rb = b.t.base_rot[bot[k]];
      if (ct == 1 && rt.size() == 3) std::swap(rt[1], rt[2]);
      if (ct == 1 && rb.size() == 3) std::swap(rb[1], rb[2]);
      b.rot_lock[top[k]] = 1;
      b.rot_lock[bot[k]] = 1;
    }
  }

  for (int spot : ch.subdivided) b.subdivide_with_pendants(core_edges[spot], 1);
  // repeated spots: subdivide_with_pendants must run once per occurrence on
  // the (possibly rewritten) edge; handled by the caller grouping below.

  if (!b.connected()) return false;
  b.finish_free_lists();
  out = std::move(b.t);
  return true;
}

// ---- index-2 family: two rung ladders whose eight rail ends are closed by
// a stub matching, three of the four closing arcs carrying a vortex ----

// Rail rotation classes come from period-4 words (bit k%4 selects the class
// of position k). The usable (top, bottom) word pairs are the ones that, on
// a closed ladder, trace to two faces whose rung visits alternate between
// "both faces once" and "one face twice" -- the shape the alternating rung
// parities need. Probed once; the criterion is convention-independent.
const std::vector<std::array<int, 2>>& good_rail_patterns() {
  static const std::vector<std::array<int, 2>> cached = [] {
    std::vector<std::array<int, 2>> out;
    const int R = 12;
    GroupSpec grp({3, 12});
    for (int wt = 0; wt < 16; ++wt) {
      for (int wb = 0; wb < 16; ++wb) {
        CurrentGraph g;
        g.group = grp;
        for (int k = 0; k < R; ++k) {
          int lt = k == 0 ? R : k, rt_ = k + 1, vt = 2 * R + k + 1;
          int lb = k == 0 ? 2 * R : R + k, rb_ = R + k + 1;
          std::vector<Dart> rt = {Dart{lt, 1}, Dart{rt_, 0}, Dart{vt, 0}};
          std::vector<Dart> rb = {Dart{lb, 1}, Dart{rb_, 0}, Dart{vt, 1}};
          if (wt >> (k % 4) & 1) std::swap(rt[1], rt[2]);
          if (wb >> (k % 4) & 1) std::swap(rb[1], rb[2]);
          g.vertices.push_back({k + 1, rt});
          g.vertices.push_back({R + k + 1, rb});
        }
        std::sort(g.vertices.begin(), g.vertices.end(),
                  [](const auto& a, const auto& b) { return a.id < b.id; });
        for (int e = 1; e <= 3 * R; ++e) g.edges.push_back({e, 1, zero(grp)});
        auto faces = trace_faces(g);
        auto uses = classify_edges(g, faces);
        // rung visits must alternate between split across two walks and
        // doubled inside one; the closed ladder's face count is incidental
        bool first_both = uses[2 * R].face[0] != uses[2 * R].face[1];
        bool alt = true;
        for (int k = 0; k < R && alt; ++k) {
          bool both = uses[2 * R + k].face[0] != uses[2 * R + k].face[1];
          alt = both == (first_both ? k % 2 == 0 : k % 2 == 1);
        }
        if (alt) out.push_back({wt, wb});
      }
    }
    return out;
  }();
  return cached;
}

// Cyclic-ladder variant: one ring of rungs, vortices spliced into rails.
struct RingChoice {
  int wt, wb;               // rail rotation words
  std::array<int, 3> splice;  // rail edge indices carrying the vortices
};

bool build_index2_ring(const Scaffold& sc, const RingChoice& ch, ShapeTopology& out) {
  Builder b;
  const int R = 2 * sc.rung_count;  // both gap runs live on one ring
  std::vector<int> top, bot;
  for (int k = 0; k < R; ++k) top.push_back(b.add_vertex());
  for (int k = 0; k < R; ++k) bot.push_back(b.add_vertex());
  std::vector<int> top_rail, bot_rail, rungs;
  for (int k = 0; k < R; ++k) top_rail.push_back(b.add_edge(top[k], top[(k + 1) % R]));
  for (int k = 0; k < R; ++k) bot_rail.push_back(b.add_edge(bot[k], bot[(k + 1) % R]));
  for (int k = 0; k < R; ++k) {
    int e = b.add_edge(top[k], bot[k]);
    rungs.push_back(e);
    b.t.zero_first_edges.push_back(e);
    b.rot_lock[top[k]] = 1;
    b.rot_lock[bot[k]] = 1;
  }
  // rail rotations from the words before any splicing
  for (int k = 0; k < R; ++k) {
    for (int layer = 0; layer < 2; ++layer) {
      int v = layer == 0 ? top[k] : bot[k];
      const auto& rail = layer == 0 ? top_rail : bot_rail;
      int dL = 2 * rail[(k + R - 1) % R] + 1;
      int dR = 2 * rail[k] + 0;
      int dV = 2 * rungs[k] + layer;
      int word = layer == 0 ? ch.wt : ch.wb;
      int cls = word >> (k % 4) & 1;
      b.t.base_rot[v] = cls == 0 ? std::vector<int>{dL, dR, dV}
                                 : std::vector<int>{dL, dV, dR};
    }
  }
  // vortex junctions on three distinct rail edges
  std::vector<int> all_rail = top_rail;
  all_rail.insert(all_rail.end(), bot_rail.begin(), bot_rail.end());
  for (int i = 0; i < 3; ++i) {
    if (i && ch.splice[i] <= ch.splice[i - 1]) return false;
    if (ch.splice[i] < 0 || ch.splice[i] >= static_cast<int>(all_rail.size())) return false;
    b.subdivide_with_pendants(all_rail[ch.splice[i]], 1);
  }
  if (!b.connected()) return false;
  b.finish_free_lists();
  b.t.sig_free_edges.clear();  // orientable family stays pure
  out = std::move(b.t);
  return true;
}

struct Index2Choice {
  int matching;
  int plain_arc;        // which matched arc stays unsubdivided (0..3)
  int run_a_high;       // which gap run segment A carries (pinned runs only)
  int order_a, order_b; // run ascending (0) / descending (1) per segment
  int dir_a, dir_b;     // arc direction phase per segment
  int pat_a, pat_b;     // rail rotation pattern pair per segment
  bool pinned_runs;     // fix the consecutive rung currents, or leave the
                        // rungs free with first component 0
};

bool build_index2_topology(const Scaffold& sc, const Index2Choice& ch,
                           const std::array<std::array<int, 2>, 4>& matching,
                           ShapeTopology& out) {
  Builder b;
  const int R = sc.rung_count;
  const int n12s = sc.group.moduli.back();  // 12s
  const int half = n12s / 2;                // 6s

  std::array<std::vector<int>, 2> top, bot, rung;  // per segment
  for (int seg = 0; seg < 2; ++seg) {
    for (int k = 0; k < R; ++k) top[seg].push_back(b.add_vertex());
    for (int k = 0; k < R; ++k) bot[seg].push_back(b.add_vertex());
    for (int k = 1; k < R; ++k)
      b.t.nonzero_first_edges.push_back(b.add_edge(top[seg][k - 1], top[seg][k]));
    for (int k = 1; k < R; ++k)
      b.t.nonzero_first_edges.push_back(b.add_edge(bot[seg][k - 1], bot[seg][k]));
    int run_high = seg == 0 ? ch.run_a_high : !ch.run_a_high;
    int order = seg == 0 ? ch.order_a : ch.order_b;
    int dir = seg == 0 ? ch.dir_a : ch.dir_b;
    for (int k = 0; k < R; ++k) {
      int e = b.add_edge(top[seg][k], bot[seg][k]);
      rung[seg].push_back(e);
      if (ch.pinned_runs) {
        int second = order == 0 ? k + 1 : R - k;     // consecutive, either order
        if (run_high) second += half;                // high gap: 6s+1 .. 12s-1
        GroupElement cur = zero(sc.group);
        cur.r.back() = second;
        if ((k + dir) % 2 == 1) cur = negate(sc.group, cur);
        b.t.fixed_currents.push_back({e, element_index(sc.group, cur)});
      } else {
        b.t.zero_first_edges.push_back(e);
      }
      b.rot_lock[top[seg][k]] = 1;
      b.rot_lock[bot[seg][k]] = 1;
    }
  }

  // stub order: tA1, tAR, bA1, bAR, tB1, tBR, bB1, bBR
  std::array<int, 8> stub = {top[0].front(), top[0].back(), bot[0].front(), bot[0].back(),
                             top[1].front(), top[1].back(), bot[1].front(), bot[1].back()};
  for (int arc = 0; arc < 4; ++arc) {
    int u = stub[matching[arc][0]];
    int v = stub[matching[arc][1]];
    if (u == v) return false;  // a rail of length 1 matched to itself
    int e = b.add_edge(u, v);
    std::size_t before = b.t.ends.size();
    if (arc != ch.plain_arc) b.subdivide_with_pendants(e, 1);
    b.t.nonzero_first_edges.push_back(e);
    // the splice's closing piece carries boundary current too
    for (std::size_t k = before; k < b.t.ends.size(); ++k) {
      bool is_stem = false;
      for (int st : b.t.stems) is_stem |= st == static_cast<int>(k);
      if (!is_stem) b.t.nonzero_first_edges.push_back(static_cast<int>(k));
    }
  }

  // every rail vertex must now be trivalent
  for (int seg = 0; seg < 2; ++seg)
    for (int k = 0; k < R; ++k)
      if (b.t.base_rot[top[seg][k]].size() != 3 || b.t.base_rot[bot[seg][k]].size() != 3)
        return false;

  // rail rotations from the probed pattern words: bit k%4 of the word picks
  // the cyclic class (left, right, vertical) or (left, vertical, right)
  const auto& patterns = good_rail_patterns();
  for (int seg = 0; seg < 2; ++seg) {
    auto words = patterns[seg == 0 ? ch.pat_a : ch.pat_b];
    for (int k = 0; k < R; ++k) {
      for (int layer = 0; layer < 2; ++layer) {
        const auto& rail = layer == 0 ? top[seg] : bot[seg];
        int v = rail[k];
        int left_nb = k > 0 ? rail[k - 1] : -1;
        int right_nb = k + 1 < R ? rail[k + 1] : -1;
        int dV = -1, dL = -1, dR = -1, dOther = -1;
        for (int d : b.t.base_rot[v]) {
          int e = d >> 1;
          int w = b.t.ends[e][(d & 1) ^ 1];
          if (e == rung[seg][k]) dV = d;
          else if (w == left_nb) dL = d;
          else if (w == right_nb) dR = d;
          else dOther = d;
        }
        if (dL < 0) dL = dOther;
        else if (dR < 0) dR = dOther;
        if (dV < 0 || dL < 0 || dR < 0) return false;
        int cls = words[layer] >> (k % 4) & 1;
        b.t.base_rot[v] = cls == 0 ? std::vector<int>{dL, dR, dV}
                                   : std::vector<int>{dL, dV, dR};
      }
    }
  }

  if (!b.connected()) return false;
  b.finish_free_lists();  // pure family: sig_free cleared below
  b.t.sig_free_edges.clear();
  out = std::move(b.t);
  return true;
}

}  // namespace

Scaffold build_scaffold(const ScaffoldParams& p) {
  if (p.s < 1) throw std::invalid_argument("scaffold: s must be >= 1");
  Scaffold sc;
  sc.s = p.s;
  sc.mode = p.mode;
  sc.end_shape = p.end_shape;
  sc.group = GroupSpec({3, 12 * p.s});

  if (p.mode == Mode::cascade) {
    if (p.s % 2 == 0)
      throw std::invalid_argument("scaffold: cascade families exist for odd s only");
    sc.rung_count = p.rung_count < 0 ? 6 * (p.s - 1) : p.rung_count;
    if (sc.rung_count != 6 * (p.s - 1))
      throw std::invalid_argument("scaffold: cascade family needs " +
                                  std::to_string(6 * (p.s - 1)) + " rungs for s=" +
                                  std::to_string(p.s));
    sc.profile = p.profile.order2 < 0 ? VortexProfile{1, 2} : p.profile;
    if (sc.profile.order2 != 1 || sc.profile.order3 != 2)
      throw std::invalid_argument("scaffold: cascade vortex profile must be one order-2 and two order-3");
    // handshake: 3 pendants + (12s-1) trivalent gives 2E = 36s
    // with E = 18s edges; the gadget carries 11 trivalent vertices.
  } else {
    if (p.s % 2 != 0)
      throw std::invalid_argument("scaffold: index-2 families exist for even s only");
    sc.rung_count = p.rung_count < 0 ? 6 * p.s - 1 : p.rung_count;
    if (sc.rung_count != 6 * p.s - 1)
      throw std::invalid_argument("scaffold: index-2 family needs " +
                                  std::to_string(6 * p.s - 1) + " rungs per segment for s=" +
                                  std::to_string(p.s));
    sc.profile = p.profile.order2 < 0 ? VortexProfile{2, 1} : p.profile;
    if (sc.profile.order2 != 2 || sc.profile.order3 != 1)
      throw std::invalid_argument("scaffold: index-2 vortex profile must be two order-2 and one order-3");
  }
  return sc;
}

Scaffold build_scaffold(int s, int rung_count, const std::string& end_shape, Mode mode) {
  ScaffoldParams p;
  p.s = s;
  p.rung_count = rung_count;
  p.end_shape = end_shape;
  p.mode = mode;
  return build_scaffold(p);
}

long long enumerate_topologies(const Scaffold& sc,
                               const std::function<bool(const ShapeTopology&)>& visit) {
  auto matchings = stub_matchings();
  long long count = 0;
  ShapeTopology topo;

  if (sc.mode == Mode::cascade) {
    const int n_core_edges = 12;
    std::vector<std::array<int, 2>> hosts;
    if (sc.rung_count > 0) {
      for (int h1 = 0; h1 < n_core_edges; ++h1)
        for (int h2 = h1 + 1; h2 < n_core_edges; ++h2) hosts.push_back({h1, h2});
    } else {
      hosts.push_back({-1, -1});
    }
    for (std::size_t m = 0; m < matchings.size(); ++m) {
      for (const auto& host : hosts) {
        int phases = sc.rung_count > 0 ? 2 : 1;
        for (int phase = 0; phase < phases; ++phase) {
          for (int a = 0; a < n_core_edges; ++a) {
            if (a == host[0] || a == host[1]) continue;
            for (int bb = a; bb < n_core_edges; ++bb) {
              if (bb == host[0] || bb == host[1]) continue;
              for (int c = bb; c < n_core_edges; ++c) {
                if (c == host[0] || c == host[1]) continue;
                CascadeChoice ch{static_cast<int>(m), host[0], host[1], {a, bb, c}, phase};
                ShapeTopology t;
                if (!build_cascade_topology(sc, ch, matchings[m], t)) continue;
                t.label = "ring m" + std::to_string(m) + " sub " + std::to_string(a) + "," +
                          std::to_string(bb) + "," + std::to_string(c);
                if (sc.rung_count > 0)
                  t.label += " host " + std::to_string(host[0]) + "," + std::to_string(host[1]) +
                             " phase " + std::to_string(phase);
                ++count;
                if (!visit(t)) return count;
              }
            }
          }
        }
      }
    }
    return count;
  }

  // index-2; the default family is the cyclic ladder with rail vortices and
  // free rung currents, then the two-segment closures; the "pinned-runs"
  // family fixes the consecutive runs of the drawn ladders
  if (sc.end_shape == "auto" || sc.end_shape == "ring") {
    const int n_rail = 4 * sc.rung_count;
    for (int wt = 0; wt < 16; ++wt)
      for (int wb = 0; wb < 16; ++wb)
        for (int a = 0; a < n_rail; ++a)
          for (int bb = a + 1; bb < n_rail; ++bb)
            for (int c = bb + 1; c < n_rail; ++c) {
              RingChoice ch{wt, wb, {a, bb, c}};
              ShapeTopology t;
              if (!build_index2_ring(sc, ch, t)) continue;
              t.label = "ring w" + std::to_string(wt) + "," + std::to_string(wb) +
                        " splice " + std::to_string(a) + "," + std::to_string(bb) + "," +
                        std::to_string(c);
              ++count;
              if (!visit(t)) return count;
            }
    if (sc.end_shape == "ring") return count;
  }
  const int n_patterns = static_cast<int>(good_rail_patterns().size());
  const bool pinned = sc.end_shape == "pinned-runs";
  const int rv = pinned ? 2 : 1;  // pinned-only enumeration axes collapse to one
  for (std::size_t m = 0; m < matchings.size(); ++m)
    for (int plain = 0; plain < 4; ++plain)
      for (int run_a_high = 0; run_a_high < rv; ++run_a_high)
        for (int order_a = 0; order_a < rv; ++order_a)
          for (int order_b = 0; order_b < rv; ++order_b)
            for (int dir_a = 0; dir_a < rv; ++dir_a)
              for (int dir_b = 0; dir_b < rv; ++dir_b)
                for (int pat_a = 0; pat_a < n_patterns; ++pat_a)
                  for (int pat_b = 0; pat_b < n_patterns; ++pat_b) {
                    Index2Choice ch{static_cast<int>(m), plain,   run_a_high, order_a,
                                    order_b,             dir_a,   dir_b,      pat_a,
                                    pat_b,               pinned};
                    ShapeTopology t;
                    if (!build_index2_topology(sc, ch, matchings[m], t)) continue;
                    t.label = "ladder2 m" + std::to_string(m) + " plain " + std::to_string(plain) +
                              " pat " + std::to_string(pat_a) + "," + std::to_string(pat_b);
                    if (pinned)
                      t.label += " runA " + std::to_string(run_a_high) + " ord " +
                                 std::to_string(order_a) + std::to_string(order_b) + " dir " +
                                 std::to_string(dir_a) + std::to_string(dir_b);
                    ++count;
                    if (!visit(t)) return count;
                  }
  return count;
}

CurrentGraph materialize(const Scaffold& sc, const ShapeTopology& topo,
                         uint32_t rot_bits, uint32_t sig_bits,
                         const std::vector<int>& values) {
  CurrentGraph g;
  g.group = sc.group;
  g.declared_index = sc.mode == Mode::cascade ? 1 : 2;
  g.vertices.resize(topo.nv);
  for (int v = 0; v < topo.nv; ++v) {
    g.vertices[v].id = v + 1;
    for (int d : topo.base_rot[v]) g.vertices[v].rot.push_back(Dart{(d >> 1) + 1, d & 1});
  }
  for (std::size_t i = 0; i < topo.free_rot_vertices.size(); ++i)
    if (rot_bits >> i & 1) {
      auto& rot = g.vertices[topo.free_rot_vertices[i]].rot;
      std::swap(rot[1], rot[2]);
    }
  g.edges.resize(topo.ends.size());
  for (std::size_t e = 0; e < topo.ends.size(); ++e) {
    g.edges[e].id = static_cast<int>(e) + 1;
    g.edges[e].sig = 1;
    g.edges[e].cur = values[e] >= 0 ? element_from_index(sc.group, values[e]) : zero(sc.group);
  }
  for (std::size_t i = 0; i < topo.sig_free_edges.size(); ++i)
    if (sig_bits >> i & 1) g.edges[topo.sig_free_edges[i]].sig = -1;
  g.validate();
  return g;
}

CurrentGraph scaffold_skeleton(const Scaffold& sc) {
  CurrentGraph out;
  bool got = false;
  enumerate_topologies(sc, [&](const ShapeTopology& t) {
    std::vector<int> values(t.ends.size(), -1);
    for (auto [e, x] : t.fixed_currents) values[e] = x;
    out = materialize(sc, t, 0, 0, values);
    got = true;
    return false;
  });
  if (!got) throw std::invalid_argument("scaffold family is empty for these parameters");
  return out;
}

}  // namespace cgt
