#include "cgt/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <map>
#include <set>

namespace cgt {

namespace {

using Clock = std::chrono::steady_clock;

// Group operations on element indices, tabulated once per search.
struct GroupTable {
  int n = 0;
  std::vector<int16_t> add;    // n*n
  std::vector<int16_t> neg;    // n
  std::vector<int8_t> odd;     // n
  std::vector<int16_t> ord;    // n
  std::vector<int16_t> cls;    // n, +/- class id
  std::vector<int8_t> first_zero;  // n, first residue is 0
  int n_classes = 0;
  int order2_class = -1;

  explicit GroupTable(const GroupSpec& g) {
    n = g.order();
    add.resize(static_cast<std::size_t>(n) * n);
    neg.resize(n);
    odd.resize(n);
    ord.resize(n);
    cls.assign(n, -1);
    first_zero.resize(n);
    for (int a = 0; a < n; ++a) {
      GroupElement ea = element_from_index(g, a);
      first_zero[a] = ea.r.front() == 0;
      neg[a] = static_cast<int16_t>(element_index(g, negate(g, ea)));
      odd[a] = g.parity_defined() ? !is_even(g, ea) : 0;
      ord[a] = static_cast<int16_t>(a == 0 ? 1 : element_order(g, ea));
      for (int b = 0; b < n; ++b)
        add[static_cast<std::size_t>(a) * n + b] =
            static_cast<int16_t>(element_index(g, cgt::add(g, ea, element_from_index(g, b))));
    }
    for (int a = 1; a < n; ++a) {
      if (cls[a] >= 0) continue;
      cls[a] = static_cast<int16_t>(n_classes);
      cls[neg[a]] = static_cast<int16_t>(n_classes);
      if (neg[a] == a) order2_class = n_classes;
      ++n_classes;
    }
  }
  int16_t sum(int a, int b) const { return add[static_cast<std::size_t>(a) * n + b]; }
};

// One candidate embedding of a topology, traced and classified.
struct ShapeData {
  int nE = 0;
  std::vector<int8_t> signeg;                   // per edge
  int n_faces = 0;
  std::array<int, 2> face_len = {0, 0};
  struct Trav {
    int8_t face = 0;
    int8_t tau = 0;  // entry = tau * stored current
  };
  std::vector<std::array<Trav, 2>> trav;        // per edge
  std::vector<int8_t> adj_pair;                 // traversals same-face, adjacent
  std::vector<int8_t> want_odd;                 // required current parity per edge
};

// Fixed-size tracing buffers reused across candidates.
struct TraceBuf {
  std::vector<int32_t> rot_flat, vtx_off, dart_vertex, dart_pos;
  std::vector<uint8_t> visited;
  std::vector<int32_t> state_face, state_pos;
};

// Traces the candidate and fills ShapeData. Returns false if the face count
// does not match the mode.
bool trace_candidate(const ShapeTopology& topo, uint32_t rot_bits, uint32_t sig_bits,
                     Mode mode, TraceBuf& buf, ShapeData& sd) {
  const int nE = static_cast<int>(topo.ends.size());
  const int nV = topo.nv;
  sd.nE = nE;
  sd.signeg.assign(nE, 0);
  for (std::size_t i = 0; i < topo.sig_free_edges.size(); ++i)
    if (sig_bits >> i & 1) sd.signeg[topo.sig_free_edges[i]] = 1;

  buf.rot_flat.clear();
  buf.vtx_off.assign(1, 0);
  buf.dart_vertex.assign(2 * nE, -1);
  buf.dart_pos.assign(2 * nE, -1);
  static thread_local std::vector<int> swap_map;
  swap_map.assign(nV, -1);
  for (std::size_t i = 0; i < topo.free_rot_vertices.size(); ++i)
    swap_map[topo.free_rot_vertices[i]] = static_cast<int>(i);

  for (int v = 0; v < nV; ++v) {
    const auto& base = topo.base_rot[v];
    int deg = static_cast<int>(base.size());
    for (int k = 0; k < deg; ++k) {
      int kk = k;
      if (deg == 3 && swap_map[v] >= 0 && (rot_bits >> swap_map[v] & 1)) {
        if (k == 1) kk = 2;
        else if (k == 2) kk = 1;
      }
      int d = base[kk];
      buf.dart_vertex[d] = v;
      buf.dart_pos[d] = k;
      buf.rot_flat.push_back(d);
    }
    buf.vtx_off.push_back(static_cast<int32_t>(buf.rot_flat.size()));
  }

  auto next_state = [&](int32_t s) -> int32_t {
    int32_t arc = s >> 1, b = s & 1;
    int32_t head = arc ^ 1;
    int32_t v = buf.dart_vertex[head];
    int32_t p = buf.dart_pos[head];
    int32_t deg = buf.vtx_off[v + 1] - buf.vtx_off[v];
    int32_t p2 = b == 0 ? (p + 1 == deg ? 0 : p + 1) : (p == 0 ? deg - 1 : p - 1);
    int32_t out = buf.rot_flat[buf.vtx_off[v] + p2];
    return (out << 1) | (b ^ sd.signeg[out >> 1]);
  };
  auto mirror_state = [&](int32_t s) -> int32_t {
    int32_t arc = s >> 1, b = s & 1;
    return ((arc ^ 1) << 1) | (sd.signeg[arc >> 1] ? b : b ^ 1);
  };

  const int n_states = 4 * nE;
  buf.visited.assign(n_states, 0);
  buf.state_face.assign(n_states, -1);
  buf.state_pos.assign(n_states, -1);
  int faces = 0;
  sd.face_len = {0, 0};
  int max_faces = mode == Mode::cascade ? 1 : 2;
  for (int32_t arc = 0; arc < 2 * nE; ++arc) {
    int32_t start = arc << 1;
    if (buf.visited[start]) continue;
    if (faces == max_faces) return false;  // one face too many
    int pos = 0;
    int32_t s = start;
    do {
      buf.visited[s] = 1;
      buf.visited[mirror_state(s)] = 1;
      buf.state_face[s] = faces;
      buf.state_pos[s] = pos++;
      s = next_state(s);
    } while (s != start);
    if (faces < 2) sd.face_len[faces] = pos;
    ++faces;
  }
  if (faces != max_faces) return false;
  sd.n_faces = faces;

  // per-edge traversals from the recorded states
  sd.trav.assign(nE, {});
  sd.adj_pair.assign(nE, 0);
  sd.want_odd.assign(nE, 0);
  static thread_local std::vector<int> cnt;
  cnt.assign(nE, 0);
  static thread_local std::vector<std::array<int32_t, 2>> tstate;
  tstate.assign(nE, {-1, -1});
  for (int32_t s = 0; s < n_states; ++s) {
    if (buf.state_face[s] < 0) continue;
    int e = s >> 2;
    if (cnt[e] >= 2) return false;
    tstate[e][cnt[e]] = s;
    ++cnt[e];
  }
  for (int e = 0; e < nE; ++e) {
    if (cnt[e] != 2) return false;
    bool alt[2];
    for (int i = 0; i < 2; ++i) {
      int32_t s = tstate[e][i];
      int32_t b = s & 1;
      int32_t tail_end = (s >> 1) & 1;
      alt[i] = b != 0;
      int8_t sigma = b ? -1 : 1;
      int8_t base = tail_end == 0 ? 1 : (sd.signeg[e] ? 1 : -1);
      sd.trav[e][i].face = static_cast<int8_t>(buf.state_face[s]);
      sd.trav[e][i].tau = static_cast<int8_t>(sigma * base);
    }
    bool uni = alt[0] != alt[1];
    if (mode == Mode::cascade) {
      sd.want_odd[e] = uni;
    } else {
      sd.want_odd[e] = sd.trav[e][0].face != sd.trav[e][1].face;
      if (uni) return false;  // pure index-2 shapes keep every edge bidirectional
    }
    if (sd.trav[e][0].face == sd.trav[e][1].face) {
      int len = sd.face_len[sd.trav[e][0].face];
      int d = std::abs(buf.state_pos[tstate[e][0]] - buf.state_pos[tstate[e][1]]);
      sd.adj_pair[e] = d == 1 || d == len - 1;
    }
  }
  return true;
}

// ---- constrained completion of the free currents ----

struct Engine {
  const GroupTable& T;
  const ShapeTopology& topo;
  const ShapeData& sd;
  Mode mode;
  bool force_even;

  int nE, nV;
  std::vector<int16_t> value;                       // per edge, -1 unassigned
  std::vector<int8_t> class_used;
  int class_cap;
  std::vector<uint8_t> face_used;                   // 2 faces x n elements
  std::vector<int8_t> is_stem, stem_pend_end, need_zero_first, need_nonzero_first;
  bool zero_first_exact = false;  // the (0,.) supply exactly fills rungs and
                                  // order-2 stems; nothing else may take it
  int quota2, quota3;
  std::array<int, 2> face_quota2;                   // order-2 stems allowed per face
  std::vector<std::vector<std::pair<int, int>>> vslots;  // vertex -> (edge, end)
  std::vector<int8_t> tracked;                      // vertex participates in KCL
  std::vector<int16_t> vsum;                        // entering sum so far
  std::vector<int8_t> vleft;                        // unassigned incident slots
  std::vector<int> order;                           // decision order over edges

  struct TrailEntry {
    int edge;
    int8_t n_cells;
    std::array<int, 2> cells;
  };
  std::vector<TrailEntry> trail;

  unsigned long long nodes = 0;

  Engine(const GroupTable& table, const ShapeTopology& t, const ShapeData& s, Mode m,
         bool feven)
      : T(table), topo(t), sd(s), mode(m), force_even(feven) {
    nE = static_cast<int>(topo.ends.size());
    nV = topo.nv;
    value.assign(nE, -1);
    class_used.assign(T.n_classes, 0);
    class_cap = mode == Mode::cascade ? 1 : 2;
    face_used.assign(2 * static_cast<std::size_t>(T.n), 0);
    is_stem.assign(nE, 0);
    stem_pend_end.assign(nE, -1);
    need_zero_first.assign(nE, 0);
    for (int e : topo.zero_first_edges) need_zero_first[e] = 1;
    need_nonzero_first.assign(nE, 0);
    for (int e : topo.nonzero_first_edges) need_nonzero_first[e] = 1;
    for (std::size_t i = 0; i < topo.stems.size(); ++i) {
      int e = topo.stems[i];
      is_stem[e] = 1;
      stem_pend_end[e] = topo.ends[e][1] == topo.pendants[i] ? 1 : 0;
    }
    quota2 = 0;
    quota3 = 0;
    face_quota2 = {0, 0};
    vslots.assign(nV, {});
    for (int e = 0; e < nE; ++e) {
      vslots[topo.ends[e][0]].push_back({e, 0});
      vslots[topo.ends[e][1]].push_back({e, 1});
    }
    tracked.assign(nV, 0);
    vsum.assign(nV, 0);
    vleft.assign(nV, 0);
    for (int v = 0; v < nV; ++v) {
      tracked[v] = vslots[v].size() == 3;
      vleft[v] = static_cast<int8_t>(vslots[v].size());
    }
  }

  // entering value into ends[e][end] when the stored current is x
  int16_t entering(int e, int end, int16_t x) const {
    if (end == 1) return x;
    return sd.signeg[e] ? x : T.neg[x];
  }
  // stored current that makes `ent` enter at ends[e][end]
  int16_t stored_for(int e, int end, int16_t ent) const {
    if (end == 1) return ent;
    return sd.signeg[e] ? ent : T.neg[ent];
  }

  bool try_assign(int e, int16_t x) {
    ++nodes;
    if (x == 0) return false;
    if (force_even && T.odd[x]) return false;
    if (T.odd[x] != sd.want_odd[e]) return false;
    if (need_zero_first[e] && !T.first_zero[x]) return false;
    if (need_nonzero_first[e] && T.first_zero[x]) return false;
    int c = T.cls[x];
    if (class_used[c] >= class_cap) return false;
    if (c == T.order2_class && !is_stem[e]) return false;
    int stem_ord = 0;
    if (is_stem[e]) {
      stem_ord = T.ord[entering(e, stem_pend_end[e], x)];
      if (stem_ord == 2) {
        if (quota2 <= 0) return false;
        if (face_quota2[sd.trav[e][0].face] <= 0) return false;
      } else if (stem_ord == 3) {
        if (quota3 <= 0) return false;
        if (zero_first_exact && T.first_zero[x]) return false;
      } else {
        return false;
      }
    }
    // face marks
    int cell0 = sd.trav[e][0].face * T.n + (sd.trav[e][0].tau > 0 ? x : T.neg[x]);
    int cell1 = sd.trav[e][1].face * T.n + (sd.trav[e][1].tau > 0 ? x : T.neg[x]);
    int8_t n_cells = 2;
    if (cell0 == cell1) {
      if (!sd.adj_pair[e]) return false;  // doubled log entry with no suppression
      n_cells = 1;
    }
    if (face_used[cell0]) return false;
    if (n_cells == 2 && face_used[cell1]) return false;
    // Kirchhoff: prospective sums at the endpoints
    int v0 = topo.ends[e][0], v1 = topo.ends[e][1];
    int16_t s0 = tracked[v0] ? T.sum(vsum[v0], entering(e, 0, x)) : 0;
    int16_t s1 = 0;
    if (v1 == v0) {
      if (tracked[v0]) s0 = T.sum(s0, entering(e, 1, x));
      if (tracked[v0] && vleft[v0] == 2 && s0 != 0) return false;
    } else {
      s1 = tracked[v1] ? T.sum(vsum[v1], entering(e, 1, x)) : 0;
      if (tracked[v0] && vleft[v0] == 1 && s0 != 0) return false;
      if (tracked[v1] && vleft[v1] == 1 && s1 != 0) return false;
    }
    // commit
    value[e] = x;
    ++class_used[c];
    face_used[cell0] = 1;
    if (n_cells == 2) face_used[cell1] = 1;
    if (v1 == v0) {
      if (tracked[v0]) vsum[v0] = s0;
      vleft[v0] -= 2;
    } else {
      if (tracked[v0]) vsum[v0] = s0;
      if (tracked[v1]) vsum[v1] = s1;
      --vleft[v0];
      --vleft[v1];
    }
    if (stem_ord == 2) {
      --quota2;
      --face_quota2[sd.trav[e][0].face];
    } else if (stem_ord == 3) {
      --quota3;
    }
    trail.push_back({e, n_cells, {cell0, cell1}});
    return true;
  }

  void undo() {
    const TrailEntry& tr = trail.back();
    int e = tr.edge;
    int16_t x = value[e];
    int v0 = topo.ends[e][0], v1 = topo.ends[e][1];
    if (v1 == v0) {
      if (tracked[v0])
        vsum[v0] = T.sum(T.sum(vsum[v0], T.neg[entering(e, 0, x)]), T.neg[entering(e, 1, x)]);
      vleft[v0] += 2;
    } else {
      if (tracked[v0]) vsum[v0] = T.sum(vsum[v0], T.neg[entering(e, 0, x)]);
      if (tracked[v1]) vsum[v1] = T.sum(vsum[v1], T.neg[entering(e, 1, x)]);
      ++vleft[v0];
      ++vleft[v1];
    }
    if (is_stem[e]) {
      int so = T.ord[entering(e, stem_pend_end[e], x)];
      if (so == 2) {
        ++quota2;
        ++face_quota2[sd.trav[e][0].face];
      } else if (so == 3) {
        ++quota3;
      }
    }
    face_used[tr.cells[0]] = 0;
    if (tr.n_cells == 2) face_used[tr.cells[1]] = 0;
    --class_used[T.cls[x]];
    value[e] = -1;
    trail.pop_back();
  }

  // forced edge at a trivalent vertex with one open slot, or -1
  int find_forced(int16_t& out_value) const {
    for (int v = 0; v < nV; ++v) {
      if (!tracked[v] || vleft[v] != 1) continue;
      for (auto [e, end] : vslots[v]) {
        if (value[e] >= 0) continue;
        out_value = stored_for(e, end, T.neg[vsum[v]]);
        return e;
      }
    }
    return -1;
  }
};

struct Driver {
  const Scaffold& sc;
  const SearchOptions& opt;
  const GroupTable T;
  Clock::time_point deadline;
  bool use_deadline;

  SearchOutcome out;
  std::set<std::string> seen;
  // env CGT_SEARCH_STATS=1: tabulate embedding-filter outcomes, skip phase B
  bool stats_only = std::getenv("CGT_SEARCH_STATS") != nullptr;
  std::map<std::string, long long> stats;
  bool stop = false;
  bool budget_hit = false;
  bool cap_hit = false;        // some shape search was truncated by the node cap
  bool shape_capped = false;   // current shape hit its cap
  std::vector<int16_t> odd_values, even_values;

  Driver(const Scaffold& s, const SearchOptions& o)
      : sc(s), opt(o), T(s.group) {
    use_deadline = opt.budget_seconds > 0;
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(opt.budget_seconds));
    for (int16_t x = 1; x < T.n; ++x) (T.odd[x] ? odd_values : even_values).push_back(x);
  }

  bool over_budget() {
    if (!use_deadline) return false;
    if (Clock::now() >= deadline) {
      budget_hit = true;
      stop = true;
      return true;
    }
    return false;
  }

  void emit(Engine& eng, const ShapeTopology& topo, uint32_t rot_bits, uint32_t sig_bits) {
    std::vector<int> values(eng.value.begin(), eng.value.end());
    CurrentGraph g = materialize(sc, topo, rot_bits, sig_bits, values);
    LawReport rep = check_laws(g, sc.mode);
    if (!rep.pass()) {
      // engine and law checker disagree: surface it loudly in tests
      std::cerr << "search: dropped a completion failing " << mode_name(sc.mode)
                << " laws (shape " << topo.label << ")\n";
      return;
    }
    std::string ser = serialize(g);
    std::string neg = serialize(negate_all_currents(g));
    if (seen.count(neg) || seen.count(ser)) return;
    seen.insert(ser);
    out.solutions.push_back(std::move(g));
    if (opt.progress)
      std::cerr << "search: solution " << out.solutions.size() << " from " << topo.label << "\n";
    if (opt.first_only || (opt.max_solutions && out.solutions.size() >= opt.max_solutions))
      stop = true;
  }

  void dfs(Engine& eng, const ShapeTopology& topo, uint32_t rot_bits, uint32_t sig_bits) {
    if (shape_capped) return;
    if ((eng.nodes & 0x1fff) == 0 && over_budget()) return;
    if (opt.node_cap_per_shape && eng.nodes >= opt.node_cap_per_shape) {
      shape_capped = true;
      cap_hit = true;
      return;
    }

    // propagate forced assignments
    int applied = 0;
    int16_t fval = 0;
    int fe;
    while ((fe = eng.find_forced(fval)) >= 0) {
      if (!eng.try_assign(fe, fval)) {
        for (; applied > 0; --applied) eng.undo();
        return;
      }
      ++applied;
    }

    int pick = -1;
    for (int e : eng.order)
      if (eng.value[e] < 0) { pick = e; break; }
    if (pick < 0) {
      emit(eng, topo, rot_bits, sig_bits);
      for (; applied > 0; --applied) eng.undo();
      return;
    }

    const auto& domain = eng.sd.want_odd[pick] && !opt.force_even_currents
                             ? odd_values
                             : even_values;
    for (int16_t x : domain) {
      if (stop || shape_capped) break;
      if (!eng.try_assign(pick, x)) continue;
      dfs(eng, topo, rot_bits, sig_bits);
      eng.undo();
    }
    for (; applied > 0; --applied) eng.undo();
  }

  // returns false when enumeration should stop
  bool handle_topology(const ShapeTopology& topo) {
    ++out.shapes_enumerated;
    if (over_budget()) return false;

    const int n_sig = static_cast<int>(topo.sig_free_edges.size());
    const int n_rot = static_cast<int>(topo.free_rot_vertices.size());
    const uint32_t sig_limit = 1u << n_sig;
    const uint32_t rot_limit = 1u << n_rot;
    // cascades live in nonorientable surfaces: skip the all-positive signature
    const uint32_t sig_start = sc.mode == Mode::cascade ? 1 : 0;
    if (sc.mode == Mode::cascade && n_sig == 0) return true;

    TraceBuf buf;
    ShapeData sd;
    const int odd_demand = sc.mode == Mode::cascade ? 9 * sc.s : 18 * sc.s;

    for (uint32_t sig_bits = sig_start; sig_bits < sig_limit && !stop; ++sig_bits) {
      for (uint32_t rot_bits = 0; rot_bits < rot_limit && !stop; ++rot_bits) {
        if (((sig_bits * rot_limit + rot_bits) & 0x3ff) == 0 && over_budget()) return false;
        if (!trace_candidate(topo, rot_bits, sig_bits, sc.mode, buf, sd)) continue;

        int odd_slots = 0;
        for (int e = 0; e < sd.nE; ++e) odd_slots += sd.want_odd[e];
        if (stats_only && sc.mode == Mode::index2) {
          std::string key = "odd36=" + std::to_string(odd_slots == odd_demand) +
                            " eq=" + std::to_string(sd.face_len[0] == sd.face_len[1]);
          bool fs[2] = {false, false};
          for (int e : topo.stems) fs[sd.trav[e][0].face] = true;
          key += " stems2f=" + std::to_string(fs[0] && fs[1]);
          stats[key]++;
          continue;
        }
        if (odd_slots != odd_demand) continue;
        if (sc.mode == Mode::index2) {
          if (sd.face_len[0] != sd.face_len[1]) continue;
          // each face suppresses exactly one order-2 vortex, so the stems
          // must reach both faces
          bool face_seen[2] = {false, false};
          for (int e : topo.stems) face_seen[sd.trav[e][0].face] = true;
          if (!face_seen[0] || !face_seen[1]) continue;
        }

        // pinned currents must fit their slots
        bool feasible = true;
        for (auto [e, x] : topo.fixed_currents)
          if (T.odd[x] != sd.want_odd[e]) { feasible = false; break; }
        if (!feasible) continue;

        ++out.shapes_searched;
        Engine eng(T, topo, sd, sc.mode, opt.force_even_currents);
        eng.quota2 = sc.profile.order2;
        eng.quota3 = sc.profile.order3;
        {
          int zf_classes = 0;
          for (int c = 0, x = 1; x < T.n; ++x)
            if (T.first_zero[x] && T.cls[x] >= c) { ++zf_classes; c = T.cls[x] + 1; }
          // classes are numbered in first-appearance order, so count directly
          zf_classes = 0;
          std::vector<char> seen_cls(T.n_classes, 0);
          for (int x = 1; x < T.n; ++x)
            if (T.first_zero[x] && !seen_cls[T.cls[x]]) { seen_cls[T.cls[x]] = 1; ++zf_classes; }
          int supply = zf_classes * eng.class_cap;
          int slots = static_cast<int>(topo.zero_first_edges.size()) + sc.profile.order2;
          eng.zero_first_exact = supply == slots;
        }
        eng.face_quota2 = sc.mode == Mode::cascade
                              ? std::array<int, 2>{sc.profile.order2, 0}
                              : std::array<int, 2>{1, 1};
        // decision order: stems first, then greedily keep new edges adjacent
        // to already-touched vertices so Kirchhoff forcing fires early
        {
          std::vector<int> touched(topo.nv, 0);
          std::vector<uint8_t> placed(sd.nE, 0);
          for (int e : topo.stems) {
            eng.order.push_back(e);
            placed[e] = 1;
            ++touched[topo.ends[e][0]];
            ++touched[topo.ends[e][1]];
          }
          for (auto [e, x] : topo.fixed_currents) {
            (void)x;
            if (placed[e]) continue;
            placed[e] = 1;  // seeded before the dfs; counts as touched
            ++touched[topo.ends[e][0]];
            ++touched[topo.ends[e][1]];
          }
          for (int left = sd.nE - static_cast<int>(eng.order.size()) -
                          static_cast<int>(topo.fixed_currents.size());
               left > 0; --left) {
            int best = -1, best_score = -1;
            for (int e = 0; e < sd.nE; ++e) {
              if (placed[e]) continue;
              int score = touched[topo.ends[e][0]] + touched[topo.ends[e][1]];
              if (score > best_score) {
                best = e;
                best_score = score;
              }
            }
            eng.order.push_back(best);
            placed[best] = 1;
            ++touched[topo.ends[best][0]];
            ++touched[topo.ends[best][1]];
          }
        }

        bool seeded = true;
        for (auto [e, x] : topo.fixed_currents)
          if (!eng.try_assign(e, static_cast<int16_t>(x))) { seeded = false; break; }
        if (!seeded) continue;

        shape_capped = false;
        dfs(eng, topo, rot_bits, sig_bits);
        out.nodes += eng.nodes;
      }
    }
    return !stop;
  }
};

}  // namespace

SearchOutcome search(const Scaffold& sc, const SearchOptions& opt) {
  Driver drv(sc, opt);
  enumerate_topologies(sc, [&](const ShapeTopology& topo) { return drv.handle_topology(topo); });
  if (drv.stats_only)
    for (auto& [k, c] : drv.stats) std::cerr << "stats " << k << " : " << c << "\n";
  // a node-cap truncation means the space was not fully explored either
  drv.out.status = drv.stop && !drv.budget_hit ? SearchStatus::found
                   : drv.budget_hit            ? SearchStatus::budget_exhausted
                   : drv.cap_hit               ? SearchStatus::budget_exhausted
                                               : SearchStatus::space_exhausted;
  return drv.out;
}

PruneVerdict prune_partial(const CurrentGraph& shape,
                           const std::vector<std::optional<GroupElement>>& currents,
                           Mode mode) {
  if (currents.size() != shape.edges.size())
    throw std::invalid_argument("prune_partial: one entry per edge required");
  const GroupSpec& g = shape.group;

  // completed-vertex Kirchhoff check
  for (const auto& v : shape.vertices) {
    if (v.rot.size() != 3) continue;
    GroupElement sum = zero(g);
    bool complete = true;
    for (Dart d : v.rot) {
      int ep = shape.edge_pos(d.edge);
      if (!currents[ep]) { complete = false; break; }
      GroupElement stored = *currents[ep];
      Dart rev = reverse(d);
      GroupElement into =
          rev.end == 0 ? stored
                       : (shape.edges[ep].sig > 0 ? negate(g, stored) : stored);
      sum = add(g, sum, into);
    }
    if (complete && !is_zero(sum))
      return {true, "vertex " + std::to_string(v.id) + " violates Kirchhoff's law"};
  }

  // currents distinct up to sign (per the mode's multiplicity cap)
  int cap = mode == Mode::cascade ? 1 : 2;
  std::map<GroupElement, int> uses;
  for (std::size_t e = 0; e < shape.edges.size(); ++e) {
    if (!currents[e]) continue;
    GroupElement a = *currents[e];
    GroupElement b = negate(g, a);
    GroupElement rep = std::min(a, b);
    if (++uses[rep] > cap)
      return {true, "current " + to_string(a) + " repeats up to sign"};
  }

  // partial face logs: no element twice among fully-assigned entries
  CurrentGraph shaped = shape;
  for (std::size_t e = 0; e < shape.edges.size(); ++e)
    shaped.edges[e].cur = currents[e] ? *currents[e] : zero(g);
  auto faces = trace_faces(shaped);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    std::set<GroupElement> seen;
    const auto& steps = faces[f].steps;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      int ep = shape.edge_pos(steps[k].tail.edge);
      if (!currents[ep]) continue;
      GroupElement val = shaped.current_on(steps[k].tail);
      if (steps[k].alternate) val = negate(g, val);
      // the order-2 vortex doubles consecutively and is suppressed
      if (!is_zero(val) && element_order(g, val) == 2) {
        const auto& prev = steps[(k + steps.size() - 1) % steps.size()];
        if (prev.tail.edge == steps[k].tail.edge) continue;
      }
      if (!seen.insert(val).second)
        return {true, "face " + std::to_string(f) + " repeats log entry " + to_string(val)};
    }
  }
  return {false, ""};
}

}  // namespace cgt
