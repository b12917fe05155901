#include "cgt/tracer.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgt {

int32_t EmbeddedCore::next_state(int32_t s) const {
  int32_t arc = s >> 1;
  int32_t b = s & 1;
  int32_t head = arc ^ 1;  // the dart at the vertex the arc enters
  int32_t v = dart_vertex[head];
  int32_t p = dart_pos[head];
  int32_t deg = vtx_off[v + 1] - vtx_off[v];
  int32_t p2;
  if (b == 0)
    p2 = (p + 1 == deg) ? 0 : p + 1;       // normal: next in rotation
  else
    p2 = (p == 0) ? deg - 1 : p - 1;       // alternate: previous in rotation
  int32_t out = rot_flat[vtx_off[v] + p2];
  int32_t nb = b ^ sig_neg[out >> 1];
  return (out << 1) | nb;
}

int32_t EmbeddedCore::mirror_state(int32_t s) const {
  int32_t arc = s >> 1;
  int32_t b = s & 1;
  int32_t mb = sig_neg[arc >> 1] ? b : (b ^ 1);
  return ((arc ^ 1) << 1) | mb;
}

EmbeddedCore build_core(const CurrentGraph& g) {
  EmbeddedCore core;
  core.n_edges = static_cast<int>(g.edges.size());
  core.sig_neg.resize(core.n_edges);
  for (int i = 0; i < core.n_edges; ++i) core.sig_neg[i] = g.edges[i].sig < 0;

  core.dart_vertex.assign(2 * core.n_edges, -1);
  core.dart_pos.assign(2 * core.n_edges, -1);
  core.vtx_off.push_back(0);
  for (const auto& v : g.vertices) {
    for (Dart d : v.rot) {
      int ei = g.edge_pos(d.edge);
      int dart = 2 * ei + d.end;
      core.dart_vertex[dart] = static_cast<int>(core.vtx_off.size()) - 1;
      core.dart_pos[dart] = static_cast<int>(core.rot_flat.size()) - core.vtx_off.back();
      core.rot_flat.push_back(dart);
    }
    core.vtx_off.push_back(static_cast<int>(core.rot_flat.size()));
  }
  return core;
}

std::vector<std::vector<int32_t>> trace_core(const EmbeddedCore& core) {
  std::vector<std::vector<int32_t>> faces;
  int32_t n_arcs = 2 * core.n_edges;
  std::vector<uint8_t> visited(2 * n_arcs, 0);
  int64_t total_steps = 0;
  for (int32_t arc = 0; arc < n_arcs; ++arc) {
    int32_t start = arc << 1;  // normal behavior
    if (visited[start]) continue;
    std::vector<int32_t> walk;
    int32_t s = start;
    do {
      walk.push_back(s);
      visited[s] = 1;
      visited[core.mirror_state(s)] = 1;
      s = core.next_state(s);
    } while (s != start);
    total_steps += static_cast<int64_t>(walk.size());
    faces.push_back(std::move(walk));
  }
  if (total_steps != n_arcs)
    throw std::logic_error("face tracing did not partition the edge sides");
  return faces;
}

std::vector<FaceWalk> trace_faces(const CurrentGraph& g) {
  EmbeddedCore core = build_core(g);
  auto raw = trace_core(core);
  std::vector<FaceWalk> out;
  out.reserve(raw.size());
  for (const auto& walk : raw) {
    FaceWalk fw;
    fw.steps.reserve(walk.size());
    for (int32_t s : walk) {
      int32_t arc = s >> 1;
      fw.steps.push_back(FaceStep{Dart{g.edges[arc >> 1].id, static_cast<int>(arc & 1)},
                                  (s & 1) != 0});
    }
    out.push_back(std::move(fw));
  }
  return out;
}

std::vector<EdgeUse> classify_edges(const CurrentGraph& g, const std::vector<FaceWalk>& faces) {
  std::vector<EdgeUse> uses(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) uses[i].edge_id = g.edges[i].id;
  std::vector<int> count(g.edges.size(), 0);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& steps = faces[f].steps;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      int ei = g.edge_pos(steps[k].tail.edge);
      int& c = count[ei];
      if (c >= 2) throw std::logic_error("edge traversed more than twice");
      uses[ei].face[c] = static_cast<int>(f);
      uses[ei].step[c] = static_cast<int>(k);
      uses[ei].alternate[c] = steps[k].alternate;
      ++c;
    }
  }
  for (std::size_t i = 0; i < uses.size(); ++i) {
    if (count[i] != 2) throw std::logic_error("edge not traversed exactly twice");
    uses[i].cls = uses[i].alternate[0] == uses[i].alternate[1]
                      ? EdgeClass::bidirectional
                      : EdgeClass::unidirectional;
  }
  return uses;
}

std::vector<LogEntry> face_log_detailed(const CurrentGraph& g, const FaceWalk& walk) {
  std::vector<LogEntry> raw;
  raw.reserve(walk.steps.size());
  for (const FaceStep& st : walk.steps) {
    GroupElement v = g.current_on(st.tail);
    if (st.alternate) v = negate(g.group, v);
    raw.push_back(LogEntry{std::move(v), st.tail.edge});
  }
  if (raw.empty()) return raw;

  // merge cyclically-consecutive equal order-2 entries pairwise
  auto mergeable = [&](const GroupElement& v) {
    return !is_zero(v) && element_order(g.group, v) == 2;
  };
  std::size_t n = raw.size();
  std::size_t start = 0;
  while (start < n && raw[start].value == raw[(start + n - 1) % n].value && mergeable(raw[start].value))
    ++start;
  if (start == n) {
    // all entries equal: keep ceil(n/2)
    std::vector<LogEntry> out(raw.begin(), raw.begin() + (n + 1) / 2);
    return out;
  }
  std::vector<LogEntry> out;
  out.reserve(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t idx = (start + i) % n;
    const LogEntry& cur = raw[idx];
    std::size_t run = 1;
    while (i + run < n && raw[(start + i + run) % n].value == cur.value) ++run;
    std::size_t keep = mergeable(cur.value) ? (run + 1) / 2 : run;
    for (std::size_t k = 0; k < keep; ++k) out.push_back(raw[(start + i + 2 * k) % n]);
    i += run;
  }
  return out;
}

Log face_log(const CurrentGraph& g, const FaceWalk& walk) {
  Log log;
  for (auto& e : face_log_detailed(g, walk)) log.entries.push_back(std::move(e.value));
  return log;
}

bool surface_orientable(const CurrentGraph& g) {
  // 2-color vertices so that sig(e) = -1 exactly on bichromatic edges
  std::vector<int> color(g.vertices.size(), -1);
  std::vector<std::array<int, 2>> edge_ends(g.edges.size(), {-1, -1});
  for (std::size_t vi = 0; vi < g.vertices.size(); ++vi)
    for (Dart d : g.vertices[vi].rot)
      edge_ends[g.edge_pos(d.edge)][d.end] = static_cast<int>(vi);
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertices.size());  // (other, want_diff)
  for (const auto& e : g.edges) {
    const auto& ends = edge_ends[g.edge_pos(e.id)];
    if (ends[0] == ends[1]) {
      if (e.sig < 0) return false;  // a -1 loop survives every flip
      continue;
    }
    int diff = e.sig < 0;
    adj[ends[0]].push_back({ends[1], diff});
    adj[ends[1]].push_back({ends[0], diff});
  }
  for (std::size_t s = 0; s < g.vertices.size(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{static_cast<int>(s)};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, diff] : adj[v]) {
        int want = color[v] ^ diff;
        if (color[w] == -1) {
          color[w] = want;
          stack.push_back(w);
        } else if (color[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

Orientation2 orient_two_faces(const CurrentGraph& g, const std::vector<FaceWalk>& faces) {
  Orientation2 res;
  if (faces.size() != 2) return res;
  auto uses = classify_edges(g, faces);
  // Reversing a face applies the mirror map to its traversals; behavior of a
  // +1-signature step flips, a -1-signature step keeps its behavior.
  int o1 = -1;  // 0: face 1 as traced, 1: face 1 reversed; face 0 stays fixed
  for (const auto& u : uses) {
    bool neg = g.edge(u.edge_id).sig < 0;
    if (u.face[0] == u.face[1]) {
      if (u.alternate[0] != u.alternate[1]) {
        res.witness_edge = u.edge_id;
        return res;
      }
      continue;
    }
    // one traversal per face; index t1 = the one in face 1
    int t1 = u.face[0] == 1 ? 0 : 1;
    int t0 = 1 - t1;
    if (neg) {
      // mirroring does not change a -1-signature traversal's behavior
      if (u.alternate[t0] != u.alternate[t1]) {
        res.witness_edge = u.edge_id;
        return res;
      }
      continue;
    }
    // mirroring face 1 flips this traversal's behavior
    int want = u.alternate[t0] == u.alternate[t1] ? 0 : 1;
    if (o1 == -1) {
      o1 = want;
    } else if (o1 != want) {
      res.witness_edge = u.edge_id;
      return res;
    }
  }
  res.ok = true;
  res.mirrored = {false, o1 == 1};
  return res;
}

}  // namespace cgt
