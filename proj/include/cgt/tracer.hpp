#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cgt/model.hpp"

namespace cgt {

// One step of a face-boundary walk: the arc traversed (named by its tail
// dart) and whether the walk was in alternate behavior while on it.
struct FaceStep {
  Dart tail;
  bool alternate = false;

  auto operator<=>(const FaceStep&) const = default;
};

struct FaceWalk {
  std::vector<FaceStep> steps;  // cyclic; stored from the canonical start
};

struct Log {
  std::vector<GroupElement> entries;  // cyclic
};

struct LogEntry {
  GroupElement value;
  int edge_id;
};

enum class EdgeClass { bidirectional, unidirectional };

// Both traversals of one edge across the face set.
struct EdgeUse {
  int edge_id = -1;
  EdgeClass cls = EdgeClass::bidirectional;
  int face[2] = {-1, -1};
  int step[2] = {-1, -1};
  bool alternate[2] = {false, false};
};

// Traces all face-boundary walks. Walks start in normal behavior at the
// smallest untraced arc; each edge is traversed exactly twice across the
// result. Output order: by smallest contained arc.
std::vector<FaceWalk> trace_faces(const CurrentGraph& g);

// Per edge (in g.edges order): its two traversals and the classification.
// An edge is bidirectional iff both traversals have equal behavior.
std::vector<EdgeUse> classify_edges(const CurrentGraph& g, const std::vector<FaceWalk>& faces);

// The walk's current sequence, signed by behavior, with consecutive equal
// order-2 entries merged into one (cyclically).
Log face_log(const CurrentGraph& g, const FaceWalk& walk);
std::vector<LogEntry> face_log_detailed(const CurrentGraph& g, const FaceWalk& walk);

// True iff some sequence of vertex flips clears every -1 signature
// (equivalently, every cycle has positive signature product).
bool surface_orientable(const CurrentGraph& g);

// Relative orientation of a 2-face trace making every edge bidirectional.
// mirrored[f] says face f must be read reversed. Fails (ok = false, with a
// witness edge) when no choice works.
struct Orientation2 {
  bool ok = false;
  std::array<bool, 2> mirrored = {false, false};
  int witness_edge = -1;
};
Orientation2 orient_two_faces(const CurrentGraph& g, const std::vector<FaceWalk>& faces);

// ---- low-level engine, shared with the rotation-system tracer ----

// Compact rotation-plus-signature structure: darts are 2*edge_index + end,
// states are 2*arc + behavior where an arc is named by its tail dart.
struct EmbeddedCore {
  int n_edges = 0;
  std::vector<int8_t> sig_neg;       // per edge index
  std::vector<int32_t> rot_flat;     // darts grouped by vertex
  std::vector<int32_t> vtx_off;      // size n_vertices + 1
  std::vector<int32_t> dart_vertex;  // per dart
  std::vector<int32_t> dart_pos;     // per dart

  int32_t next_state(int32_t s) const;
  int32_t mirror_state(int32_t s) const;
};

EmbeddedCore build_core(const CurrentGraph& g);
std::vector<std::vector<int32_t>> trace_core(const EmbeddedCore& core);

}  // namespace cgt
