#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

// One end of an edge. Each edge has exactly two darts, end 0 and end 1.
struct Dart {
  int edge = -1;  // edge id as written in the file
  int end = 0;    // 0 or 1

  auto operator<=>(const Dart&) const = default;
};

inline Dart reverse(Dart d) { return Dart{d.edge, 1 - d.end}; }

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

// Embedded arc-labeled graph: rotations of darts per vertex, an edge
// signature, and a group current stored on each edge's end-0 dart.
// The end-1 value is derived from the signature, so the arc relation
// alpha(e+) = -lambda(e) * alpha(e-) holds by construction.
//
// Immutable in practice: edits go through free functions returning copies.
struct CurrentGraph {
  struct Vertex {
    int id = 0;
    std::vector<Dart> rot;  // cyclic order of incident darts
  };
  struct Edge {
    int id = 0;
    int sig = 1;       // +1 or -1
    GroupElement cur;  // current on dart (id, 0)
  };

  GroupSpec group;
  int declared_index = 1;  // 1 or 2, from the file header
  std::vector<Vertex> vertices;  // sorted by id
  std::vector<Edge> edges;       // sorted by id

  int vertex_pos(int id) const;        // index into vertices, -1 if absent
  int edge_pos(int id) const;          // index into edges, -1 if absent
  const Vertex& vertex(int id) const;
  const Edge& edge(int id) const;
  int degree(int vertex_id) const;

  // Current on the arc leaving through dart d.
  GroupElement current_on(Dart d) const;
  // Current carried into the vertex holding dart d (the reverse arc's value).
  GroupElement current_into(Dart d) const;
  // Sum of currents entering the vertex.
  GroupElement excess(int vertex_id) const;

  // Structural checks: every dart of every edge appears exactly once across
  // the rotations, no unknown edges, positive degrees. Throws on violation.
  void validate() const;
};

CurrentGraph parse_current_graph(std::string_view text);
std::string serialize(const CurrentGraph& g);

// Reverses the rotation of the vertex and toggles the signature of its
// non-loop incident edges. Stored currents are untouched; derived end-1
// values follow the new signatures.
CurrentGraph apply_flip(const CurrentGraph& g, int vertex_id);

CurrentGraph negate_all_currents(const CurrentGraph& g);

// Renames vertices/edges via (old id -> new id) maps; rotation order kept.
CurrentGraph relabel(const CurrentGraph& g,
                     const std::vector<std::pair<int, int>>& vertex_map,
                     const std::vector<std::pair<int, int>>& edge_map);

}  // namespace cgt
