#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cgt/laws.hpp"
#include "cgt/model.hpp"

namespace cgt {

struct VortexProfile {
  int order2 = 1;
  int order3 = 2;
};

struct ScaffoldParams {
  int s = 1;
  Mode mode = Mode::cascade;
  int rung_count = -1;          // -1 selects the family default
  std::string end_shape = "auto";
  VortexProfile profile{-1, -1};  // -1 selects the mode default
};

// Resolved scaffold: group, ladder sizing and vortex profile for one search.
struct Scaffold {
  GroupSpec group;
  Mode mode = Mode::cascade;
  int s = 1;
  int rung_count = 0;
  VortexProfile profile;
  std::string end_shape;
};

// Validates the parameter arithmetic (degree/handshake feasibility) and
// resolves defaults. Throws std::invalid_argument on infeasible combinations.
Scaffold build_scaffold(const ScaffoldParams& p);
Scaffold build_scaffold(int s, int rung_count, const std::string& end_shape, Mode mode);

// One concrete graph shape: topology, base rotations, pinned currents.
// The rotation of each vertex in free_rot_vertices and the signature of each
// edge in sig_free_edges are search dimensions; everything else is fixed.
struct ShapeTopology {
  int nv = 0;
  std::vector<std::array<int, 2>> ends;     // edge -> endpoint vertices (end 0, end 1)
  std::vector<std::vector<int>> base_rot;   // vertex -> darts (2*edge + end)
  std::vector<int> stems;                   // pendant stem edge indices
  std::vector<int> pendants;                // pendant vertex indices
  std::vector<int> free_rot_vertices;       // trivalent, two cyclic orders each
  std::vector<int> sig_free_edges;          // cotree edges allowed to go -1
  std::vector<std::pair<int, int>> fixed_currents;  // (edge, element index)
  std::vector<int> zero_first_edges;        // rungs: current first component 0
  std::vector<int> nonzero_first_edges;     // rails and closures: first component != 0
  std::string label;
};

// Streams the scaffold's shape family in a fixed deterministic order.
// The visitor returns false to stop early. Returns the number visited.
long long enumerate_topologies(const Scaffold& sc,
                               const std::function<bool(const ShapeTopology&)>& visit);

// A representative skeleton as a partial current graph: rotations and
// signatures from the first topology, pinned rung currents set, every free
// slot carrying the zero element.
CurrentGraph scaffold_skeleton(const Scaffold& sc);

// Converts a topology plus concrete choices into a current graph.
// rot_bits selects rotations for free_rot_vertices (bit i swaps vertex i's
// order), sig_bits toggles sig_free_edges, values are element indices per
// edge (0 allowed only for skeletons).
CurrentGraph materialize(const Scaffold& sc, const ShapeTopology& topo,
                         uint32_t rot_bits, uint32_t sig_bits,
                         const std::vector<int>& values);

}  // namespace cgt
