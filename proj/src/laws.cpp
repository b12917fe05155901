#include "cgt/laws.hpp"

#include <algorithm>
#include <map>

namespace cgt {

Mode mode_from_index(int declared_index) {
  return declared_index == 2 ? Mode::index2 : Mode::cascade;
}

std::string mode_name(Mode m) { return m == Mode::cascade ? "cascade" : "index2"; }

bool LawReport::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const LawVerdict& v) { return v.pass; });
}

const LawVerdict* LawReport::find(const std::string& law) const {
  for (const auto& v : verdicts)
    if (v.law == law) return &v;
  return nullptr;
}

std::string LawReport::to_text() const {
  std::string out;
  for (const auto& v : verdicts) {
    out += v.law;
    out += v.pass ? " PASS" : " FAIL";
    if (!v.witness.empty()) out += ' ' + v.witness;
    out += '\n';
  }
  return out;
}

LawVerdict check_degrees(const CurrentGraph& g) {
  for (const auto& v : g.vertices) {
    std::size_t d = v.rot.size();
    if (d != 1 && d != 3)
      return {"C1", false,
              "vertex " + std::to_string(v.id) + " has degree " + std::to_string(d)};
  }
  return {"C1", true, ""};
}

LawVerdict check_kcl(const CurrentGraph& g) {
  for (const auto& v : g.vertices) {
    if (v.rot.size() != 3) continue;
    GroupElement ex = g.excess(v.id);
    if (!is_zero(ex))
      return {"C2", false, "vertex " + std::to_string(v.id) + " excess " + to_string(ex)};
  }
  return {"C2", true, ""};
}

LawVerdict check_vortices(const CurrentGraph& g) {
  for (const auto& v : g.vertices) {
    if (v.rot.size() != 1) continue;
    GroupElement ex = g.excess(v.id);
    int ord = is_zero(ex) ? 1 : element_order(g.group, ex);
    if (ord != 2 && ord != 3)
      return {"C3", false, "vertex " + std::to_string(v.id) + " excess " + to_string(ex) +
                               " has order " + std::to_string(ord)};
  }
  return {"C3", true, ""};
}

LawVerdict check_logs(const CurrentGraph& g, const std::vector<FaceWalk>& faces) {
  int order = g.group.order();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    Log log = face_log(g, faces[f]);
    std::vector<int> count(order, 0);
    for (const auto& v : log.entries) {
      if (is_zero(v))
        return {"C4", false, "face " + std::to_string(f) + " logs the zero element"};
      if (++count[element_index(g.group, v)] > 1)
        return {"C4", false, "face " + std::to_string(f) + " logs " + to_string(v) + " twice"};
    }
    for (int i = 1; i < order; ++i)
      if (count[i] == 0)
        return {"C4", false, "face " + std::to_string(f) + " misses " +
                                 to_string(element_from_index(g.group, i))};
  }
  return {"C4", true, ""};
}

LawVerdict check_index(const CurrentGraph& g, const std::vector<FaceWalk>& faces, Mode mode) {
  (void)g;
  std::size_t want = mode == Mode::cascade ? 1 : 2;
  if (faces.size() != want)
    return {"INDEX", false, "expected " + std::to_string(want) + " face(s), traced " +
                                std::to_string(faces.size())};
  return {"INDEX", true, ""};
}

LawVerdict check_parity(const CurrentGraph& g, const std::vector<FaceWalk>& faces, Mode mode) {
  const char* law = mode == Mode::cascade ? "C5" : "C5'";
  if (!g.group.parity_defined())
    return {law, false, "group " + g.group.name() + " has no even/odd split (odd last modulus)"};
  if (mode == Mode::cascade) {
    if (faces.size() != 1)
      return {"C5", false, "needs exactly one face to classify edges"};
    auto uses = classify_edges(g, faces);
    for (const auto& u : uses) {
      bool odd = !is_even(g.group, g.edge(u.edge_id).cur);
      bool uni = u.cls == EdgeClass::unidirectional;
      if (odd != uni)
        return {"C5", false, "edge " + std::to_string(u.edge_id) + " is " +
                                 (odd ? "odd" : "even") + " but " +
                                 (uni ? "unidirectional" : "bidirectional")};
    }
    return {"C5", true, ""};
  }

  // index-2: the two walks must admit a consistent orientation with every
  // edge bidirectional, and odd currents sit exactly on edges both walks use
  if (faces.size() != 2)
    return {"C5'", false, "needs exactly two faces to classify edges"};
  if (!surface_orientable(g))
    return {"C5'", false, "current graph surface is nonorientable"};
  Orientation2 orient = orient_two_faces(g, faces);
  if (!orient.ok)
    return {"C5'", false, "no consistent orientation: edge " +
                              std::to_string(orient.witness_edge) + " stays unidirectional"};
  auto uses = classify_edges(g, faces);
  for (const auto& u : uses) {
    bool odd = !is_even(g.group, g.edge(u.edge_id).cur);
    bool both = u.face[0] != u.face[1];
    if (odd != both)
      return {"C5'", false, "edge " + std::to_string(u.edge_id) + " is " +
                                (odd ? "odd" : "even") + " but traversed by " +
                                (both ? "both walks" : "one walk")};
  }
  return {"C5'", true, ""};
}

LawReport check_laws(const CurrentGraph& g, Mode mode) {
  LawReport rep;
  rep.mode = mode;
  auto faces = trace_faces(g);
  rep.verdicts.push_back(check_index(g, faces, mode));
  rep.verdicts.push_back(check_degrees(g));
  rep.verdicts.push_back(check_kcl(g));
  rep.verdicts.push_back(check_vortices(g));
  rep.verdicts.push_back(check_logs(g, faces));
  rep.verdicts.push_back(check_parity(g, faces, mode));
  return rep;
}

}  // namespace cgt
