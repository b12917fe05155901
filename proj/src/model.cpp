#include "cgt/model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cgt {

int CurrentGraph::vertex_pos(int id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id,
                             [](const Vertex& v, int key) { return v.id < key; });
  if (it == vertices.end() || it->id != id) return -1;
  return static_cast<int>(it - vertices.begin());
}

int CurrentGraph::edge_pos(int id) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), id,
                             [](const Edge& e, int key) { return e.id < key; });
  if (it == edges.end() || it->id != id) return -1;
  return static_cast<int>(it - edges.begin());
}

const CurrentGraph::Vertex& CurrentGraph::vertex(int id) const {
  int p = vertex_pos(id);
  if (p < 0) throw std::invalid_argument("unknown vertex " + std::to_string(id));
  return vertices[p];
}

const CurrentGraph::Edge& CurrentGraph::edge(int id) const {
  int p = edge_pos(id);
  if (p < 0) throw std::invalid_argument("unknown edge " + std::to_string(id));
  return edges[p];
}

int CurrentGraph::degree(int vertex_id) const {
  return static_cast<int>(vertex(vertex_id).rot.size());
}

GroupElement CurrentGraph::current_on(Dart d) const {
  const Edge& e = edge(d.edge);
  if (d.end == 0) return e.cur;
  return e.sig > 0 ? negate(group, e.cur) : e.cur;
}

GroupElement CurrentGraph::current_into(Dart d) const {
  return current_on(reverse(d));
}

GroupElement CurrentGraph::excess(int vertex_id) const {
  GroupElement sum = zero(group);
  for (Dart d : vertex(vertex_id).rot) sum = add(group, sum, current_into(d));
  return sum;
}

void CurrentGraph::validate() const {
  std::map<std::pair<int, int>, int> seen;  // dart -> occurrence count
  for (const Vertex& v : vertices) {
    if (v.rot.empty())
      throw std::invalid_argument("vertex " + std::to_string(v.id) + " has degree 0");
    for (Dart d : v.rot) {
      if (d.end != 0 && d.end != 1)
        throw std::invalid_argument("bad dart end on edge " + std::to_string(d.edge));
      if (edge_pos(d.edge) < 0)
        throw std::invalid_argument("rotation references undeclared edge " + std::to_string(d.edge));
      if (++seen[{d.edge, d.end}] > 1)
        throw std::invalid_argument("duplicate dart e" + std::to_string(d.edge) + "." + std::to_string(d.end));
    }
  }
  for (const Edge& e : edges) {
    if (e.sig != 1 && e.sig != -1)
      throw std::invalid_argument("edge " + std::to_string(e.id) + " has bad signature");
    if (e.cur.r.size() != group.rank())
      throw std::invalid_argument("edge " + std::to_string(e.id) + " current does not match group");
    for (int end = 0; end < 2; ++end)
      if (!seen.count({e.id, end}))
        throw std::invalid_argument("dangling dart e" + std::to_string(e.id) + "." + std::to_string(end));
  }
  if (seen.size() != 2 * edges.size())
    throw std::invalid_argument("rotations and edge list disagree");
}

namespace {

struct Tok {
  std::string text;
  int col;
};

std::vector<Tok> tokenize(const std::string& line) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
    if (line[i] == '#') break;
    std::size_t j = i;
    // parenthesized element tokens may contain spaces after commas
    if (line[i] == '(') {
      while (j < line.size() && line[j] != ')') ++j;
      if (j < line.size()) ++j;
    } else {
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    }
    out.push_back({line.substr(i, j - i), static_cast<int>(i + 1)});
    i = j;
  }
  return out;
}

Dart parse_dart(const Tok& t, int lineno) {
  const std::string& s = t.text;
  if (s.size() < 4 || s[0] != 'e')
    throw ParseError(lineno, t.col, "expected dart like e3.0, got '" + s + "'");
  auto dot = s.find('.');
  if (dot == std::string::npos || dot == 1)
    throw ParseError(lineno, t.col, "expected dart like e3.0, got '" + s + "'");
  int edge = 0, end = 0;
  try {
    std::size_t used = 0;
    edge = std::stoi(s.substr(1, dot - 1), &used);
    if (used != dot - 1) throw std::invalid_argument("");
    std::string endpart = s.substr(dot + 1);
    end = std::stoi(endpart, &used);
    if (used != endpart.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError(lineno, t.col, "expected dart like e3.0, got '" + s + "'");
  }
  if (end != 0 && end != 1)
    throw ParseError(lineno, t.col, "dart end must be 0 or 1 in '" + s + "'");
  return Dart{edge, end};
}

}  // namespace

CurrentGraph parse_current_graph(std::string_view text) {
  CurrentGraph g;
  bool have_group = false;
  std::map<int, CurrentGraph::Vertex> verts;
  std::map<int, CurrentGraph::Edge> edges;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;

    if (kw == "group") {
      if (have_group) throw ParseError(lineno, toks[0].col, "duplicate group line");
      if (toks.size() < 2) throw ParseError(lineno, toks[0].col, "group line needs moduli");
      std::string rest;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (i > 1) rest += ' ';
        rest += toks[i].text;
      }
      try {
        g.group = GroupSpec::parse(rest);
      } catch (const std::exception& e) {
        throw ParseError(lineno, toks[1].col, e.what());
      }
      have_group = true;
    } else if (kw == "index") {
      if (toks.size() != 2 || (toks[1].text != "1" && toks[1].text != "2"))
        throw ParseError(lineno, toks[0].col, "index must be 1 or 2");
      g.declared_index = toks[1].text == "2" ? 2 : 1;
    } else if (kw == "v") {
      if (toks.size() < 3)
        throw ParseError(lineno, toks[0].col, "vertex line needs an id, a mode and darts");
      int id;
      try {
        id = std::stoi(toks[1].text);
      } catch (const std::exception&) {
        throw ParseError(lineno, toks[1].col, "bad vertex id '" + toks[1].text + "'");
      }
      if (verts.count(id))
        throw ParseError(lineno, toks[1].col, "duplicate vertex " + std::to_string(id));
      const std::string& mode = toks[2].text;
      if (mode != "cw" && mode != "ccw" && mode != ":")
        throw ParseError(lineno, toks[2].col, "expected 'cw', 'ccw' or ':' after vertex id");
      if (toks.size() == 3)
        throw ParseError(lineno, toks[2].col, "vertex " + std::to_string(id) + " has no darts");
      CurrentGraph::Vertex v;
      v.id = id;
      for (std::size_t i = 3; i < toks.size(); ++i) v.rot.push_back(parse_dart(toks[i], lineno));
      if (mode == "ccw") std::reverse(v.rot.begin(), v.rot.end());
      verts[id] = std::move(v);
    } else if (kw == "e") {
      if (!have_group)
        throw ParseError(lineno, toks[0].col, "edge line before group line");
      if (toks.size() != 6 || toks[2].text != "sig" || toks[4].text != "cur")
        throw ParseError(lineno, toks[0].col, "expected: e <id> sig <+1|-1> cur (a,b)");
      int id;
      try {
        id = std::stoi(toks[1].text);
      } catch (const std::exception&) {
        throw ParseError(lineno, toks[1].col, "bad edge id '" + toks[1].text + "'");
      }
      if (edges.count(id))
        throw ParseError(lineno, toks[1].col, "duplicate edge " + std::to_string(id));
      int sig;
      if (toks[3].text == "+1" || toks[3].text == "1") sig = 1;
      else if (toks[3].text == "-1") sig = -1;
      else throw ParseError(lineno, toks[3].col, "signature must be +1 or -1");
      CurrentGraph::Edge e;
      e.id = id;
      e.sig = sig;
      try {
        e.cur = parse_element(g.group, toks[5].text);
      } catch (const std::exception& ex) {
        throw ParseError(lineno, toks[5].col, ex.what());
      }
      edges[id] = std::move(e);
    } else {
      throw ParseError(lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  }
  if (!have_group) throw ParseError(lineno, 1, "missing group line");

  for (auto& [id, v] : verts) g.vertices.push_back(std::move(v));
  for (auto& [id, e] : edges) g.edges.push_back(std::move(e));
  try {
    g.validate();
  } catch (const std::exception& e) {
    throw ParseError(lineno, 1, e.what());
  }
  return g;
}

std::string serialize(const CurrentGraph& g) {
  std::string out = "group";
  for (int m : g.group.moduli) out += ' ' + std::to_string(m);
  out += "\nindex " + std::to_string(g.declared_index) + "\n";
  for (const auto& v : g.vertices) {
    // canonical form: rotation starts at its smallest dart
    auto rot = v.rot;
    auto smallest = std::min_element(rot.begin(), rot.end());
    std::rotate(rot.begin(), smallest, rot.end());
    out += "v " + std::to_string(v.id) + " :";
    for (Dart d : rot)
      out += " e" + std::to_string(d.edge) + "." + std::to_string(d.end);
    out += '\n';
  }
  for (const auto& e : g.edges) {
    out += "e " + std::to_string(e.id) + " sig " + (e.sig > 0 ? "+1" : "-1") +
           " cur " + to_string(e.cur) + '\n';
  }
  return out;
}

CurrentGraph apply_flip(const CurrentGraph& g, int vertex_id) {
  int p = g.vertex_pos(vertex_id);
  if (p < 0) throw std::invalid_argument("unknown vertex " + std::to_string(vertex_id));
  CurrentGraph out = g;
  auto& rot = out.vertices[p].rot;
  std::reverse(rot.begin(), rot.end());
  // toggle incident signatures; loops toggle twice and stay put
  std::map<int, int> times;
  for (Dart d : rot) ++times[d.edge];
  for (auto [eid, k] : times)
    if (k % 2 == 1) out.edges[out.edge_pos(eid)].sig *= -1;
  return out;
}

CurrentGraph negate_all_currents(const CurrentGraph& g) {
  CurrentGraph out = g;
  for (auto& e : out.edges) e.cur = negate(g.group, e.cur);
  return out;
}

CurrentGraph relabel(const CurrentGraph& g,
                     const std::vector<std::pair<int, int>>& vertex_map,
                     const std::vector<std::pair<int, int>>& edge_map) {
  auto lookup = [](const std::vector<std::pair<int, int>>& m, int id) {
    for (auto [from, to] : m)
      if (from == id) return to;
    return id;
  };
  CurrentGraph out = g;
  for (auto& v : out.vertices) {
    v.id = lookup(vertex_map, v.id);
    for (auto& d : v.rot) d.edge = lookup(edge_map, d.edge);
  }
  for (auto& e : out.edges) e.id = lookup(edge_map, e.id);
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(out.edges.begin(), out.edges.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  out.validate();
  return out;
}

}  // namespace cgt
