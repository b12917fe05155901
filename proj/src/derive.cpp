#include "cgt/derive.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cgt {

namespace {

// Log of the canonical walk with each entry's source edge classification,
// oriented per `mirrored` (a mirrored walk reads the same values backwards).
struct OrientedLog {
  std::vector<int> values;      // element indices
  std::vector<uint8_t> unidir;  // per entry: source edge unidirectional?
};

OrientedLog oriented_log(const CurrentGraph& g, const FaceWalk& walk,
                         const std::vector<EdgeUse>& uses, bool mirrored) {
  OrientedLog out;
  auto detailed = face_log_detailed(g, walk);
  if (mirrored) std::reverse(detailed.begin(), detailed.end());
  for (const auto& entry : detailed) {
    out.values.push_back(element_index(g.group, entry.value));
    bool uni = false;
    for (const auto& u : uses)
      if (u.edge_id == entry.edge_id) uni = u.cls == EdgeClass::unidirectional;
    out.unidir.push_back(uni);
  }
  return out;
}

}  // namespace

RotationSystem derive_index1(const CurrentGraph& g) {
  LawReport rep = check_laws(g, Mode::cascade);
  if (!rep.pass()) throw LawViolation(std::move(rep));

  auto faces = trace_faces(g);
  auto uses = classify_edges(g, faces);
  OrientedLog log = oriented_log(g, faces[0], uses, false);

  const GroupSpec& gr = g.group;
  int n = gr.order();
  RotationSystem rs;
  rs.n = n;
  rs.rot.assign(static_cast<std::size_t>(n) * (n - 1), 0);
  rs.has_signatures = true;
  rs.sig_neg.assign(static_cast<std::size_t>(n) * n, 0);
  rs.odd_class.resize(n);
  for (int i = 0; i < n; ++i)
    rs.odd_class[i] = !is_even(gr, element_from_index(gr, i));

  // addition table once; rows are then independent
  std::vector<int32_t> add_tab(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    GroupElement ea = element_from_index(gr, a);
    for (int b = 0; b < n; ++b)
      add_tab[static_cast<std::size_t>(a) * n + b] =
          element_index(gr, add(gr, ea, element_from_index(gr, b)));
  }

  int m = static_cast<int>(log.values.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    auto row = rs.row(i);
    for (int k = 0; k < m; ++k) {
      int j = add_tab[static_cast<std::size_t>(i) * n + log.values[k]];
      row[k] = j;
      if (log.unidir[k]) rs.sig_neg[static_cast<std::size_t>(i) * n + j] = 1;
    }
  }
  return rs;
}

RotationSystem normalize_to_pure(const RotationSystem& rs) {
  if (rs.pure()) return rs;
  if (rs.odd_class.empty())
    throw std::invalid_argument("normalize_to_pure: vertex parity classes unknown");
  int n = rs.n;
  for (int i = 0; i < n; ++i) {
    for (int32_t j : rs.row(i)) {
      bool neg = rs.sig_negative(i, j);
      bool split = rs.odd_class[i] != rs.odd_class[j];
      if (neg != split)
        throw std::invalid_argument(
            "normalize_to_pure: signature pattern is not the even/odd split at pair {" +
            std::to_string(i) + "," + std::to_string(j) + "}");
    }
  }
  RotationSystem out;
  out.n = n;
  out.rot = rs.rot;
  out.odd_class = rs.odd_class;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i)
    if (rs.odd_class[i]) {
      auto row = out.row(i);
      std::reverse(row.begin(), row.end());
    }
  return out;
}

RotationSystem derive_index2(const CurrentGraph& g, bool swap_labels) {
  LawReport rep = check_laws(g, Mode::index2);
  if (!rep.pass()) throw LawViolation(std::move(rep));

  auto faces = trace_faces(g);
  auto uses = classify_edges(g, faces);
  Orientation2 orient = orient_two_faces(g, faces);
  // laws passed, so a consistent orientation exists
  OrientedLog logs[2] = {oriented_log(g, faces[0], uses, orient.mirrored[0]),
                         oriented_log(g, faces[1], uses, orient.mirrored[1])};
  if (swap_labels) std::swap(logs[0], logs[1]);

  const GroupSpec& gr = g.group;
  int n = gr.order();
  RotationSystem rs;
  rs.n = n;
  rs.rot.assign(static_cast<std::size_t>(n) * (n - 1), 0);
  rs.odd_class.resize(n);
  for (int i = 0; i < n; ++i)
    rs.odd_class[i] = !is_even(gr, element_from_index(gr, i));

  std::vector<int32_t> add_tab(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    GroupElement ea = element_from_index(gr, a);
    for (int b = 0; b < n; ++b)
      add_tab[static_cast<std::size_t>(a) * n + b] =
          element_index(gr, add(gr, ea, element_from_index(gr, b)));
  }

#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const OrientedLog& src = logs[rs.odd_class[i] ? 1 : 0];
    auto row = rs.row(i);
    for (std::size_t k = 0; k < src.values.size(); ++k)
      row[k] = add_tab[static_cast<std::size_t>(i) * n + src.values[k]];
  }
  return rs;
}

std::string serialize_rotation_system(const RotationSystem& rs) {
  std::string out = "n " + std::to_string(rs.n) + "\n";
  for (int i = 0; i < rs.n; ++i) {
    out += std::to_string(i) + " :";
    for (int32_t j : rs.row(i)) out += ' ' + std::to_string(j);
    out += '\n';
  }
  return out;
}

RotationSystem parse_rotation_system(std::string_view text) {
  RotationSystem rs;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::vector<std::vector<int32_t>> rows;
  int n = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> n) || n < 1) throw ParseError(lineno, 1, "bad vertex count");
      rows.assign(n, {});
      continue;
    }
    if (n < 0) throw ParseError(lineno, 1, "missing 'n <count>' header");
    int i;
    try {
      i = std::stoi(first);
    } catch (const std::exception&) {
      throw ParseError(lineno, 1, "bad vertex id '" + first + "'");
    }
    if (i < 0 || i >= n) throw ParseError(lineno, 1, "vertex id out of range");
    std::string colon;
    if (!(ls >> colon) || colon != ":") throw ParseError(lineno, 1, "expected ':'");
    if (!rows[i].empty()) throw ParseError(lineno, 1, "duplicate row for vertex " + first);
    int32_t j;
    while (ls >> j) {
      if (j < 0 || j >= n) throw ParseError(lineno, 1, "neighbor out of range");
      rows[i].push_back(j);
    }
    if (!ls.eof()) throw ParseError(lineno, 1, "bad neighbor token");
    if (rows[i].empty()) throw ParseError(lineno, 1, "empty rotation row");
  }
  if (n < 0) throw ParseError(lineno, 1, "missing 'n <count>' header");
  for (int i = 0; i < n; ++i) {
    if (rows[i].size() != static_cast<std::size_t>(n - 1))
      throw ParseError(lineno, 1, "vertex " + std::to_string(i) + " has " +
                                      std::to_string(rows[i].size()) + " neighbors, expected " +
                                      std::to_string(n - 1));
  }
  rs.n = n;
  rs.rot.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (auto& r : rows) rs.rot.insert(rs.rot.end(), r.begin(), r.end());
  return rs;
}

}  // namespace cgt
