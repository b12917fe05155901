#include "cgt/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "cgt/tracer.hpp"

namespace cgt {

long long expected_genus(long long n) {
  if (n < 3) throw std::invalid_argument("expected_genus: n must be >= 3");
  long long num = (n - 3) * (n - 4);
  return (num + 11) / 12;  // ceil, numerator is never negative
}

namespace {

// Every row must list every other vertex exactly once.
bool check_complete(const RotationSystem& rs, std::vector<std::string>& witnesses) {
  int n = rs.n;
  bool ok = true;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    std::vector<uint8_t> seen(n, 0);
    std::string local;
    for (int32_t j : rs.row(i)) {
      if (j == i)
        local += "vertex " + std::to_string(i) + " lists itself; ";
      else if (seen[j])
        local += "vertex " + std::to_string(i) + " lists " + std::to_string(j) + " twice; ";
      else
        seen[j] = 1;
    }
    for (int j = 0; j < n && local.size() < 200; ++j)
      if (j != i && !seen[j])
        local += "vertex " + std::to_string(i) + " misses " + std::to_string(j) + "; ";
    if (!local.empty()) {
#pragma omp critical
      {
        witnesses.push_back(local);
        ok = false;
      }
    }
  }
  std::sort(witnesses.begin(), witnesses.end());
  return ok;
}

void finish(Certificate& c) {
  c.euler_characteristic = c.vertices - c.edges + c.faces;
  if (c.euler_characteristic % 2 != 0)
    throw std::logic_error("odd Euler characteristic on a pure rotation system");
  c.genus = (2 - c.euler_characteristic) / 2;
  c.expected = expected_genus(c.n);
  c.pass = c.is_complete && c.all_triangles && c.orientable && c.genus == c.expected;
}

}  // namespace

Certificate certify(const RotationSystem& rs) {
  if (!rs.pure())
    throw std::invalid_argument("certify: rotation system carries signatures; normalize first");
  if (rs.n < 3) throw std::invalid_argument("certify: need at least 3 vertices");

  Certificate c;
  c.n = rs.n;
  c.vertices = rs.n;
  c.orientable = true;
  c.is_complete = check_complete(rs, c.witnesses);
  if (!c.is_complete) return c;

  const int n = rs.n;
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  c.edges = static_cast<long long>(n) * (n - 1) / 2;

  // arc (i -> j) sits at index i*n + j; pos[j*n + i] locates i inside row j
  std::vector<int32_t> pos(nn, -1);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    auto row = rs.row(i);
    for (int k = 0; k < n - 1; ++k) pos[static_cast<std::size_t>(i) * n + row[k]] = k;
  }

  std::vector<int32_t> next(nn, -1);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // enter j along (i -> j), leave along the successor of i in row j
      int32_t p = pos[static_cast<std::size_t>(j) * n + i];
      int32_t w = rs.row(j)[(p + 1) % (n - 1)];
      next[static_cast<std::size_t>(i) * n + j] = static_cast<int32_t>(j) * n + w;
    }
  }

  bool triangles = true;
#pragma omp parallel for schedule(static) reduction(&& : triangles)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int32_t a = static_cast<int32_t>(i) * n + j;
      if (next[next[next[a]]] != a) triangles = false;
    }
  c.all_triangles = triangles;

  // orbit count (faces); cheap serial sweep
  std::vector<uint8_t> visited(nn, 0);
  long long faces = 0;
  for (std::size_t a = 0; a < nn; ++a) {
    if (visited[a] || next[a] < 0) continue;
    ++faces;
    int32_t s = static_cast<int32_t>(a);
    do {
      visited[s] = 1;
      s = next[s];
    } while (s != static_cast<int32_t>(a));
  }
  c.faces = faces;

  finish(c);
  return c;
}

Certificate certify_reference(const RotationSystem& rs) {
  if (!rs.pure())
    throw std::invalid_argument("certify: rotation system carries signatures; normalize first");
  if (rs.n < 3) throw std::invalid_argument("certify: need at least 3 vertices");

  Certificate c;
  c.n = rs.n;
  c.vertices = rs.n;
  c.orientable = true;
  c.is_complete = check_complete(rs, c.witnesses);
  if (!c.is_complete) return c;

  const int n = rs.n;
  c.edges = static_cast<long long>(n) * (n - 1) / 2;

  // express the system as an embedded structure and run the generic tracer
  EmbeddedCore core;
  core.n_edges = static_cast<int>(c.edges);
  core.sig_neg.assign(core.n_edges, 0);
  std::vector<int32_t> pair_edge(static_cast<std::size_t>(n) * n, -1);
  int32_t eidx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pair_edge[static_cast<std::size_t>(i) * n + j] = eidx;
      pair_edge[static_cast<std::size_t>(j) * n + i] = eidx;
      ++eidx;
    }
  core.dart_vertex.assign(2 * static_cast<std::size_t>(core.n_edges), -1);
  core.dart_pos.assign(2 * static_cast<std::size_t>(core.n_edges), -1);
  core.rot_flat.reserve(2 * static_cast<std::size_t>(core.n_edges));
  core.vtx_off.push_back(0);
  for (int i = 0; i < n; ++i) {
    for (int32_t j : rs.row(i)) {
      int32_t e = pair_edge[static_cast<std::size_t>(i) * n + j];
      int32_t dart = 2 * e + (i < j ? 0 : 1);
      core.dart_vertex[dart] = i;
      core.dart_pos[dart] = static_cast<int32_t>(core.rot_flat.size()) - core.vtx_off.back();
      core.rot_flat.push_back(dart);
    }
    core.vtx_off.push_back(static_cast<int32_t>(core.rot_flat.size()));
  }

  auto walks = trace_core(core);
  c.faces = static_cast<long long>(walks.size());
  c.all_triangles = std::all_of(walks.begin(), walks.end(),
                                [](const auto& w) { return w.size() == 3; });

  finish(c);
  return c;
}

std::string format_certificate(const Certificate& c) {
  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  std::string out;
  auto line = [&out](const std::string& key, const std::string& val) {
    out += key;
    out.append(key.size() < 22 ? 22 - key.size() : 1, ' ');
    out += val;
    out += '\n';
  };
  line("n", std::to_string(c.n));
  line("vertices", std::to_string(c.vertices));
  line("edges", std::to_string(c.edges));
  line("faces", std::to_string(c.faces));
  line("euler_characteristic", std::to_string(c.euler_characteristic));
  line("orientable", yesno(c.orientable));
  line("all_triangles", yesno(c.all_triangles));
  line("complete", yesno(c.is_complete));
  line("genus", std::to_string(c.genus));
  line("expected_genus", std::to_string(c.expected));
  line("result", c.pass ? "PASS" : "FAIL");
  for (const auto& w : c.witnesses) line("witness", w);
  return out;
}

}  // namespace cgt
