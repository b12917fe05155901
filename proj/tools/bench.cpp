// Timing comparison between the parallel certify kernel and the serial
// reference tracer on synthetic rotation systems of growing size.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cgt/certify.hpp"
#include "cgt/derive.hpp"

namespace {

using cgt::RotationSystem;

// Cyclic-difference rotation rows: vertex i lists i+1, i+2, ..., i+n-1.
// Complete and pure, but generally far from triangular; plenty of long
// orbits for the tracer to chew on.
RotationSystem lexicographic_system(int n) {
  RotationSystem rs;
  rs.n = n;
  rs.rot.resize(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 0; i < n; ++i) {
    auto row = rs.row(i);
    for (int k = 1; k < n; ++k) row[k - 1] = (i + k) % n;
  }
  return rs;
}

// Alternating variant: odd vertices list neighbors in reverse. Different
// face structure, same size.
RotationSystem alternating_system(int n) {
  RotationSystem rs = lexicographic_system(n);
  for (int i = 1; i < n; i += 2) {
    auto row = rs.row(i);
    for (int a = 0, b = n - 2; a < b; ++a, --b) std::swap(row[a], row[b]);
  }
  return rs;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> sizes = {144, 360, 720, 1440};
  int reps = 3;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--reps" && i + 1 < argc) reps = std::atoi(argv[++i]);
    if (a == "--sizes" && i + 1 < argc) {
      sizes.clear();
      for (char* tok = std::strtok(argv[++i], ","); tok; tok = std::strtok(nullptr, ","))
        sizes.push_back(std::atoi(tok));
    }
  }

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled (serial build)\n");
#endif
  std::printf("%8s %12s %14s %14s %9s\n", "n", "variant", "kernel[s]", "reference[s]", "speedup");

  for (int n : sizes) {
    for (int variant = 0; variant < 2; ++variant) {
      RotationSystem rs = variant == 0 ? lexicographic_system(n) : alternating_system(n);
      double best_kernel = 1e99, best_ref = 1e99;
      cgt::Certificate a{}, b{};
      for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        a = cgt::certify(rs);
        best_kernel = std::min(best_kernel, seconds_since(t0));
        t0 = std::chrono::steady_clock::now();
        b = cgt::certify_reference(rs);
        best_ref = std::min(best_ref, seconds_since(t0));
      }
      if (a.faces != b.faces || a.genus != b.genus || a.all_triangles != b.all_triangles) {
        std::fprintf(stderr, "MISMATCH between kernel and reference at n=%d\n", n);
        return 1;
      }
      std::printf("%8d %12s %14.4f %14.4f %8.2fx\n", n,
                  variant == 0 ? "lexicographic" : "alternating", best_kernel, best_ref,
                  best_ref / best_kernel);
    }
  }
  return 0;
}
