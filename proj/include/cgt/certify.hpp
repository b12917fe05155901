#pragma once

#include <string>
#include <vector>

#include "cgt/derive.hpp"

namespace cgt {

struct Certificate {
  int n = 0;
  long long vertices = 0;
  long long edges = 0;
  long long faces = 0;
  bool is_complete = false;
  bool all_triangles = false;
  bool orientable = false;
  long long euler_characteristic = 0;
  long long genus = -1;
  long long expected = -1;
  bool pass = false;
  std::vector<std::string> witnesses;  // completeness defects
};

// ceil((n-3)(n-4)/12); n >= 3.
long long expected_genus(long long n);

// Faces of a pure rotation system by orbit tracing, then Euler's formula.
// Malformed rows (missing or duplicate neighbors) come back as
// is_complete = false with witnesses instead of an exception.
// The hot loops run under OpenMP when available.
Certificate certify(const RotationSystem& rs);

// Same verdict computed through the generic signed-walk tracer; serial.
// Kept as the cross-check implementation for tests and benchmarks.
Certificate certify_reference(const RotationSystem& rs);

std::string format_certificate(const Certificate& c);

}  // namespace cgt
