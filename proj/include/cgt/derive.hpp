#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cgt/laws.hpp"
#include "cgt/model.hpp"

namespace cgt {

// A rotation system on vertices 0..n-1: one cyclic neighbor sequence per
// vertex, plus an optional signature on vertex pairs (absent means pure).
// Derived systems name vertex a + m0*b + ... after the group element.
struct RotationSystem {
  int n = 0;
  std::vector<int32_t> rot;  // n rows of n-1 neighbors, row-major

  bool has_signatures = false;
  std::vector<uint8_t> sig_neg;    // n*n matrix, 1 where the pair signature is -1
  std::vector<uint8_t> odd_class;  // per vertex, 1 = odd; set when parity is known

  std::span<const int32_t> row(int i) const {
    return {rot.data() + static_cast<std::size_t>(i) * (n - 1),
            static_cast<std::size_t>(n - 1)};
  }
  std::span<int32_t> row(int i) {
    return {rot.data() + static_cast<std::size_t>(i) * (n - 1),
            static_cast<std::size_t>(n - 1)};
  }
  bool pure() const { return !has_signatures; }
  bool sig_negative(int i, int j) const {
    return has_signatures && sig_neg[static_cast<std::size_t>(i) * n + j];
  }
};

struct LawViolation : std::runtime_error {
  LawReport report;
  explicit LawViolation(LawReport r)
      : std::runtime_error("current graph fails " + mode_name(r.mode) + " laws"),
        report(std::move(r)) {}
};

// Index-1 rule: rotation at vertex i is the face log translated by i; the
// derived pair {i, i+l} gets signature -1 exactly when the log entry's edge
// is unidirectional. Requires the cascade laws; throws LawViolation.
RotationSystem derive_index1(const CurrentGraph& g);

// Flips every odd-class vertex of a signed system whose -1 pairs connect
// exactly one even and one odd endpoint; the result is pure. Throws
// std::invalid_argument when the signature pattern does not match.
RotationSystem normalize_to_pure(const RotationSystem& rs);

// Index-2 rule: rotation at even i from log[0] + i, at odd i from log[1] + i,
// with the two walks consistently oriented. Requires the index-2 laws.
// swap_labels exchanges the two face labels (they are arbitrary).
RotationSystem derive_index2(const CurrentGraph& g, bool swap_labels = false);

// One line per vertex: "i : j1 j2 ...", preceded by "n <count>".
std::string serialize_rotation_system(const RotationSystem& rs);
RotationSystem parse_rotation_system(std::string_view text);

}  // namespace cgt
