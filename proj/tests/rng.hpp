#pragma once

#include <cstdint>

// Deterministic generator for test inputs; fixed seeds keep runs identical.
struct TestRng {
  uint64_t state;
  explicit TestRng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};
