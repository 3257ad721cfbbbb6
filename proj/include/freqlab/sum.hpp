#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace freqlab {

/// Deterministic pairwise summation. Values are combined along a fixed binary
/// tree determined only by the order and number of add() calls (a binary
/// counter of partial sums), so the result is bit-reproducible for a given
/// input sequence regardless of how callers schedule surrounding work.
class PairwiseAccumulator {
 public:
  void add(double x) {
    std::uint64_t c = count_++;
    int level = 0;
    while (c & 1u) {
      x += slots_[level];
      ++level;
      c >>= 1;
    }
    slots_[level] = x;
  }

  double total() const {
    double acc = 0.0;
    std::uint64_t c = count_;
    for (int level = 0; c != 0; ++level, c >>= 1)
      if (c & 1u) acc += slots_[level];
    return acc;
  }

 private:
  std::array<double, 64> slots_{};
  std::uint64_t count_ = 0;
};

}  // namespace freqlab
