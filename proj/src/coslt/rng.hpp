#pragma once

#include <cstdint>
#include <vector>

#include "coslt/types.hpp"

namespace coslt {

/// Deterministic stream generator. Streams derived from the same seed with
/// different stream ids are independent for practical purposes, so batches
/// can be evaluated in any order (or in parallel) without changing results.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform01();
  /// Standard normal via Box-Muller (second value cached).
  double gaussian();
  Cx complex_gaussian();

 private:
  std::uint64_t s_[4];
  bool have_spare_{false};
  double spare_{0.0};
};

/// Streaming mean/variance summary for complex samples; combining is
/// associative so summaries can be merged in a fixed pairwise tree.
struct MeanVar {
  long long n{0};
  Cx mean{0.0, 0.0};
  double m2{0.0};  // sum |w - mean|^2

  void add(Cx w);
  static MeanVar combine(const MeanVar& a, const MeanVar& b);
  double variance() const;
  double std_error() const;
};

/// Fixed pairwise-tree reduction of per-batch summaries.
MeanVar reduce_tree(std::vector<MeanVar> batches);

}  // namespace coslt
