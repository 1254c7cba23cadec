#pragma once

#include <cstdint>
#include <vector>

#include "dyseg/types.hpp"

namespace dyseg {

/// Piecewise-stationary stream generator (desk-scale dataset stand-in).
struct SyntheticSpec {
  int dim = 1;
  int segment_count = 1;
  int len_min = 1;  // frames per segment, inclusive range
  int len_max = 1;
  double mean_separation = 1.0;  // minimum distance between consecutive means
  double noise_std = 0.0;
  std::uint64_t seed = 0;
};

struct SyntheticData {
  Mat features;                      // n x dim
  Labeling labels;                   // segment index per frame
  std::vector<Boundary> boundaries;  // segment starts except the first
  Mat segment_means;                 // segment_count x dim, the drawn means
};

// Deterministic for a fixed seed. Consecutive segment means are at least
// mean_separation apart; frames are mean + iid per-coordinate Gaussian noise.
SyntheticData generate_synthetic(const SyntheticSpec& spec);

}  // namespace dyseg
