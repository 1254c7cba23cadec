#pragma once

#include <cstdint>
#include <vector>

#include "dyseg/types.hpp"

namespace dyseg {

struct KMeansParams {
  std::uint64_t seed = 0;
  int max_iter = 100;
  double tol = 1e-6;  // stop when max center movement (Euclidean) <= tol
};

struct KMeansResult {
  std::vector<int> assignment;       // one cluster id per input row
  Mat centers;                       // k x m, each the mean of its assigned rows
  std::vector<double> cost_history;  // total within-cluster cost per Lloyd round
  int iterations = 0;
};

// Lloyd's algorithm with k-means++ seeding from a deterministic seed.
// Ties in the nearest-center scan break toward the smallest center index;
// an emptied cluster is reseeded at the point farthest from its assigned
// center. Bit-deterministic for a fixed seed. Throws if n < k.
KMeansResult kmeans(const Eigen::Ref<const Mat>& points, int k,
                    const KMeansParams& params = {});

}  // namespace dyseg
