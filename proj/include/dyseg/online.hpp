#pragma once

#include <utility>
#include <vector>

#include "dyseg/evaluation.hpp"
#include "dyseg/types.hpp"

namespace dyseg {

/// Result of one online evolution step.
struct FrameOutcome {
  int cluster_id = 0;
  bool created_new = false;
  double distance = 0.0;  // squared distance to the nearest center at decision time
  int update_cost = 0;    // center-distance evaluations performed (= cluster count)
};

// Exhaustive scan over the current clusters; ties break toward the smallest
// cluster id. Returns (id, squared distance).
std::pair<int, double> nearest_cluster(const ModelState& model,
                                       const Eigen::Ref<const Vec>& x);

ClusterStats cluster_from_point(int id, const Eigen::Ref<const Vec>& x);

/// Fold one point into a cluster's running statistics.
void absorb(ClusterStats& cluster, const Eigen::Ref<const Vec>& x,
            MeanUpdate rule = MeanUpdate::exact);

// One step of the online evolution: a new single-point cluster when the
// squared distance to the nearest center reaches max(radius, min_radius),
// otherwise an incremental statistics update of the nearest cluster.
// A tie at the threshold creates a new cluster.
FrameOutcome evolve(ModelState& model, const Eigen::Ref<const Vec>& x);

struct StreamResult {
  Labeling labels;                   // warm-up labels followed by online labels
  std::vector<Boundary> boundaries;  // frames whose label differs from the previous
  TimingReport timing;               // online loop only
  std::vector<int> update_costs;     // per online frame
};

// Evolve the model over every row of `stream`. Warm-up frames keep their
// initialization labels; the first online frame is compared against the last
// warm-up label for boundary detection.
StreamResult run_stream(ModelState& model, const Eigen::Ref<const Mat>& stream,
                        const Labeling& warmup_labels);

}  // namespace dyseg
