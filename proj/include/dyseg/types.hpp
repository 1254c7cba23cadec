#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace dyseg {

// Frames are rows; row-major so a row view is contiguous (matches the on-disk
// layout and numpy).
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::VectorXd;

/// One d-dimensional observation x_t at a time step.
struct FeatureVector {
  Vec values;
  int time_index = 0;
};

// Per-cluster running statistics. variance_diag is kept clamped at zero from
// below: second_moment - center^2 can go slightly negative under cancellation
// and the radius threshold needs radius >= 0.
struct ClusterStats {
  int id = 0;
  Vec center;
  Vec second_moment;  // per-coordinate mean of x∘x
  Vec variance_diag;  // second_moment - center∘center, clamped at 0
  double radius = 0.0;  // sum of variance_diag
  std::size_t count = 1;
};

// Rule for the incremental center update. `exact` keeps the center equal to
// the arithmetic mean of every absorbed point (delta divided by the
// post-update count); `lagged` divides by the pre-update count instead.
enum class MeanUpdate { exact, lagged };

/// The evolving cluster set plus global parameters.
struct ModelState {
  std::vector<ClusterStats> clusters;  // creation order; ids equal indices
  int dim = 0;
  double uncertainty = 0.0;  // per-dimension uncertainty constant c
  double min_radius = 0.0;   // c * dim, floor on the new-cluster threshold
  MeanUpdate mean_update = MeanUpdate::exact;
};

ModelState make_model(int dim, double uncertainty_c,
                      MeanUpdate rule = MeanUpdate::exact);

/// Per-frame cluster ids.
using Labeling = std::vector<int>;

/// Contiguous run of one label; end is exclusive.
struct Segment {
  int start = 0;
  int end = 0;
  int label = 0;
  bool operator==(const Segment&) const = default;
};

/// First frame of a new segment.
struct Boundary {
  int frame = 0;
  auto operator<=>(const Boundary&) const = default;
};

/// Run-length encoding of a label sequence. Throws on empty input.
std::vector<Segment> labels_to_segments(const Labeling& labels);

/// One boundary at each segment start except the first.
std::vector<Boundary> segments_to_boundaries(const std::vector<Segment>& segments);

std::vector<Boundary> boundaries_from_frames(const std::vector<int>& frames);
std::vector<int> boundary_frames(const std::vector<Boundary>& boundaries);

// Input validation shared by the stream-facing operations.
void check_dimension(const Eigen::Ref<const Vec>& x, int dim);
void check_finite(const Eigen::Ref<const Vec>& x);

}  // namespace dyseg
