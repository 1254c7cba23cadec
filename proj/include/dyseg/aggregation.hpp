#pragma once

#include <span>
#include <vector>

#include "dyseg/kmeans.hpp"
#include "dyseg/types.hpp"

namespace dyseg {

/// Soft-assignment encoding of one feature against the cluster codebook.
struct Code {
  Vec weights;  // k non-negative entries summing to 1
};

/// Temporally pooled code over one window [start, end).
struct Pattern {
  Vec weights;
  int start = 0;
  int end = 0;
};

/// Half-open frame interval.
struct Window {
  int start = 0;
  int end = 0;
  bool operator==(const Window&) const = default;
};

// weights[i] ∝ exp(-||x - c_i||^2 / (2 bandwidth^2)), max-subtracted before
// exponentiation, normalized to sum 1.
Code soft_assign(const Eigen::Ref<const Vec>& x, const ModelState& model,
                 double bandwidth);

/// Default encoding bandwidth: sqrt(mean cluster radius / dim), 1 if degenerate.
double default_bandwidth(const ModelState& model);

// Sliding-window pooling: elementwise sum of the codes in each window, then
// L1 normalization. Produces floor((n - window) / stride) + 1 patterns.
std::vector<Pattern> pool_sliding(std::span<const Code> codes, int window,
                                  int stride);

/// One pattern per explicit window (peak-window pooling).
std::vector<Pattern> pool_windows(std::span<const Code> codes,
                                  std::span<const Window> windows);

// Null-action peak windows: frames sharing frame 0's cluster form the null
// signal; the binary activity signal is Gaussian-smoothed (kernel truncated
// at half-width 3 sigma, renormalized at the edges), and every local maximum
// above 0.5 spans a window where the smoothed signal stays above half the
// peak height. Overlapping windows are merged.
std::vector<Window> null_action_windows(const Labeling& labels,
                                        double smoothing_sigma);

/// k-means over pooled action patterns; one label per pattern.
Labeling segment_patterns(std::span<const Pattern> patterns, int k_actions,
                          const KMeansParams& params = {});

// Per-frame labeling recovered from sliding-window pattern labels: each frame
// takes the label of the window whose center is nearest.
Labeling frame_labels_from_patterns(std::span<const Pattern> patterns,
                                    const Labeling& pattern_labels,
                                    int frame_count);

// Per-frame labeling for peak-window pooling: frames inside window w get
// pattern label + 1, frames outside any window get the null label 0.
Labeling frame_labels_from_windows(std::span<const Window> windows,
                                   const Labeling& pattern_labels,
                                   int frame_count);

}  // namespace dyseg
