#pragma once

#include <chrono>
#include <span>
#include <utility>
#include <vector>

#include "dyseg/types.hpp"

namespace dyseg {

struct PRResult {
  double precision = 0.0;
  double recall = 0.0;
  int true_positives = 0;
  int predicted_count = 0;
  int ground_truth_count = 0;
};

// How "not predicated before" is enforced in the segment metric:
// credited_once    — a predicted label may be credited to at most one
//                    ground-truth segment (default);
// first_emission   — the label's first occurrence in the prediction must lie
//                    inside the ground-truth segment it is credited to.
enum class NoveltyRule { credited_once, first_emission };

// Segment-overlap precision/recall. A non-null ground-truth segment is a
// true positive iff its modal predicted label covers more than half of its
// frames, is not 0, and passes the novelty rule. Precision is over predicted
// non-null segments, recall over ground-truth non-null segments.
PRResult segment_pr(const Labeling& predicted, const Labeling& ground_truth,
                    NoveltyRule rule = NoveltyRule::credited_once);

// Boundary precision/recall at a frame tolerance: greedy one-to-one matching
// in temporal order, each ground-truth boundary taking the earliest unmatched
// prediction within +/- tolerance_frames. Both inputs must be sorted.
PRResult boundary_pr(std::span<const Boundary> predicted,
                     std::span<const Boundary> ground_truth,
                     int tolerance_frames);

struct TimingReport {
  double total_seconds = 0.0;
  std::vector<double> per_frame_seconds;  // online loop only
  double mean_update_cost = 0.0;          // center-distance evaluations per frame
};

// Wall-clock measurement around a segmentation workload (initialization plus
// streaming; file parsing and feature extraction stay outside). The workload
// returns a result carrying the online loop's own TimingReport, from which
// the per-frame trace is taken.
template <typename Workload>
TimingReport time_run(Workload&& workload) {
  const auto start = std::chrono::steady_clock::now();
  auto result = std::forward<Workload>(workload)();
  const auto stop = std::chrono::steady_clock::now();
  TimingReport report = result.timing;
  report.total_seconds = std::chrono::duration<double>(stop - start).count();
  return report;
}

}  // namespace dyseg
