#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyseg/types.hpp"

namespace dyseg {

/// File-level failure (missing file, bad magic, truncation, non-finite data).
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FeatureFormat { csv, binary };

struct FeatureFile {
  std::string path;
  FeatureFormat format = FeatureFormat::csv;
};

/// Sniff the format from the file's magic bytes.
FeatureFile detect_feature_file(const std::string& path);

// Feature matrices, one frame per row.
//   csv:    d comma-separated decimal reals per line
//   binary: magic "DSEG", version 0x01, reserved 0x00, then d as u32 LE,
//           n as u64 LE, then n*d IEEE-754 doubles LE row-major
// The binary format round-trips bit-exactly. Both readers reject NaN/Inf.
Mat read_features(const FeatureFile& file);
void write_features(const FeatureFile& file, const Eigen::Ref<const Mat>& features);

Mat read_features_csv(std::istream& in);
void write_features_csv(std::ostream& out, const Eigen::Ref<const Mat>& features);
Mat read_features_binary(std::istream& in);
void write_features_binary(std::ostream& out, const Eigen::Ref<const Mat>& features);

// Dense label files: "frame_index,label" CSV lines, frame indices consecutive
// from 0. Gaps and duplicates are rejected.
Labeling read_labels(const std::string& path);
void write_labels(const std::string& path, const Labeling& labels);

// Boundary files: one frame index per line, ascending.
std::vector<Boundary> read_boundaries(const std::string& path);
void write_boundaries(const std::string& path, std::span<const Boundary> boundaries);

}  // namespace dyseg
