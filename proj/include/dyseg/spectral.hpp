#pragma once

#include <vector>

#include "dyseg/kmeans.hpp"
#include "dyseg/types.hpp"

namespace dyseg {

// Fully connected similarity graph over the warm-up window.
// weights(i,j) = exp(-||x_i - x_j||^2 / kernel_sigma) off the diagonal,
// 0 on the diagonal (no self-loops).
struct SimilarityMatrix {
  Mat weights;
  double kernel_sigma = 0.0;
};

/// Eigenvalues of the normalized Laplacian, ascending.
struct Spectrum {
  Vec eigenvalues;
};

// Bottom-k eigenvectors of the Laplacian, rows normalized to unit length.
// Rows that were all zero before normalization are left zero and listed in
// zero_rows (cannot happen for a connected Gaussian-kernel graph).
struct Embedding {
  Mat rows;
  std::vector<int> zero_rows;
};

SimilarityMatrix build_similarity(const Eigen::Ref<const Mat>& window,
                                  double kernel_sigma);

// Median of the squared pairwise distances; the kernel_sigma fallback when
// the user does not set one.
double median_squared_distance(const Eigen::Ref<const Mat>& window);

/// L = I - D^{-1/2} A D^{-1/2}. Throws "isolated vertex" on a zero degree.
Mat normalized_laplacian(const SimilarityMatrix& similarity);

Spectrum laplacian_spectrum(const Eigen::Ref<const Mat>& laplacian);

// Smallest k in [1, k_max] maximizing the consecutive eigengap
// lambda_{k+1} - lambda_k; ties break toward the smallest k.
int select_k_eigengap(const Spectrum& spectrum, int k_max);

Embedding spectral_embed(const Eigen::Ref<const Mat>& laplacian, int k);

// Whether per-coordinate spread is the mean of squared deviations
// (population variance, consistent with the online Σ = M - c∘c identity)
// or their plain sum.
enum class VarianceMode { population, summed };

struct InitParams {
  double kernel_sigma = 0.0;  // <= 0: median heuristic over the window
  double uncertainty_c = 1.0;
  int k_max = 0;  // <= 0: min(10, window - 1)
  KMeansParams kmeans;
  VarianceMode variance = VarianceMode::population;
  MeanUpdate mean_update = MeanUpdate::exact;
};

struct InitResult {
  ModelState model;
  Labeling warmup_labels;    // per warm-up frame cluster assignment
  int k = 0;                 // number of clusters selected via the eigengap
  double kernel_sigma = 0.0; // sigma actually used
};

// Full initialization pipeline over the first ell feature vectors:
// similarity graph -> normalized Laplacian -> eigengap k -> spectral
// embedding -> k-means on the embedding rows -> cluster statistics from the
// raw vectors.
InitResult init_model(const Eigen::Ref<const Mat>& warmup,
                      const InitParams& params);

}  // namespace dyseg
