#pragma once

#include "cdt/tensor.hpp"

#include <vector>

namespace cdt {

// Plain row-major matrix for the (non-autodiff) statistics code. Double
// precision: the EM likelihood monotonicity and row-stochasticity contracts
// are tighter than float32 roundoff.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}
  double* row(int r) { return data.data() + static_cast<size_t>(r) * cols; }
  const double* row(int r) const { return data.data() + static_cast<size_t>(r) * cols; }
  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

struct PcaProjection {
  std::vector<double> mean;  // [in_dim]
  Matrix components;         // [in_dim, out_dim], orthonormal columns
  std::vector<double> explained_variance;  // descending, [out_dim]

  int in_dim() const { return static_cast<int>(mean.size()); }
  int out_dim() const { return components.cols; }
  std::vector<double> project(const double* x) const;
  std::vector<double> project(const float* x) const;  // model-feature entry point
  Matrix project_all(const Matrix& features) const;
};

// Top-p principal directions by explained variance. Requires rows > p.
// Rank-deficient inputs are completed with an arbitrary orthonormal basis.
PcaProjection pca_fit(const Matrix& features, int p);

struct GaussianMixture {
  int k = 0, dim = 0;
  std::vector<double> weights;  // [k], sums to 1
  Matrix means;                 // [k, dim]
  Matrix variances;             // [k, dim] diagonal covariances, floored
};

constexpr double kGmmVarianceFloor = 1e-6;

struct GmmFitResult {
  GaussianMixture gmm;
  std::vector<double> log_likelihood;  // per EM iteration, non-decreasing
};

// Diagonal-covariance EM with k-means++-style seeding. An emptied component
// is re-seeded from the farthest point and the iteration repeated.
GmmFitResult gmm_fit(const Matrix& features, int k, uint64_t seed,
                     int max_iters = 100, double tol = 1e-6);

// Posterior component memberships; rows sum to 1 (computed in log space).
Matrix responsibilities(const GaussianMixture& gmm, const Matrix& features);

// Responsibility-weighted feature means, one prototype per component.
// A zero-mass component falls back to the component mean.
Matrix compute_prototypes(const Matrix& features, const Matrix& resp,
                          const GaussianMixture& gmm);

struct PrototypeBank {
  PcaProjection pca;
  GaussianMixture gmm;
  Matrix prototypes;  // [k, pca out_dim]

  // PCA-projects the raw feature, then nearest prototype by Euclidean
  // distance; ties resolve to the lowest index.
  int assign(const std::vector<float>& feature) const;
  std::vector<float> prototype(int k) const;
};

// Fits PCA + GMM + prototypes on raw instruction features [m, d].
PrototypeBank fit_prototype_bank(const Matrix& features, int pca_dim, int k,
                                 uint64_t seed);

}  // namespace cdt
