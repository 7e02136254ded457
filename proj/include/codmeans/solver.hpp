#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "codmeans/constraints.hpp"
#include "codmeans/rng.hpp"
#include "codmeans/sparse_vector.hpp"

namespace codmeans {

enum class InitMode { kRandom, kCategorySeeded };

struct SolverConfig {
  int k = 1;
  int ell = 0;            // outliers trimmed per cluster each iteration
  int max_iters = 100;
  double tol = 1e-6;      // relative error-change convergence threshold
  std::uint64_t seed = 0;
  InitMode init = InitMode::kRandom;
  bool record_traces = false;  // keep per-iteration assignments + centroids
};

struct OutlierEntry {
  int doc;
  double distance;  // plain Euclidean distance to the cluster centroid
};

struct ClusterMember {
  int doc;
  double distance;
};

// Result of one solver run. Assignment maps each document index to its
// cluster, or -1 for documents trimmed as outliers in the final iteration;
// per-cluster outlier lists are ordered farthest-first. Assigned documents
// and outliers partition the input.
struct ClusterModel {
  std::vector<DenseVector> centroids;
  std::vector<int> assignment;
  std::vector<std::vector<OutlierEntry>> outliers;
  double error = 0.0;
  int iterations_run = 0;
  bool converged = false;
  std::vector<double> error_trace;

  // Populated only with record_traces: assignments after each iteration's
  // assignment phase, and the centroids that phase used.
  std::vector<std::vector<int>> assignment_trace;
  std::vector<std::vector<DenseVector>> centroid_trace;

  int k() const { return static_cast<int>(centroids.size()); }
};

// Seeding information for category-seeded initialization: centroid j starts
// at the mean of category j (label-sorted order); the remaining centroids
// start at randomly drawn miscellaneous documents.
struct CategorySeedPlan {
  std::vector<std::vector<int>> category_members;
  std::vector<int> misc_pool;
};

// Index of the nearest other centroid for each centroid; ties go to the
// lowest index. Throws SingleClusterError for fewer than two centroids.
std::vector<int> nearest_other_centroids(
    const std::vector<DenseVector>& centroids);

// Error objective of an assignment: half the sum, over clusters, of member
// distortion plus one inter-centroid penalty per violated-constraint
// endpoint. assignment[i] == -1 marks a document excluded as an outlier;
// constraints touching excluded documents are not evaluated.
double cvqe_error(std::span<const SparseVector> points,
                  const std::vector<DenseVector>& centroids,
                  const std::vector<int>& assignment,
                  const IndexedConstraints& constraints);

// Nearest-centroid assignment for unconstrained points; ties break to the
// lowest cluster index.
int assign_unconstrained(const SparseVector& x,
                         const std::vector<DenseVector>& centroids);

// Joint assignment of a must-link pair: minimizes the two point distortions
// plus the inter-centroid penalty when the pair is split. Ties break to the
// lexicographically smallest (i, j).
std::pair<int, int> assign_ml_pair(const SparseVector& x,
                                   const SparseVector& y,
                                   const std::vector<DenseVector>& centroids);

// Joint assignment of a cannot-link pair: the penalty for sharing cluster i
// is the distance from centroid i to its nearest other centroid.
std::pair<int, int> assign_cl_pair(const SparseVector& x,
                                   const SparseVector& y,
                                   const std::vector<DenseVector>& centroids,
                                   const std::vector<int>& nearest_other);

// Splits cluster members into (kept, outliers): the min(ell, size) members
// farthest from the centroid become outliers. Distance ties are broken by
// document id, ascending ids staying in the cluster last. Outliers are
// returned farthest-first; kept members in ascending id order.
std::pair<std::vector<ClusterMember>, std::vector<ClusterMember>>
trim_outliers(std::vector<ClusterMember> members, int ell);

// Violation-weighted centroid update: the mean of the kept members, with one
// extra term per violated constraint endpoint (the partner's centroid for
// split must-link pairs, the nearest-other centroid of the shared cluster
// for co-located cannot-link pairs). Uses the centroids from the start of
// the iteration. Throws EmptyClusterError when the denominator is zero.
DenseVector update_centroid(int cluster, std::span<const int> kept_members,
                            std::span<const SparseVector> points,
                            const IndexedConstraints& constraints,
                            const std::vector<int>& assignment,
                            const std::vector<DenseVector>& start_centroids,
                            const std::vector<int>& nearest_other);

DenseVector densify(const SparseVector& v, int dim);
DenseVector mean_vector(std::span<const SparseVector> points,
                        std::span<const int> members, int dim);

// Seeded k-means++-style spreading over the data points.
std::vector<DenseVector> kmeanspp_centroids(std::span<const SparseVector> points,
                                            int k, int dim, Rng& rng);

// Category means for the leading centroids, seeded random miscellaneous
// documents for the rest. When the miscellaneous pool runs dry, remaining
// centroids fall back to deterministic farthest-point spreading.
std::vector<DenseVector> category_seeded_centroids(
    std::span<const SparseVector> points, int k, int dim,
    const CategorySeedPlan& plan, Rng& rng);

// Constrained clustering with per-cluster outlier trimming. Each iteration
// assigns unconstrained points, then must-link pairs, then cannot-link pairs
// (in canonical constraint order; the first rule application touching a
// document fixes it for the iteration), trims the ell farthest members of
// every cluster, and recomputes centroids over the kept members. Outliers
// re-enter the pool at the start of every iteration. Stops when the relative
// error change drops below tol, when assignments and outlier sets repeat, or
// at max_iters.
ClusterModel cod_means(std::span<const SparseVector> points,
                       const IndexedConstraints& constraints,
                       const SolverConfig& config, int dim,
                       std::optional<std::vector<DenseVector>> initial_centroids =
                           std::nullopt,
                       const CategorySeedPlan* seed_plan = nullptr);

std::vector<std::vector<int>> members_by_cluster(
    const std::vector<int>& assignment, int k);

// JSON serialization (sorted keys): centroids, assignment map, outlier lists
// with distances, per-iteration error trace.
std::string model_to_json(const ClusterModel& model,
                          const std::vector<std::string>& ids);

}  // namespace codmeans
