#pragma once

#include <span>
#include <vector>

#include "codmeans/sparse_vector.hpp"

namespace codmeans {

// Quality scores of one cluster against the pool of documents from the
// pre-existing topical categories. Distances here are plain Euclidean.
// The cohesiveness ratio is intra/inter: lower means a tighter cluster that
// sits farther from the existing topics. Novelty is the spread of
// cluster-to-pool distances (max - min); min_dist and max_dist are kept so
// either reading of "far from everything" can be recovered.
struct ClusterScores {
  int cluster = -1;
  long size = 0;
  double intra = 0.0;
  double inter = 0.0;
  double cohesiveness_ratio = 0.0;
  double novelty = 0.0;
  double min_dist = 0.0;
  double max_dist = 0.0;
};

// Mean distance over all ordered member pairs, self-pairs included
// (denominator |C|^2). Throws MetricDomainError on an empty cluster.
double intra_distance(std::span<const int> members,
                      std::span<const SparseVector> points);

// Mean distance between cluster members and the topical pool. Throws
// MetricDomainError when either side is empty.
double inter_distance(std::span<const int> members, std::span<const int> pool,
                      std::span<const SparseVector> points);

// intra/inter; throws MetricDomainError when inter is zero.
double cohesiveness(std::span<const int> members, std::span<const int> pool,
                    std::span<const SparseVector> points);

// max - min of the cluster-to-pool distances.
double novelty(std::span<const int> members, std::span<const int> pool,
               std::span<const SparseVector> points);

ClusterScores score_cluster(int cluster, std::span<const int> members,
                            std::span<const int> pool,
                            std::span<const SparseVector> points);

enum class SelectionCriterion { kCohesiveness, kNovelty, kUnion };

// Top-m candidate clusters: most cohesive first (ascending ratio) for the
// cohesiveness criterion, largest novelty first for novelty, or the merged
// id set for union. Ties break by cluster index; m larger than the
// candidate count returns everything.
std::vector<int> select_top(const std::vector<ClusterScores>& scored, int m,
                            SelectionCriterion criterion);

}  // namespace codmeans
