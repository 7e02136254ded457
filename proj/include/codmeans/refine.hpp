#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codmeans/corpus.hpp"
#include "codmeans/metrics.hpp"
#include "codmeans/solver.hpp"

namespace codmeans {

// Shared settings for the corpus-improvement pipelines. k is always derived:
// k_o topical categories plus n candidate clusters plus one residual
// miscellaneous cluster (n = 0 for the labeling-error runs).
struct PipelineConfig {
  int min_df = 2;
  int n = 4;
  int m = 2;
  int ell = 2;
  std::uint64_t seed = 0;
  int max_iters = 100;
  double tol = 1e-6;
  std::optional<long> constraint_cap;
  // Declared category count for partial corpora; must be at least the number
  // of labels actually present. Extra category slots are seeded from the
  // miscellaneous pool.
  std::optional<int> k_o_override;
};

struct LabelingError {
  std::string doc_id;
  std::string category;  // the original (suspect) label
  double distance;       // distance to its cluster centroid when trimmed
};

struct Reassignment {
  std::string doc_id;
  std::string from_label;
  std::string to_category;
};

struct NewClusterInfo {
  int cluster_index;
  std::vector<std::string> member_ids;  // kept, miscellaneous-labeled members
  ClusterScores scores;
};

struct DiscoveryResult {
  int k = 0;
  int k_o = 0;
  int n = 0;
  int m = 0;
  std::vector<NewClusterInfo> candidates;  // ascending cluster index
  std::vector<int> top_coherent;           // cluster indices
  std::vector<int> top_novel;
  std::vector<int> unscored;  // candidate clusters with nothing to score
  bool degenerate_seeds = false;
  ClusterModel model;
};

struct RefinementReport {
  int k = 0;
  int k_o = 0;
  std::vector<LabelingError> labeling_errors;
  std::vector<Reassignment> reassignments;
  LabeledCorpus improved;
};

// Clusters with k = k_o + 1 (category-seeded) and reports the trimmed
// outliers whose original label is topical, tagged with that label. With
// ell = 0 the list is always empty.
std::vector<LabelingError> detect_labeling_errors(const LabeledCorpus& corpus,
                                                  const PipelineConfig& config);

// Same run; miscellaneous documents that end up assigned (not trimmed) to a
// category-seeded cluster are reported as moving to that category.
std::vector<Reassignment> reassign_from_misc(const LabeledCorpus& corpus,
                                             const PipelineConfig& config);

// Clusters with k = k_o + n + 1. The n clusters after the category-seeded
// ones are candidates for new categories; the last cluster is the residual
// miscellaneous cluster. Candidates are scored on their kept,
// miscellaneous-labeled members against the pool of topically labeled
// documents, and the top-m by cohesiveness and by novelty are selected.
DiscoveryResult discover_new_clusters(const LabeledCorpus& corpus,
                                      const PipelineConfig& config);

// Copy of the corpus with labeling-error documents removed and reassigned
// documents relabeled. A document in both lists raises ConflictError.
LabeledCorpus build_improved_corpus(const LabeledCorpus& corpus,
                                    const std::vector<LabelingError>& errors,
                                    const std::vector<Reassignment>& moves);

// One solver run feeding both extraction steps plus the improved corpus.
RefinementReport run_refinement(const LabeledCorpus& corpus,
                                const PipelineConfig& config);

}  // namespace codmeans
