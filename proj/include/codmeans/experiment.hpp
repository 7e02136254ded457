#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "codmeans/corpus.hpp"
#include "codmeans/refine.hpp"

namespace codmeans {

// One experiment description; defaults mirror the standard configuration
// (n = 4 candidate clusters, top-2 selection, min_df = 2, full constraint
// materialization).
struct ExperimentSpec {
  std::string corpus_path;
  std::string out_dir;
  std::string misc_label = "Z";
  int n = 4;
  int m = 2;
  int ell_min = 0;
  int ell_max = 5;
  int refine_ell = 2;
  std::uint64_t seed = 0;
  int max_iters = 100;
  double tol = 1e-6;
  int min_df = 2;
  std::optional<long> constraint_cap;
  std::optional<int> k_o_override;
};

struct SweepOutcome {
  std::string csv_path;
  std::string summary_path;
  int k = 0;
  int k_o = 0;
  int optimal_ell = 0;
};

// Runs cluster discovery for every ell in [ell_min, ell_max], recording the
// scores of the selected clusters per sweep point. Emits one CSV (columns:
// ell, cluster_index, size, intra, inter, cohesiveness_ratio, novelty,
// selected_by) and a JSON summary that includes the chosen optimal ell (the
// sweep point minimizing the mean cohesiveness ratio of the top-m cohesive
// clusters, ties to the smaller ell). Output is byte-identical across runs
// with the same spec and seed.
SweepOutcome run_sweep(const ExperimentSpec& spec);

struct RefineOutcome {
  std::string report_path;
  std::string errors_csv_path;
  std::string reassignments_csv_path;
  std::string improved_corpus_path;
  int k = 0;
  int k_o = 0;
  long labeling_errors = 0;
  long reassignments = 0;
};

// Labeling-error detection plus miscellaneous-to-topic reassignment; writes
// the report JSON, both CSVs, and the improved JSON Lines corpus.
RefineOutcome run_refine(const ExperimentSpec& spec);

struct CorpusDiagnostics {
  long documents = 0;
  std::map<std::string, long> label_histogram;
  std::vector<DuplicateId> duplicate_ids;
  long empty_text_documents = 0;
  double topical_pct = 0.0;
  double misc_pct = 0.0;
};

CorpusDiagnostics validate_corpus(const std::string& path,
                                  const std::string& misc_label = "Z");

std::string format_diagnostics(const CorpusDiagnostics& d);

}  // namespace codmeans
