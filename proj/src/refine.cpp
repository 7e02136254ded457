#include "codmeans/refine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "codmeans/constraints.hpp"
#include "codmeans/vocabulary.hpp"

namespace codmeans {

namespace {

struct Prepared {
  VectorizedCorpus vec;
  IndexedConstraints constraints;
  CategorySeedPlan plan;
  std::vector<std::string> topical_labels;
  int k_o = 0;
};

Prepared prepare(const LabeledCorpus& corpus, const PipelineConfig& config) {
  Prepared prep;
  prep.vec = vectorize_corpus(corpus, config.min_df);
  ConstraintSet set =
      build_constraints(corpus, config.constraint_cap, config.seed);
  prep.constraints = index_constraints(set, prep.vec.ids);
  prep.topical_labels = corpus.topical_labels();

  prep.k_o = static_cast<int>(prep.topical_labels.size());
  if (config.k_o_override) {
    if (*config.k_o_override < prep.k_o) {
      throw ConfigError("k_o override is smaller than the labels present");
    }
    prep.k_o = *config.k_o_override;
  }

  std::map<std::string, int> label_slot;
  for (std::size_t i = 0; i < prep.topical_labels.size(); ++i) {
    label_slot[prep.topical_labels[i]] = static_cast<int>(i);
  }
  prep.plan.category_members.resize(prep.k_o);
  for (std::size_t i = 0; i < prep.vec.labels.size(); ++i) {
    const std::string& label = prep.vec.labels[i];
    if (label == corpus.misc_label) {
      prep.plan.misc_pool.push_back(static_cast<int>(i));
    } else {
      prep.plan.category_members[label_slot[label]].push_back(
          static_cast<int>(i));
    }
  }
  return prep;
}

SolverConfig solver_config(const PipelineConfig& config, int k) {
  SolverConfig sc;
  sc.k = k;
  sc.ell = config.ell;
  sc.max_iters = config.max_iters;
  sc.tol = config.tol;
  sc.seed = config.seed;
  sc.init = InitMode::kCategorySeeded;
  return sc;
}

ClusterModel solve(const Prepared& prep, const PipelineConfig& config, int k) {
  return cod_means(prep.vec.vectors, prep.constraints, solver_config(config, k),
                   static_cast<int>(prep.vec.vocab.size()), std::nullopt,
                   &prep.plan);
}

std::vector<LabelingError> extract_errors(const ClusterModel& model,
                                          const VectorizedCorpus& vec,
                                          const std::string& misc_label) {
  std::vector<LabelingError> errors;
  for (const auto& cluster_outliers : model.outliers) {
    for (const OutlierEntry& o : cluster_outliers) {
      if (vec.labels[o.doc] == misc_label) continue;
      errors.push_back({vec.ids[o.doc], vec.labels[o.doc], o.distance});
    }
  }
  std::sort(errors.begin(), errors.end(),
            [](const LabelingError& a, const LabelingError& b) {
              return a.doc_id < b.doc_id;
            });
  return errors;
}

std::vector<Reassignment> extract_reassignments(
    const ClusterModel& model, const VectorizedCorpus& vec,
    const std::vector<std::string>& topical_labels,
    const std::string& misc_label) {
  std::vector<Reassignment> moves;
  int k_o = static_cast<int>(topical_labels.size());
  for (std::size_t i = 0; i < vec.ids.size(); ++i) {
    if (vec.labels[i] != misc_label) continue;
    int g = model.assignment[i];
    if (g < 0 || g >= k_o) continue;  // trimmed, or not a category cluster
    moves.push_back({vec.ids[i], misc_label, topical_labels[g]});
  }
  return moves;  // ids ascending already: vec is id-sorted
}

}  // namespace

std::vector<LabelingError> detect_labeling_errors(const LabeledCorpus& corpus,
                                                  const PipelineConfig& config) {
  Prepared prep = prepare(corpus, config);
  ClusterModel model = solve(prep, config, prep.k_o + 1);
  return extract_errors(model, prep.vec, corpus.misc_label);
}

std::vector<Reassignment> reassign_from_misc(const LabeledCorpus& corpus,
                                             const PipelineConfig& config) {
  Prepared prep = prepare(corpus, config);
  ClusterModel model = solve(prep, config, prep.k_o + 1);
  return extract_reassignments(model, prep.vec, prep.topical_labels,
                               corpus.misc_label);
}

DiscoveryResult discover_new_clusters(const LabeledCorpus& corpus,
                                      const PipelineConfig& config) {
  if (config.n < 1) throw ConfigError("discovery needs n >= 1");
  Prepared prep = prepare(corpus, config);

  DiscoveryResult result;
  result.k_o = prep.k_o;
  result.n = config.n;
  result.m = config.m;
  result.k = prep.k_o + config.n + 1;
  result.degenerate_seeds = prep.plan.misc_pool.empty();
  result.model = solve(prep, config, result.k);

  std::vector<int> pool;
  for (std::size_t i = 0; i < prep.vec.labels.size(); ++i) {
    if (prep.vec.labels[i] != corpus.misc_label) {
      pool.push_back(static_cast<int>(i));
    }
  }

  std::vector<std::vector<int>> members =
      members_by_cluster(result.model.assignment, result.k);
  std::vector<ClusterScores> scored;
  for (int j = prep.k_o; j < prep.k_o + config.n; ++j) {
    std::vector<int> misc_members;
    for (int doc : members[j]) {
      if (prep.vec.labels[doc] == corpus.misc_label) misc_members.push_back(doc);
    }
    if (misc_members.empty() || pool.empty()) {
      result.unscored.push_back(j);
      continue;
    }
    ClusterScores s = score_cluster(j, misc_members, pool, prep.vec.vectors);
    scored.push_back(s);
    NewClusterInfo info;
    info.cluster_index = j;
    info.scores = s;
    info.member_ids.reserve(misc_members.size());
    for (int doc : misc_members) info.member_ids.push_back(prep.vec.ids[doc]);
    result.candidates.push_back(std::move(info));
  }

  if (!scored.empty()) {
    result.top_coherent =
        select_top(scored, config.m, SelectionCriterion::kCohesiveness);
    result.top_novel = select_top(scored, config.m, SelectionCriterion::kNovelty);
  }
  return result;
}

LabeledCorpus build_improved_corpus(const LabeledCorpus& corpus,
                                    const std::vector<LabelingError>& errors,
                                    const std::vector<Reassignment>& moves) {
  std::set<std::string> removed;
  for (const LabelingError& e : errors) removed.insert(e.doc_id);
  std::map<std::string, std::string> relabel;
  for (const Reassignment& r : moves) {
    if (removed.count(r.doc_id)) {
      throw ConflictError("document \"" + r.doc_id +
                          "\" is both a labeling error and a reassignment");
    }
    relabel[r.doc_id] = r.to_category;
  }

  LabeledCorpus improved;
  improved.misc_label = corpus.misc_label;
  improved.documents.reserve(corpus.documents.size());
  for (const Document& doc : corpus.documents) {
    if (removed.count(doc.id)) continue;
    Document copy = doc;
    auto it = relabel.find(doc.id);
    if (it != relabel.end()) copy.label = it->second;
    improved.documents.push_back(std::move(copy));
  }
  return improved;
}

RefinementReport run_refinement(const LabeledCorpus& corpus,
                                const PipelineConfig& config) {
  Prepared prep = prepare(corpus, config);
  RefinementReport report;
  report.k_o = prep.k_o;
  report.k = prep.k_o + 1;
  ClusterModel model = solve(prep, config, report.k);
  report.labeling_errors = extract_errors(model, prep.vec, corpus.misc_label);
  report.reassignments = extract_reassignments(
      model, prep.vec, prep.topical_labels, corpus.misc_label);
  report.improved =
      build_improved_corpus(corpus, report.labeling_errors, report.reassignments);
  return report;
}

}  // namespace codmeans
