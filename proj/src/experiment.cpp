#include "codmeans/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace codmeans {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write output file: " + path);
  out << content;
}

std::string out_path(const ExperimentSpec& spec, const std::string& name) {
  namespace fs = std::filesystem;
  fs::path dir = spec.out_dir.empty() ? fs::path(".") : fs::path(spec.out_dir);
  fs::create_directories(dir);
  return (dir / name).string();
}

PipelineConfig pipeline_config(const ExperimentSpec& spec, int ell) {
  PipelineConfig pc;
  pc.min_df = spec.min_df;
  pc.n = spec.n;
  pc.m = spec.m;
  pc.ell = ell;
  pc.seed = spec.seed;
  pc.max_iters = spec.max_iters;
  pc.tol = spec.tol;
  pc.constraint_cap = spec.constraint_cap;
  pc.k_o_override = spec.k_o_override;
  return pc;
}

nlohmann::json scores_json(const ClusterScores& s) {
  return {{"cluster", s.cluster},
          {"size", s.size},
          {"intra", s.intra},
          {"inter", s.inter},
          {"cohesiveness_ratio", s.cohesiveness_ratio},
          {"novelty", s.novelty},
          {"min_dist", s.min_dist},
          {"max_dist", s.max_dist}};
}

}  // namespace

SweepOutcome run_sweep(const ExperimentSpec& spec) {
  if (spec.ell_min < 0 || spec.ell_max < spec.ell_min) {
    throw ConfigError("sweep range must be non-empty with ell_min >= 0");
  }
  LabeledCorpus corpus = load_clean_corpus(spec.corpus_path, spec.misc_label);

  std::ostringstream csv;
  csv << "ell,cluster_index,size,intra,inter,cohesiveness_ratio,novelty,"
         "selected_by\n";

  nlohmann::json per_ell = nlohmann::json::array();
  int best_ell = spec.ell_min;
  double best_ratio = std::numeric_limits<double>::infinity();
  int k = 0, k_o = 0;

  for (int ell = spec.ell_min; ell <= spec.ell_max; ++ell) {
    DiscoveryResult result;
    try {
      result = discover_new_clusters(corpus, pipeline_config(spec, ell));
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw SolverFailure("ell=" + std::to_string(ell) + ": " + e.what());
    }
    k = result.k;
    k_o = result.k_o;

    std::set<int> coherent(result.top_coherent.begin(),
                           result.top_coherent.end());
    std::set<int> novel(result.top_novel.begin(), result.top_novel.end());
    std::set<int> selected = coherent;
    selected.insert(novel.begin(), novel.end());

    double ratio_sum = 0.0;
    for (const NewClusterInfo& info : result.candidates) {
      if (!selected.count(info.cluster_index)) continue;
      bool coh = coherent.count(info.cluster_index) > 0;
      bool nov = novel.count(info.cluster_index) > 0;
      const ClusterScores& s = info.scores;
      csv << ell << ',' << s.cluster << ',' << s.size << ','
          << fmt_double(s.intra) << ',' << fmt_double(s.inter) << ','
          << fmt_double(s.cohesiveness_ratio) << ',' << fmt_double(s.novelty)
          << ',' << (coh && nov ? "both" : (coh ? "coherence" : "novelty"))
          << '\n';
      if (coh) ratio_sum += s.cohesiveness_ratio;
    }

    double mean_ratio = coherent.empty()
                            ? std::numeric_limits<double>::infinity()
                            : ratio_sum / static_cast<double>(coherent.size());
    if (mean_ratio < best_ratio) {
      best_ratio = mean_ratio;
      best_ell = ell;
    }

    nlohmann::json entry;
    entry["ell"] = ell;
    entry["k"] = result.k;
    entry["iterations"] = result.model.iterations_run;
    entry["converged"] = result.model.converged;
    entry["error"] = result.model.error;
    entry["degenerate_seeds"] = result.degenerate_seeds;
    entry["top_coherent"] = result.top_coherent;
    entry["top_novel"] = result.top_novel;
    entry["unscored"] = result.unscored;
    if (std::isfinite(mean_ratio)) {
      entry["mean_top_coherent_ratio"] = mean_ratio;
    } else {
      entry["mean_top_coherent_ratio"] = nullptr;
    }
    nlohmann::json cands = nlohmann::json::array();
    for (const NewClusterInfo& info : result.candidates) {
      cands.push_back(scores_json(info.scores));
    }
    entry["candidates"] = std::move(cands);
    per_ell.push_back(std::move(entry));
  }

  nlohmann::json summary;
  summary["corpus"] = spec.corpus_path;
  summary["misc_label"] = spec.misc_label;
  summary["k"] = k;
  summary["k_o"] = k_o;
  summary["n"] = spec.n;
  summary["m"] = spec.m;
  summary["ell_min"] = spec.ell_min;
  summary["ell_max"] = spec.ell_max;
  summary["seed"] = spec.seed;
  summary["min_df"] = spec.min_df;
  summary["optimal_ell"] = best_ell;
  summary["per_ell"] = std::move(per_ell);

  SweepOutcome outcome;
  outcome.csv_path = out_path(spec, "sweep_scores.csv");
  outcome.summary_path = out_path(spec, "sweep_summary.json");
  outcome.k = k;
  outcome.k_o = k_o;
  outcome.optimal_ell = best_ell;
  write_file(outcome.csv_path, csv.str());
  write_file(outcome.summary_path, summary.dump(2) + "\n");
  return outcome;
}

RefineOutcome run_refine(const ExperimentSpec& spec) {
  LabeledCorpus corpus = load_clean_corpus(spec.corpus_path, spec.misc_label);
  RefinementReport report;
  try {
    report = run_refinement(corpus, pipeline_config(spec, spec.refine_ell));
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw SolverFailure("ell=" + std::to_string(spec.refine_ell) + ": " +
                        e.what());
  }

  std::ostringstream errors_csv;
  errors_csv << "id,category,distance\n";
  for (const LabelingError& e : report.labeling_errors) {
    errors_csv << e.doc_id << ',' << e.category << ',' << fmt_double(e.distance)
               << '\n';
  }
  std::ostringstream moves_csv;
  moves_csv << "id,from,to\n";
  for (const Reassignment& r : report.reassignments) {
    moves_csv << r.doc_id << ',' << r.from_label << ',' << r.to_category << '\n';
  }

  nlohmann::json rj;
  rj["k"] = report.k;
  rj["k_o"] = report.k_o;
  rj["ell"] = spec.refine_ell;
  rj["seed"] = spec.seed;
  rj["corpus"] = spec.corpus_path;
  rj["documents"] = report.improved.documents.size() +
                    report.labeling_errors.size();
  rj["improved_documents"] = report.improved.documents.size();
  nlohmann::json errs = nlohmann::json::array();
  for (const LabelingError& e : report.labeling_errors) {
    errs.push_back({{"id", e.doc_id},
                    {"category", e.category},
                    {"distance", e.distance}});
  }
  rj["labeling_errors"] = std::move(errs);
  nlohmann::json moves = nlohmann::json::array();
  for (const Reassignment& r : report.reassignments) {
    moves.push_back(
        {{"id", r.doc_id}, {"from", r.from_label}, {"to", r.to_category}});
  }
  rj["reassignments"] = std::move(moves);

  RefineOutcome outcome;
  outcome.report_path = out_path(spec, "refinement_report.json");
  outcome.errors_csv_path = out_path(spec, "labeling_errors.csv");
  outcome.reassignments_csv_path = out_path(spec, "reassignments.csv");
  outcome.improved_corpus_path = out_path(spec, "improved_corpus.jsonl");
  outcome.k = report.k;
  outcome.k_o = report.k_o;
  outcome.labeling_errors = static_cast<long>(report.labeling_errors.size());
  outcome.reassignments = static_cast<long>(report.reassignments.size());

  write_file(outcome.report_path, rj.dump(2) + "\n");
  write_file(outcome.errors_csv_path, errors_csv.str());
  write_file(outcome.reassignments_csv_path, moves_csv.str());
  save_corpus_jsonl(report.improved, outcome.improved_corpus_path);
  return outcome;
}

CorpusDiagnostics validate_corpus(const std::string& path,
                                  const std::string& misc_label) {
  CorpusLoadResult loaded = load_corpus_jsonl(path, misc_label);
  CorpusDiagnostics d;
  d.documents = static_cast<long>(loaded.corpus.documents.size());
  d.label_histogram = loaded.corpus.label_histogram();
  d.duplicate_ids = loaded.duplicate_ids;
  d.empty_text_documents = static_cast<long>(loaded.empty_text_lines.size());
  long misc = loaded.corpus.misc_count();
  if (d.documents > 0) {
    d.misc_pct = 100.0 * static_cast<double>(misc) /
                 static_cast<double>(d.documents);
    d.topical_pct = 100.0 * static_cast<double>(d.documents - misc) /
                    static_cast<double>(d.documents);
  }
  return d;
}

std::string format_diagnostics(const CorpusDiagnostics& d) {
  std::ostringstream out;
  out << "documents: " << d.documents << '\n';
  out << "labels:";
  for (const auto& [label, count] : d.label_histogram) {
    out << ' ' << label << '=' << count;
  }
  out << '\n';
  if (d.duplicate_ids.empty()) {
    out << "duplicate ids: none\n";
  } else {
    out << "duplicate ids:\n";
    for (const DuplicateId& dup : d.duplicate_ids) {
      out << "  " << dup.id << " (lines " << dup.first_line << " and "
          << dup.line << ")\n";
    }
  }
  out << "empty text documents: " << d.empty_text_documents << '\n';
  out << "topical: " << fmt_double(d.topical_pct) << "% miscellaneous: "
      << fmt_double(d.misc_pct) << "%\n";
  return out.str();
}

}  // namespace codmeans
