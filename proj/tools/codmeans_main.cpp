// Command-line experiment runner: corpus validation, outlier-count sweeps
// with cluster discovery, and corpus refinement (labeling-error detection
// plus miscellaneous-to-topic reassignment).
//
// Exit codes: 0 success, 1 validation/input failure, 2 solver failure.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "codmeans/error.hpp"
#include "codmeans/experiment.hpp"

namespace {

struct CommonOpts {
  codmeans::ExperimentSpec spec;
  long constraint_cap = -1;
  int k_o = -1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--corpus", opts.spec.corpus_path,
                  "JSON Lines corpus (fields: id, text, label)")
      ->required();
  cmd->add_option("--misc-label", opts.spec.misc_label,
                  "label of the miscellaneous category")
      ->capture_default_str();
  cmd->add_option("--seed", opts.spec.seed, "random seed")
      ->capture_default_str();
  cmd->add_option("--max-iters", opts.spec.max_iters,
                  "solver iteration limit")
      ->capture_default_str();
  cmd->add_option("--tol", opts.spec.tol,
                  "relative error-change convergence threshold")
      ->capture_default_str();
  cmd->add_option("--min-df", opts.spec.min_df,
                  "minimum document frequency for vocabulary terms")
      ->capture_default_str();
  cmd->add_option("--constraint-cap", opts.constraint_cap,
                  "max constraint pairs per category / category pair "
                  "(default: full materialization)");
  cmd->add_option("--k-o", opts.k_o,
                  "declared topical category count (default: inferred)");
  cmd->add_option("--out-dir", opts.spec.out_dir, "output directory")
      ->capture_default_str();
}

void finish_common(CommonOpts& opts) {
  if (opts.constraint_cap >= 0) opts.spec.constraint_cap = opts.constraint_cap;
  if (opts.k_o >= 0) opts.spec.k_o_override = opts.k_o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constrained clustering with outlier detection for labeled "
               "document corpora"};
  app.require_subcommand(1);

  CommonOpts sweep_opts;
  sweep_opts.spec.out_dir = "sweep_out";
  CLI::App* sweep = app.add_subcommand(
      "sweep", "run cluster discovery across a range of outlier counts");
  add_common(sweep, sweep_opts);
  sweep->add_option("--n", sweep_opts.spec.n, "number of candidate clusters")
      ->capture_default_str();
  sweep->add_option("--m", sweep_opts.spec.m, "top-m cluster selection")
      ->capture_default_str();
  sweep->add_option("--ell-min", sweep_opts.spec.ell_min,
                    "smallest outlier count per cluster")
      ->capture_default_str();
  sweep->add_option("--ell-max", sweep_opts.spec.ell_max,
                    "largest outlier count per cluster")
      ->capture_default_str();

  CommonOpts refine_opts;
  refine_opts.spec.out_dir = "refine_out";
  CLI::App* refine = app.add_subcommand(
      "refine", "detect labeling errors and reassign miscellaneous documents");
  add_common(refine, refine_opts);
  refine->add_option("--ell", refine_opts.spec.refine_ell,
                     "outliers trimmed per cluster")
      ->capture_default_str();

  std::string validate_corpus_path;
  std::string validate_misc = "Z";
  CLI::App* validate =
      app.add_subcommand("validate", "check a corpus file and print stats");
  validate->add_option("--corpus", validate_corpus_path, "JSON Lines corpus")
      ->required();
  validate->add_option("--misc-label", validate_misc,
                       "label of the miscellaneous category")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      finish_common(sweep_opts);
      codmeans::SweepOutcome out = codmeans::run_sweep(sweep_opts.spec);
      std::cout << "k=" << out.k << " k_o=" << out.k_o
                << " optimal_ell=" << out.optimal_ell << '\n'
                << "wrote " << out.csv_path << '\n'
                << "wrote " << out.summary_path << '\n';
    } else if (refine->parsed()) {
      finish_common(refine_opts);
      codmeans::RefineOutcome out = codmeans::run_refine(refine_opts.spec);
      std::cout << "k=" << out.k << " k_o=" << out.k_o << " labeling_errors="
                << out.labeling_errors << " reassignments="
                << out.reassignments << '\n'
                << "wrote " << out.report_path << '\n'
                << "wrote " << out.errors_csv_path << '\n'
                << "wrote " << out.reassignments_csv_path << '\n'
                << "wrote " << out.improved_corpus_path << '\n';
    } else if (validate->parsed()) {
      codmeans::CorpusDiagnostics d =
          codmeans::validate_corpus(validate_corpus_path, validate_misc);
      std::cout << codmeans::format_diagnostics(d);
      if (!d.duplicate_ids.empty()) return 1;
    }
  } catch (const codmeans::SolverFailure& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return 2;
  } catch (const codmeans::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
