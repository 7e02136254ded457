#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codmeans/corpus.hpp"
#include "codmeans/sparse_vector.hpp"

namespace codmeans {

// Term index over unigrams and adjacent bigrams of the tokenized corpus.
// Feature ids are assigned in lexicographic term order, so they are stable
// across runs for the same corpus and min_df.
class Vocabulary {
 public:
  // Terms with document frequency < min_df are dropped. Throws
  // EmptyVocabularyError when nothing survives.
  static Vocabulary build(const LabeledCorpus& corpus, int min_df);

  std::optional<std::uint32_t> feature_id(const std::string& term) const;
  long document_frequency(const std::string& term) const;
  std::size_t size() const { return terms_.size(); }
  long total_documents() const { return total_documents_; }
  const std::vector<std::string>& terms() const { return terms_; }

  // Smoothed inverse document frequency: ln((1+N)/(1+df)) + 1.
  double idf(std::uint32_t feature) const;

 private:
  std::vector<std::string> terms_;  // sorted; index == feature id
  std::vector<long> df_;
  long total_documents_ = 0;
};

// Unigrams followed by adjacent bigrams ("a b") of a token stream.
std::vector<std::string> extract_terms(const std::vector<std::string>& tokens);

// L2-normalized TF-IDF vector of one document. Out-of-vocabulary terms are
// ignored; a document with no in-vocabulary term yields the empty (zero)
// vector, the degenerate case.
SparseVector vectorize(const Document& doc, const Vocabulary& vocab);

// A corpus prepared for clustering: documents reordered by ascending id so
// that index order, id order, and every tie-break agree.
struct VectorizedCorpus {
  std::vector<std::string> ids;     // ascending
  std::vector<std::string> labels;  // aligned with ids
  std::vector<SparseVector> vectors;
  std::vector<int> degenerate;      // indices of zero vectors
  std::vector<int> source_position; // index into corpus.documents
  Vocabulary vocab;

  int index_of(const std::string& id) const;  // -1 when absent
};

VectorizedCorpus vectorize_corpus(const LabeledCorpus& corpus, int min_df);

}  // namespace codmeans
