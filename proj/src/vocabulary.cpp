#include "codmeans/vocabulary.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "codmeans/tokenizer.hpp"

namespace codmeans {

std::vector<std::string> extract_terms(
    const std::vector<std::string>& tokens) {
  std::vector<std::string> terms;
  terms.reserve(tokens.size() * 2);
  for (const std::string& t : tokens) terms.push_back(t);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    terms.push_back(tokens[i] + " " + tokens[i + 1]);
  }
  return terms;
}

Vocabulary Vocabulary::build(const LabeledCorpus& corpus, int min_df) {
  if (corpus.documents.empty()) {
    throw EmptyVocabularyError("cannot build a vocabulary from an empty corpus");
  }
  std::map<std::string, long> df;
  for (const Document& doc : corpus.documents) {
    std::vector<std::string> terms = extract_terms(tokenize(doc.text));
    std::set<std::string> distinct(terms.begin(), terms.end());
    for (const std::string& t : distinct) ++df[t];
  }

  Vocabulary vocab;
  vocab.total_documents_ = static_cast<long>(corpus.documents.size());
  for (const auto& [term, count] : df) {
    if (count >= min_df) {
      vocab.terms_.push_back(term);  // map iteration is already lexicographic
      vocab.df_.push_back(count);
    }
  }
  if (vocab.terms_.empty()) {
    throw EmptyVocabularyError("every term was pruned (min_df=" +
                               std::to_string(min_df) + ")");
  }
  return vocab;
}

std::optional<std::uint32_t> Vocabulary::feature_id(
    const std::string& term) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
  if (it == terms_.end() || *it != term) return std::nullopt;
  return static_cast<std::uint32_t>(it - terms_.begin());
}

long Vocabulary::document_frequency(const std::string& term) const {
  std::optional<std::uint32_t> id = feature_id(term);
  return id ? df_[*id] : 0;
}

double Vocabulary::idf(std::uint32_t feature) const {
  return std::log((1.0 + static_cast<double>(total_documents_)) /
                  (1.0 + static_cast<double>(df_[feature]))) +
         1.0;
}

SparseVector vectorize(const Document& doc, const Vocabulary& vocab) {
  std::map<std::uint32_t, long> counts;
  for (const std::string& term : extract_terms(tokenize(doc.text))) {
    if (std::optional<std::uint32_t> id = vocab.feature_id(term)) {
      ++counts[*id];
    }
  }
  std::vector<SparseEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [id, tf] : counts) {
    entries.push_back({id, static_cast<double>(tf) * vocab.idf(id)});
  }
  SparseVector v = SparseVector::from_entries(std::move(entries));
  v.normalize();
  return v;
}

int VectorizedCorpus::index_of(const std::string& id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return -1;
  return static_cast<int>(it - ids.begin());
}

VectorizedCorpus vectorize_corpus(const LabeledCorpus& corpus, int min_df) {
  VectorizedCorpus out;
  out.vocab = Vocabulary::build(corpus, min_df);

  std::vector<int> order(corpus.documents.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return corpus.documents[a].id < corpus.documents[b].id;
  });

  out.ids.reserve(order.size());
  out.labels.reserve(order.size());
  out.vectors.reserve(order.size());
  for (int pos : order) {
    const Document& doc = corpus.documents[pos];
    out.ids.push_back(doc.id);
    out.labels.push_back(doc.label);
    out.vectors.push_back(vectorize(doc, out.vocab));
    out.source_position.push_back(pos);
    if (out.vectors.back().empty()) {
      out.degenerate.push_back(static_cast<int>(out.vectors.size()) - 1);
    }
  }
  return out;
}

}  // namespace codmeans
