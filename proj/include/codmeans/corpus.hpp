#pragma once

#include <map>
#include <string>
#include <vector>

#include "codmeans/error.hpp"

namespace codmeans {

struct Document {
  std::string id;
  std::string text;
  std::string label;
};

// A categorized document collection: topical labels plus one designated
// miscellaneous label. Documents keep their input order; pipelines that need
// a canonical order sort by id when vectorizing.
struct LabeledCorpus {
  std::vector<Document> documents;
  std::string misc_label = "Z";

  // Distinct non-miscellaneous labels in sorted order.
  std::vector<std::string> topical_labels() const;
  std::map<std::string, long> label_histogram() const;
  long misc_count() const;
};

struct DuplicateId {
  std::string id;
  int first_line;
  int line;
};

struct CorpusLoadResult {
  LabeledCorpus corpus;
  std::vector<DuplicateId> duplicate_ids;
  std::vector<int> empty_text_lines;
};

// Reads a JSON Lines corpus: one object per line with string fields "id",
// "text", "label". Duplicate ids and empty texts are reported, not fatal.
// Throws ParseError (with the line number) on malformed input.
CorpusLoadResult load_corpus_jsonl(const std::string& path,
                                   const std::string& misc_label = "Z");

// Same, but duplicate ids are an error.
LabeledCorpus load_clean_corpus(const std::string& path,
                                const std::string& misc_label = "Z");

void save_corpus_jsonl(const LabeledCorpus& corpus, const std::string& path);

}  // namespace codmeans
