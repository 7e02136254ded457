#include "codmeans/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_map>

#include <json.hpp>

namespace codmeans {

std::vector<std::string> LabeledCorpus::topical_labels() const {
  std::set<std::string> labels;
  for (const Document& d : documents) {
    if (d.label != misc_label) labels.insert(d.label);
  }
  return {labels.begin(), labels.end()};
}

std::map<std::string, long> LabeledCorpus::label_histogram() const {
  std::map<std::string, long> hist;
  for (const Document& d : documents) ++hist[d.label];
  return hist;
}

long LabeledCorpus::misc_count() const {
  long n = 0;
  for (const Document& d : documents) {
    if (d.label == misc_label) ++n;
  }
  return n;
}

CorpusLoadResult load_corpus_jsonl(const std::string& path,
                                   const std::string& misc_label) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file: " + path);

  CorpusLoadResult result;
  result.corpus.misc_label = misc_label;
  std::unordered_map<std::string, int> first_line_of;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("text") ||
        !obj.contains("label") || !obj["id"].is_string() ||
        !obj["text"].is_string() || !obj["label"].is_string()) {
      throw ParseError(
          "corpus record needs string fields \"id\", \"text\", \"label\"",
          line_no);
    }
    Document doc{obj["id"].get<std::string>(), obj["text"].get<std::string>(),
                 obj["label"].get<std::string>()};
    auto [it, inserted] = first_line_of.emplace(doc.id, line_no);
    if (!inserted) {
      result.duplicate_ids.push_back({doc.id, it->second, line_no});
    }
    if (doc.text.empty()) result.empty_text_lines.push_back(line_no);
    result.corpus.documents.push_back(std::move(doc));
  }
  return result;
}

LabeledCorpus load_clean_corpus(const std::string& path,
                                const std::string& misc_label) {
  CorpusLoadResult loaded = load_corpus_jsonl(path, misc_label);
  if (!loaded.duplicate_ids.empty()) {
    const DuplicateId& dup = loaded.duplicate_ids.front();
    throw ParseError("duplicate document id \"" + dup.id + "\" (first seen line " +
                         std::to_string(dup.first_line) + ")",
                     dup.line);
  }
  return std::move(loaded.corpus);
}

void save_corpus_jsonl(const LabeledCorpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write corpus file: " + path);
  for (const Document& d : corpus.documents) {
    nlohmann::json obj;
    obj["id"] = d.id;
    obj["label"] = d.label;
    obj["text"] = d.text;
    out << obj.dump() << '\n';
  }
}

}  // namespace codmeans
