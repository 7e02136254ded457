#include "codmeans/constraints.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "codmeans/rng.hpp"

namespace codmeans {

namespace {

using IdPair = std::pair<std::string, std::string>;

IdPair canonical(const std::string& a, const std::string& b) {
  return a < b ? IdPair{a, b} : IdPair{b, a};
}

// Uniform sample of `cap` pairs from one constraint group, already in
// canonical form; re-sorted afterwards so capped output stays canonical.
std::vector<IdPair> sample_group(std::vector<IdPair> pairs, long cap,
                                 Rng& rng) {
  if (cap < 0 || static_cast<std::size_t>(cap) >= pairs.size()) return pairs;
  std::sort(pairs.begin(), pairs.end());
  std::vector<IdPair> picked =
      rng.sample(std::move(pairs), static_cast<std::size_t>(cap));
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace

ConstraintSet build_constraints(
    const LabeledCorpus& corpus, std::optional<long> cap_per_category,
    std::uint64_t seed, const std::optional<std::vector<std::string>>& taxonomy) {
  // Group non-miscellaneous documents per category, sorted ids inside each.
  std::map<std::string, std::vector<std::string>> members;
  for (const Document& doc : corpus.documents) {
    if (doc.label == corpus.misc_label) continue;
    if (taxonomy && std::find(taxonomy->begin(), taxonomy->end(), doc.label) ==
                        taxonomy->end()) {
      throw UnknownLabelError("document \"" + doc.id + "\" has label \"" +
                              doc.label + "\" outside the declared taxonomy");
    }
    members[doc.label].push_back(doc.id);
  }
  for (auto& [label, ids] : members) std::sort(ids.begin(), ids.end());

  ConstraintSet set;
  for (const auto& [label, ids] : members) {
    for (const std::string& id : ids) set.category_of[id] = label;
  }

  Rng rng = Rng::substream(seed, "constraint-sampling");

  for (const auto& [label, ids] : members) {
    std::vector<IdPair> group;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        group.push_back(canonical(ids[i], ids[j]));
      }
    }
    if (cap_per_category) group = sample_group(std::move(group), *cap_per_category, rng);
    set.ml_pairs.insert(set.ml_pairs.end(), group.begin(), group.end());
  }

  for (auto it_a = members.begin(); it_a != members.end(); ++it_a) {
    for (auto it_b = std::next(it_a); it_b != members.end(); ++it_b) {
      std::vector<IdPair> group;
      for (const std::string& a : it_a->second) {
        for (const std::string& b : it_b->second) {
          group.push_back(canonical(a, b));
        }
      }
      if (cap_per_category) group = sample_group(std::move(group), *cap_per_category, rng);
      set.cl_pairs.insert(set.cl_pairs.end(), group.begin(), group.end());
    }
  }

  std::sort(set.ml_pairs.begin(), set.ml_pairs.end());
  std::sort(set.cl_pairs.begin(), set.cl_pairs.end());
  return set;
}

IndexedConstraints index_constraints(
    const ConstraintSet& set, const std::vector<std::string>& sorted_ids) {
  auto index_of = [&](const std::string& id) {
    auto it = std::lower_bound(sorted_ids.begin(), sorted_ids.end(), id);
    if (it == sorted_ids.end() || *it != id) {
      throw UnknownLabelError("constraint references unknown document \"" + id +
                              "\"");
    }
    return static_cast<int>(it - sorted_ids.begin());
  };
  IndexedConstraints out;
  out.ml.reserve(set.ml_pairs.size());
  for (const auto& [a, b] : set.ml_pairs) {
    out.ml.emplace_back(index_of(a), index_of(b));
  }
  out.cl.reserve(set.cl_pairs.size());
  for (const auto& [a, b] : set.cl_pairs) {
    out.cl.emplace_back(index_of(a), index_of(b));
  }
  return out;
}

void save_constraints_jsonl(const ConstraintSet& set, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write constraints file: " + path);
  for (const auto& [a, b] : set.ml_pairs) {
    nlohmann::json obj{{"a", a}, {"b", b}, {"type", "ML"}};
    out << obj.dump() << '\n';
  }
  for (const auto& [a, b] : set.cl_pairs) {
    nlohmann::json obj{{"a", a}, {"b", b}, {"type", "CL"}};
    out << obj.dump() << '\n';
  }
}

ConstraintSet load_constraints_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open constraints file: " + path);
  ConstraintSet set;
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
    if (!obj.contains("type") || !obj.contains("a") || !obj.contains("b")) {
      throw ParseError("constraint record needs \"type\", \"a\", \"b\"", line_no);
    }
    std::string type = obj["type"].get<std::string>();
    IdPair pair = canonical(obj["a"].get<std::string>(), obj["b"].get<std::string>());
    if (type == "ML") {
      set.ml_pairs.push_back(std::move(pair));
    } else if (type == "CL") {
      set.cl_pairs.push_back(std::move(pair));
    } else {
      throw ParseError("constraint type must be \"ML\" or \"CL\"", line_no);
    }
  }
  std::sort(set.ml_pairs.begin(), set.ml_pairs.end());
  set.ml_pairs.erase(std::unique(set.ml_pairs.begin(), set.ml_pairs.end()),
                     set.ml_pairs.end());
  std::sort(set.cl_pairs.begin(), set.cl_pairs.end());
  set.cl_pairs.erase(std::unique(set.cl_pairs.begin(), set.cl_pairs.end()),
                     set.cl_pairs.end());
  return set;
}

}  // namespace codmeans
