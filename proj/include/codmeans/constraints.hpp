#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codmeans/corpus.hpp"

namespace codmeans {

// Pairwise background knowledge derived from the existing categorization:
// documents sharing a topical category must link, documents of different
// topical categories cannot link, and miscellaneous documents are left
// unconstrained. Pairs are stored in canonical form (lexicographically
// smaller id first) and sorted, so iteration order is deterministic.
struct ConstraintSet {
  std::vector<std::pair<std::string, std::string>> ml_pairs;
  std::vector<std::pair<std::string, std::string>> cl_pairs;
  std::map<std::string, std::string> category_of;  // non-misc documents only
};

// Materializes the full quadratic constraint set, or a seeded uniform sample
// of cap_per_category pairs per category (must-link) and per category pair
// (cannot-link). The capped set is a subset of the uncapped one. An optional
// explicit taxonomy restricts the accepted labels; documents labeled outside
// it raise UnknownLabelError.
ConstraintSet build_constraints(
    const LabeledCorpus& corpus,
    std::optional<long> cap_per_category = std::nullopt,
    std::uint64_t seed = 0,
    const std::optional<std::vector<std::string>>& taxonomy = std::nullopt);

// Index-based view used by the solver; pair order mirrors the id order.
struct IndexedConstraints {
  std::vector<std::pair<int, int>> ml;
  std::vector<std::pair<int, int>> cl;

  bool empty() const { return ml.empty() && cl.empty(); }
};

// Maps id pairs onto positions in an ascending id list. Unknown ids raise
// UnknownLabelError.
IndexedConstraints index_constraints(const ConstraintSet& set,
                                     const std::vector<std::string>& sorted_ids);

// JSON Lines export/import ({"type":"ML"|"CL","a":id,"b":id}) for audits.
void save_constraints_jsonl(const ConstraintSet& set, const std::string& path);
ConstraintSet load_constraints_jsonl(const std::string& path);

}  // namespace codmeans
