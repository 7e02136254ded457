#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace codmeans {

// Version tag of the bundled English stop-word list. Bump when the list
// changes; downstream results are only comparable within one version.
extern const char* const kStopwordListVersion;

const std::vector<std::string>& stopword_list();
bool is_stopword(std::string_view word);

// Lowercased word tokens of a message, in order. URLs, @-mentions, the
// retweet marker, and stop-words are removed; punctuation is stripped.
// Empty input yields an empty list.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace codmeans
