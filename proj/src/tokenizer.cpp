#include "codmeans/tokenizer.hpp"

#include <cctype>

namespace codmeans {

namespace {

bool is_token_char(unsigned char c) {
  // ASCII alphanumerics plus any non-ASCII byte; everything else separates.
  return std::isalnum(c) || c >= 0x80;
}

std::string lowered(std::string_view chunk) {
  std::string out(chunk);
  for (char& c : out) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 0x80) c = static_cast<char>(std::tolower(u));
  }
  return out;
}

bool looks_like_url(const std::string& chunk) {
  return chunk.find("http://") != std::string::npos ||
         chunk.find("https://") != std::string::npos ||
         chunk.rfind("www.", 0) == 0;
}

// A chunk whose first token character is preceded only by punctuation and an
// '@' is a user mention ("@name", "(@name)", ".@name:").
bool looks_like_mention(const std::string& chunk) {
  for (std::size_t i = 0; i < chunk.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(chunk[i]);
    if (c == '@') return true;
    if (is_token_char(c)) return false;
  }
  return false;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    if (end == pos) break;
    std::string chunk = lowered(text.substr(pos, end - pos));
    pos = end;

    if (looks_like_url(chunk) || looks_like_mention(chunk)) continue;

    std::size_t i = 0;
    while (i < chunk.size()) {
      while (i < chunk.size() &&
             !is_token_char(static_cast<unsigned char>(chunk[i]))) {
        ++i;
      }
      std::size_t j = i;
      while (j < chunk.size() &&
             is_token_char(static_cast<unsigned char>(chunk[j]))) {
        ++j;
      }
      if (j > i) {
        std::string word = chunk.substr(i, j - i);
        if (word != "rt" && !is_stopword(word)) tokens.push_back(word);
      }
      i = j;
    }
  }
  return tokens;
}

}  // namespace codmeans
