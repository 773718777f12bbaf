#include <sstream>

#include "scopegate/textproc.hpp"
#include "scopegate/stopwords_data.inc"

namespace scopegate {

const std::vector<std::string>& default_stopword_list() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> out;
    std::istringstream in(kStopwordsText);
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      TokenStream toks = tokenize(line);
      for (auto& t : toks.tokens) out.push_back(std::move(t));
    }
    return out;
  }();
  return words;
}

std::unordered_set<std::string> default_stopwords() {
  const auto& list = default_stopword_list();
  return {list.begin(), list.end()};
}

}  // namespace scopegate
