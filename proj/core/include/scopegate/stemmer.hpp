#pragma once

#include <string>

namespace scopegate {

// Porter's 1980 suffix-stripping algorithm (the original rule set).
// Deterministic; words of length <= 2 and tokens containing anything other
// than lowercase ASCII letters are returned unchanged.
std::string porter_stem(std::string word);

}  // namespace scopegate
