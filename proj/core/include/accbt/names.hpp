#pragma once

#include <string>
#include <string_view>

namespace accbt {

/// Identity key for condition and action names: surrounding whitespace is
/// trimmed and ASCII letters are lower-cased. Two names denote the same
/// condition iff their keys are equal.
std::string fold_name(std::string_view name);

/// Whitespace-trimmed copy, case preserved.
std::string trim(std::string_view text);

}  // namespace accbt
