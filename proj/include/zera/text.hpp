#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace zera::text {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Lowercase and collapse every whitespace run to a single space (trimmed).
std::string normalize_space(std::string_view s);

// Lowercase + fold spaces/underscores/hyphens away: "Meaning Accuracy" and
// "meaning_accuracy" fold to "meaningaccuracy".
std::string fold_name(std::string_view s);

// ASCII tokenizer shared by the metrics: lowercase, split on any run of
// non-alphanumeric bytes. Deliberately locale-free.
std::vector<std::string> tokenize(std::string_view s);

// Replace every "{{name}}" with its value. Returns the rendered text;
// `unresolved` (if non-null) receives slot names left unreplaced.
std::string render_slots(std::string_view tmpl,
                         const std::vector<std::pair<std::string, std::string>>& slots,
                         std::vector<std::string>* unresolved = nullptr);

std::size_t count_occurrences(std::string_view haystack, std::string_view needle);

// Truncate to at most `budget` chars, replacing the tail with "..." when cut.
std::string truncate(std::string_view s, std::size_t budget);

std::string format_fixed(double value, int decimals);

}  // namespace zera::text
