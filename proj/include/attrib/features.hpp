#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace attrib {

enum class ListKind { preposition, adverb, conjunction };

struct FunctionWordList {
  ListKind kind = ListKind::preposition;
  std::vector<std::string> words;  // lowercase, unique, first-occurrence order
};

enum class FeatureVariant { P, PA, PAC, char_ngram };

FeatureVariant parse_variant(std::string_view name);
std::string_view variant_name(FeatureVariant variant);

struct FeatureVector {
  std::vector<double> values;  // relative frequencies in [0, 1]
  std::int32_t label = 0;
  FeatureVariant variant = FeatureVariant::P;
};

struct IposLists {
  FunctionWordList prepositions;
  FunctionWordList adverbs;
  FunctionWordList conjunctions;
};

// One word per line; entries are lowercased and deduplicated.
FunctionWordList load_word_list(const std::filesystem::path& path, ListKind kind);

// Loads prepositions.txt / adverbs.txt / conjunctions.txt from a directory;
// only the lists the variant needs must exist.
IposLists load_ipos_lists(const std::filesystem::path& dir, FeatureVariant variant);

// Feature order is the concatenation of the lists in P, A, C order. A word
// matches a list entry case-insensitively after edge punctuation is trimmed;
// values are counts divided by the total word count of the text.
FeatureVector extract_ipos(std::span<const std::string> words,
                           const IposLists& lists, FeatureVariant variant,
                           std::int32_t label);

// Top-k character n-grams of the training texts by descending frequency,
// ties lexicographic. Feature order follows that ranking.
std::vector<std::string> build_ngram_feature_set(std::span<const std::string> texts,
                                                 std::size_t n, std::size_t top_k);

// Relative frequency of each feature n-gram over all character n-grams of
// the text (code-point n-grams, so multi-byte characters count once).
FeatureVector extract_char_ngrams(std::string_view text, std::size_t n,
                                  std::span<const std::string> feature_set,
                                  std::int32_t label);

// CSV dataset format: one line per vector, values with 6 decimals and '.'
// separator, integer label in the last column, LF line endings.
void export_dataset(std::span<const FeatureVector> vectors,
                    const std::filesystem::path& path);

// Accepts comma or whitespace delimited lines. When n_classes > 0 labels are
// range-checked against it.
std::vector<FeatureVector> import_dataset(const std::filesystem::path& path,
                                          std::int32_t n_classes = 0);

}  // namespace attrib
