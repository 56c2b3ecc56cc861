#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "attrib/corpus.hpp"

namespace attrib {

inline constexpr std::string_view kPadToken = "[PAD]";
inline constexpr std::string_view kUnkToken = "[UNK]";
inline constexpr std::string_view kClsToken = "[CLS]";
inline constexpr std::string_view kSepToken = "[SEP]";
inline constexpr std::string_view kContinuation = "##";
inline constexpr std::size_t kDefaultVocabSize = 50000;

// Subword vocabulary. The four special tokens always sit at ids 0-3;
// vocabularies loaded with a different layout are remapped (specials first,
// remaining tokens in file order).
class Vocabulary {
 public:
  static constexpr std::int32_t pad_id = 0;
  static constexpr std::int32_t unk_id = 1;
  static constexpr std::int32_t cls_id = 2;
  static constexpr std::int32_t sep_id = 3;

  // Validates uniqueness and presence of the specials, remapping if needed.
  static Vocabulary from_tokens(std::vector<std::string> tokens);

  std::int32_t id_of(std::string_view token) const;  // -1 when absent
  bool contains(std::string_view token) const { return id_of(token) >= 0; }
  const std::string& token(std::int32_t id) const;
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::int32_t> index_;
};

struct Encoding {
  std::vector<std::int32_t> input_ids;       // exactly max_len
  std::vector<std::uint8_t> attention_mask;  // 1 iff the position is not pad
  bool overflow = false;                     // pieces were truncated
};

// One token per line, UTF-8, LF-terminated.
Vocabulary load_vocab(const std::filesystem::path& path);
void save_vocab(const Vocabulary& vocab, const std::filesystem::path& path);

// Frequency-based construction with full character coverage: specials, then
// every seen character (plain and "##" form), then whole words by descending
// frequency (ties lexicographic) until target_size is reached.
Vocabulary build_vocab(const Corpus& corpus, std::size_t target_size);

// Greedy longest-match segmentation of one word. The first piece is matched
// bare, later pieces in "##" form. Returns an empty vector when some position
// has no match (the caller emits [UNK] for the whole word).
std::vector<std::string> wordpiece_pieces(std::string_view word,
                                          const Vocabulary& vocab);

// [CLS] pieces [SEP], truncated to max_len and padded with [PAD].
Encoding encode(std::span<const std::string> words, const Vocabulary& vocab,
                std::size_t max_len = 256);

// Strips specials and padding and joins "##" pieces back into words.
std::vector<std::string> decode(const Encoding& encoding, const Vocabulary& vocab);

}  // namespace attrib
