#include "attrib/tokenizer.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "attrib/error.hpp"
#include "attrib/text.hpp"

namespace attrib {

namespace {

constexpr std::string_view kSpecials[] = {kPadToken, kUnkToken, kClsToken,
                                          kSepToken};

bool is_special(std::string_view token) {
  return std::find(std::begin(kSpecials), std::end(kSpecials), token) !=
         std::end(kSpecials);
}

}  // namespace

Vocabulary Vocabulary::from_tokens(std::vector<std::string> tokens) {
  Vocabulary vocab;
  std::set<std::string_view> seen;
  for (const auto& t : tokens) {
    if (t.empty()) fail_validation("vocabulary contains an empty token");
    if (!seen.insert(t).second) fail_validation("duplicate vocabulary token: " + t);
  }
  for (std::string_view s : kSpecials) {
    if (!seen.count(s)) {
      fail_validation("vocabulary missing special token " + std::string(s));
    }
  }

  const bool canonical = tokens.size() >= 4 && tokens[0] == kPadToken &&
                         tokens[1] == kUnkToken && tokens[2] == kClsToken &&
                         tokens[3] == kSepToken;
  if (canonical) {
    vocab.tokens_ = std::move(tokens);
  } else {
    vocab.tokens_.reserve(tokens.size());
    for (std::string_view s : kSpecials) vocab.tokens_.emplace_back(s);
    for (auto& t : tokens) {
      if (!is_special(t)) vocab.tokens_.push_back(std::move(t));
    }
  }
  for (std::size_t i = 0; i < vocab.tokens_.size(); ++i) {
    vocab.index_.emplace(vocab.tokens_[i], static_cast<std::int32_t>(i));
  }
  return vocab;
}

std::int32_t Vocabulary::id_of(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  return it == index_.end() ? -1 : it->second;
}

const std::string& Vocabulary::token(std::int32_t id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= tokens_.size()) {
    fail_validation("token id out of vocabulary range: " + std::to_string(id));
  }
  return tokens_[static_cast<std::size_t>(id)];
}

Vocabulary load_vocab(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_runtime("cannot open vocabulary file: " + path.string());

  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      fail_validation("empty line " + std::to_string(tokens.size() + 1) +
                      " in vocabulary file");
    }
    decode_utf8(line);  // reject non-UTF-8 vocab entries
    tokens.push_back(line);
  }
  return Vocabulary::from_tokens(std::move(tokens));
}

void save_vocab(const Vocabulary& vocab, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail_runtime("cannot write vocabulary file: " + path.string());
  for (const auto& t : vocab.tokens()) out << t << '\n';
  if (!out) fail_runtime("write failure on vocabulary file: " + path.string());
}

Vocabulary build_vocab(const Corpus& corpus, std::size_t target_size) {
  if (corpus.documents.empty()) fail_validation("cannot build vocabulary from empty corpus");

  std::map<std::string, std::uint64_t> word_freq;
  std::set<char32_t> alphabet;
  for (const auto& doc : corpus.documents) {
    for (const auto& word : doc.words) {
      word_freq[word] += 1;
      for (char32_t cp : decode_utf8(word)) alphabet.insert(cp);
    }
  }

  const std::size_t coverage = 4 + 2 * alphabet.size();
  if (target_size < coverage) {
    fail_validation("target_size " + std::to_string(target_size) +
                    " too small for alphabet coverage (need " +
                    std::to_string(coverage) + ")");
  }

  std::vector<std::string> tokens;
  tokens.reserve(target_size);
  for (std::string_view s : kSpecials) tokens.emplace_back(s);
  for (char32_t cp : alphabet) {
    std::string piece;
    append_utf8(piece, cp);
    tokens.push_back(piece);
    tokens.push_back(std::string(kContinuation) + piece);
  }

  // Whole words by descending frequency, ties lexicographic.
  std::vector<std::pair<std::string, std::uint64_t>> ranked(word_freq.begin(),
                                                            word_freq.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::set<std::string> present(tokens.begin(), tokens.end());
  for (const auto& [word, freq] : ranked) {
    if (tokens.size() >= target_size) break;
    if (!present.insert(word).second) continue;
    tokens.push_back(word);
  }
  return Vocabulary::from_tokens(std::move(tokens));
}

std::vector<std::string> wordpiece_pieces(std::string_view word,
                                          const Vocabulary& vocab) {
  const std::u32string cps = decode_utf8(word);
  std::vector<std::string> pieces;
  std::size_t start = 0;
  while (start < cps.size()) {
    std::size_t end = cps.size();
    std::string match;
    while (end > start) {
      std::string candidate;
      if (start > 0) candidate = kContinuation;
      candidate += encode_utf8(std::u32string_view(cps).substr(start, end - start));
      if (vocab.contains(candidate)) {
        match = std::move(candidate);
        break;
      }
      --end;
    }
    if (match.empty()) return {};  // no segmentation -> whole word [UNK]
    pieces.push_back(std::move(match));
    start = end;
  }
  return pieces;
}

Encoding encode(std::span<const std::string> words, const Vocabulary& vocab,
                std::size_t max_len) {
  if (max_len < 3) fail_validation("max_len must be >= 3");

  std::vector<std::int32_t> piece_ids;
  for (const auto& word : words) {
    const std::int32_t whole = vocab.id_of(word);
    if (whole >= 0) {
      piece_ids.push_back(whole);
      continue;
    }
    const auto pieces = wordpiece_pieces(word, vocab);
    if (pieces.empty()) {
      piece_ids.push_back(Vocabulary::unk_id);
    } else {
      for (const auto& p : pieces) piece_ids.push_back(vocab.id_of(p));
    }
  }

  Encoding enc;
  const std::size_t budget = max_len - 2;  // room for [CLS] and [SEP]
  enc.overflow = piece_ids.size() > budget;
  if (enc.overflow) piece_ids.resize(budget);

  enc.input_ids.reserve(max_len);
  enc.input_ids.push_back(Vocabulary::cls_id);
  enc.input_ids.insert(enc.input_ids.end(), piece_ids.begin(), piece_ids.end());
  enc.input_ids.push_back(Vocabulary::sep_id);
  enc.input_ids.resize(max_len, Vocabulary::pad_id);

  enc.attention_mask.assign(max_len, 0);
  for (std::size_t i = 0; i < max_len; ++i) {
    enc.attention_mask[i] = enc.input_ids[i] != Vocabulary::pad_id ? 1 : 0;
  }
  return enc;
}

std::vector<std::string> decode(const Encoding& encoding, const Vocabulary& vocab) {
  std::vector<std::string> words;
  for (const std::int32_t id : encoding.input_ids) {
    if (id == Vocabulary::pad_id || id == Vocabulary::cls_id) continue;
    if (id == Vocabulary::sep_id) break;
    const std::string& piece = vocab.token(id);
    if (piece.starts_with(kContinuation) && !words.empty()) {
      words.back() += piece.substr(kContinuation.size());
    } else if (piece.starts_with(kContinuation)) {
      words.push_back(piece.substr(kContinuation.size()));
    } else {
      words.push_back(piece);
    }
  }
  return words;
}

}  // namespace attrib
