#include "attrib/chunker.hpp"

#include <algorithm>

#include "attrib/error.hpp"
#include "attrib/parallel.hpp"

namespace attrib {

std::string chunk_id(const Chunk& chunk) {
  return chunk.parent_doc + "#" + std::to_string(chunk.index);
}

std::string chunk_text(const Chunk& chunk) {
  std::string text;
  for (std::size_t i = 0; i < chunk.words.size(); ++i) {
    if (i > 0) text.push_back(' ');
    text += chunk.words[i];
  }
  return text;
}

namespace {

bool ends_sentence(const std::string& word) {
  if (word.empty()) return false;
  const char last = word.back();
  return last == '.' || last == '!' || last == '?';
}

// Sentences as [begin, end) word ranges; the final range may lack a
// terminator (end-of-text closes it).
std::vector<std::pair<std::size_t, std::size_t>> sentence_ranges(
    const std::vector<std::string>& words) {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (ends_sentence(words[i])) {
      ranges.emplace_back(begin, i + 1);
      begin = i + 1;
    }
  }
  if (begin < words.size()) ranges.emplace_back(begin, words.size());
  return ranges;
}

void emit(std::vector<Chunk>& out, const Document& doc, std::size_t begin,
          std::size_t end) {
  Chunk c;
  c.parent_doc = doc.doc_id;
  c.index = static_cast<std::int32_t>(out.size());
  c.author = doc.author;
  c.words.assign(doc.words.begin() + static_cast<std::ptrdiff_t>(begin),
                 doc.words.begin() + static_cast<std::ptrdiff_t>(end));
  out.push_back(std::move(c));
}

}  // namespace

std::vector<Chunk> chunk_document(const Document& doc,
                                  std::size_t max_chunk_words,
                                  ChunkMode mode) {
  if (doc.words.empty()) fail_validation("cannot chunk empty document " + doc.doc_id);
  if (max_chunk_words < 1) fail_validation("max_chunk_words must be >= 1");

  std::vector<Chunk> out;
  const std::size_t n = doc.words.size();

  if (mode == ChunkMode::word_boundary) {
    for (std::size_t begin = 0; begin < n; begin += max_chunk_words) {
      emit(out, doc, begin, std::min(begin + max_chunk_words, n));
    }
    return out;
  }

  // Sentence-preserving: greedy packing of whole sentences; a single
  // sentence over the limit is hard-split at word boundaries.
  std::size_t open_begin = 0;   // start of the chunk being packed
  std::size_t open_len = 0;     // words packed so far
  auto flush = [&](std::size_t end) {
    if (open_len > 0) {
      emit(out, doc, open_begin, end);
      open_len = 0;
    }
  };
  for (const auto& [s_begin, s_end] : sentence_ranges(doc.words)) {
    const std::size_t s_len = s_end - s_begin;
    if (s_len > max_chunk_words) {
      flush(s_begin);
      for (std::size_t begin = s_begin; begin < s_end; begin += max_chunk_words) {
        emit(out, doc, begin, std::min(begin + max_chunk_words, s_end));
      }
      open_begin = s_end;
      continue;
    }
    if (open_len + s_len > max_chunk_words) {
      flush(s_begin);
      open_begin = s_begin;
    }
    if (open_len == 0) open_begin = s_begin;
    open_len += s_len;
  }
  flush(n);
  return out;
}

std::vector<Chunk> chunk_corpus(const Corpus& corpus, std::size_t max_chunk_words,
                                ChunkMode mode, unsigned threads) {
  std::vector<std::vector<Chunk>> per_doc(corpus.documents.size());
  parallel_for(corpus.documents.size(), threads, [&](std::size_t i) {
    per_doc[i] = chunk_document(corpus.documents[i], max_chunk_words, mode);
  });
  std::vector<Chunk> all;
  for (auto& chunks : per_doc) {
    all.insert(all.end(), std::make_move_iterator(chunks.begin()),
               std::make_move_iterator(chunks.end()));
  }
  return all;
}

std::vector<Chunk> filter_min_words(std::vector<Chunk> chunks,
                                    std::size_t min_words) {
  if (min_words <= 1) return chunks;
  std::erase_if(chunks, [&](const Chunk& c) { return c.words.size() < min_words; });
  return chunks;
}

std::vector<std::size_t> chunks_per_author(std::span<const Chunk> chunks,
                                           std::size_t n_authors) {
  std::vector<std::size_t> counts(n_authors, 0);
  for (const Chunk& c : chunks) {
    const auto a = static_cast<std::size_t>(c.author);
    if (a >= n_authors) fail_validation("chunk author id out of range");
    counts[a] += 1;
  }
  return counts;
}

}  // namespace attrib
