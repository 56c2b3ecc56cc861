#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "attrib/corpus.hpp"

namespace attrib {

enum class ChunkMode {
  word_boundary,        // greedy fixed-size slices, remainder in the last chunk
  sentence_preserving,  // pack whole sentences; oversize sentences hard-split
};

struct Chunk {
  std::string parent_doc;
  std::int32_t index = 0;  // ordinal within the parent, 0-based
  std::int32_t author = 0;  // inherited from the parent document
  std::vector<std::string> words;
};

// "<parent_doc>#<index>", used as the row id in prediction files.
std::string chunk_id(const Chunk& chunk);

// Chunk text used by character-level models: words joined by single spaces.
std::string chunk_text(const Chunk& chunk);

std::vector<Chunk> chunk_document(const Document& doc,
                                  std::size_t max_chunk_words = 200,
                                  ChunkMode mode = ChunkMode::word_boundary);

// Chunks every document, preserving document order. Parallel across
// documents; the merged order is deterministic.
std::vector<Chunk> chunk_corpus(const Corpus& corpus,
                                std::size_t max_chunk_words = 200,
                                ChunkMode mode = ChunkMode::word_boundary,
                                unsigned threads = 1);

// Drops chunks shorter than min_words. The default of 1 keeps everything;
// higher values break the concatenation invariant and are opt-in.
std::vector<Chunk> filter_min_words(std::vector<Chunk> chunks,
                                    std::size_t min_words);

std::vector<std::size_t> chunks_per_author(std::span<const Chunk> chunks,
                                           std::size_t n_authors);

}  // namespace attrib
