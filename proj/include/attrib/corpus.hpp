#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace attrib {

struct AuthorInfo {
  std::int32_t id = 0;  // contiguous from 0, manifest order
  std::string name;
};

struct Document {
  std::string doc_id;
  std::int32_t author = 0;
  std::string title;
  std::vector<std::string> words;  // always equals word_tokens(raw_text)
  std::string raw_text;
  std::string source_uri;  // empty when unknown
};

struct CorpusStats {
  std::size_t n_docs = 0;
  std::size_t n_authors = 0;
  std::vector<std::size_t> docs_per_author;
  double mean_words_per_doc = 0.0;
  // Sample (n-1) standard deviation of documents per author.
  double imbalance = 0.0;
  std::size_t min_words = 0;
  std::size_t max_words = 0;
};

struct Corpus {
  std::vector<AuthorInfo> authors;
  std::vector<Document> documents;
};

// Maximal runs of non-whitespace characters, split on Unicode whitespace.
// Punctuation stays attached to adjacent characters.
std::vector<std::string> word_tokens(std::string_view text);

// Loads a corpus from a JSON manifest:
//   { "authors": [ { "name": str,
//                    "documents": [ { "id": str, "title": str, "path": str } ] } ] }
// Author ids follow array order; document paths resolve relative to the
// manifest's directory. Text files must be UTF-8.
Corpus load_corpus(const std::filesystem::path& manifest_path);

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace attrib
