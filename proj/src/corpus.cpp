#include "attrib/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "attrib/error.hpp"
#include "attrib/text.hpp"
#include "json.hpp"

namespace attrib {

std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = next_codepoint(text, pos);
    if (is_unicode_space(cp)) {
      if (!current.empty()) {
        words.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.append(text.substr(start, pos - start));
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

namespace {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_runtime("cannot open text file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) fail_runtime("cannot open manifest: " + manifest_path.string());

  nlohmann::json manifest;
  try {
    in >> manifest;
  } catch (const nlohmann::json::exception& e) {
    fail_validation("malformed manifest JSON: " + std::string(e.what()));
  }

  if (!manifest.is_object() || !manifest.contains("authors") ||
      !manifest["authors"].is_array()) {
    fail_validation("manifest must be an object with an \"authors\" array");
  }
  const auto& authors = manifest["authors"];
  if (authors.empty()) fail_validation("empty manifest");

  const std::filesystem::path base = manifest_path.parent_path();
  Corpus corpus;
  std::unordered_set<std::string> seen_names;
  std::unordered_set<std::string> seen_ids;

  for (std::size_t a = 0; a < authors.size(); ++a) {
    const auto& entry = authors[a];
    const std::string name = entry.value("name", std::string());
    if (name.empty()) {
      fail_validation("author " + std::to_string(a) + " has an empty name");
    }
    if (!seen_names.insert(name).second) {
      fail_validation("duplicate author name: " + name);
    }
    if (!entry.contains("documents") || !entry["documents"].is_array() ||
        entry["documents"].empty()) {
      fail_validation("author \"" + name + "\" has no documents");
    }
    corpus.authors.push_back({static_cast<std::int32_t>(a), name});

    for (const auto& doc : entry["documents"]) {
      Document d;
      d.doc_id = doc.value("id", std::string());
      if (d.doc_id.empty()) {
        fail_validation("document without id under author \"" + name + "\"");
      }
      if (!seen_ids.insert(d.doc_id).second) {
        fail_validation("duplicate doc_id: " + d.doc_id);
      }
      d.author = static_cast<std::int32_t>(a);
      d.title = doc.value("title", std::string());
      const std::string rel = doc.value("path", std::string());
      if (rel.empty()) fail_validation("document " + d.doc_id + " has no path");
      std::filesystem::path p(rel);
      if (p.is_relative()) p = base / p;
      if (!std::filesystem::exists(p)) {
        fail_runtime("missing text file for " + d.doc_id + ": " + p.string());
      }
      d.raw_text = read_text_file(p);
      try {
        d.words = word_tokens(d.raw_text);
      } catch (const Error& e) {
        fail_validation("document " + d.doc_id + ": " + e.what());
      }
      if (d.words.empty()) {
        fail_validation("document " + d.doc_id + " contains no words");
      }
      d.source_uri = doc.value("source", std::string());
      corpus.documents.push_back(std::move(d));
    }
  }
  return corpus;
}

CorpusStats corpus_stats(const Corpus& corpus) {
  if (corpus.documents.empty()) fail_validation("corpus has no documents");

  CorpusStats stats;
  stats.n_docs = corpus.documents.size();
  stats.n_authors = corpus.authors.size();
  stats.docs_per_author.assign(stats.n_authors, 0);

  std::size_t total_words = 0;
  stats.min_words = corpus.documents.front().words.size();
  stats.max_words = stats.min_words;
  for (const auto& doc : corpus.documents) {
    stats.docs_per_author[static_cast<std::size_t>(doc.author)] += 1;
    total_words += doc.words.size();
    stats.min_words = std::min(stats.min_words, doc.words.size());
    stats.max_words = std::max(stats.max_words, doc.words.size());
  }
  stats.mean_words_per_doc =
      static_cast<double>(total_words) / static_cast<double>(stats.n_docs);

  const double mean_docs =
      static_cast<double>(stats.n_docs) / static_cast<double>(stats.n_authors);
  double ss = 0.0;
  for (std::size_t count : stats.docs_per_author) {
    const double d = static_cast<double>(count) - mean_docs;
    ss += d * d;
  }
  stats.imbalance = stats.n_authors > 1
                        ? std::sqrt(ss / static_cast<double>(stats.n_authors - 1))
                        : 0.0;
  return stats;
}

}  // namespace attrib
