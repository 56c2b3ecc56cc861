#include "attrib/features.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "attrib/error.hpp"
#include "attrib/text.hpp"

namespace attrib {

FeatureVariant parse_variant(std::string_view name) {
  if (name == "P") return FeatureVariant::P;
  if (name == "PA") return FeatureVariant::PA;
  if (name == "PAC") return FeatureVariant::PAC;
  if (name == "ngram") return FeatureVariant::char_ngram;
  fail_validation("unknown feature variant: " + std::string(name));
}

std::string_view variant_name(FeatureVariant variant) {
  switch (variant) {
    case FeatureVariant::P: return "P";
    case FeatureVariant::PA: return "PA";
    case FeatureVariant::PAC: return "PAC";
    case FeatureVariant::char_ngram: return "ngram";
  }
  return "?";
}

FunctionWordList load_word_list(const std::filesystem::path& path, ListKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_runtime("cannot open word list: " + path.string());

  FunctionWordList list;
  list.kind = kind;
  std::string line;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string word = lower_utf8(line);
    if (seen.insert(word).second) list.words.push_back(std::move(word));
  }
  if (list.words.empty()) fail_validation("empty word list: " + path.string());
  return list;
}

IposLists load_ipos_lists(const std::filesystem::path& dir, FeatureVariant variant) {
  IposLists lists;
  lists.prepositions = load_word_list(dir / "prepositions.txt", ListKind::preposition);
  if (variant == FeatureVariant::PA || variant == FeatureVariant::PAC) {
    lists.adverbs = load_word_list(dir / "adverbs.txt", ListKind::adverb);
  }
  if (variant == FeatureVariant::PAC) {
    lists.conjunctions = load_word_list(dir / "conjunctions.txt", ListKind::conjunction);
  }
  return lists;
}

FeatureVector extract_ipos(std::span<const std::string> words,
                           const IposLists& lists, FeatureVariant variant,
                           std::int32_t label) {
  if (variant == FeatureVariant::char_ngram) {
    fail_validation("extract_ipos does not handle the ngram variant");
  }
  if (words.empty()) fail_validation("cannot extract features from empty text");

  std::vector<const FunctionWordList*> active{&lists.prepositions};
  if (variant == FeatureVariant::PA || variant == FeatureVariant::PAC) {
    active.push_back(&lists.adverbs);
  }
  if (variant == FeatureVariant::PAC) active.push_back(&lists.conjunctions);

  std::size_t dim = 0;
  // A word form may appear in several lists; each occurrence counts for
  // every matching feature position.
  std::unordered_map<std::string, std::vector<std::size_t>> positions;
  for (const FunctionWordList* list : active) {
    if (list->words.empty()) fail_validation("required function-word list is empty");
    for (const auto& w : list->words) positions[w].push_back(dim++);
  }

  FeatureVector fv;
  fv.variant = variant;
  fv.label = label;
  fv.values.assign(dim, 0.0);

  for (const auto& raw : words) {
    const std::string core = trim_word_punct(raw);
    if (core.empty()) continue;
    const auto it = positions.find(lower_utf8(core));
    if (it == positions.end()) continue;
    for (std::size_t p : it->second) fv.values[p] += 1.0;
  }
  const double total = static_cast<double>(words.size());
  for (double& v : fv.values) v /= total;
  return fv;
}

std::vector<std::string> build_ngram_feature_set(std::span<const std::string> texts,
                                                 std::size_t n, std::size_t top_k) {
  if (n < 1) fail_validation("n-gram size must be >= 1");
  std::map<std::u32string, std::uint64_t> counts;
  for (const auto& text : texts) {
    const std::u32string cps = decode_utf8(text);
    if (cps.size() < n) continue;
    for (std::size_t i = 0; i + n <= cps.size(); ++i) counts[cps.substr(i, n)] += 1;
  }
  std::vector<std::pair<std::u32string, std::uint64_t>> ranked(counts.begin(),
                                                               counts.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > top_k) ranked.resize(top_k);

  std::vector<std::string> features;
  features.reserve(ranked.size());
  for (const auto& [gram, freq] : ranked) features.push_back(encode_utf8(gram));
  return features;
}

FeatureVector extract_char_ngrams(std::string_view text, std::size_t n,
                                  std::span<const std::string> feature_set,
                                  std::int32_t label) {
  if (n < 1) fail_validation("n-gram size must be >= 1");
  const std::u32string cps = decode_utf8(text);
  if (cps.size() < n) {
    fail_validation("text shorter than n-gram size " + std::to_string(n));
  }

  std::unordered_map<std::u32string, std::size_t> index;
  for (std::size_t i = 0; i < feature_set.size(); ++i) {
    index.emplace(decode_utf8(feature_set[i]), i);
  }

  FeatureVector fv;
  fv.variant = FeatureVariant::char_ngram;
  fv.label = label;
  fv.values.assign(feature_set.size(), 0.0);

  const std::size_t total = cps.size() - n + 1;
  for (std::size_t i = 0; i < total; ++i) {
    const auto it = index.find(cps.substr(i, n));
    if (it != index.end()) fv.values[it->second] += 1.0;
  }
  for (double& v : fv.values) v /= static_cast<double>(total);
  return fv;
}

void export_dataset(std::span<const FeatureVector> vectors,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail_runtime("cannot write dataset: " + path.string());
  char buf[64];
  for (const auto& fv : vectors) {
    if (fv.label < 0) fail_validation("negative label in dataset export");
    std::string line;
    for (const double v : fv.values) {
      std::snprintf(buf, sizeof(buf), "%.6f", v);
      line += buf;
      line.push_back(',');
    }
    line += std::to_string(fv.label);
    out << line << '\n';
  }
  if (!out) fail_runtime("write failure on dataset: " + path.string());
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  const bool comma = line.find(',') != std::string::npos;
  std::string field;
  std::istringstream ss(line);
  if (comma) {
    while (std::getline(ss, field, ',')) fields.push_back(field);
  } else {
    while (ss >> field) fields.push_back(field);
  }
  return fields;
}

}  // namespace

std::vector<FeatureVector> import_dataset(const std::filesystem::path& path,
                                          std::int32_t n_classes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_runtime("cannot open dataset: " + path.string());

  std::vector<FeatureVector> vectors;
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() < 2) {
      fail_validation("line " + std::to_string(line_no) +
                      ": expected values plus a label column");
    }
    FeatureVector fv;
    for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
      double v = 0.0;
      const auto& f = fields[i];
      const auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || p != f.data() + f.size()) {
        fail_validation("line " + std::to_string(line_no) + ": bad value \"" + f + "\"");
      }
      fv.values.push_back(v);
    }
    const auto& last = fields.back();
    std::int32_t label = 0;
    const auto [p, ec] = std::from_chars(last.data(), last.data() + last.size(), label);
    if (ec != std::errc() || p != last.data() + last.size()) {
      fail_validation("line " + std::to_string(line_no) + ": bad label \"" + last + "\"");
    }
    if (label < 0 || (n_classes > 0 && label >= n_classes)) {
      fail_validation("line " + std::to_string(line_no) + ": label " +
                      std::to_string(label) + " out of range");
    }
    fv.label = label;
    if (dim == 0) {
      dim = fv.values.size();
    } else if (fv.values.size() != dim) {
      fail_validation("line " + std::to_string(line_no) + ": inconsistent column count");
    }
    vectors.push_back(std::move(fv));
  }
  return vectors;
}

}  // namespace attrib
