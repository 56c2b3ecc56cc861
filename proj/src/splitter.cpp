#include "attrib/splitter.hpp"

#include <cmath>

#include "attrib/error.hpp"
#include "attrib/rng.hpp"

namespace attrib {

namespace {

void check_ratios(const SplitRatios& r) {
  if (r.train < 0 || r.validation < 0 || r.test < 0) {
    fail_validation("split ratios must be non-negative");
  }
  if (std::abs(r.train + r.validation + r.test - 1.0) > 1e-9) {
    fail_validation("split ratios must sum to 1");
  }
}

std::size_t floor_share(double ratio, std::size_t n) {
  return static_cast<std::size_t>(
      std::floor(ratio * static_cast<double>(n) + 1e-9));
}

}  // namespace

SplitPlan plan_split(std::span<const DocRef> docs, std::size_t n_authors,
                     std::uint64_t seed, SplitRatios ratios) {
  check_ratios(ratios);
  if (docs.empty()) fail_validation("no documents to split");

  std::vector<std::vector<std::string>> by_author(n_authors);
  for (const DocRef& d : docs) {
    const auto a = static_cast<std::size_t>(d.author);
    if (a >= n_authors) fail_validation("document author id out of range: " + d.doc_id);
    by_author[a].push_back(d.doc_id);
  }

  const bool all_nonzero =
      ratios.train > 0 && ratios.validation > 0 && ratios.test > 0;

  SplitPlan plan;
  plan.seed = seed;
  plan.ratios = ratios;
  Rng rng(seed);

  for (std::size_t a = 0; a < n_authors; ++a) {
    auto& ids = by_author[a];
    const std::size_t n = ids.size();
    if (all_nonzero && n < 3) {
      fail_validation("author " + std::to_string(a) + " has only " +
                      std::to_string(n) + " documents; at least 3 required");
    }
    const std::size_t n_validation = floor_share(ratios.validation, n);
    const std::size_t n_test = floor_share(ratios.test, n);
    const std::size_t n_train = n - n_validation - n_test;

    rng.shuffle(ids);
    for (std::size_t i = 0; i < n; ++i) {
      Side side = Side::test;
      if (i < n_train) {
        side = Side::train;
      } else if (i < n_train + n_validation) {
        side = Side::validation;
      }
      plan.assignment.emplace(ids[i], side);
    }
  }
  return plan;
}

SplitPlan plan_split(const Corpus& corpus, std::uint64_t seed, SplitRatios ratios) {
  const auto refs = doc_refs(corpus);
  return plan_split(refs, corpus.authors.size(), seed, ratios);
}

SplitPlan merge_validation(SplitPlan plan) {
  for (auto& [doc, side] : plan.assignment) {
    if (side == Side::validation) side = Side::train;
  }
  plan.ratios = {plan.ratios.train + plan.ratios.validation, 0.0, plan.ratios.test};
  return plan;
}

SplitDataset assign_chunks(const SplitPlan& plan, std::vector<Chunk> chunks) {
  SplitDataset dataset;
  dataset.plan = plan;
  for (auto& chunk : chunks) {
    const auto it = plan.assignment.find(chunk.parent_doc);
    if (it == plan.assignment.end()) {
      fail_validation("chunk parent not in split plan: " + chunk.parent_doc);
    }
    switch (it->second) {
      case Side::train:
        dataset.train.push_back(std::move(chunk));
        break;
      case Side::validation:
        dataset.validation.push_back(std::move(chunk));
        break;
      case Side::test:
        dataset.test.push_back(std::move(chunk));
        break;
    }
  }
  return dataset;
}

std::vector<DocRef> doc_refs(const Corpus& corpus) {
  std::vector<DocRef> refs;
  refs.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) refs.push_back({doc.doc_id, doc.author});
  return refs;
}

std::vector<AuthorSplitCounts> split_table(const SplitPlan& plan,
                                           std::span<const DocRef> docs,
                                           std::size_t n_authors) {
  std::vector<AuthorSplitCounts> table(n_authors);
  for (const DocRef& d : docs) {
    const auto it = plan.assignment.find(d.doc_id);
    if (it == plan.assignment.end()) {
      fail_validation("document not in split plan: " + d.doc_id);
    }
    auto& row = table[static_cast<std::size_t>(d.author)];
    row.docs += 1;
    switch (it->second) {
      case Side::train: row.train += 1; break;
      case Side::validation: row.validation += 1; break;
      case Side::test: row.test += 1; break;
    }
  }
  return table;
}

}  // namespace attrib
