#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "attrib/chunker.hpp"
#include "attrib/corpus.hpp"

namespace attrib {

enum class Side : std::uint8_t { train = 0, validation = 1, test = 2 };

struct SplitRatios {
  double train = 0.50;
  double validation = 0.25;
  double test = 0.25;
};

struct DocRef {
  std::string doc_id;
  std::int32_t author = 0;
};

// Document-level split decisions. Chunks inherit their parent's side, so a
// document never contributes to both train and test.
struct SplitPlan {
  std::uint64_t seed = 0;
  SplitRatios ratios;
  std::map<std::string, Side> assignment;  // doc_id -> side
};

struct SplitDataset {
  std::vector<Chunk> train;
  std::vector<Chunk> validation;  // empty after merge_validation
  std::vector<Chunk> test;
  SplitPlan plan;
};

struct AuthorSplitCounts {
  std::size_t docs = 0;
  std::size_t train = 0;
  std::size_t validation = 0;
  std::size_t test = 0;
};

// Stratified split: per author with n documents, validation and test each
// get floor(ratio * n) and train takes the remainder. Documents are permuted
// per author by a seeded Fisher-Yates shuffle (see Rng) before assignment.
SplitPlan plan_split(std::span<const DocRef> docs_in_corpus_order,
                     std::size_t n_authors, std::uint64_t seed,
                     SplitRatios ratios = {});

SplitPlan plan_split(const Corpus& corpus, std::uint64_t seed,
                     SplitRatios ratios = {});

// Reassigns every validation document to train. Idempotent.
SplitPlan merge_validation(SplitPlan plan);

// Each chunk inherits its parent document's assignment.
SplitDataset assign_chunks(const SplitPlan& plan, std::vector<Chunk> chunks);

std::vector<DocRef> doc_refs(const Corpus& corpus);

// Per-author document counts of a plan, for the split table output.
std::vector<AuthorSplitCounts> split_table(const SplitPlan& plan,
                                           std::span<const DocRef> docs,
                                           std::size_t n_authors);

}  // namespace attrib
