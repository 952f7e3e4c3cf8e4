#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rubiscot/core/types.hpp"

namespace rubiscot {

enum class ExpectationKind { Expectation, Guideline, RubricSource };
const char* to_string(ExpectationKind kind);
ExpectationKind expectation_kind_from_string(const std::string& name);

// Human-authored reference material: requirements for a thesis section, or
// general guidelines. target_section restricts which retrievals the document
// participates in; unset means it is a candidate for every query.
struct ExpectationDocument {
  std::string doc_id;
  ExpectationKind kind = ExpectationKind::Expectation;
  std::optional<SectionKind> target_section;
  std::string text;

  bool operator==(const ExpectationDocument&) const = default;
};

struct Chunk {
  std::string doc_id;
  std::size_t chunk_index = 0;
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Chunk&) const = default;
};

struct ScoredChunk {
  Chunk chunk;
  double score = 0.0;
};

// Sliding windows of chunk_size characters advancing by chunk_size - overlap.
// Consecutive chunks share exactly `overlap` characters; reassembling
// chunk0 + each later chunk minus its first `overlap` characters reproduces
// doc.text. Throws InvalidChunkParams unless 0 <= overlap < chunk_size.
std::vector<Chunk> chunk_document(const ExpectationDocument& doc, std::size_t chunk_size,
                                  std::size_t overlap);

class Embedder {
public:
  virtual ~Embedder() = default;
  virtual std::size_t dimension() const = 0;
  virtual std::vector<double> embed(const std::string& text) const = 0;
};

// Deterministic offline embedder: hashed unigram counts, L2-normalized.
// Tokens are lowercased alphanumeric runs; each token increments the bucket
// fnv1a(token) % dimension. Identical texts always embed identically.
class HashedEmbedder : public Embedder {
public:
  explicit HashedEmbedder(std::size_t dimension = 256) : dimension_(dimension) {}
  std::size_t dimension() const override { return dimension_; }
  std::vector<double> embed(const std::string& text) const override;

private:
  std::size_t dimension_;
};

struct RagConfig {
  std::size_t chunk_size = 800;
  std::size_t overlap = 200;
};

// In-memory store over expectation documents. Built once, then read-only;
// concurrent retrieves are safe.
class RagStore {
public:
  explicit RagStore(std::shared_ptr<const Embedder> embedder, RagConfig config = {});

  void add_document(const ExpectationDocument& doc);

  // Top-k chunks by descending cosine score, ties broken by
  // (doc_id, chunk_index) ascending. When `filter` is set, only chunks whose
  // document targets that section (or targets none) are candidates.
  // Throws EmptyStore when no documents were added.
  std::vector<ScoredChunk> retrieve(const std::string& query, std::size_t k,
                                    std::optional<SectionKind> filter = std::nullopt) const;

  std::size_t document_count() const { return documents_.size(); }
  std::size_t chunk_count() const { return chunks_.size(); }
  const std::vector<ExpectationDocument>& documents() const { return documents_; }

  // One JSON index file holding documents, chunk texts, and base64-encoded
  // vectors.
  std::string save_index() const;
  static RagStore load_index(const std::string& json_text,
                             std::shared_ptr<const Embedder> embedder);

private:
  struct StoredChunk {
    Chunk chunk;
    std::vector<double> vector;
    std::optional<SectionKind> target_section;
  };

  std::shared_ptr<const Embedder> embedder_;
  RagConfig config_;
  std::vector<ExpectationDocument> documents_;
  std::vector<StoredChunk> chunks_;
};

// Loads every regular file in `dir` as one expectation document. Files may
// start with a front-matter header:
//
//   ---
//   kind: EXPECTATION | GUIDELINE | RUBRIC_SOURCE
//   target_section: INTRODUCTION
//   ---
//
// Missing header means kind EXPECTATION with no target section. doc_id is
// the filename stem.
std::vector<ExpectationDocument> load_expectation_dir(const std::filesystem::path& dir);

}  // namespace rubiscot
