#include "rubiscot/rag/store.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>

#include "json.hpp"
#include "rubiscot/error.hpp"
#include "rubiscot/rag/vecops.hpp"
#include "rubiscot/util.hpp"

namespace rubiscot {

const char* to_string(ExpectationKind kind) {
  switch (kind) {
    case ExpectationKind::Expectation: return "EXPECTATION";
    case ExpectationKind::Guideline: return "GUIDELINE";
    case ExpectationKind::RubricSource: return "RUBRIC_SOURCE";
  }
  return "EXPECTATION";
}

ExpectationKind expectation_kind_from_string(const std::string& name) {
  if (name == "EXPECTATION") return ExpectationKind::Expectation;
  if (name == "GUIDELINE") return ExpectationKind::Guideline;
  if (name == "RUBRIC_SOURCE") return ExpectationKind::RubricSource;
  throw Error(ErrorCode::ValidationFailed, "unknown expectation kind: " + name);
}

std::vector<Chunk> chunk_document(const ExpectationDocument& doc, std::size_t chunk_size,
                                  std::size_t overlap) {
  if (chunk_size == 0 || overlap >= chunk_size) {
    throw Error(ErrorCode::InvalidChunkParams,
                "need 0 <= overlap < chunk_size, got chunk_size=" + std::to_string(chunk_size) +
                    " overlap=" + std::to_string(overlap));
  }
  const std::string& text = doc.text;
  std::vector<Chunk> chunks;
  std::size_t stride = chunk_size - overlap;
  std::size_t start = 0;
  std::size_t index = 0;
  while (true) {
    std::size_t end = std::min(start + chunk_size, text.size());
    chunks.push_back({doc.doc_id, index, text.substr(start, end - start), start, end});
    if (end >= text.size()) break;
    start += stride;
    ++index;
  }
  return chunks;
}

std::vector<double> HashedEmbedder::embed(const std::string& text) const {
  std::vector<double> vec(dimension_, 0.0);
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      vec[fnv1a(token) % dimension_] += 1.0;
      token.clear();
    }
  };
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      token.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush();
    }
  }
  flush();
  double norm = std::sqrt(vecops::squared_norm(vec));
  if (norm > 0.0) {
    for (double& x : vec) x /= norm;
  }
  return vec;
}

RagStore::RagStore(std::shared_ptr<const Embedder> embedder, RagConfig config)
    : embedder_(std::move(embedder)), config_(config) {}

void RagStore::add_document(const ExpectationDocument& doc) {
  if (doc.doc_id.empty() || doc.text.empty()) {
    throw Error(ErrorCode::ValidationFailed, "expectation document needs doc_id and text");
  }
  for (const auto& existing : documents_) {
    if (existing.doc_id == doc.doc_id) {
      throw Error(ErrorCode::ValidationFailed, "duplicate doc_id: " + doc.doc_id);
    }
  }
  documents_.push_back(doc);
  for (Chunk& chunk : chunk_document(doc, config_.chunk_size, config_.overlap)) {
    std::vector<double> vec = embedder_->embed(chunk.text);
    chunks_.push_back({std::move(chunk), std::move(vec), doc.target_section});
  }
}

std::vector<ScoredChunk> RagStore::retrieve(const std::string& query, std::size_t k,
                                            std::optional<SectionKind> filter) const {
  if (documents_.empty()) throw Error(ErrorCode::EmptyStore, "no expectation documents loaded");
  if (k == 0) throw Error(ErrorCode::PreconditionViolation, "k must be >= 1");

  std::vector<double> qvec = embedder_->embed(query);
  if (vecops::squared_norm(qvec) == 0.0) {
    throw Error(ErrorCode::ZeroVector, "query embeds to the zero vector");
  }

  std::vector<ScoredChunk> scored;
  for (const StoredChunk& sc : chunks_) {
    if (filter && sc.target_section && *sc.target_section != *filter) continue;
    if (vecops::squared_norm(sc.vector) == 0.0) continue;
    scored.push_back({sc.chunk, vecops::cosine(qvec, sc.vector)});
  }
  std::stable_sort(scored.begin(), scored.end(), [](const ScoredChunk& a, const ScoredChunk& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.chunk.doc_id != b.chunk.doc_id) return a.chunk.doc_id < b.chunk.doc_id;
    return a.chunk.chunk_index < b.chunk.chunk_index;
  });
  if (scored.size() > k) scored.resize(k);
  return scored;
}

namespace {

std::string encode_vector(const std::vector<double>& vec) {
  static_assert(sizeof(double) == 8);
  std::vector<std::uint8_t> bytes(vec.size() * 8);
  std::memcpy(bytes.data(), vec.data(), bytes.size());
  return base64_encode(bytes.data(), bytes.size());
}

std::vector<double> decode_vector(const std::string& encoded) {
  std::vector<std::uint8_t> bytes = base64_decode(encoded);
  if (bytes.size() % 8 != 0) {
    throw Error(ErrorCode::ValidationFailed, "vector payload is not a multiple of 8 bytes");
  }
  std::vector<double> vec(bytes.size() / 8);
  std::memcpy(vec.data(), bytes.data(), bytes.size());
  return vec;
}

}  // namespace

std::string RagStore::save_index() const {
  nlohmann::json docs = nlohmann::json::array();
  for (const ExpectationDocument& doc : documents_) {
    nlohmann::json entry{{"doc_id", doc.doc_id}, {"kind", to_string(doc.kind)}, {"text", doc.text}};
    entry["target_section"] =
        doc.target_section ? nlohmann::json(to_string(*doc.target_section)) : nlohmann::json();
    nlohmann::json chunk_list = nlohmann::json::array();
    for (const StoredChunk& sc : chunks_) {
      if (sc.chunk.doc_id != doc.doc_id) continue;
      chunk_list.push_back({{"index", sc.chunk.chunk_index},
                            {"text", sc.chunk.text},
                            {"start", sc.chunk.start},
                            {"end", sc.chunk.end},
                            {"vector", encode_vector(sc.vector)}});
    }
    entry["chunks"] = std::move(chunk_list);
    docs.push_back(std::move(entry));
  }
  nlohmann::json index{{"dimension", embedder_->dimension()},
                       {"chunk_size", config_.chunk_size},
                       {"overlap", config_.overlap},
                       {"documents", std::move(docs)}};
  return index.dump(2);
}

RagStore RagStore::load_index(const std::string& json_text,
                              std::shared_ptr<const Embedder> embedder) {
  nlohmann::json index = nlohmann::json::parse(json_text);
  RagConfig config;
  config.chunk_size = index.at("chunk_size").get<std::size_t>();
  config.overlap = index.at("overlap").get<std::size_t>();
  if (index.at("dimension").get<std::size_t>() != embedder->dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "index dimension does not match embedder");
  }

  RagStore store(std::move(embedder), config);
  for (const nlohmann::json& entry : index.at("documents")) {
    ExpectationDocument doc;
    doc.doc_id = entry.at("doc_id").get<std::string>();
    doc.kind = expectation_kind_from_string(entry.at("kind").get<std::string>());
    doc.text = entry.at("text").get<std::string>();
    if (!entry.at("target_section").is_null()) {
      doc.target_section = section_kind_from_string(entry.at("target_section").get<std::string>());
    }
    store.documents_.push_back(doc);
    for (const nlohmann::json& chunk : entry.at("chunks")) {
      StoredChunk sc;
      sc.chunk.doc_id = doc.doc_id;
      sc.chunk.chunk_index = chunk.at("index").get<std::size_t>();
      sc.chunk.text = chunk.at("text").get<std::string>();
      sc.chunk.start = chunk.at("start").get<std::size_t>();
      sc.chunk.end = chunk.at("end").get<std::size_t>();
      sc.vector = decode_vector(chunk.at("vector").get<std::string>());
      sc.target_section = doc.target_section;
      store.chunks_.push_back(std::move(sc));
    }
  }
  return store;
}

namespace {

// Minimal front-matter reader: a leading "---" line, `key: value` pairs,
// closing "---". Returns the remaining body.
std::string parse_front_matter(const std::string& content, ExpectationDocument& doc) {
  if (content.rfind("---\n", 0) != 0 && content.rfind("---\r\n", 0) != 0) return content;
  std::size_t body_start = content.find('\n') + 1;
  std::size_t fence = content.find("\n---", body_start - 1);
  if (fence == std::string::npos) return content;
  std::string header = content.substr(body_start, fence - body_start);
  std::size_t after = content.find('\n', fence + 1);
  std::string body = after == std::string::npos ? "" : content.substr(after + 1);

  for (const std::string& line : split_lines(header)) {
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "kind") {
      doc.kind = expectation_kind_from_string(value);
    } else if (key == "target_section") {
      doc.target_section = section_kind_from_string(value);
    }
  }
  return body;
}

}  // namespace

std::vector<ExpectationDocument> load_expectation_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::ConfigError, "expectations directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<ExpectationDocument> docs;
  for (const auto& path : files) {
    ExpectationDocument doc;
    doc.doc_id = path.stem().string();
    doc.text = parse_front_matter(read_file(path), doc);
    if (trim(doc.text).empty()) continue;
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace rubiscot
