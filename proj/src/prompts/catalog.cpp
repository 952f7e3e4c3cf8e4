#include "rubiscot/prompts/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "rubiscot/error.hpp"
#include "rubiscot/prompts/texts.hpp"
#include "rubiscot/util.hpp"

namespace rubiscot {

namespace {

bool is_placeholder_char(char c) {
  return (c >= 'a' && c <= 'z') || c == '_';
}

// Finds {token} occurrences where token is a lowercase identifier.
std::vector<std::pair<std::size_t, std::string>> find_placeholders(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> found;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '{') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() && is_placeholder_char(text[j])) ++j;
    if (j > i + 1 && j < text.size() && text[j] == '}') {
      found.push_back({i, text.substr(i + 1, j - i - 1)});
      i = j + 1;
    } else {
      ++i;
    }
  }
  return found;
}

}  // namespace

std::string render(const PromptTemplate& tpl,
                   const std::map<std::string, std::string>& bindings) {
  for (const std::string& name : tpl.required_placeholders) {
    if (!bindings.count(name)) {
      throw Error(ErrorCode::MissingBinding, name);
    }
  }

  std::string out;
  out.reserve(tpl.text.size());
  std::size_t cursor = 0;
  for (const auto& [pos, name] : find_placeholders(tpl.text)) {
    out.append(tpl.text, cursor, pos - cursor);
    auto it = bindings.find(name);
    if (it != bindings.end()) out.append(it->second);
    // unbound optional placeholders are removed
    cursor = pos + name.size() + 2;
  }
  out.append(tpl.text, cursor, tpl.text.size() - cursor);
  return out;
}

std::string stage_template_id(StageId stage) { return to_string(stage); }

namespace {

PromptTemplate make(std::string id, std::string text, std::set<std::string> required,
                    std::string schema) {
  return PromptTemplate{std::move(id), std::move(text), std::move(required), std::move(schema)};
}

}  // namespace

PromptCatalog PromptCatalog::builtin() {
  using namespace prompttext;
  PromptCatalog cat;

  cat.put(make("PRELIMINARY", kPreliminaryBranch, {"thesis"}, "text"));
  cat.put(make("PRELIMINARY_BACHELOR", std::string(kPreliminaryBachelor) + kFindingsFormatPreliminary,
               {"thesis"}, "findings"));
  cat.put(make("PRELIMINARY_MASTER", std::string(kPreliminaryMaster) + kFindingsFormatPreliminary,
               {"thesis"}, "findings"));

  cat.put(make("GROUP_STRUCTURE", std::string(kGroupStructure) + kFindingsFormatGroups,
               {"thesis", "context"}, "findings"));
  cat.put(make("GROUP_CLARITY", std::string(kGroupClarity) + kFindingsFormatGroups,
               {"thesis", "context"}, "findings"));
  cat.put(make("GROUP_TECHNICAL", std::string(kGroupTechnical) + kFindingsFormatGroups,
               {"thesis", "context"}, "findings"));
  cat.put(make("GROUP_EDITING", std::string(kGroupEditing) + kFindingsFormatGroups,
               {"thesis", "context"}, "findings"));
  cat.put(make("GROUP_PLAGIARISM", std::string(kGroupPlagiarism) + kFindingsFormatGroups,
               {"thesis", "context"}, "findings"));
  cat.put(make("GROUP_FORMATTING", std::string(kGroupFormatting) + kFindingsFormatGroups,
               {"thesis", "context"}, "findings"));

  cat.put(make("CONTENT_EXTRACTION", std::string(kContentExtraction) + kContentMapFormat,
               {"thesis"}, "content_map"));

  cat.put(make("RUBRIC_CREATION_STEP1", kRubricCreationStep1,
               {"placeholder_chapter", "context"}, "text"));
  cat.put(make("RUBRIC_CREATION_STEP2", kRubricCreationStep2,
               {"placeholder_chapter", "context"}, "text"));
  cat.put(make("RUBRIC_CREATION_STEP3", kRubricCreationStep3,
               {"placeholder_chapter", "context"}, "text"));
  cat.put(make("RUBRIC_CREATION_STEP4", kRubricCreationStep4,
               {"placeholder_chapter", "context"}, "text"));
  cat.put(make("RUBRIC_CREATION_STEP5", std::string(kRubricCreationStep5) + kRubricTableFormat,
               {"placeholder_chapter", "context"}, "rubric_table"));

  cat.put(make("RUBRIC_ASSESSMENT", std::string(kRubricAssessment) + kScoresFormat,
               {"section", "thesis", "rubric", "context"}, "scores"));
  cat.put(make("RUBRIC_ASSESSMENT_PASS2",
               std::string(kRubricAssessmentSecondPass) + kScoresFormat,
               {"section", "thesis", "rubric", "context"}, "scores"));

  cat.put(make("REPORT", kReportSummary, {"context"}, "text"));

  return cat;
}

const PromptTemplate& PromptCatalog::get(const std::string& template_id) const {
  auto it = templates_.find(template_id);
  if (it == templates_.end()) {
    throw Error(ErrorCode::ConfigError, "no template with id " + template_id);
  }
  return it->second;
}

bool PromptCatalog::has(const std::string& template_id) const {
  return templates_.count(template_id) != 0;
}

std::vector<PromptTemplate> PromptCatalog::catalog() const {
  std::vector<PromptTemplate> all;
  all.reserve(templates_.size());
  for (const auto& [id, tpl] : templates_) all.push_back(tpl);
  return all;
}

void PromptCatalog::put(PromptTemplate tpl) {
  if (tpl.template_id.empty()) {
    throw Error(ErrorCode::ValidationFailed, "template_id must be non-empty");
  }
  // every required placeholder must actually occur in the text
  for (const std::string& name : tpl.required_placeholders) {
    if (tpl.text.find("{" + name + "}") == std::string::npos) {
      throw Error(ErrorCode::ValidationFailed,
                  "template " + tpl.template_id + " never uses required placeholder {" + name +
                      "}");
    }
  }
  templates_[tpl.template_id] = std::move(tpl);
}

PromptTemplate PromptCatalog::parse_template_file(const std::string& content,
                                                  const std::string& fallback_id) {
  PromptTemplate tpl;
  tpl.template_id = fallback_id;
  tpl.response_schema_id = "text";

  std::string body = content;
  if (content.rfind("---\n", 0) == 0) {
    std::size_t fence = content.find("\n---", 4);
    if (fence != std::string::npos) {
      std::string header = content.substr(4, fence - 4);
      std::size_t after = content.find('\n', fence + 1);
      body = after == std::string::npos ? "" : content.substr(after + 1);
      for (const std::string& line : split_lines(header)) {
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key == "template_id") {
          tpl.template_id = value;
        } else if (key == "schema") {
          tpl.response_schema_id = value;
        } else if (key == "required") {
          std::size_t start = 0;
          while (start <= value.size()) {
            std::size_t comma = value.find(',', start);
            std::string item = trim(value.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start));
            if (!item.empty()) tpl.required_placeholders.insert(item);
            if (comma == std::string::npos) break;
            start = comma + 1;
          }
        }
      }
    }
  }
  tpl.text = body;
  return tpl;
}

void PromptCatalog::load_overrides_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::ConfigError, "prompt override directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    put(parse_template_file(read_file(path), path.stem().string()));
  }
}

}  // namespace rubiscot
