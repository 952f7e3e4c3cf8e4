#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rubiscot/core/types.hpp"

namespace rubiscot {

struct PromptTemplate {
  std::string template_id;  // a StageId name or a sub-stage id
  std::string text;
  std::set<std::string> required_placeholders;
  std::string response_schema_id;

  bool operator==(const PromptTemplate&) const = default;
};

// Substitutes {name} tokens. Required placeholders must all be bound
// (MissingBinding otherwise); bound optional placeholders are substituted,
// unbound ones removed. The result never contains a residual {token}.
std::string render(const PromptTemplate& tpl,
                   const std::map<std::string, std::string>& bindings);

// The canonical template id for a stage ("PRELIMINARY" carries the branch
// prompt; the level-specific criteria prompts are the PRELIMINARY_BACHELOR /
// PRELIMINARY_MASTER sub-stage templates).
std::string stage_template_id(StageId stage);

class PromptCatalog {
public:
  // All stage templates plus sub-stage templates (preliminary level
  // variants, rubric-creation steps, rubric second pass).
  static PromptCatalog builtin();

  const PromptTemplate& get(const std::string& template_id) const;
  bool has(const std::string& template_id) const;
  std::vector<PromptTemplate> catalog() const;  // sorted by template_id

  // Replaces a template (matched by template_id) or adds a new one.
  void put(PromptTemplate tpl);

  // Loads per-deployment overrides: each file is front matter
  // (template_id / required / schema) followed by the template text.
  void load_overrides_dir(const std::filesystem::path& dir);

  static PromptTemplate parse_template_file(const std::string& content,
                                            const std::string& fallback_id);

private:
  std::map<std::string, PromptTemplate> templates_;
};

}  // namespace rubiscot
