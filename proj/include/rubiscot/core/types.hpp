#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace rubiscot {

enum class DegreeLevel { Bachelor, Master, Unknown };

enum class SectionKind {
  Abstract,
  Introduction,
  LiteratureReview,
  Methodology,
  Results,
  Discussion,
  Conclusion,
  Other,
};

enum class Severity { Info, Minor, Major, Blocking };

// One stage of the assessment sequence. The six GROUP_* ids are the six
// assessment dimensions; the order of the enum is the default execution
// order.
enum class StageId {
  Preliminary,
  GroupStructure,
  GroupClarity,
  GroupTechnical,
  GroupEditing,
  GroupPlagiarism,
  GroupFormatting,
  ContentExtraction,
  RubricAssessment,
  Report,
};

inline constexpr StageId kAllStages[] = {
    StageId::Preliminary,     StageId::GroupStructure,  StageId::GroupClarity,
    StageId::GroupTechnical,  StageId::GroupEditing,    StageId::GroupPlagiarism,
    StageId::GroupFormatting, StageId::ContentExtraction, StageId::RubricAssessment,
    StageId::Report,
};

inline constexpr StageId kGroupStages[] = {
    StageId::GroupStructure, StageId::GroupClarity,    StageId::GroupTechnical,
    StageId::GroupEditing,   StageId::GroupPlagiarism, StageId::GroupFormatting,
};

const char* to_string(StageId stage);
const char* to_string(DegreeLevel level);
const char* to_string(SectionKind kind);
const char* to_string(Severity severity);
StageId stage_from_string(const std::string& name);
DegreeLevel degree_from_string(const std::string& name);
SectionKind section_kind_from_string(const std::string& name);
Severity severity_from_string(const std::string& name);
bool is_group_stage(StageId stage);

struct Section {
  std::string heading;
  SectionKind kind = SectionKind::Other;
  std::string body;        // equals raw_text[start, end)
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Section&) const = default;
};

struct ThesisDocument {
  std::string id;
  std::string title;
  DegreeLevel declared_level = DegreeLevel::Unknown;
  std::vector<Section> sections;
  std::string raw_text;
  std::string source_path;

  bool operator==(const ThesisDocument&) const = default;
};

// A single observation from one assessment stage. The prompts demand
// "Provide only observations and evidence", so both fields are mandatory.
// Blocking severity is reserved for the preliminary stage.
struct Finding {
  StageId group = StageId::Preliminary;
  Severity severity = Severity::Info;
  std::string observation;
  std::string evidence;
  std::optional<std::string> location;

  bool operator==(const Finding&) const = default;
};

enum class RunStatus { Completed, HaltedPreliminary, Failed };
const char* to_string(RunStatus status);
RunStatus run_status_from_string(const std::string& name);

void to_json(nlohmann::json& j, const Section& s);
void from_json(const nlohmann::json& j, Section& s);
void to_json(nlohmann::json& j, const ThesisDocument& d);
void from_json(const nlohmann::json& j, ThesisDocument& d);
void to_json(nlohmann::json& j, const Finding& f);
void from_json(const nlohmann::json& j, Finding& f);

}  // namespace rubiscot
