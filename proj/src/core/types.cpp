#include "rubiscot/core/types.hpp"

#include "rubiscot/error.hpp"

namespace rubiscot {

const char* to_string(StageId stage) {
  switch (stage) {
    case StageId::Preliminary: return "PRELIMINARY";
    case StageId::GroupStructure: return "GROUP_STRUCTURE";
    case StageId::GroupClarity: return "GROUP_CLARITY";
    case StageId::GroupTechnical: return "GROUP_TECHNICAL";
    case StageId::GroupEditing: return "GROUP_EDITING";
    case StageId::GroupPlagiarism: return "GROUP_PLAGIARISM";
    case StageId::GroupFormatting: return "GROUP_FORMATTING";
    case StageId::ContentExtraction: return "CONTENT_EXTRACTION";
    case StageId::RubricAssessment: return "RUBRIC_ASSESSMENT";
    case StageId::Report: return "REPORT";
  }
  return "PRELIMINARY";
}

StageId stage_from_string(const std::string& name) {
  for (StageId stage : kAllStages) {
    if (name == to_string(stage)) return stage;
  }
  throw Error(ErrorCode::ValidationFailed, "unknown stage id: " + name);
}

bool is_group_stage(StageId stage) {
  for (StageId g : kGroupStages) {
    if (g == stage) return true;
  }
  return false;
}

const char* to_string(DegreeLevel level) {
  switch (level) {
    case DegreeLevel::Bachelor: return "BACHELOR";
    case DegreeLevel::Master: return "MASTER";
    case DegreeLevel::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

DegreeLevel degree_from_string(const std::string& name) {
  if (name == "BACHELOR") return DegreeLevel::Bachelor;
  if (name == "MASTER") return DegreeLevel::Master;
  if (name == "UNKNOWN") return DegreeLevel::Unknown;
  throw Error(ErrorCode::ValidationFailed, "unknown degree level: " + name);
}

const char* to_string(SectionKind kind) {
  switch (kind) {
    case SectionKind::Abstract: return "ABSTRACT";
    case SectionKind::Introduction: return "INTRODUCTION";
    case SectionKind::LiteratureReview: return "LITERATURE_REVIEW";
    case SectionKind::Methodology: return "METHODOLOGY";
    case SectionKind::Results: return "RESULTS";
    case SectionKind::Discussion: return "DISCUSSION";
    case SectionKind::Conclusion: return "CONCLUSION";
    case SectionKind::Other: return "OTHER";
  }
  return "OTHER";
}

SectionKind section_kind_from_string(const std::string& name) {
  static constexpr SectionKind kinds[] = {
      SectionKind::Abstract,  SectionKind::Introduction, SectionKind::LiteratureReview,
      SectionKind::Methodology, SectionKind::Results,    SectionKind::Discussion,
      SectionKind::Conclusion, SectionKind::Other,
  };
  for (SectionKind kind : kinds) {
    if (name == to_string(kind)) return kind;
  }
  throw Error(ErrorCode::ValidationFailed, "unknown section kind: " + name);
}

const char* to_string(Severity severity) {
  switch (severity) {
    case Severity::Info: return "INFO";
    case Severity::Minor: return "MINOR";
    case Severity::Major: return "MAJOR";
    case Severity::Blocking: return "BLOCKING";
  }
  return "INFO";
}

Severity severity_from_string(const std::string& name) {
  if (name == "INFO") return Severity::Info;
  if (name == "MINOR") return Severity::Minor;
  if (name == "MAJOR") return Severity::Major;
  if (name == "BLOCKING") return Severity::Blocking;
  throw Error(ErrorCode::ValidationFailed, "unknown severity: " + name);
}

const char* to_string(RunStatus status) {
  switch (status) {
    case RunStatus::Completed: return "COMPLETED";
    case RunStatus::HaltedPreliminary: return "HALTED_PRELIMINARY";
    case RunStatus::Failed: return "FAILED";
  }
  return "FAILED";
}

RunStatus run_status_from_string(const std::string& name) {
  if (name == "COMPLETED") return RunStatus::Completed;
  if (name == "HALTED_PRELIMINARY") return RunStatus::HaltedPreliminary;
  if (name == "FAILED") return RunStatus::Failed;
  throw Error(ErrorCode::ValidationFailed, "unknown run status: " + name);
}

void to_json(nlohmann::json& j, const Section& s) {
  j = nlohmann::json{{"heading", s.heading},
                     {"kind", to_string(s.kind)},
                     {"body", s.body},
                     {"start", s.start},
                     {"end", s.end}};
}

void from_json(const nlohmann::json& j, Section& s) {
  s.heading = j.at("heading").get<std::string>();
  s.kind = section_kind_from_string(j.at("kind").get<std::string>());
  s.body = j.at("body").get<std::string>();
  s.start = j.at("start").get<std::size_t>();
  s.end = j.at("end").get<std::size_t>();
}

void to_json(nlohmann::json& j, const ThesisDocument& d) {
  j = nlohmann::json{{"id", d.id},
                     {"title", d.title},
                     {"declared_level", to_string(d.declared_level)},
                     {"sections", d.sections},
                     {"raw_text", d.raw_text},
                     {"source_path", d.source_path}};
}

void from_json(const nlohmann::json& j, ThesisDocument& d) {
  d.id = j.at("id").get<std::string>();
  d.title = j.at("title").get<std::string>();
  d.declared_level = degree_from_string(j.at("declared_level").get<std::string>());
  d.sections = j.at("sections").get<std::vector<Section>>();
  d.raw_text = j.at("raw_text").get<std::string>();
  d.source_path = j.at("source_path").get<std::string>();
}

void to_json(nlohmann::json& j, const Finding& f) {
  j = nlohmann::json{{"group", to_string(f.group)},
                     {"severity", to_string(f.severity)},
                     {"observation", f.observation},
                     {"evidence", f.evidence}};
  if (f.location) j["location"] = *f.location;
}

void from_json(const nlohmann::json& j, Finding& f) {
  f.group = stage_from_string(j.at("group").get<std::string>());
  f.severity = severity_from_string(j.at("severity").get<std::string>());
  f.observation = j.at("observation").get<std::string>();
  f.evidence = j.at("evidence").get<std::string>();
  if (j.contains("location")) f.location = j.at("location").get<std::string>();
}

}  // namespace rubiscot
