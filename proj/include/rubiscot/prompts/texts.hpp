#pragma once

// Stage prompt wording. Kept in one translation unit so the catalog, tests,
// and documentation all reference a single copy.

namespace rubiscot::prompttext {

extern const char* const kPreliminaryBranch;
extern const char* const kPreliminaryBachelor;
extern const char* const kPreliminaryMaster;

extern const char* const kGroupStructure;
extern const char* const kGroupClarity;
extern const char* const kGroupTechnical;
extern const char* const kGroupEditing;
extern const char* const kGroupPlagiarism;
extern const char* const kGroupFormatting;

extern const char* const kContentExtraction;

extern const char* const kRubricCreationStep1;
extern const char* const kRubricCreationStep2;
extern const char* const kRubricCreationStep3;
extern const char* const kRubricCreationStep4;
extern const char* const kRubricCreationStep5;

extern const char* const kRubricAssessment;
extern const char* const kRubricAssessmentSecondPass;

extern const char* const kReportSummary;

// Machine-readable output instructions appended to the stage prompts so
// completions can be parsed reliably.
extern const char* const kFindingsFormatGroups;
extern const char* const kFindingsFormatPreliminary;
extern const char* const kContentMapFormat;
extern const char* const kScoresFormat;
extern const char* const kRubricTableFormat;

}  // namespace rubiscot::prompttext
