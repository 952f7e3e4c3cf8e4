#include "rubiscot/prompts/texts.hpp"

namespace rubiscot::prompttext {

const char* const kPreliminaryBranch =
    R"__(Check the attached document.
If it says Bachelor Thesis go to BACHELOR, else go to MASTER.

Document:
{thesis})__";

const char* const kPreliminaryBachelor =
    R"__(Review the attached bachelor's thesis, assessing its academic level based on the following criteria:

1.  Research Depth and Complexity:
1.1 Assess the depth of research, focusing on the integration of theoretical frameworks and practical applications as expected at the bachelor's level.
1.2 Determine if the thesis demonstrates an understanding and application of concepts appropriate for undergraduate study.

2.  Methodological Rigor:
2.1 Examine the research design and methodology, evaluating whether a coherent and sound approach is applied (e.g., primary vs. secondary data use, analysis methods, or case studies).
2.2 Evaluate if the methodology reflects a clear understanding of research techniques suitable for Level 6.

3.  Critical Analysis and Synthesis:
3.1 Look for evidence of critical analysis, focusing on the ability to compare and contrast relevant approaches or methods within the field of study.
3.2 Assess whether the thesis synthesizes information from various sources and discusses the limitations and challenges relevant to the topic.

4.  Scholarly Communication and Structure:
4.1 Evaluate whether the thesis communicates its argument clearly and follows a recognizable academic structure.
4.2 Assess whether sources are cited consistently and the writing meets the standards of formal academic prose.

Thesis:
{thesis})__";

const char* const kPreliminaryMaster =
    R"__(Review the attached master's thesis, assessing its academic level based on the following criteria:

1.  Research Depth and Complexity:
1.1 Assess the depth of research, focusing on the integration of theoretical frameworks and practical applications as expected at the master's level.
1.2 Determine if the thesis demonstrates the knowledge transfer and innovation appropriate for graduate study.

2.  Methodological Rigor:
2.1 Examine the research design and methodology, evaluating whether a coherent and sound approach is applied (e.g., primary vs. secondary data use, analysis methods, or case studies).
2.2 Evaluate if the methodology reflects a clear understanding of research techniques suitable for Level 7.

3.  Critical Analysis and Synthesis:
3.1 Look for evidence of critical analysis, focusing on the ability to compare and contrast relevant approaches or methods within the field of study.
3.2 Assess whether the thesis synthesizes information from various sources and discusses the limitations and challenges relevant to the topic.

4.  Scholarly Communication and Structure:
4.1 Evaluate whether the thesis communicates its argument clearly and follows a recognizable academic structure.
4.2 Assess whether sources are cited consistently and the writing meets the standards of formal academic prose.

Thesis:
{thesis})__";

const char* const kGroupStructure =
    R"__(Examine the thesis structure to ensure it includes all essential sections (e.g., abstract, introduction, literature review, methodology, results, discussion, conclusion). Evaluate whether each section is appropriately detailed and follows a logical sequence. Provide only observations and evidence. Do not give a summary. Remove any artefact from your answer.

Review the thesis to ensure the research questions or hypotheses are clearly stated and logically developed. Assess whether they are effectively addressed throughout the thesis. Provide only observations and evidence. Do not give a summary. Remove any artefact from your answer.

Analyze the strength of arguments in the thesis by assessing the supporting evidence provided. Highlight any arguments that may lack sufficient support. Provide only observations and evidence. Do not give a summary. Remove any artefact from your answer.

Thesis:
{thesis}

Relevant expectation excerpts:
{context})__";

const char* const kGroupClarity =
    R"__(Assess the thesis for clarity and coherence. Identify areas where arguments might be unclear or illogical. Remove any artefact from your answer.

Evaluate the thesis for appropriate language and tone. Ensure that the language used is formal and academic, avoiding colloquialisms or overly casual expressions. Provide feedback on sections where tone adjustment may be needed. Provide only observations and evidence. Do not give a summary. Remove any artefact from your answer.

Thesis:
{thesis}

Relevant expectation excerpts:
{context})__";

const char* const kGroupTechnical =
    R"__(Evaluate the technical sections of the thesis (e.g., equations, algorithms, terminologies) for accuracy and relevance. Check that these elements are correctly applied. Provide only observations and evidence. Do not give a summary. Remove any artefact from your answer.

Thesis:
{thesis}

Relevant expectation excerpts:
{context})__";

const char* const kGroupEditing =
    R"__(Analyze the thesis document for grammatical errors, awkward phrasing, and style inconsistencies. Highlight any sections needing revision. Provide only observations and evidence. Do not give a summary. Remove any artefact from your answer.

Conduct a consistency check across the thesis. Look for consistent use of terminology, figure and table numbering, abbreviations, and stylistic elements. List any inconsistencies. Provide only observations and evidence. Do not give a summary. Remove any artefact from your answer.

Thesis:
{thesis}

Relevant expectation excerpts:
{context})__";

const char* const kGroupPlagiarism =
    R"__(Please review the thesis for any sections that might contain unattributed text or potential similarities to existing works. Provide a list of these sections with an explanation of the potential issues. Provide only observations and evidences. Do not give a summary. Remove any artefact from your answer.

Perform a reference check on the thesis. Identify any inconsistencies in citation formats and verify that all references listed in the bibliography are cited in the text. Note any missing citations or discrepancies in format. Provide only observations and evidences. Do not give a summary. Remove any artefact from your answer. Perform a recheck of missing references.

Thesis:
{thesis}

Relevant expectation excerpts:
{context})__";

const char* const kGroupFormatting =
    R"__(Check the thesis document for adherence to formatting guidelines, such as margins, font size, heading styles, and spacing. Identify any deviations from the guidelines. Do not give a summary. Remove any artefact from your answer.

Check the thesis for compliance with academic standards or guidelines you provided. Ensure that the thesis meets these standards across content, structure, and presentation. Identify any areas that may not align with the standards. Provide only observations and evidences. Do not give a summary. Remove any artefact from your answer.

Thesis:
{thesis}

Relevant expectation excerpts:
{context})__";

const char* const kContentExtraction =
    R"__(Analyze the attached thesis carefully and extract the following information:

- Objectives: Identify each main objective of the thesis as stated in the introduction.
- Research Questions: List all research questions that the thesis seeks to answer. For each research question, note the objective(s) it addresses.
- Methodology: For each research question, summarize the methods used to gather and analyze data. Include details on why these methods were chosen, as provided in the text.
- Results: For each research question, summarize the main findings / results. Identify any figures, tables, or data representations linked to these findings.
- Discussion: Briefly summarize how the thesis discusses the results in relation to each objective. Note any major interpretations, comparisons with literature, or critical insights.
- Conclusion: Outline the conclusions, recommendations, and implications provided in the thesis. Link these conclusions to the relevant objectives and research questions.

Format:
- Use bullet points or a table to organize each section.
- Include specific page or section references wherever possible.
- For each item, specify the objective(s) it supports.

Thesis:
{thesis})__";

const char* const kRubricCreationStep1 =
    R"__(Please provide a comprehensive summary of Chapter {placeholder_chapter} from the book on thesis writing. Focus on the main objectives, key principles, and any specific advice or guidelines for thesis writing covered in this chapter.

Chapter source material:
{context})__";

const char* const kRubricCreationStep2 =
    R"__(Based on the summary of Chapter {placeholder_chapter}, list the key expectations or standards that a thesis should meet according to this chapter. Outline these expectations clearly, emphasizing the specific skills, structure, or content that a thesis section should demonstrate if it follows this chapter's guidance.

Summary of Chapter {placeholder_chapter}:
{context})__";

const char* const kRubricCreationStep3 =
    R"__(Using the expectations from Chapter {placeholder_chapter}, create a rubric with six performance levels to evaluate a thesis section according to this chapter's principles. The levels should include:
- Excellent (90-100%)
- Good (75-89%)
- Satisfactory (60-74%)
- Needs Improvement (50-59%)
- Failing (25-49%)
- Total Failure (0-24%)
For each criterion, provide a detailed description of what is required to achieve each performance level. Ensure that the descriptions for 'Failing' and 'Total Failure' clarify the key deficiencies compared to higher levels. The rubric should make each expectation measurable and actionable, aligning closely with the chapter's guidelines.

Expectations from Chapter {placeholder_chapter}:
{context})__";

const char* const kRubricCreationStep4 =
    R"__(Review the rubric created for Chapter {placeholder_chapter} and suggest any adjustments or improvements that would make it more precise or aligned with the chapter's standards. Ensure that each criterion is actionable and that the rubric covers all key expectations from the chapter.

Rubric for Chapter {placeholder_chapter}:
{context})__";

const char* const kRubricCreationStep5 =
    R"__(Show the revised rubric for Chapter {placeholder_chapter} as a table.

Revised rubric discussion:
{context})__";

const char* const kRubricAssessment =
    R"__(Content check against rubrics (If the chapter names do not match, use a similar chapter in the thesis and indicate the deviation):
Check the chapter {section} of the attached thesis against the {section} Expectations document and the rubric {section} and give an evaluation and a reasoning in a table. Take the percentage of each line of your evaluation and show them in a table and calculate the average.

Thesis:
{thesis}

Rubric {section}:
{rubric}

{section} Expectations document excerpts:
{context})__";

const char* const kRubricAssessmentSecondPass =
    R"__(I want you to critically check it a second time under the same conditions to see if you stick with your first evaluation. Build an average of the original and revised results as a table.

Chapter under review: {section}

Thesis:
{thesis}

Rubric {section}:
{rubric}

{context})__";

const char* const kReportSummary =
    R"__(Summarize the completed thesis assessment, highlighting strengths, weaknesses, and areas for improvement.

Assessment results:
{context})__";

const char* const kFindingsFormatGroups =
    "\n\nAfter your observations, append exactly one fenced code block labelled findings "
    "containing a JSON array. Each element must be an object with non-empty string fields "
    "\"observation\" and \"evidence\", an optional string field \"location\", and a field "
    "\"severity\" that is one of INFO, MINOR or MAJOR.";

const char* const kFindingsFormatPreliminary =
    "\n\nAfter your observations, append exactly one fenced code block labelled findings "
    "containing a JSON array. Each element must be an object with non-empty string fields "
    "\"observation\" and \"evidence\", an optional string field \"location\", and a field "
    "\"severity\" that is one of INFO, MINOR, MAJOR or BLOCKING. Use BLOCKING only when a "
    "fundamental element such as a research question or a stated objective is missing.";

const char* const kContentMapFormat =
    "\n\nAfter your analysis, append exactly one fenced code block labelled content_map "
    "containing a JSON object with arrays \"objectives\", \"research_questions\", \"methods\", "
    "\"results\", \"discussion_points\" and \"conclusions\". Every element needs string fields "
    "\"id\" and \"text\" and, wherever possible, a \"source_ref\" with a page or section "
    "reference. Research questions list \"objective_ids\"; methods and results list \"rq_ids\"; "
    "discussion points list \"objective_ids\"; conclusions list both \"objective_ids\" and "
    "\"rq_ids\".";

const char* const kScoresFormat =
    "\n\nAfter the table, append exactly one fenced code block labelled scores containing a "
    "JSON array with one object per rubric criterion, each with a string field \"criterion_id\" "
    "matching the rubric, a numeric field \"percentage\" between 0 and 100, and a non-empty "
    "string field \"reasoning\".";

const char* const kRubricTableFormat =
    "\n\nAfter the table, append exactly one fenced code block labelled rubric containing a "
    "JSON object with a string field \"rubric_id\" and an array \"criteria\". Each criterion "
    "needs string fields \"id\" and \"name\", a positive numeric field \"weight\", and an "
    "object \"descriptors\" with string entries EXCELLENT, GOOD, SATISFACTORY, "
    "NEEDS_IMPROVEMENT, FAILING and TOTAL_FAILURE.";

}  // namespace rubiscot::prompttext
