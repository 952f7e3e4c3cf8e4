#include "rubiscot/core/parse.hpp"

#include <cctype>

#include "rubiscot/error.hpp"
#include "rubiscot/util.hpp"

namespace rubiscot {

namespace {

bool is_blank(std::string_view line) {
  for (unsigned char c : line) {
    if (!std::isspace(c)) return false;
  }
  return true;
}

// "3.", "2.1", "Chapter 4:" style prefixes carry no kind information.
std::string strip_enumeration(std::string_view s) {
  std::string t = trim(s);
  std::size_t i = 0;
  if (t.rfind("Chapter ", 0) == 0 || t.rfind("chapter ", 0) == 0) i = 8;
  std::size_t j = i;
  while (j < t.size() && (std::isdigit(static_cast<unsigned char>(t[j])) || t[j] == '.')) ++j;
  if (j > i && j < t.size() && t[j] == ' ') i = j + 1;
  std::string out = trim(t.substr(i));
  if (!out.empty() && (out.back() == ':' || out.back() == '.')) out.pop_back();
  return trim(out);
}

const char* kSmallWords[] = {"a", "an", "and", "as", "at", "by", "for", "in",
                             "of", "on", "or", "the", "to", "with"};

bool is_small_word(const std::string& w) {
  for (const char* s : kSmallWords) {
    if (w == s) return true;
  }
  return false;
}

bool is_title_case(const std::string& line) {
  std::string stripped = strip_enumeration(line);
  if (stripped.empty()) return false;
  bool saw_letter = false;
  bool first_word = true;
  std::size_t i = 0;
  while (i < stripped.size()) {
    while (i < stripped.size() && std::isspace(static_cast<unsigned char>(stripped[i]))) ++i;
    if (i >= stripped.size()) break;
    std::size_t j = i;
    while (j < stripped.size() && !std::isspace(static_cast<unsigned char>(stripped[j]))) ++j;
    std::string word = stripped.substr(i, j - i);
    i = j;
    unsigned char head = static_cast<unsigned char>(word[0]);
    if (std::isalpha(head)) {
      saw_letter = true;
      if (std::islower(head) && !(!first_word && is_small_word(word))) return false;
    } else if (!std::isdigit(head) && head != '(' && head != '"') {
      return false;  // lines led by punctuation are prose, not headings
    }
    first_word = false;
  }
  return saw_letter;
}

std::string markdown_heading_text(const std::string& line) {
  std::size_t i = 0;
  while (i < line.size() && line[i] == '#') ++i;
  if (i == 0 || i > 6 || i >= line.size() || line[i] != ' ') return {};
  return trim(line.substr(i + 1));
}

}  // namespace

SectionKind classify_heading(const std::string& heading) {
  std::string key = lowercase(strip_enumeration(heading));
  if (key == "abstract") return SectionKind::Abstract;
  if (key == "introduction") return SectionKind::Introduction;
  if (key == "literature review") return SectionKind::LiteratureReview;
  if (key == "methodology") return SectionKind::Methodology;
  if (key == "results") return SectionKind::Results;
  if (key == "discussion") return SectionKind::Discussion;
  if (key == "conclusion" || key == "conclusions") return SectionKind::Conclusion;
  return SectionKind::Other;
}

std::vector<HeadingLine> scan_headings(const std::string& raw_text) {
  std::vector<HeadingLine> headings;
  std::vector<std::string> lines = split_lines(raw_text);

  std::size_t offset = 0;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::string& line = lines[idx];
    std::size_t line_start = offset;
    offset += line.size() + 1;  // '\n'; harmless overshoot on the last line

    std::string md = markdown_heading_text(line);
    if (!md.empty()) {
      headings.push_back({line_start, md});
      continue;
    }

    // Title Case heading: short line framed by blank lines (or the
    // document edges).
    std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed.size() >= 80) continue;
    bool prev_blank = (idx == 0) || is_blank(lines[idx - 1]);
    bool next_blank = (idx + 1 < lines.size()) && is_blank(lines[idx + 1]);
    if (prev_blank && next_blank && is_title_case(trimmed)) {
      headings.push_back({line_start, trimmed});
    }
  }
  return headings;
}

ThesisDocument parse_thesis(const std::string& raw_text, const std::string& source_path) {
  if (trim(raw_text).empty()) {
    throw Error(ErrorCode::EmptyDocument, "thesis text is blank");
  }

  ThesisDocument doc;
  doc.raw_text = raw_text;
  doc.source_path = source_path;
  doc.id = "thesis-" + to_hex(fnv1a(raw_text));

  for (const std::string& line : split_lines(raw_text)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    std::string md = markdown_heading_text(t);
    doc.title = md.empty() ? t : md;
    break;
  }

  std::vector<HeadingLine> headings = scan_headings(raw_text);

  if (headings.empty()) {
    Section only;
    only.heading = doc.title;
    only.kind = SectionKind::Other;
    only.start = 0;
    only.end = raw_text.size();
    only.body = raw_text;
    doc.sections.push_back(std::move(only));
    return doc;
  }

  for (std::size_t i = 0; i < headings.size(); ++i) {
    Section section;
    section.heading = headings[i].text;
    section.kind = classify_heading(section.heading);
    // Front matter before the first heading belongs to the first section.
    section.start = (i == 0) ? 0 : headings[i].line_start;
    section.end = (i + 1 < headings.size()) ? headings[i + 1].line_start : raw_text.size();
    section.body = raw_text.substr(section.start, section.end - section.start);
    doc.sections.push_back(std::move(section));
  }
  return doc;
}

DegreeLevel detect_degree_level(const ThesisDocument& doc) {
  std::string haystack = doc.title + "\n" + doc.raw_text.substr(0, 2000);
  if (contains_ci(haystack, "bachelor thesis") || contains_ci(haystack, "bachelor's thesis")) {
    return DegreeLevel::Bachelor;
  }
  return DegreeLevel::Master;
}

}  // namespace rubiscot
