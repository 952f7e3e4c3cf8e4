#pragma once

#include <string>
#include <vector>

#include "rubiscot/core/types.hpp"

namespace rubiscot {

// Segments a plain-text/Markdown thesis at heading lines. Headings are
// Markdown headings (`#`..`######`) or short Title Case lines framed by
// blank lines. Every character of raw_text lands in exactly one section
// body; text before the first heading is attached to the first section.
// Throws EmptyDocument when raw_text is blank.
ThesisDocument parse_thesis(const std::string& raw_text, const std::string& source_path);

// The branch rule: BACHELOR iff "bachelor thesis" / "bachelor's thesis"
// occurs (case-insensitively) in the title or the first 2,000 characters;
// everything else is MASTER. Never returns UNKNOWN.
DegreeLevel detect_degree_level(const ThesisDocument& doc);

// Canonical-kind lookup for a heading line ("Methodology" -> Methodology,
// "Related Work" -> Other). Enumeration prefixes ("3.", "Chapter 2:") and a
// trailing colon are ignored.
SectionKind classify_heading(const std::string& heading);

// Offsets of the lines parse_thesis treats as headings; exposed so tests and
// tools can inspect segmentation decisions.
struct HeadingLine {
  std::size_t line_start = 0;  // char offset of the line's first character
  std::string text;            // heading text with markers stripped
};
std::vector<HeadingLine> scan_headings(const std::string& raw_text);

}  // namespace rubiscot
