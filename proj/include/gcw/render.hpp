#pragma once

#include "gcw/element.hpp"

#include <string>
#include <vector>

namespace gcw {

/// Canonical plain-text rendering; deterministic (graded-lex term order).
/// "1/2*t1*𝐝t1 - t1*t2*t3", "0" for zero.
std::string render_plain(const Element& e);

/// Rendering that re-parses under the algebroid expression grammar: shifted
/// generators are illegal there, so this is only valid for unshifted
/// elements (differential images, polynomial coefficients).
std::string render_grammar(const Element& e);

/// LaTeX rendering following the usual notation: trailing digits become
/// indices, known greek names get backslashed, shifted generators gain
/// \mathbf{d}, factors are joined by \wedge.
std::string render_latex(const Element& e);

std::string latex_generator(const std::string& name);

/// Line-delimited structured report: "key = value" pairs in emission order.
/// The same vector round-trips through parse_structured byte-identically.
struct StructuredReport {
    std::vector<std::pair<std::string, std::string>> lines;
    void add(const std::string& key, const std::string& value) { lines.emplace_back(key, value); }
    std::string to_text() const;
};

/// Parses text produced by StructuredReport::to_text. Throws Error on
/// malformed lines.
StructuredReport parse_structured(const std::string& text);

} // namespace gcw
