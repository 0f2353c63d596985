// Line-oriented text format for Krajewski diagrams (.kra files).
#pragma once

#include "kra/diagram.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kra {

struct SourceSpan {
    int line = 1;   // 1-based
    int column = 1; // 1-based, in bytes
    int length = 0;
};

struct ParseError {
    SourceSpan span;
    std::string message;
    std::vector<std::string> expected;
};

using ParseResult = std::variant<KrajewskiDiagram, ParseError>;

/// Parses without validating. Missing jmap entries are inferred where unique.
ParseResult parse(std::string_view text);

/// Canonical text: factors in declaration order, vertices and edges sorted by id.
std::string serialize(const KrajewskiDiagram& d);

/// "name:line:col: message" followed by the offending line and a caret marker.
std::string format_parse_error(const ParseError& err, std::string_view text, const std::string& name);

} // namespace kra
