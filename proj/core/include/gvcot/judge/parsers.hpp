#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gvcot/geometry.hpp"
#include "gvcot/judge/verdict.hpp"
#include "gvcot/sample.hpp"

namespace gvcot::judge {

struct ParseError {
    enum class Kind { ParseFailure, UnknownCategory };
    Kind kind = Kind::ParseFailure;
    std::string detail;
    std::string offending_text; // original input, retained for audit
};

const char* to_string(ParseError::Kind k);

/// Parser outcome: either a value, or a structured error. Diagnostics carry
/// non-fatal notes (clamped scores, skipped malformed entries).
template <typename T>
struct Parsed {
    std::optional<T> value;
    std::optional<ParseError> error;
    std::vector<std::string> diagnostics;

    bool ok() const { return value.has_value(); }
};

/// Parsed instruction-generation response.
struct InstructionTriple {
    EditType edit_type = EditType::AddRemoveObject;
    std::string instruction;
    std::string reverse;
};

/// Extracts the first JSON object holding a two-number "score" array and a
/// non-empty "reasoning" string, tolerating surrounding prose and code
/// fences. Out-of-range scores are clamped to [0,10] with a diagnostic.
Parsed<JudgeVerdict> parse_score_response(const std::string& text,
                                          TemplateId id = TemplateId::SemanticConsistency);

/// Parses the <result><type/><instruction/><reverse/></result> structure.
/// Whitespace is trimmed; a type outside the five categories is an
/// UnknownCategory error.
Parsed<InstructionTriple> parse_instruction_response(const std::string& text);

/// Parses a bracketed list of 4-number lists into normalized boxes clamped
/// to the image bounds. Decimal coordinates truncate toward zero. Malformed
/// entries are skipped with a diagnostic; an empty list is a valid result.
Parsed<std::vector<BBox>> parse_box_response(const std::string& text, int image_width,
                                             int image_height);

} // namespace gvcot::judge
