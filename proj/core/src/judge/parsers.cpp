#include "gvcot/judge/parsers.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace gvcot::judge {
namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// Finds the end (one past) of a balanced bracket span starting at `start`,
// honoring JSON string quoting. Returns npos when unbalanced.
std::size_t balanced_span_end(const std::string& text, std::size_t start, char open, char close) {
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        const char c = text[i];
        if (in_string) {
            if (c == '\\') {
                ++i;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == open) {
            ++depth;
        } else if (c == close) {
            --depth;
            if (depth == 0) return i + 1;
            if (depth < 0) return std::string::npos;
        }
    }
    return std::string::npos;
}

double clamp_score(double v, const char* which, std::vector<std::string>& diagnostics) {
    if (v < 0.0 || v > 10.0) {
        const double clamped = std::clamp(v, 0.0, 10.0);
        diagnostics.push_back(std::string("Clamped: ") + which + " " + std::to_string(v) +
                              " -> " + std::to_string(clamped));
        return clamped;
    }
    return v;
}

std::string unescape_xml(std::string s) {
    const std::pair<const char*, const char*> entities[] = {
        {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""}, {"&apos;", "'"}, {"&amp;", "&"},
    };
    for (const auto& [from, to] : entities) {
        std::size_t pos = 0;
        while ((pos = s.find(from, pos)) != std::string::npos) {
            s.replace(pos, std::string(from).size(), to);
            pos += 1;
        }
    }
    return s;
}

std::optional<std::string> extract_element(const std::string& text, const std::string& tag) {
    const std::string open = "<" + tag + ">";
    const std::string close = "</" + tag + ">";
    const auto b = text.find(open);
    if (b == std::string::npos) return std::nullopt;
    const auto e = text.find(close, b + open.size());
    if (e == std::string::npos) return std::nullopt;
    return text.substr(b + open.size(), e - b - open.size());
}

} // namespace

const char* to_string(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::ParseFailure: return "ParseFailure";
        case ParseError::Kind::UnknownCategory: return "UnknownCategory";
    }
    return "unknown";
}

Parsed<JudgeVerdict> parse_score_response(const std::string& text, TemplateId id) {
    Parsed<JudgeVerdict> out;
    for (std::size_t pos = text.find('{'); pos != std::string::npos;
         pos = text.find('{', pos + 1)) {
        const std::size_t end = balanced_span_end(text, pos, '{', '}');
        if (end == std::string::npos) continue;
        const json candidate = json::parse(text.substr(pos, end - pos), nullptr, false);
        if (candidate.is_discarded() || !candidate.is_object()) continue;
        if (!candidate.contains("score") || !candidate.contains("reasoning")) continue;
        const json& score = candidate["score"];
        if (!score.is_array() || score.size() != 2 || !score[0].is_number() ||
            !score[1].is_number()) {
            continue;
        }
        if (!candidate["reasoning"].is_string()) continue;
        const std::string reasoning = candidate["reasoning"].get<std::string>();
        if (reasoning.empty()) {
            out.error = {ParseError::Kind::ParseFailure, "empty reasoning", text};
            return out;
        }
        JudgeVerdict v;
        v.template_id = id;
        v.score1 = clamp_score(score[0].get<double>(), "score1", out.diagnostics);
        v.score2 = clamp_score(score[1].get<double>(), "score2", out.diagnostics);
        v.reasoning = reasoning;
        out.value = std::move(v);
        return out;
    }
    out.error = {ParseError::Kind::ParseFailure, "no score object found", text};
    return out;
}

Parsed<InstructionTriple> parse_instruction_response(const std::string& text) {
    Parsed<InstructionTriple> out;
    const auto result_body = extract_element(text, "result");
    if (!result_body) {
        out.error = {ParseError::Kind::ParseFailure, "no <result> element", text};
        return out;
    }
    const auto type = extract_element(*result_body, "type");
    const auto instruction = extract_element(*result_body, "instruction");
    const auto reverse = extract_element(*result_body, "reverse");
    if (!type || !instruction || !reverse) {
        out.error = {ParseError::Kind::ParseFailure,
                     "missing type/instruction/reverse element", text};
        return out;
    }
    const std::string type_name = trim(unescape_xml(*type));
    const auto edit_type = parse_edit_type(type_name);
    if (!edit_type) {
        out.error = {ParseError::Kind::UnknownCategory, "unknown type: " + type_name, text};
        return out;
    }
    InstructionTriple triple;
    triple.edit_type = *edit_type;
    triple.instruction = trim(unescape_xml(*instruction));
    triple.reverse = trim(unescape_xml(*reverse));
    if (triple.instruction.empty() || triple.reverse.empty()) {
        out.error = {ParseError::Kind::ParseFailure, "empty instruction or reverse", text};
        return out;
    }
    out.value = std::move(triple);
    return out;
}

Parsed<std::vector<BBox>> parse_box_response(const std::string& text, int image_width,
                                             int image_height) {
    Parsed<std::vector<BBox>> out;

    auto read_entries = [&](const json& arr, std::vector<BBox>& boxes,
                            std::vector<std::string>& diagnostics) {
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const json& entry = arr[i];
            if (!entry.is_array() || entry.size() != 4 ||
                !std::all_of(entry.begin(), entry.end(),
                             [](const json& v) { return v.is_number(); })) {
                diagnostics.push_back("MalformedEntry at index " + std::to_string(i) + ": " +
                                      entry.dump());
                continue;
            }
            // decimals truncate toward zero
            int c[4];
            for (int k = 0; k < 4; ++k) {
                c[k] = static_cast<int>(std::trunc(entry[k].get<double>()));
            }
            BBox b{std::clamp(c[0], 0, image_width), std::clamp(c[1], 0, image_height),
                   std::clamp(c[2], 0, image_width), std::clamp(c[3], 0, image_height)};
            boxes.push_back(normalize_box(b));
        }
    };

    std::optional<std::pair<std::vector<BBox>, std::vector<std::string>>> fallback;
    for (std::size_t pos = text.find('['); pos != std::string::npos;
         pos = text.find('[', pos + 1)) {
        const std::size_t end = balanced_span_end(text, pos, '[', ']');
        if (end == std::string::npos) continue;
        const json candidate = json::parse(text.substr(pos, end - pos), nullptr, false);
        if (candidate.is_discarded() || !candidate.is_array()) continue;
        std::vector<BBox> boxes;
        std::vector<std::string> diagnostics;
        read_entries(candidate, boxes, diagnostics);
        if (!boxes.empty()) {
            out.value = std::move(boxes);
            out.diagnostics = std::move(diagnostics);
            return out;
        }
        if (!fallback) {
            fallback = {std::move(boxes), std::move(diagnostics)};
        }
        // skip past this span so nested arrays are not re-scanned
        pos = end - 1;
    }
    if (fallback) {
        out.value = std::move(fallback->first);
        out.diagnostics = std::move(fallback->second);
        return out;
    }
    out.error = {ParseError::Kind::ParseFailure, "no bracketed box list found", text};
    return out;
}

} // namespace gvcot::judge
