#include "gvcot/judge/templates.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gvcot::judge {

namespace detail {
const char* instruction_gen_text();
const char* semantic_consistency_text();
const char* grounding_boxes_text();
const char* cot_edit_consistency_text();
const char* perceptual_quality_text();
} // namespace detail

const char* to_string(TemplateId id) {
    switch (id) {
        case TemplateId::InstructionGen: return "instruction_gen";
        case TemplateId::SemanticConsistency: return "semantic_consistency";
        case TemplateId::GroundingBoxes: return "grounding_boxes";
        case TemplateId::CotEditConsistency: return "cot_edit_consistency";
        case TemplateId::PerceptualQuality: return "perceptual_quality";
    }
    return "unknown";
}

const PromptTemplate& builtin_template(TemplateId id) {
    static const std::array<PromptTemplate, 5> kTemplates = {{
        {TemplateId::InstructionGen, detail::instruction_gen_text(), {"source"}, false},
        {TemplateId::SemanticConsistency,
         detail::semantic_consistency_text(),
         {"source", "edited"},
         true},
        {TemplateId::GroundingBoxes, detail::grounding_boxes_text(), {"source", "edited"}, true},
        {TemplateId::CotEditConsistency,
         detail::cot_edit_consistency_text(),
         {"source", "edited", "cot"},
         true},
        {TemplateId::PerceptualQuality, detail::perceptual_quality_text(), {"edited"}, true},
    }};
    for (const auto& t : kTemplates) {
        if (t.id == id) return t;
    }
    throw std::logic_error("builtin_template: unknown id");
}

PromptTemplate load_template_override(TemplateId id, const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read template override: " + file.string());
    }
    std::ostringstream body;
    body << in.rdbuf();
    PromptTemplate t = builtin_template(id);
    t.body = body.str();
    return t;
}

} // namespace gvcot::judge
