#pragma once

#include <string>

namespace gvcot::judge {

/// The five bundled prompt templates.
enum class TemplateId {
    InstructionGen,
    SemanticConsistency,
    GroundingBoxes,
    CotEditConsistency,
    PerceptualQuality,
};

const char* to_string(TemplateId id);

/// Two rubric scores plus the judge's free-text reasoning.
struct JudgeVerdict {
    double score1 = 0.0; // each in [0, 10]
    double score2 = 0.0;
    std::string reasoning;
    TemplateId template_id = TemplateId::SemanticConsistency;
};

} // namespace gvcot::judge
