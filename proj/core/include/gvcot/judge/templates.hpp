#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gvcot/judge/verdict.hpp"

namespace gvcot::judge {

/// A judge prompt: verbatim body text plus the ordered image slots the
/// prompt expects. Bodies ship compiled in; load_template_override swaps in
/// an alternate body for prompt ablations.
struct PromptTemplate {
    TemplateId id;
    std::string body;
    std::vector<std::string> image_slots; // role labels, attachment order
    bool wants_instruction = true;
};

const PromptTemplate& builtin_template(TemplateId id);

/// Returns the builtin template with its body replaced by the file's
/// content. Throws std::runtime_error when the file cannot be read.
PromptTemplate load_template_override(TemplateId id, const std::filesystem::path& file);

} // namespace gvcot::judge
