#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gvcot/geometry.hpp"
#include "gvcot/image.hpp"
#include "gvcot/judge/verdict.hpp"

namespace gvcot {

/// Task taxonomy used for per-category reporting. Nineteen localized-edit
/// tasks grouped into five families (content, attribute, spatial,
/// restoration, complex).
enum class TaskCategory {
    // content
    AddObject,
    RemoveObject,
    ReplaceObject,
    TransformObject,
    // attribute
    ChangeColor,
    ChangeMaterial,
    ChangeTexture,
    ChangeText,
    ChangeLighting,
    ChangeExpression,
    // spatial
    MoveObject,
    ResizeObject,
    RotateObject,
    RearrangeObjects,
    // restoration
    InpaintRegion,
    RestorePhoto,
    SharpenRegion,
    // complex
    MultiRegionEdit,
    CompoundEdit,
};

/// The five categories an instruction-generation response may carry.
enum class EditType {
    AddRemoveObject,
    ReplaceTransformObject,
    ColorStyleAdjustment,
    ResizeRelocateRotateObject,
    ChangeBackground,
};

const char* to_string(TaskCategory c);
const char* to_string(EditType t);
std::optional<TaskCategory> parse_task_category(const std::string& s);
std::optional<EditType> parse_edit_type(const std::string& s);

/// One curated editing sample: source image, instruction pair, region
/// annotations, optional target image, and any judge verdicts recorded
/// along the way.
struct EditSample {
    std::string id;
    std::shared_ptr<const RasterImage> source;
    std::string instruction;
    std::optional<std::string> reverse_instruction;
    std::optional<TaskCategory> category;
    std::optional<EditType> edit_type;
    std::vector<BBox> boxes;
    std::optional<BinaryMask> mask;
    std::shared_ptr<const RasterImage> target;
    std::vector<judge::JudgeVerdict> verdicts;
};

} // namespace gvcot
