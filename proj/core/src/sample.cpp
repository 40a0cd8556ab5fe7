#include "gvcot/sample.hpp"

#include <array>
#include <utility>

namespace gvcot {
namespace {

constexpr std::array<std::pair<TaskCategory, const char*>, 19> kTaskNames{{
    {TaskCategory::AddObject, "add_object"},
    {TaskCategory::RemoveObject, "remove_object"},
    {TaskCategory::ReplaceObject, "replace_object"},
    {TaskCategory::TransformObject, "transform_object"},
    {TaskCategory::ChangeColor, "change_color"},
    {TaskCategory::ChangeMaterial, "change_material"},
    {TaskCategory::ChangeTexture, "change_texture"},
    {TaskCategory::ChangeText, "change_text"},
    {TaskCategory::ChangeLighting, "change_lighting"},
    {TaskCategory::ChangeExpression, "change_expression"},
    {TaskCategory::MoveObject, "move_object"},
    {TaskCategory::ResizeObject, "resize_object"},
    {TaskCategory::RotateObject, "rotate_object"},
    {TaskCategory::RearrangeObjects, "rearrange_objects"},
    {TaskCategory::InpaintRegion, "inpaint_region"},
    {TaskCategory::RestorePhoto, "restore_photo"},
    {TaskCategory::SharpenRegion, "sharpen_region"},
    {TaskCategory::MultiRegionEdit, "multi_region_edit"},
    {TaskCategory::CompoundEdit, "compound_edit"},
}};

constexpr std::array<std::pair<EditType, const char*>, 5> kEditTypeNames{{
    {EditType::AddRemoveObject, "Add/Remove Object"},
    {EditType::ReplaceTransformObject, "Replace/Transform Object"},
    {EditType::ColorStyleAdjustment, "Color/Style Adjustment"},
    {EditType::ResizeRelocateRotateObject, "Resize/Relocate/Rotate Object"},
    {EditType::ChangeBackground, "Change Background"},
}};

} // namespace

const char* to_string(TaskCategory c) {
    for (const auto& [value, name] : kTaskNames) {
        if (value == c) return name;
    }
    return "unknown";
}

const char* to_string(EditType t) {
    for (const auto& [value, name] : kEditTypeNames) {
        if (value == t) return name;
    }
    return "unknown";
}

std::optional<TaskCategory> parse_task_category(const std::string& s) {
    for (const auto& [value, name] : kTaskNames) {
        if (s == name) return value;
    }
    return std::nullopt;
}

std::optional<EditType> parse_edit_type(const std::string& s) {
    for (const auto& [value, name] : kEditTypeNames) {
        if (s == name) return value;
    }
    return std::nullopt;
}

} // namespace gvcot
