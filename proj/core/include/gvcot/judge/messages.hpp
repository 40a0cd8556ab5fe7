#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvcot/image.hpp"
#include "gvcot/judge/templates.hpp"
#include "gvcot/sample.hpp"

namespace gvcot::judge {

struct MessagePart {
    enum class Kind { Text, Image };
    Kind kind = Kind::Text;
    std::string text;
    std::shared_ptr<const RasterImage> image;

    static MessagePart make_text(std::string t) {
        return {Kind::Text, std::move(t), nullptr};
    }
    static MessagePart make_image(std::shared_ptr<const RasterImage> img) {
        return {Kind::Image, {}, std::move(img)};
    }
};

struct Message {
    std::string role;
    std::vector<MessagePart> parts;
};

struct MissingSlot : std::runtime_error {
    explicit MissingSlot(const std::string& slot)
        : std::runtime_error("missing prompt slot: " + slot), slot_name(slot) {}
    std::string slot_name;
};

/// Builds the message sequence for a template: body text first, then the
/// template's images in slot order, then the instruction line when the
/// template uses one. extra_images fill slots positionally before the sample
/// is consulted ("source" -> sample.source, "edited" -> sample.target).
std::vector<Message> render_prompt(const PromptTemplate& t, const EditSample& sample,
                                   const std::vector<std::shared_ptr<const RasterImage>>&
                                       extra_images = {});

} // namespace gvcot::judge
