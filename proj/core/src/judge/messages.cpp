#include "gvcot/judge/messages.hpp"

namespace gvcot::judge {

std::vector<Message> render_prompt(const PromptTemplate& t, const EditSample& sample,
                                   const std::vector<std::shared_ptr<const RasterImage>>&
                                       extra_images) {
    Message msg;
    msg.role = "user";
    msg.parts.push_back(MessagePart::make_text(t.body));

    std::size_t next_extra = 0;
    for (const std::string& slot : t.image_slots) {
        std::shared_ptr<const RasterImage> img;
        if (next_extra < extra_images.size()) {
            img = extra_images[next_extra++];
        } else if (slot == "source") {
            img = sample.source;
        } else if (slot == "edited") {
            img = sample.target;
        }
        if (!img) {
            throw MissingSlot(slot);
        }
        msg.parts.push_back(MessagePart::make_image(std::move(img)));
    }

    if (t.wants_instruction) {
        if (sample.instruction.empty() && t.id != TemplateId::PerceptualQuality) {
            throw MissingSlot("instruction");
        }
        if (!sample.instruction.empty()) {
            msg.parts.push_back(MessagePart::make_text("Instruction: " + sample.instruction));
        }
    }

    std::vector<Message> out;
    out.push_back(std::move(msg));
    return out;
}

} // namespace gvcot::judge
