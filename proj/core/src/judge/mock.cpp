#include "gvcot/judge/mock.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "gvcot/rng.hpp"

namespace gvcot::judge {
namespace {

constexpr std::array<const char*, 8> kObjects = {
    "red kite", "wooden bench", "street lamp", "blue bicycle",
    "potted plant", "paper boat", "green umbrella", "stone fountain",
};
constexpr std::array<const char*, 6> kPlaces = {
    "near the left edge",  "in the lower right corner", "beside the main subject",
    "along the horizon",   "in the foreground",         "next to the doorway",
};
constexpr std::array<const char*, 5> kColors = {"red", "blue", "green", "yellow", "violet"};

std::string score_json(double s1, double s2, const std::string& reasoning) {
    std::ostringstream out;
    out << "{\n    \"score\" : [" << s1 << ", " << s2 << "],\n    \"reasoning\" : \""
        << reasoning << "\"\n}";
    return out.str();
}

std::string instruction_xml(Rng& rng) {
    const int pick = rng.uniform_int(0, 4);
    const char* object = kObjects[rng.uniform_int(0, kObjects.size() - 1)];
    const char* place = kPlaces[rng.uniform_int(0, kPlaces.size() - 1)];
    const char* color = kColors[rng.uniform_int(0, kColors.size() - 1)];
    const char* color2 = kColors[rng.uniform_int(0, kColors.size() - 1)];

    std::string type, instruction, reverse;
    switch (pick) {
        case 0:
            type = "Add/Remove Object";
            instruction = std::string("Add a ") + object + " " + place + ".";
            reverse = std::string("Remove the ") + object + " " + place + ".";
            break;
        case 1:
            type = "Replace/Transform Object";
            instruction = std::string("Replace the ") + object + " with a " +
                          kObjects[rng.uniform_int(0, kObjects.size() - 1)] + ".";
            reverse = std::string("Replace it back with a ") + object + ".";
            break;
        case 2:
            type = "Color/Style Adjustment";
            instruction = std::string("Change the ") + object + " color from " + color +
                          " to " + color2 + ".";
            reverse = std::string("Change the ") + object + " color from " + color2 +
                      " to " + color + ".";
            break;
        case 3:
            type = "Resize/Relocate/Rotate Object";
            instruction = std::string("Move the ") + object + " " + place + ".";
            reverse = std::string("Move the ") + object + " back to its original position.";
            break;
        default:
            type = "Change Background";
            instruction = std::string("Replace the background with a ") + color + " wall.";
            reverse = "Restore the original background.";
            break;
    }
    return "<result><type>" + type + "</type><instruction>" + instruction +
           "</instruction><reverse>" + reverse + "</reverse></result>";
}

std::string grounding_list(Rng& rng, const EditSample& sample) {
    int w = 0, h = 0;
    if (sample.source) {
        w = sample.source->width();
        h = sample.source->height();
    }
    std::vector<BBox> boxes = sample.boxes;
    if (boxes.empty() && w > 0 && h > 0) {
        boxes.push_back(BBox{w / 4, h / 4, 3 * w / 4, 3 * h / 4});
    }
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        BBox b = boxes[i];
        auto jitter = [&](int v, int hi) {
            return std::clamp(v + rng.uniform_int(-MockJudge::kBoxJitter, MockJudge::kBoxJitter),
                              0, hi);
        };
        b.x1 = jitter(b.x1, w);
        b.y1 = jitter(b.y1, h);
        b.x2 = jitter(b.x2, w);
        b.y2 = jitter(b.y2, h);
        if (i) out << ", ";
        out << "[" << b.x1 << ", " << b.y1 << ", " << b.x2 << ", " << b.y2 << "]";
    }
    out << "]";
    return out.str();
}

} // namespace

std::string MockJudge::respond(TemplateId id, const EditSample& sample, int call_index) const {
    Rng rng = Rng(seed_)
                  .split(to_string(id))
                  .split(sample.id)
                  .split(static_cast<std::uint64_t>(call_index));

    switch (mode_) {
        case FailureMode::BadJson:
            switch (id) {
                case TemplateId::InstructionGen: return "<result><type>Add/Remove";
                case TemplateId::GroundingBoxes: return "[[12, 34,";
                default: return "{\"score\": [7, 9,";
            }
        case FailureMode::OutOfRangeScores:
            if (id != TemplateId::InstructionGen && id != TemplateId::GroundingBoxes) {
                return score_json(12, -1, "scores out of rubric range");
            }
            break;
        case FailureMode::EmptyBoxes:
            if (id == TemplateId::GroundingBoxes) return "[]";
            break;
        case FailureMode::Garbage:
            return "I could not follow the requested output format, sorry.";
        case FailureMode::None:
            break;
    }

    switch (id) {
        case TemplateId::InstructionGen:
            return instruction_xml(rng);
        case TemplateId::GroundingBoxes:
            return grounding_list(rng, sample);
        case TemplateId::SemanticConsistency:
        case TemplateId::CotEditConsistency:
        case TemplateId::PerceptualQuality: {
            const int s1 = rng.uniform_int(6, 10);
            const int s2 = rng.uniform_int(6, 10);
            return score_json(s1, s2,
                              std::string("synthetic verdict for sample ") + sample.id);
        }
    }
    return {};
}

} // namespace gvcot::judge
