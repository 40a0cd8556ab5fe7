#pragma once

#include <span>
#include <vector>

#include "gvcot/rng.hpp"

namespace gvcot::sandbox {

/// Toy localization task. A scene holds two candidate boxes encoded as
/// (cx, cy, w, h) in [0,1]; the instruction one-hot selects one of them and
/// an edit operation. The visual-thought target is the selected box; the
/// edit target is the operated box.
struct ToyScene {
    static constexpr int kConditionDim = 16; // instruction one-hot (8) + two boxes (8)
    static constexpr int kStateDim = 4;      // (cx, cy, w, h)

    std::vector<double> condition;   // 16
    std::vector<double> x_cot_star;  // 4, coordinates in [0,1]
    std::vector<double> x_edit_star; // 4, coordinates in [0,1]
};

/// Instruction = select {first, second} x op {move right, move down,
/// shrink, grow}.
ToyScene make_scene(Rng& rng);
std::vector<ToyScene> make_scenes(Rng& rng, int count);

/// Continuous IoU between two (cx, cy, w, h) boxes; degenerate boxes
/// (w or h <= 0) score 0 against everything.
double toy_box_iou(std::span<const double> a, std::span<const double> b);

/// Conditioning vector fed to the policy: scene condition (16), task flag
/// (2: masking / editing), thought slot (4; x_cot* under teacher forcing,
/// zeros otherwise).
constexpr int kPolicyCondDim = ToyScene::kConditionDim + 2 + ToyScene::kStateDim;

enum class TaskKind { Masking, Editing };

std::vector<double> policy_condition(const ToyScene& scene, TaskKind task,
                                     std::span<const double> thought = {});

} // namespace gvcot::sandbox
