#include "gvcot/sandbox/scene.hpp"

#include <algorithm>
#include <cmath>

namespace gvcot::sandbox {
namespace {

std::vector<double> random_box(Rng& rng) {
    const double w = rng.uniform(0.15, 0.45);
    const double h = rng.uniform(0.15, 0.45);
    const double cx = rng.uniform(w / 2, 1.0 - w / 2);
    const double cy = rng.uniform(h / 2, 1.0 - h / 2);
    return {cx, cy, w, h};
}

std::vector<double> apply_edit(const std::vector<double>& box, int op) {
    double cx = box[0], cy = box[1], w = box[2], h = box[3];
    switch (op) {
        case 0: cx += 0.2; break;           // move right
        case 1: cy += 0.2; break;           // move down
        case 2: w *= 0.5; h *= 0.5; break;  // shrink
        default:                            // grow
            w = std::min(w * 1.5, 0.9);
            h = std::min(h * 1.5, 0.9);
            break;
    }
    cx = std::clamp(cx, w / 2, 1.0 - w / 2);
    cy = std::clamp(cy, h / 2, 1.0 - h / 2);
    return {cx, cy, w, h};
}

} // namespace

ToyScene make_scene(Rng& rng) {
    ToyScene s;
    const auto box_a = random_box(rng);
    const auto box_b = random_box(rng);
    const int select = rng.uniform_int(0, 1);
    const int op = rng.uniform_int(0, 3);
    const int instruction = select * 4 + op;

    s.condition.assign(ToyScene::kConditionDim, 0.0);
    s.condition[instruction] = 1.0;
    for (int i = 0; i < 4; ++i) {
        s.condition[8 + i] = box_a[i];
        s.condition[12 + i] = box_b[i];
    }
    s.x_cot_star = select == 0 ? box_a : box_b;
    s.x_edit_star = apply_edit(s.x_cot_star, op);
    return s;
}

std::vector<ToyScene> make_scenes(Rng& rng, int count) {
    std::vector<ToyScene> scenes;
    scenes.reserve(count);
    for (int i = 0; i < count; ++i) {
        Rng sub = rng.split(static_cast<std::uint64_t>(i));
        scenes.push_back(make_scene(sub));
    }
    return scenes;
}

double toy_box_iou(std::span<const double> a, std::span<const double> b) {
    const double aw = std::max(0.0, a[2]), ah = std::max(0.0, a[3]);
    const double bw = std::max(0.0, b[2]), bh = std::max(0.0, b[3]);
    const double area_a = aw * ah, area_b = bw * bh;
    if (area_a <= 0.0 || area_b <= 0.0) return 0.0;
    const double ix = std::max(
        0.0, std::min(a[0] + aw / 2, b[0] + bw / 2) - std::max(a[0] - aw / 2, b[0] - bw / 2));
    const double iy = std::max(
        0.0, std::min(a[1] + ah / 2, b[1] + bh / 2) - std::max(a[1] - ah / 2, b[1] - bh / 2));
    const double inter = ix * iy;
    const double uni = area_a + area_b - inter;
    return uni > 0.0 ? inter / uni : 0.0;
}

std::vector<double> policy_condition(const ToyScene& scene, TaskKind task,
                                     std::span<const double> thought) {
    std::vector<double> cond;
    cond.reserve(kPolicyCondDim);
    cond.insert(cond.end(), scene.condition.begin(), scene.condition.end());
    cond.push_back(task == TaskKind::Masking ? 1.0 : 0.0);
    cond.push_back(task == TaskKind::Editing ? 1.0 : 0.0);
    for (int i = 0; i < ToyScene::kStateDim; ++i) {
        cond.push_back(i < static_cast<int>(thought.size()) ? thought[i] : 0.0);
    }
    return cond;
}

} // namespace gvcot::sandbox
