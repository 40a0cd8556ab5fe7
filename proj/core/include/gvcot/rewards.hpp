#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvcot/image.hpp"
#include "gvcot/judge/verdict.hpp"
#include "gvcot/mask_ops.hpp"

namespace gvcot {

enum class RlStage { Reasoning, Editing };

const char* to_string(RlStage s);

/// Per-stage reward weighting. Reasoning pairs (format, IoU); editing pairs
/// (consistency, quality). w2 is 0.8 for reasoning and 0.2 for editing.
struct RewardWeights {
    RlStage stage = RlStage::Reasoning;
    double w1 = 0.5;
    double w2 = 0.8;
    double kl_weight = 0.001;
    int group_size = 24;

    static RewardWeights defaults(RlStage stage) {
        RewardWeights w;
        w.stage = stage;
        w.w2 = stage == RlStage::Reasoning ? 0.8 : 0.2;
        return w;
    }
};

/// Rewards of one rollout group (all rollouts of one prompt).
struct GroupRollout {
    std::vector<double> rewards;
    std::string sample_id;
    RlStage stage = RlStage::Reasoning;
};

struct GroupTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// IoU between the mask extracted from the cot image (via diff_mask) and the
/// ground-truth region mask.
double iou_reward(const RasterImage& src, const RasterImage& cot, const BinaryMask& gt,
                  const MorphParams& p);

/// Binary classifier deciding whether an image is a visual-thought-stage
/// output (overlay drawn on the source) rather than an edit-stage output.
using StageClassifier = std::function<bool(const RasterImage& img, const RasterImage& src)>;

/// Built-in heuristic: "thought" when >= 0.5% of pixels carry the overlay
/// tint signature (R and B raised, G lowered beyond diff_threshold) and
/// < 40% of pixels changed overall.
StageClassifier tint_heuristic_classifier(const MorphParams& p = {});

/// 1.0 iff the classifier labels img as a visual-thought-stage output.
double format_reward(const RasterImage& img, const RasterImage& src,
                     const StageClassifier& classifier);

/// Maps a two-score verdict to [0,1]: (score1 + score2) / 20.
double judge_reward(const judge::JudgeVerdict& verdict);

/// w1*r1 + w2*r2.
double aggregate(double r1, double r2, const RewardWeights& w);

/// Group-relative advantages: (r_i - mean) / (population std + 1e-6).
std::vector<double> group_advantages(const GroupRollout& g);

constexpr double kAdvantageEpsilon = 1e-6;

} // namespace gvcot
