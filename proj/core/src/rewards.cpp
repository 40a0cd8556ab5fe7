#include "gvcot/rewards.hpp"

#include <cmath>

namespace gvcot {

const char* to_string(RlStage s) {
    return s == RlStage::Reasoning ? "reasoning" : "editing";
}

double iou_reward(const RasterImage& src, const RasterImage& cot, const BinaryMask& gt,
                  const MorphParams& p) {
    if (!src.same_shape(cot)) {
        throw DimensionMismatch("iou_reward: image shapes differ");
    }
    return mask_iou(diff_mask(src, cot, p), gt);
}

StageClassifier tint_heuristic_classifier(const MorphParams& p) {
    const int threshold = p.diff_threshold;
    return [threshold](const RasterImage& img, const RasterImage& src) {
        if (!img.same_shape(src)) {
            throw DimensionMismatch("format_reward: image shapes differ");
        }
        if (src.channels() != 3) {
            return false; // tint signature needs color
        }
        const std::size_t total = static_cast<std::size_t>(src.width()) * src.height();
        std::size_t tinted = 0, changed = 0;
        for (int y = 0; y < src.height(); ++y) {
            for (int x = 0; x < src.width(); ++x) {
                const int dr = static_cast<int>(img.at(x, y, 0)) - src.at(x, y, 0);
                const int dg = static_cast<int>(img.at(x, y, 1)) - src.at(x, y, 1);
                const int db = static_cast<int>(img.at(x, y, 2)) - src.at(x, y, 2);
                if (std::max({std::abs(dr), std::abs(dg), std::abs(db)}) > threshold) {
                    ++changed;
                }
                if (dr > threshold && db > threshold && -dg > threshold) {
                    ++tinted;
                }
            }
        }
        const double tint_frac = static_cast<double>(tinted) / static_cast<double>(total);
        const double change_frac = static_cast<double>(changed) / static_cast<double>(total);
        return tint_frac >= 0.005 && change_frac < 0.40;
    };
}

double format_reward(const RasterImage& img, const RasterImage& src,
                     const StageClassifier& classifier) {
    return classifier(img, src) ? 1.0 : 0.0;
}

double judge_reward(const judge::JudgeVerdict& verdict) {
    return (verdict.score1 + verdict.score2) / 20.0;
}

double aggregate(double r1, double r2, const RewardWeights& w) {
    return w.w1 * r1 + w.w2 * r2;
}

std::vector<double> group_advantages(const GroupRollout& g) {
    const std::size_t n = g.rewards.size();
    if (n < 2) {
        throw GroupTooSmall("group_advantages: need at least 2 rewards, got " +
                            std::to_string(n));
    }
    double mean = 0.0;
    for (double r : g.rewards) mean += r;
    mean /= static_cast<double>(n);

    double var = 0.0;
    for (double r : g.rewards) var += (r - mean) * (r - mean);
    var /= static_cast<double>(n); // population variance
    const double std_dev = std::sqrt(var);

    std::vector<double> advantages(n);
    for (std::size_t i = 0; i < n; ++i) {
        advantages[i] = (g.rewards[i] - mean) / (std_dev + kAdvantageEpsilon);
    }
    return advantages;
}

} // namespace gvcot
