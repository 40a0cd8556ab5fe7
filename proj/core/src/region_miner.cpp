#include "gvcot/region_miner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gvcot {

const char* to_string(BoxRejection r) {
    switch (r) {
        case BoxRejection::OutOfBounds: return "OutOfBounds";
        case BoxRejection::ZeroArea: return "ZeroArea";
        case BoxRejection::TooSmall: return "TooSmall";
        case BoxRejection::ExtremeAspect: return "ExtremeAspect";
    }
    return "unknown";
}

std::optional<BoxRejection> validate_box(const BBox& b, const MiningParams& params,
                                         int image_width, int image_height) {
    if (b.x1 < 0 || b.y1 < 0 || b.x2 > image_width || b.y2 > image_height) {
        return BoxRejection::OutOfBounds;
    }
    const long long area = b.area();
    if (area == 0) {
        return BoxRejection::ZeroArea;
    }
    const double min_area = params.min_area_frac * image_width * image_height;
    if (static_cast<double>(area) < min_area) {
        return BoxRejection::TooSmall;
    }
    const double w = static_cast<double>(b.width());
    const double h = static_cast<double>(b.height());
    if (std::max(w, h) / std::min(w, h) > params.max_aspect_ratio) {
        return BoxRejection::ExtremeAspect;
    }
    return std::nullopt;
}

std::vector<std::vector<BBox>> cluster_by_iou(const std::vector<BBox>& boxes, double tau) {
    const std::size_t n = boxes.size();
    std::vector<int> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);

    auto find = [&](int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (box_iou(boxes[i], boxes[j]) >= tau) {
                parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
            }
        }
    }

    std::vector<std::vector<BBox>> clusters;
    std::vector<int> root_to_cluster(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const int r = find(static_cast<int>(i));
        if (root_to_cluster[r] < 0) {
            root_to_cluster[r] = static_cast<int>(clusters.size());
            clusters.emplace_back();
        }
        clusters[root_to_cluster[r]].push_back(boxes[i]);
    }

    for (auto& c : clusters) {
        std::sort(c.begin(), c.end(), box_before);
    }
    std::sort(clusters.begin(), clusters.end(),
              [](const std::vector<BBox>& a, const std::vector<BBox>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return box_before(a.front(), b.front());
              });
    return clusters;
}

BBox consensus_box(const std::vector<BBox>& cluster) {
    if (cluster.empty()) {
        throw std::invalid_argument("consensus_box: empty cluster");
    }
    double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
    for (const BBox& b : cluster) {
        x1 += b.x1;
        y1 += b.y1;
        x2 += b.x2;
        y2 += b.y2;
    }
    const double n = static_cast<double>(cluster.size());
    // std::round rounds half away from zero
    BBox mean{static_cast<int>(std::round(x1 / n)), static_cast<int>(std::round(y1 / n)),
              static_cast<int>(std::round(x2 / n)), static_cast<int>(std::round(y2 / n))};
    return normalize_box(mean);
}

MiningResult mine_regions(const CandidateSet& cs, const MiningParams& params) {
    MiningResult result;
    std::vector<BBox> valid;
    valid.reserve(cs.candidates.size());
    for (const BBox& b : cs.candidates) {
        if (!validate_box(b, params, cs.image_width, cs.image_height)) {
            valid.push_back(b);
        } else {
            ++result.rejected_count;
        }
    }
    if (valid.empty()) {
        result.diagnostic = "MiningFailed: all " + std::to_string(cs.candidates.size()) +
                            " candidates rejected";
        return result;
    }

    const auto clusters = cluster_by_iou(valid, params.iou_threshold);

    std::vector<const std::vector<BBox>*> surviving;
    for (const auto& c : clusters) {
        if (static_cast<int>(c.size()) >= params.min_cluster_size) {
            surviving.push_back(&c);
        }
    }

    std::vector<BBox> singleton_fallback;
    if (surviving.empty()) {
        const bool all_singletons =
            std::all_of(clusters.begin(), clusters.end(),
                        [](const std::vector<BBox>& c) { return c.size() == 1; });
        if (all_singletons) {
            // A lone unanimous beam still yields a region: keep the largest one.
            const BBox* best = nullptr;
            for (const auto& c : clusters) {
                if (!best || c.front().area() > best->area() ||
                    (c.front().area() == best->area() && box_before(c.front(), *best))) {
                    best = &c.front();
                }
            }
            singleton_fallback.push_back(*best);
            surviving.push_back(&singleton_fallback);
        }
    }

    if (surviving.empty()) {
        result.diagnostic = "MiningFailed: no cluster reached min_cluster_size " +
                            std::to_string(params.min_cluster_size);
        return result;
    }

    for (const auto* c : surviving) {
        result.regions.push_back(consensus_box(*c));
    }
    std::sort(result.regions.begin(), result.regions.end(), box_before);
    return result;
}

} // namespace gvcot
