#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gvcot/geometry.hpp"

namespace gvcot {

/// Box candidates pooled from several beam-search grounding queries.
struct CandidateSet {
    std::vector<BBox> candidates;
    int image_width = 0;
    int image_height = 0;
};

struct MiningParams {
    double iou_threshold = 0.5;     // edge threshold for clustering
    double max_aspect_ratio = 20.0; // max(side)/min(side)
    double min_area_frac = 1e-4;    // of image area
    int min_cluster_size = 2;
};

enum class BoxRejection {
    OutOfBounds,
    ZeroArea,
    TooSmall,
    ExtremeAspect,
};

const char* to_string(BoxRejection r);

/// Checks one normalized candidate against the image bounds and the size /
/// aspect limits. Returns nullopt when the box is acceptable.
std::optional<BoxRejection> validate_box(const BBox& b, const MiningParams& params,
                                         int image_width, int image_height);

/// Groups boxes into connected components of the graph with an edge wherever
/// pairwise IoU >= tau. Clusters come back ordered by descending size, ties
/// broken by the top-left-most member.
std::vector<std::vector<BBox>> cluster_by_iou(const std::vector<BBox>& boxes, double tau);

/// Coordinate-wise arithmetic mean of the cluster, rounded half away from
/// zero, then normalized. Throws std::invalid_argument on an empty cluster.
BBox consensus_box(const std::vector<BBox>& cluster);

struct MiningResult {
    std::vector<BBox> regions;           // sorted by top-left
    std::optional<std::string> diagnostic; // set when mining produced nothing
    int rejected_count = 0;
};

/// Full mining pass: validate -> cluster -> drop undersized clusters (with a
/// largest-area singleton fallback when nothing else survives) -> consensus
/// per surviving cluster.
MiningResult mine_regions(const CandidateSet& cs, const MiningParams& params);

} // namespace gvcot
