#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gvcot/image.hpp"

namespace gvcot {

struct EmptySet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroVector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoVotes : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ImageTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Per-sample benchmark scores; overall is the geometric mean of sc and pq.
struct SampleScores {
    double sc = 0.0;
    double pq = 0.0;
    double overall = 0.0;

    static SampleScores from(double sc, double pq);
};

/// sqrt(sc * pq).
double vie_overall(double sc, double pq);

struct BenchmarkAggregate {
    double sc_mean = 0.0;
    double pq_mean = 0.0;
    double overall_mean = 0.0; // per-sample geometric means, averaged
    std::size_t count = 0;
};

BenchmarkAggregate benchmark_aggregate(const std::vector<SampleScores>& per_sample);

/// Precomputed embedding vectors for one sample. Vector families: e_* CLIP
/// image, t_* CLIP text, d_* DINO image.
struct EmbeddingRecord {
    std::string sample_id;
    std::vector<double> e_src, e_edit;
    std::vector<double> t_src, t_out;
    std::vector<double> d_src, d_edit;
    std::optional<double> lpips;  // precomputed, aggregated only
    std::optional<double> clip_i; // precomputed, aggregated only
};

double cosine(const std::vector<double>& u, const std::vector<double>& v);

struct ClipDir {
    double value = 0.0;
    bool degenerate = false; // a delta was the zero vector
};

/// Directional similarity cosine(e_edit - e_src, t_out - t_src); 0 with the
/// degenerate flag set when either delta is zero.
ClipDir clip_dir(const EmbeddingRecord& r);

/// Mean absolute per-channel difference scaled to [0,1].
double pixel_l1(const RasterImage& a, const RasterImage& b);

/// 10*log10(255^2 / MSE). Identical images carry the sentinel flag instead
/// of a value.
struct Psnr {
    bool identical = false;
    double db = 0.0;
};

Psnr psnr(const RasterImage& a, const RasterImage& b);

/// Single-scale SSIM, 8x8 sliding window, stride 1, C1=(0.01*255)^2,
/// C2=(0.03*255)^2. Color inputs go through Y = round(.299R+.587G+.114B).
double ssim(const RasterImage& a, const RasterImage& b);

/// Pairwise human-preference tally against one opponent.
struct GsbTally {
    std::string opponent;
    long long good = 0;
    long long same = 0;
    long long bad = 0;
};

struct GsbShare {
    std::string opponent;
    double good_pct = 0.0;
    double same_pct = 0.0;
    double bad_pct = 0.0;
    double net = 0.0; // (good - bad) / total, in [-1, 1]
};

std::vector<GsbShare> gsb_aggregate(const std::vector<GsbTally>& tallies);

} // namespace gvcot
