#include "gvcot/metrics.hpp"

#include <cmath>
#include <numeric>

namespace gvcot {
namespace {

std::vector<double> to_gray(const RasterImage& img) {
    std::vector<double> gray(static_cast<std::size_t>(img.width()) * img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            double v;
            if (img.channels() == 3) {
                v = std::round(0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) +
                               0.114 * img.at(x, y, 2));
            } else {
                v = img.at(x, y, 0);
            }
            gray[static_cast<std::size_t>(y) * img.width() + x] = v;
        }
    }
    return gray;
}

} // namespace

SampleScores SampleScores::from(double sc, double pq) {
    return {sc, pq, vie_overall(sc, pq)};
}

double vie_overall(double sc, double pq) {
    return std::sqrt(sc * pq);
}

BenchmarkAggregate benchmark_aggregate(const std::vector<SampleScores>& per_sample) {
    if (per_sample.empty()) {
        throw EmptySet("benchmark_aggregate: empty sample set");
    }
    BenchmarkAggregate agg;
    agg.count = per_sample.size();
    for (const SampleScores& s : per_sample) {
        agg.sc_mean += s.sc;
        agg.pq_mean += s.pq;
        agg.overall_mean += s.overall;
    }
    const double n = static_cast<double>(per_sample.size());
    agg.sc_mean /= n;
    agg.pq_mean /= n;
    agg.overall_mean /= n;
    return agg;
}

double cosine(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size()) {
        throw DimensionMismatch("cosine: dimension mismatch");
    }
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) {
        throw ZeroVector("cosine: zero-norm vector");
    }
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

ClipDir clip_dir(const EmbeddingRecord& r) {
    if (r.e_src.size() != r.e_edit.size() || r.t_src.size() != r.t_out.size()) {
        throw DimensionMismatch("clip_dir: family dimensions differ");
    }
    std::vector<double> de(r.e_edit.size()), dt(r.t_out.size());
    bool de_zero = true, dt_zero = true;
    for (std::size_t i = 0; i < de.size(); ++i) {
        de[i] = r.e_edit[i] - r.e_src[i];
        if (de[i] != 0.0) de_zero = false;
    }
    for (std::size_t i = 0; i < dt.size(); ++i) {
        dt[i] = r.t_out[i] - r.t_src[i];
        if (dt[i] != 0.0) dt_zero = false;
    }
    if (de_zero || dt_zero) {
        return {0.0, true};
    }
    return {cosine(de, dt), false};
}

double pixel_l1(const RasterImage& a, const RasterImage& b) {
    if (!a.same_shape(b)) {
        throw DimensionMismatch("pixel_l1: image shapes differ");
    }
    double sum = 0.0;
    const auto& da = a.data();
    const auto& db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        sum += std::abs(static_cast<double>(da[i]) - static_cast<double>(db[i]));
    }
    return sum / (255.0 * static_cast<double>(da.size()));
}

Psnr psnr(const RasterImage& a, const RasterImage& b) {
    if (!a.same_shape(b)) {
        throw DimensionMismatch("psnr: image shapes differ");
    }
    double mse = 0.0;
    const auto& da = a.data();
    const auto& db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        const double d = static_cast<double>(da[i]) - static_cast<double>(db[i]);
        mse += d * d;
    }
    mse /= static_cast<double>(da.size());
    if (mse == 0.0) {
        return {true, 0.0};
    }
    return {false, 10.0 * std::log10(255.0 * 255.0 / mse)};
}

double ssim(const RasterImage& a, const RasterImage& b) {
    if (!a.same_shape(b)) {
        throw DimensionMismatch("ssim: image shapes differ");
    }
    constexpr int kWindow = 8;
    constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
    constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);
    const int w = a.width(), h = a.height();
    if (w < kWindow || h < kWindow) {
        throw ImageTooSmall("ssim: image smaller than the 8x8 window");
    }
    const std::vector<double> ga = to_gray(a);
    const std::vector<double> gb = to_gray(b);

    double total = 0.0;
    std::size_t windows = 0;
    for (int y = 0; y + kWindow <= h; ++y) {
        for (int x = 0; x + kWindow <= w; ++x) {
            double ma = 0.0, mb = 0.0;
            for (int dy = 0; dy < kWindow; ++dy) {
                for (int dx = 0; dx < kWindow; ++dx) {
                    ma += ga[static_cast<std::size_t>(y + dy) * w + x + dx];
                    mb += gb[static_cast<std::size_t>(y + dy) * w + x + dx];
                }
            }
            constexpr double kN = kWindow * kWindow;
            ma /= kN;
            mb /= kN;
            double va = 0.0, vb = 0.0, cov = 0.0;
            for (int dy = 0; dy < kWindow; ++dy) {
                for (int dx = 0; dx < kWindow; ++dx) {
                    const double da = ga[static_cast<std::size_t>(y + dy) * w + x + dx] - ma;
                    const double db = gb[static_cast<std::size_t>(y + dy) * w + x + dx] - mb;
                    va += da * da;
                    vb += db * db;
                    cov += da * db;
                }
            }
            va /= kN;
            vb /= kN;
            cov /= kN;
            total += ((2.0 * ma * mb + kC1) * (2.0 * cov + kC2)) /
                     ((ma * ma + mb * mb + kC1) * (va + vb + kC2));
            ++windows;
        }
    }
    return total / static_cast<double>(windows);
}

std::vector<GsbShare> gsb_aggregate(const std::vector<GsbTally>& tallies) {
    std::vector<GsbShare> out;
    out.reserve(tallies.size());
    for (const GsbTally& t : tallies) {
        const long long total = t.good + t.same + t.bad;
        if (total < 1) {
            throw NoVotes("gsb_aggregate: no votes for opponent " + t.opponent);
        }
        GsbShare s;
        s.opponent = t.opponent;
        s.good_pct = 100.0 * static_cast<double>(t.good) / static_cast<double>(total);
        s.same_pct = 100.0 * static_cast<double>(t.same) / static_cast<double>(total);
        s.bad_pct = 100.0 * static_cast<double>(t.bad) / static_cast<double>(total);
        s.net = static_cast<double>(t.good - t.bad) / static_cast<double>(total);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace gvcot
