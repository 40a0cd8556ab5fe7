#pragma once

#include <cstdint>
#include <string>

#include "gvcot/judge/verdict.hpp"
#include "gvcot/sample.hpp"

namespace gvcot::judge {

/// Deterministic stand-in for an MLLM endpoint. Responses follow each
/// template's output grammar exactly and are keyed by (seed, template,
/// sample id, call index), so reruns with the same seed reproduce the same
/// text regardless of call order or thread scheduling.
class MockJudge {
public:
    enum class FailureMode {
        None,
        BadJson,          // truncated / malformed structured output
        OutOfRangeScores, // scores outside [0,10], exercising the clamp path
        EmptyBoxes,       // grounding returns []
        Garbage,          // free text with no recognizable structure
    };

    explicit MockJudge(std::uint64_t seed, FailureMode mode = FailureMode::None)
        : seed_(seed), mode_(mode) {}

    /// call_index distinguishes repeated queries (e.g. grounding beams).
    std::string respond(TemplateId id, const EditSample& sample, int call_index = 0) const;

    void set_failure_mode(FailureMode mode) { mode_ = mode; }
    FailureMode failure_mode() const { return mode_; }
    std::uint64_t seed() const { return seed_; }

    /// Max per-coordinate jitter applied to stored boxes in grounding
    /// responses.
    static constexpr int kBoxJitter = 3;

private:
    std::uint64_t seed_;
    FailureMode mode_;
};

} // namespace gvcot::judge
