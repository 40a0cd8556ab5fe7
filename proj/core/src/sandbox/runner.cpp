#include <cstring>
#include <fstream>

#include "gvcot/sandbox/train.hpp"

namespace gvcot::sandbox {
namespace {

constexpr char kMagic[4] = {'G', 'V', 'C', 'K'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_pod(std::ofstream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::ifstream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

// Fresh training scenes per step; the same (seed, step) always yields the
// same batch.
std::vector<ToyScene> step_batch(const Rng& seed_rng, int step, int size) {
    Rng rng = seed_rng.split("scenes").split(static_cast<std::uint64_t>(step));
    return make_scenes(rng, size);
}

double eval_stage1_loss(const ToyPolicy& policy, std::span<const ToyScene> scenes,
                        const TrainConfig& cfg, const Rng& seed_rng) {
    std::vector<FlowExample> mask_ex, edit_ex;
    for (const ToyScene& s : scenes) {
        mask_ex.push_back(masking_example(s));
        edit_ex.push_back(editing_example(s));
    }
    Rng mask_rng = seed_rng.split("eval_mask");
    Rng edit_rng = seed_rng.split("eval_edit");
    return cfg.lambda_m * fm_loss_and_grad(policy, mask_ex, cfg.timestep_shift, mask_rng,
                                           nullptr) +
           cfg.lambda_e * fm_loss_and_grad(policy, edit_ex, cfg.timestep_shift, edit_rng,
                                           nullptr);
}

} // namespace

void save_checkpoint(const std::filesystem::path& path, const ToyPolicy& policy,
                     const std::vector<double>& ema, std::uint64_t seed, long long step) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write checkpoint: " + path.string());
    }
    out.write(kMagic, sizeof(kMagic));
    write_pod(out, kVersion);
    write_pod(out, static_cast<std::int32_t>(policy.state_dim()));
    write_pod(out, static_cast<std::int32_t>(policy.cond_dim()));
    write_pod(out, static_cast<std::int32_t>(policy.hidden1()));
    write_pod(out, static_cast<std::int32_t>(policy.hidden2()));
    write_pod(out, seed);
    write_pod(out, static_cast<std::int64_t>(step));
    write_pod(out, static_cast<std::uint64_t>(policy.param_count()));
    out.write(reinterpret_cast<const char*>(policy.params().data()),
              static_cast<std::streamsize>(policy.param_count() * sizeof(double)));
    const std::uint8_t has_ema = ema.empty() ? 0 : 1;
    write_pod(out, has_ema);
    if (has_ema) {
        out.write(reinterpret_cast<const char*>(ema.data()),
                  static_cast<std::streamsize>(ema.size() * sizeof(double)));
    }
    if (!out) {
        throw std::runtime_error("checkpoint write failed: " + path.string());
    }
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read checkpoint: " + path.string());
    }
    char magic[4];
    in.read(magic, sizeof(magic));
    if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw std::runtime_error("bad checkpoint magic: " + path.string());
    }
    if (read_pod<std::uint32_t>(in) != kVersion) {
        throw std::runtime_error("unsupported checkpoint version: " + path.string());
    }
    const int state_dim = read_pod<std::int32_t>(in);
    const int cond_dim = read_pod<std::int32_t>(in);
    const int h1 = read_pod<std::int32_t>(in);
    const int h2 = read_pod<std::int32_t>(in);
    const std::uint64_t seed = read_pod<std::uint64_t>(in);
    const std::int64_t step = read_pod<std::int64_t>(in);
    const std::uint64_t count = read_pod<std::uint64_t>(in);

    ToyPolicy policy(state_dim, cond_dim, h1, h2);
    if (count != policy.param_count()) {
        throw std::runtime_error("checkpoint parameter count mismatch");
    }
    std::vector<double> params(count);
    in.read(reinterpret_cast<char*>(params.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    policy.set_params(params);

    std::vector<double> ema;
    if (read_pod<std::uint8_t>(in)) {
        ema.resize(count);
        in.read(reinterpret_cast<char*>(ema.data()),
                static_cast<std::streamsize>(count * sizeof(double)));
    }
    if (!in) {
        throw std::runtime_error("checkpoint truncated: " + path.string());
    }
    return Checkpoint{std::move(policy), std::move(ema), seed, step};
}

SftRunSummary run_sft(int stage, const TrainConfig& cfg, std::uint64_t seed, int steps,
                      const std::optional<ToyPolicy>& init, ToyPolicy* out_policy,
                      const MetricsSink& sink) {
    if (stage != 1 && stage != 2) {
        throw std::invalid_argument("run_sft: stage must be 1 or 2");
    }
    const Rng seed_rng(seed);

    ToyPolicy policy = init ? *init : ToyPolicy(ToyScene::kStateDim, kPolicyCondDim);
    if (!init) {
        Rng init_rng = seed_rng.split("init");
        policy.init_weights(init_rng);
    }

    Rng eval_scene_rng = seed_rng.split("eval_scenes");
    const auto eval_scenes = make_scenes(eval_scene_rng, 256);

    SftRunSummary summary;
    summary.steps = steps;
    summary.initial_loss = stage == 1
                               ? eval_stage1_loss(policy, eval_scenes, cfg, seed_rng)
                               : sequential_loss(policy, eval_scenes, cfg.timestep_shift,
                                                 seed_rng.split("eval_seq"));
    summary.initial_holdout_sequential =
        sequential_loss(policy, eval_scenes, cfg.timestep_shift, seed_rng.split("eval_seq"));

    SftTrainer trainer(std::move(policy), cfg);
    for (int step = 0; step < steps; ++step) {
        SftStepStats stats;
        Rng step_rng = seed_rng.split("step").split(static_cast<std::uint64_t>(step));
        if (stage == 1) {
            const auto mask_batch = step_batch(seed_rng, 2 * step, cfg.batch_size);
            const auto edit_batch = step_batch(seed_rng, 2 * step + 1, cfg.batch_size);
            stats = trainer.stage1_step(mask_batch, edit_batch, step_rng);
        } else {
            const auto batch = step_batch(seed_rng, step, cfg.batch_size);
            stats = trainer.stage2_step(batch, step_rng);
        }
        if (sink) {
            StepMetrics m;
            m.step = step + 1;
            m.loss_mask = stats.loss_mask;
            m.loss_edit = stats.loss_edit;
            m.loss_total = stats.total;
            m.lr = stats.lr;
            sink(m);
        }
    }

    summary.final_loss = stage == 1
                             ? eval_stage1_loss(trainer.policy(), eval_scenes, cfg, seed_rng)
                             : sequential_loss(trainer.policy(), eval_scenes,
                                               cfg.timestep_shift, seed_rng.split("eval_seq"));
    summary.final_holdout_sequential = sequential_loss(
        trainer.policy(), eval_scenes, cfg.timestep_shift, seed_rng.split("eval_seq"));
    if (out_policy) {
        *out_policy = trainer.policy();
    }
    return summary;
}

GrpoRunSummary run_grpo(const TrainConfig& cfg, std::uint64_t seed, int steps,
                        const ToyPolicy& init, ToyPolicy* out_policy,
                        const MetricsSink& sink) {
    const Rng seed_rng(seed);
    Rng eval_scene_rng = seed_rng.split("eval_scenes");
    const auto eval_scenes = make_scenes(eval_scene_rng, 64);

    GrpoRunSummary summary;
    summary.steps = steps;
    summary.initial_mean_reward =
        eval_mean_reward(init, eval_scenes, cfg, seed_rng.split("eval_reward"));

    GrpoTrainer trainer(init, cfg);
    GrpoStepStats last;
    for (int step = 0; step < steps; ++step) {
        const auto scenes = step_batch(seed_rng, step, cfg.grpo.scenes_per_step);
        Rng step_rng = seed_rng.split("step").split(static_cast<std::uint64_t>(step));
        last = trainer.step(scenes, toy_iou_reward, step_rng);
        if (sink) {
            StepMetrics m;
            m.step = step + 1;
            m.lr = last.lr;
            m.mean_reward = last.mean_reward;
            m.kl = last.kl_estimate;
            m.loss_total = last.surrogate;
            sink(m);
        }
    }

    summary.final_mean_reward =
        eval_mean_reward(trainer.policy(), eval_scenes, cfg, seed_rng.split("eval_reward"));
    summary.final_kl = last.kl_estimate;
    if (out_policy) {
        *out_policy = trainer.policy();
    }
    return summary;
}

} // namespace gvcot::sandbox
