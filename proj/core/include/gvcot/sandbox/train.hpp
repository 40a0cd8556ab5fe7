#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gvcot/sandbox/policy.hpp"
#include "gvcot/sandbox/scene.hpp"

namespace gvcot::sandbox {

/// Monotone time remap t' = s*t / (1 + (s-1)*t); fixes 0 and 1, s >= 1
/// biases samples toward the data end.
double shift_time(double t, double s);

struct LrSchedule {
    double peak = 3e-3;
    double min = 1e-7;
    int warmup_steps = 100;
    int total_steps = 2000;
};

/// Linear warmup 0 -> peak, then cosine decay peak -> min, clamped at min.
double lr_at(int step, const LrSchedule& lr);

/// ema <- decay*ema + (1-decay)*params.
void ema_update(std::span<double> ema, std::span<const double> params, double decay);

struct GrpoConfig {
    int group_size = 24;
    double kl_weight = 0.001;
    double sde_noise = 0.1;
    int steps_per_sample = 16; // SDE integration steps per rollout
    int scenes_per_step = 2;
};

struct TrainConfig {
    LrSchedule lr;
    double ema_decay = 0.995;
    double timestep_shift = 2.0; // 3.0 during RL
    double lambda_m = 1.0;
    double lambda_e = 1.0;
    double beta1 = 0.9;
    double beta2 = 0.95;
    double weight_decay = 0.0;
    int batch_size = 32;
    GrpoConfig grpo;
};

struct AdamState {
    std::vector<double> m, v;
    long long t = 0;
};

void adam_step(std::span<double> params, std::span<const double> grad, AdamState& state,
               double lr, double beta1, double beta2, double weight_decay);

/// One flow-matching example: data endpoint x1 and the policy conditioning.
struct FlowExample {
    std::vector<double> x1;
    std::vector<double> cond; // kPolicyCondDim wide
};

/// Rectified-flow loss: x0 ~ N(0,I), t ~ shift(U(0,1)), x_t = (1-t)x0 + t*x1,
/// loss = mean ||v(x_t,t,cond) - (x1-x0)||^2. Accumulates the exact gradient
/// into grad when non-null. Throws NonFiniteLoss.
double fm_loss_and_grad(const ToyPolicy& policy, std::span<const FlowExample> batch,
                        double timestep_shift, Rng& rng, std::vector<double>* grad);

FlowExample masking_example(const ToyScene& s);
FlowExample editing_example(const ToyScene& s);
FlowExample teacher_forced_edit_example(const ToyScene& s);

/// Stage-2 objective on held-out scenes with a fixed noise stream:
/// L(x_cot | masking) + L(x_edit | editing + teacher-forced thought).
double sequential_loss(const ToyPolicy& policy, std::span<const ToyScene> scenes,
                       double timestep_shift, Rng rng);

struct SftStepStats {
    double loss_mask = 0.0;
    double loss_edit = 0.0;
    double total = 0.0;
    double lr = 0.0;
};

/// Progressive SFT driver: stage-1 multi-task steps and stage-2 sequential
/// steps over one Adam/EMA state.
class SftTrainer {
public:
    SftTrainer(ToyPolicy policy, TrainConfig cfg);

    SftStepStats stage1_step(std::span<const ToyScene> masking_batch,
                             std::span<const ToyScene> editing_batch, Rng& rng);
    SftStepStats stage2_step(std::span<const ToyScene> batch, Rng& rng);

    const ToyPolicy& policy() const { return policy_; }
    const std::vector<double>& ema() const { return ema_; }
    int step() const { return step_; }

private:
    SftStepStats optimize(std::span<const double> grad, double loss_mask, double loss_edit);

    ToyPolicy policy_;
    TrainConfig cfg_;
    AdamState adam_;
    std::vector<double> ema_;
    int step_ = 0;
};

/// Deterministic Euler integration of dx = v dt over the shifted grid.
std::vector<double> sample_ode(const ToyPolicy& policy, std::span<const double> cond, int steps,
                               double timestep_shift, std::vector<double> x0);
std::vector<double> sample_ode(const ToyPolicy& policy, std::span<const double> cond, int steps,
                               double timestep_shift, Rng& rng);

struct SdeStep {
    std::vector<double> state; // x_k before the step
    double t = 0.0;
    double dt = 0.0;
    std::vector<double> noise; // xi_k
};

struct SdeTrajectory {
    std::vector<SdeStep> steps;
    std::vector<double> terminal;
};

/// Euler-Maruyama: x_{k+1} = x_k + v dt + noise_scale*sqrt(dt)*xi. The
/// per-step log feeds the GRPO policy-gradient term.
SdeTrajectory sample_sde(const ToyPolicy& policy, std::span<const double> cond, int steps,
                         double noise_scale, double timestep_shift, Rng& rng);

using RewardFn =
    std::function<double(const ToyScene& scene, std::span<const double> terminal)>;

/// Toy reward: IoU between the decoded rollout box and the scene's
/// ground-truth thought box.
double toy_iou_reward(const ToyScene& scene, std::span<const double> terminal);

struct GrpoStepStats {
    double mean_reward = 0.0;
    double kl_estimate = 0.0;
    double surrogate = 0.0;
    double lr = 0.0;
};

/// Group-relative policy optimization over SDE rollouts. The reference
/// policy is frozen at construction; transitions are Gaussian with mean
/// x + v dt and std noise_scale*sqrt(dt).
class GrpoTrainer {
public:
    GrpoTrainer(ToyPolicy policy, TrainConfig cfg);

    GrpoStepStats step(std::span<const ToyScene> scenes, const RewardFn& reward, Rng& rng);

    const ToyPolicy& policy() const { return policy_; }
    const ToyPolicy& reference() const { return ref_; }
    int step_count() const { return step_; }

private:
    ToyPolicy policy_;
    ToyPolicy ref_;
    TrainConfig cfg_;
    AdamState adam_;
    int step_ = 0;
};

/// Monte Carlo KL estimate between two policies over fresh SDE rollouts of
/// policy a (mean per-transition Gaussian KL).
double kl_estimate(const ToyPolicy& a, const ToyPolicy& b, std::span<const ToyScene> scenes,
                   const TrainConfig& cfg, Rng& rng);

/// Mean toy-IoU reward of SDE rollouts on the given scenes (fixed noise
/// stream; rollouts_per_scene draws each).
double eval_mean_reward(const ToyPolicy& policy, std::span<const ToyScene> scenes,
                        const TrainConfig& cfg, Rng rng, int rollouts_per_scene = 4);

// --- checkpoints ------------------------------------------------------

struct Checkpoint {
    ToyPolicy policy;
    std::vector<double> ema;
    std::uint64_t seed = 0;
    long long step = 0;
};

void save_checkpoint(const std::filesystem::path& path, const ToyPolicy& policy,
                     const std::vector<double>& ema, std::uint64_t seed, long long step);
Checkpoint load_checkpoint(const std::filesystem::path& path);

// --- end-to-end runs ----------------------------------------------------

struct StepMetrics {
    int step = 0;
    double loss_mask = 0.0;
    double loss_edit = 0.0;
    double loss_total = 0.0;
    double lr = 0.0;
    double mean_reward = 0.0;
    double kl = 0.0;
};

using MetricsSink = std::function<void(const StepMetrics&)>;

struct SftRunSummary {
    double initial_loss = 0.0;  // eval loss before training
    double final_loss = 0.0;    // eval loss after training
    double initial_holdout_sequential = 0.0;
    double final_holdout_sequential = 0.0;
    int steps = 0;
};

/// Seed-pinned SFT run. Stage 1 trains the multi-task objective from fresh
/// weights (or `init`); stage 2 trains the sequential objective. Loss
/// figures come from a fixed held-out eval set.
SftRunSummary run_sft(int stage, const TrainConfig& cfg, std::uint64_t seed, int steps,
                      const std::optional<ToyPolicy>& init, ToyPolicy* out_policy,
                      const MetricsSink& sink = nullptr);

struct GrpoRunSummary {
    double initial_mean_reward = 0.0; // SFT policy, eval rollouts
    double final_mean_reward = 0.0;
    double final_kl = 0.0;
    int steps = 0;
};

GrpoRunSummary run_grpo(const TrainConfig& cfg, std::uint64_t seed, int steps,
                        const ToyPolicy& init, ToyPolicy* out_policy,
                        const MetricsSink& sink = nullptr);

} // namespace gvcot::sandbox
