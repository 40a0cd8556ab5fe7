#include "gvcot/sandbox/train.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gvcot/rewards.hpp"

namespace gvcot::sandbox {

double shift_time(double t, double s) {
    return s * t / (1.0 + (s - 1.0) * t);
}

double lr_at(int step, const LrSchedule& lr) {
    if (step <= 0) return 0.0;
    if (step < lr.warmup_steps) {
        return lr.peak * static_cast<double>(step) / static_cast<double>(lr.warmup_steps);
    }
    const int decay_span = lr.total_steps - lr.warmup_steps;
    if (decay_span <= 0 || step >= lr.total_steps) return lr.min;
    const double progress =
        static_cast<double>(step - lr.warmup_steps) / static_cast<double>(decay_span);
    return lr.min + 0.5 * (lr.peak - lr.min) * (1.0 + std::cos(std::numbers::pi * progress));
}

void ema_update(std::span<double> ema, std::span<const double> params, double decay) {
    if (ema.size() != params.size()) {
        throw LengthMismatch("ema_update: length mismatch");
    }
    for (std::size_t i = 0; i < ema.size(); ++i) {
        ema[i] = decay * ema[i] + (1.0 - decay) * params[i];
    }
}

void adam_step(std::span<double> params, std::span<const double> grad, AdamState& state,
               double lr, double beta1, double beta2, double weight_decay) {
    if (state.m.size() != params.size()) {
        state.m.assign(params.size(), 0.0);
        state.v.assign(params.size(), 0.0);
        state.t = 0;
    }
    state.t += 1;
    const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(state.t));
    constexpr double kEps = 1e-8;
    for (std::size_t i = 0; i < params.size(); ++i) {
        state.m[i] = beta1 * state.m[i] + (1.0 - beta1) * grad[i];
        state.v[i] = beta2 * state.v[i] + (1.0 - beta2) * grad[i] * grad[i];
        const double mhat = state.m[i] / bc1;
        const double vhat = state.v[i] / bc2;
        params[i] -= lr * (mhat / (std::sqrt(vhat) + kEps) + weight_decay * params[i]);
    }
}

double fm_loss_and_grad(const ToyPolicy& policy, std::span<const FlowExample> batch,
                        double timestep_shift, Rng& rng, std::vector<double>* grad) {
    if (batch.empty()) {
        throw std::invalid_argument("fm_loss_and_grad: empty batch");
    }
    const int dim = policy.state_dim();
    double loss = 0.0;
    ToyPolicy::Forward f;
    std::vector<double> x0(dim), xt(dim), dv(dim);
    for (const FlowExample& ex : batch) {
        for (int i = 0; i < dim; ++i) x0[i] = rng.normal();
        const double t = shift_time(rng.uniform(), timestep_shift);
        for (int i = 0; i < dim; ++i) xt[i] = (1.0 - t) * x0[i] + t * ex.x1[i];
        policy.forward(xt, t, ex.cond, f);
        double sq = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double r = f.v[i] - (ex.x1[i] - x0[i]);
            sq += r * r;
            dv[i] = 2.0 * r / static_cast<double>(batch.size());
        }
        loss += sq;
        if (grad) {
            policy.backward(f, dv, *grad);
        }
    }
    loss /= static_cast<double>(batch.size());
    if (!std::isfinite(loss)) {
        throw NonFiniteLoss("flow-matching loss is not finite");
    }
    return loss;
}

FlowExample masking_example(const ToyScene& s) {
    return {s.x_cot_star, policy_condition(s, TaskKind::Masking)};
}

FlowExample editing_example(const ToyScene& s) {
    return {s.x_edit_star, policy_condition(s, TaskKind::Editing)};
}

FlowExample teacher_forced_edit_example(const ToyScene& s) {
    return {s.x_edit_star, policy_condition(s, TaskKind::Editing, s.x_cot_star)};
}

double sequential_loss(const ToyPolicy& policy, std::span<const ToyScene> scenes,
                       double timestep_shift, Rng rng) {
    std::vector<FlowExample> cot_batch, edit_batch;
    cot_batch.reserve(scenes.size());
    edit_batch.reserve(scenes.size());
    for (const ToyScene& s : scenes) {
        cot_batch.push_back(masking_example(s));
        edit_batch.push_back(teacher_forced_edit_example(s));
    }
    Rng cot_rng = rng.split("cot");
    Rng edit_rng = rng.split("edit");
    return fm_loss_and_grad(policy, cot_batch, timestep_shift, cot_rng, nullptr) +
           fm_loss_and_grad(policy, edit_batch, timestep_shift, edit_rng, nullptr);
}

SftTrainer::SftTrainer(ToyPolicy policy, TrainConfig cfg)
    : policy_(std::move(policy)), cfg_(cfg), ema_(policy_.params()) {}

SftStepStats SftTrainer::optimize(std::span<const double> grad, double loss_mask,
                                  double loss_edit) {
    step_ += 1;
    SftStepStats stats;
    stats.loss_mask = loss_mask;
    stats.loss_edit = loss_edit;
    stats.total = cfg_.lambda_m * loss_mask + cfg_.lambda_e * loss_edit;
    stats.lr = lr_at(step_, cfg_.lr);
    std::vector<double> params = policy_.params();
    adam_step(params, grad, adam_, stats.lr, cfg_.beta1, cfg_.beta2, cfg_.weight_decay);
    policy_.set_params(params);
    policy_.check_finite();
    ema_update(ema_, policy_.params(), cfg_.ema_decay);
    return stats;
}

SftStepStats SftTrainer::stage1_step(std::span<const ToyScene> masking_batch,
                                     std::span<const ToyScene> editing_batch, Rng& rng) {
    std::vector<FlowExample> mask_ex, edit_ex;
    mask_ex.reserve(masking_batch.size());
    edit_ex.reserve(editing_batch.size());
    for (const ToyScene& s : masking_batch) mask_ex.push_back(masking_example(s));
    for (const ToyScene& s : editing_batch) edit_ex.push_back(editing_example(s));

    std::vector<double> grad_mask(policy_.param_count(), 0.0);
    std::vector<double> grad_edit(policy_.param_count(), 0.0);
    Rng mask_rng = rng.split("mask");
    Rng edit_rng = rng.split("edit");
    const double loss_mask =
        fm_loss_and_grad(policy_, mask_ex, cfg_.timestep_shift, mask_rng, &grad_mask);
    const double loss_edit =
        fm_loss_and_grad(policy_, edit_ex, cfg_.timestep_shift, edit_rng, &grad_edit);

    std::vector<double> grad(policy_.param_count());
    for (std::size_t i = 0; i < grad.size(); ++i) {
        grad[i] = cfg_.lambda_m * grad_mask[i] + cfg_.lambda_e * grad_edit[i];
    }
    return optimize(grad, loss_mask, loss_edit);
}

SftStepStats SftTrainer::stage2_step(std::span<const ToyScene> batch, Rng& rng) {
    std::vector<FlowExample> cot_ex, edit_ex;
    cot_ex.reserve(batch.size());
    edit_ex.reserve(batch.size());
    for (const ToyScene& s : batch) {
        cot_ex.push_back(masking_example(s));
        edit_ex.push_back(teacher_forced_edit_example(s));
    }
    std::vector<double> grad(policy_.param_count(), 0.0);
    Rng cot_rng = rng.split("cot");
    Rng edit_rng = rng.split("edit");
    const double loss_cot =
        fm_loss_and_grad(policy_, cot_ex, cfg_.timestep_shift, cot_rng, &grad);
    const double loss_edit =
        fm_loss_and_grad(policy_, edit_ex, cfg_.timestep_shift, edit_rng, &grad);

    // Eq-style sequential objective weights both terms at 1.
    SftStepStats stats = optimize(grad, loss_cot, loss_edit);
    stats.total = loss_cot + loss_edit;
    return stats;
}

std::vector<double> sample_ode(const ToyPolicy& policy, std::span<const double> cond, int steps,
                               double timestep_shift, std::vector<double> x0) {
    std::vector<double> x = std::move(x0);
    for (int k = 0; k < steps; ++k) {
        const double t0 = shift_time(static_cast<double>(k) / steps, timestep_shift);
        const double t1 = shift_time(static_cast<double>(k + 1) / steps, timestep_shift);
        const double dt = t1 - t0;
        const auto v = policy.velocity(x, t0, cond);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] += v[i] * dt;
            if (!std::isfinite(x[i])) {
                throw NonFiniteState("sample_ode: state became non-finite");
            }
        }
    }
    return x;
}

std::vector<double> sample_ode(const ToyPolicy& policy, std::span<const double> cond, int steps,
                               double timestep_shift, Rng& rng) {
    std::vector<double> x0(policy.state_dim());
    for (double& v : x0) v = rng.normal();
    return sample_ode(policy, cond, steps, timestep_shift, std::move(x0));
}

SdeTrajectory sample_sde(const ToyPolicy& policy, std::span<const double> cond, int steps,
                         double noise_scale, double timestep_shift, Rng& rng) {
    SdeTrajectory traj;
    traj.steps.reserve(steps);
    std::vector<double> x(policy.state_dim());
    for (double& v : x) v = rng.normal();

    for (int k = 0; k < steps; ++k) {
        const double t0 = shift_time(static_cast<double>(k) / steps, timestep_shift);
        const double t1 = shift_time(static_cast<double>(k + 1) / steps, timestep_shift);
        const double dt = t1 - t0;
        SdeStep step;
        step.state = x;
        step.t = t0;
        step.dt = dt;
        step.noise.resize(x.size());
        for (double& n : step.noise) n = rng.normal();

        const auto v = policy.velocity(x, t0, cond);
        const double sigma = noise_scale * std::sqrt(dt);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] += v[i] * dt + sigma * step.noise[i];
            if (!std::isfinite(x[i])) {
                throw NonFiniteState("sample_sde: state became non-finite");
            }
        }
        traj.steps.push_back(std::move(step));
    }
    traj.terminal = x;
    return traj;
}

double toy_iou_reward(const ToyScene& scene, std::span<const double> terminal) {
    return toy_box_iou(terminal, scene.x_cot_star);
}

GrpoTrainer::GrpoTrainer(ToyPolicy policy, TrainConfig cfg)
    : policy_(policy), ref_(std::move(policy)), cfg_(cfg) {}

GrpoStepStats GrpoTrainer::step(std::span<const ToyScene> scenes, const RewardFn& reward,
                                Rng& rng) {
    if (scenes.empty()) {
        throw std::invalid_argument("grpo step: no scenes");
    }
    const GrpoConfig& g = cfg_.grpo;
    GrpoStepStats stats;
    std::vector<double> grad(policy_.param_count(), 0.0);

    // every rollout logs exactly steps_per_sample transitions
    const double transition_count =
        static_cast<double>(scenes.size()) * g.group_size * g.steps_per_sample;
    const double inv_weight = 1.0 / (static_cast<double>(scenes.size()) * g.group_size);
    const double kl_scale = g.kl_weight / transition_count;

    double kl_sum = 0.0;
    double surrogate_pg = 0.0;

    ToyPolicy::Forward f;
    std::vector<double> dv(policy_.state_dim());

    struct Rollout {
        SdeTrajectory traj;
        double reward = 0.0;
    };

    Rng roll_rng = rng.split("rollout").split(static_cast<std::uint64_t>(step_));

    for (std::size_t si = 0; si < scenes.size(); ++si) {
        const ToyScene& scene = scenes[si];
        const auto cond = policy_condition(scene, TaskKind::Masking);

        std::vector<Rollout> rollouts(g.group_size);
        GroupRollout group;
        group.sample_id = std::to_string(si);
        group.stage = RlStage::Reasoning;
        for (int gi = 0; gi < g.group_size; ++gi) {
            Rng sub = roll_rng.split(si).split(static_cast<std::uint64_t>(gi));
            rollouts[gi].traj = sample_sde(policy_, cond, g.steps_per_sample, g.sde_noise,
                                           cfg_.timestep_shift, sub);
            rollouts[gi].reward = reward(scene, rollouts[gi].traj.terminal);
            group.rewards.push_back(rollouts[gi].reward);
            stats.mean_reward += rollouts[gi].reward;
        }
        const auto advantages = group_advantages(group);

        for (int gi = 0; gi < g.group_size; ++gi) {
            const auto& traj = rollouts[gi].traj;
            const double advantage = advantages[gi];
            for (std::size_t k = 0; k < traj.steps.size(); ++k) {
                const SdeStep& st = traj.steps[k];
                const auto& next =
                    k + 1 < traj.steps.size() ? traj.steps[k + 1].state : traj.terminal;
                const double sigma2 = g.sde_noise * g.sde_noise * st.dt;

                policy_.forward(st.state, st.t, cond, f);
                const auto v_ref = ref_.velocity(st.state, st.t, cond);

                double logp = 0.0;
                for (int i = 0; i < policy_.state_dim(); ++i) {
                    const double residual = next[i] - st.state[i] - f.v[i] * st.dt;
                    logp += -residual * residual / (2.0 * sigma2);
                    const double dmu = (f.v[i] - v_ref[i]) * st.dt;
                    kl_sum += dmu * dmu / (2.0 * sigma2);
                    dv[i] = -advantage * inv_weight * (residual * st.dt / sigma2) +
                            kl_scale * (f.v[i] - v_ref[i]) * st.dt * st.dt / sigma2;
                }
                policy_.backward(f, dv, grad);
                surrogate_pg += -advantage * inv_weight * logp;
            }
        }
    }

    stats.mean_reward *= inv_weight;
    stats.kl_estimate = kl_sum / transition_count;
    stats.surrogate = surrogate_pg + g.kl_weight * stats.kl_estimate;
    if (!std::isfinite(stats.surrogate)) {
        throw NonFiniteLoss("grpo surrogate is not finite");
    }

    step_ += 1;
    stats.lr = lr_at(step_, cfg_.lr);
    std::vector<double> params = policy_.params();
    adam_step(params, grad, adam_, stats.lr, cfg_.beta1, cfg_.beta2, cfg_.weight_decay);
    policy_.set_params(params);
    policy_.check_finite();
    return stats;
}

double kl_estimate(const ToyPolicy& a, const ToyPolicy& b, std::span<const ToyScene> scenes,
                   const TrainConfig& cfg, Rng& rng) {
    const GrpoConfig& g = cfg.grpo;
    double kl_sum = 0.0;
    std::size_t transitions = 0;
    for (std::size_t si = 0; si < scenes.size(); ++si) {
        const auto cond = policy_condition(scenes[si], TaskKind::Masking);
        Rng sub = rng.split("kl").split(si);
        const auto traj = sample_sde(a, cond, g.steps_per_sample, g.sde_noise,
                                     cfg.timestep_shift, sub);
        for (const SdeStep& st : traj.steps) {
            const double sigma2 = g.sde_noise * g.sde_noise * st.dt;
            const auto va = a.velocity(st.state, st.t, cond);
            const auto vb = b.velocity(st.state, st.t, cond);
            for (std::size_t i = 0; i < va.size(); ++i) {
                const double dmu = (va[i] - vb[i]) * st.dt;
                kl_sum += dmu * dmu / (2.0 * sigma2);
            }
            ++transitions;
        }
    }
    return transitions ? kl_sum / static_cast<double>(transitions) : 0.0;
}

double eval_mean_reward(const ToyPolicy& policy, std::span<const ToyScene> scenes,
                        const TrainConfig& cfg, Rng rng, int rollouts_per_scene) {
    const GrpoConfig& g = cfg.grpo;
    double total = 0.0;
    std::size_t count = 0;
    for (std::size_t si = 0; si < scenes.size(); ++si) {
        const auto cond = policy_condition(scenes[si], TaskKind::Masking);
        for (int r = 0; r < rollouts_per_scene; ++r) {
            Rng sub = rng.split(si).split(static_cast<std::uint64_t>(r));
            const auto traj = sample_sde(policy, cond, g.steps_per_sample, g.sde_noise,
                                         cfg.timestep_shift, sub);
            total += toy_iou_reward(scenes[si], traj.terminal);
            ++count;
        }
    }
    return count ? total / static_cast<double>(count) : 0.0;
}

} // namespace gvcot::sandbox
