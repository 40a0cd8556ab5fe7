#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "gvcot/rng.hpp"

namespace gvcot::sandbox {

struct NonFiniteLoss : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonFiniteState : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Velocity-field network: two tanh hidden layers, linear output matching
/// the state dimension. Input is concat(state, (t, sin 2*pi*t, cos 2*pi*t),
/// conditioning). Parameters live in one flat array so optimizers, EMA and
/// checkpoints can treat them uniformly.
class ToyPolicy {
public:
    ToyPolicy(int state_dim, int cond_dim, int hidden1 = 64, int hidden2 = 64);

    int state_dim() const { return state_dim_; }
    int cond_dim() const { return cond_dim_; }
    int hidden1() const { return hidden1_; }
    int hidden2() const { return hidden2_; }
    int input_dim() const { return state_dim_ + 3 + cond_dim_; }
    std::size_t param_count() const { return params_.size(); }

    const std::vector<double>& params() const { return params_; }
    void set_params(std::span<const double> p);
    void zero_params();

    /// Uniform fan-in initialization.
    void init_weights(Rng& rng);

    /// Activations cached for the backward pass.
    struct Forward {
        std::vector<double> input;
        std::vector<double> h1;
        std::vector<double> h2;
        std::vector<double> v;
    };

    void forward(std::span<const double> state, double t, std::span<const double> cond,
                 Forward& f) const;
    std::vector<double> velocity(std::span<const double> state, double t,
                                 std::span<const double> cond) const;

    /// Accumulates d(loss)/d(params) into grad given d(loss)/d(v).
    void backward(const Forward& f, std::span<const double> dv,
                  std::span<double> grad) const;

    /// Throws NonFiniteState when any parameter is not finite.
    void check_finite() const;

private:
    int state_dim_, cond_dim_, hidden1_, hidden2_;
    std::vector<double> params_;

    // flat layout offsets: W1 [h1 x in], b1, W2 [h2 x h1], b2, W3 [out x h2], b3
    std::size_t w1_, b1_, w2_, b2_, w3_, b3_;
};

} // namespace gvcot::sandbox
