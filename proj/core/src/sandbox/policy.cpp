#include "gvcot/sandbox/policy.hpp"

#include <cmath>
#include <numbers>

namespace gvcot::sandbox {

ToyPolicy::ToyPolicy(int state_dim, int cond_dim, int hidden1, int hidden2)
    : state_dim_(state_dim), cond_dim_(cond_dim), hidden1_(hidden1), hidden2_(hidden2) {
    const std::size_t in = static_cast<std::size_t>(input_dim());
    w1_ = 0;
    b1_ = w1_ + static_cast<std::size_t>(hidden1_) * in;
    w2_ = b1_ + hidden1_;
    b2_ = w2_ + static_cast<std::size_t>(hidden2_) * hidden1_;
    w3_ = b2_ + hidden2_;
    b3_ = w3_ + static_cast<std::size_t>(state_dim_) * hidden2_;
    params_.assign(b3_ + state_dim_, 0.0);
}

void ToyPolicy::set_params(std::span<const double> p) {
    if (p.size() != params_.size()) {
        throw LengthMismatch("set_params: parameter count mismatch");
    }
    params_.assign(p.begin(), p.end());
}

void ToyPolicy::zero_params() {
    params_.assign(params_.size(), 0.0);
}

void ToyPolicy::init_weights(Rng& rng) {
    auto fill_layer = [&](std::size_t w_off, std::size_t b_off, int out, int in) {
        const double bound = 1.0 / std::sqrt(static_cast<double>(in));
        for (int i = 0; i < out * in; ++i) {
            params_[w_off + i] = rng.uniform(-bound, bound);
        }
        for (int i = 0; i < out; ++i) {
            params_[b_off + i] = 0.0;
        }
    };
    fill_layer(w1_, b1_, hidden1_, input_dim());
    fill_layer(w2_, b2_, hidden2_, hidden1_);
    fill_layer(w3_, b3_, state_dim_, hidden2_);
}

void ToyPolicy::forward(std::span<const double> state, double t, std::span<const double> cond,
                        Forward& f) const {
    const int in = input_dim();
    f.input.resize(in);
    int k = 0;
    for (double s : state) f.input[k++] = s;
    f.input[k++] = t;
    f.input[k++] = std::sin(2.0 * std::numbers::pi * t);
    f.input[k++] = std::cos(2.0 * std::numbers::pi * t);
    for (double c : cond) f.input[k++] = c;

    f.h1.resize(hidden1_);
    for (int i = 0; i < hidden1_; ++i) {
        double acc = params_[b1_ + i];
        const std::size_t row = w1_ + static_cast<std::size_t>(i) * in;
        for (int j = 0; j < in; ++j) acc += params_[row + j] * f.input[j];
        f.h1[i] = std::tanh(acc);
    }
    f.h2.resize(hidden2_);
    for (int i = 0; i < hidden2_; ++i) {
        double acc = params_[b2_ + i];
        const std::size_t row = w2_ + static_cast<std::size_t>(i) * hidden1_;
        for (int j = 0; j < hidden1_; ++j) acc += params_[row + j] * f.h1[j];
        f.h2[i] = std::tanh(acc);
    }
    f.v.resize(state_dim_);
    for (int i = 0; i < state_dim_; ++i) {
        double acc = params_[b3_ + i];
        const std::size_t row = w3_ + static_cast<std::size_t>(i) * hidden2_;
        for (int j = 0; j < hidden2_; ++j) acc += params_[row + j] * f.h2[j];
        f.v[i] = acc;
    }
}

std::vector<double> ToyPolicy::velocity(std::span<const double> state, double t,
                                        std::span<const double> cond) const {
    Forward f;
    forward(state, t, cond, f);
    return std::move(f.v);
}

void ToyPolicy::backward(const Forward& f, std::span<const double> dv,
                         std::span<double> grad) const {
    const int in = input_dim();

    // output layer
    std::vector<double> dh2(hidden2_, 0.0);
    for (int i = 0; i < state_dim_; ++i) {
        const std::size_t row = w3_ + static_cast<std::size_t>(i) * hidden2_;
        grad[b3_ + i] += dv[i];
        for (int j = 0; j < hidden2_; ++j) {
            grad[row + j] += dv[i] * f.h2[j];
            dh2[j] += dv[i] * params_[row + j];
        }
    }
    // second hidden layer (tanh' = 1 - a^2)
    std::vector<double> dh1(hidden1_, 0.0);
    for (int i = 0; i < hidden2_; ++i) {
        const double da = dh2[i] * (1.0 - f.h2[i] * f.h2[i]);
        const std::size_t row = w2_ + static_cast<std::size_t>(i) * hidden1_;
        grad[b2_ + i] += da;
        for (int j = 0; j < hidden1_; ++j) {
            grad[row + j] += da * f.h1[j];
            dh1[j] += da * params_[row + j];
        }
    }
    // first hidden layer
    for (int i = 0; i < hidden1_; ++i) {
        const double da = dh1[i] * (1.0 - f.h1[i] * f.h1[i]);
        const std::size_t row = w1_ + static_cast<std::size_t>(i) * in;
        grad[b1_ + i] += da;
        for (int j = 0; j < in; ++j) {
            grad[row + j] += da * f.input[j];
        }
    }
}

void ToyPolicy::check_finite() const {
    for (double p : params_) {
        if (!std::isfinite(p)) {
            throw NonFiniteState("policy parameters became non-finite");
        }
    }
}

} // namespace gvcot::sandbox
