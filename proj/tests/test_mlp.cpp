#include "doctest.h"

#include <cmath>

#include "qbridge/rng.hpp"
#include "qbridge/train/mlp.hpp"

using namespace qbridge;
using namespace qbridge::train;

TEST_SUITE_BEGIN("mlp");

TEST_CASE("linear model recovers y = 2x + 1") {
    Rng rng(11);
    Matrix x(64, 1);
    MlpTargets t;
    t.task = Task::Regression;
    for (std::size_t i = 0; i < x.rows; ++i) {
        x.at(i, 0) = rng.uniform(-2.0, 2.0);
        t.values.push_back(2.0 * x.at(i, 0) + 1.0);
    }
    MlpSpec spec{.input_dim = 1, .hidden_dims = {}, .output_dim = 1};
    auto w = fit_mlp(spec, x, t, {.epochs = 500, .batch_size = 64, .learning_rate = 0.05}, 3);
    CHECK(w.weights[0].at(0, 0) == doctest::Approx(2.0).epsilon(1e-2));
    CHECK(w.biases[0][0] == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("analytic gradients match finite differences on a 3-layer net") {
    Rng rng(21);
    Matrix x(8, 3);
    MlpTargets t;
    t.task = Task::Classification;
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t c = 0; c < 3; ++c) {
            x.at(i, c) = rng.uniform(-1.0, 1.0);
        }
        t.labels.push_back(static_cast<int>(rng.uniform_index(2)));
    }
    MlpSpec spec{.input_dim = 3, .hidden_dims = {5, 4}, .output_dim = 2};
    auto w = initialize_mlp(spec, 77);

    MlpWeights analytic;
    mlp_loss_and_gradients(spec, w, x, t, &analytic);

    const double h = 1e-6;
    auto check_param = [&](double& slot, double grad) {
        const double saved = slot;
        slot = saved + h;
        const double up = mlp_loss_and_gradients(spec, w, x, t, nullptr);
        slot = saved - h;
        const double down = mlp_loss_and_gradients(spec, w, x, t, nullptr);
        slot = saved;
        const double fd = (up - down) / (2.0 * h);
        CHECK(grad == doctest::Approx(fd).epsilon(1e-5));
    };
    for (std::size_t l = 0; l < w.weights.size(); ++l) {
        for (std::size_t i = 0; i < w.weights[l].data.size(); ++i) {
            check_param(w.weights[l].data[i], analytic.weights[l].data[i]);
        }
        for (std::size_t i = 0; i < w.biases[l].size(); ++i) {
            check_param(w.biases[l][i], analytic.biases[l][i]);
        }
    }
}

TEST_CASE("training is deterministic for a fixed seed") {
    Rng rng(5);
    Matrix x(32, 2);
    MlpTargets t;
    t.task = Task::Regression;
    for (std::size_t i = 0; i < x.rows; ++i) {
        x.at(i, 0) = rng.uniform(-1.0, 1.0);
        x.at(i, 1) = rng.uniform(-1.0, 1.0);
        t.values.push_back(x.at(i, 0) - 0.5 * x.at(i, 1));
    }
    MlpSpec spec{.input_dim = 2, .hidden_dims = {8}, .output_dim = 1, .dropout_rate = 0.0};
    MlpTrainConfig cfg{.epochs = 20, .batch_size = 8};
    auto w1 = fit_mlp(spec, x, t, cfg, 99);
    auto w2 = fit_mlp(spec, x, t, cfg, 99);
    for (std::size_t l = 0; l < w1.weights.size(); ++l) {
        CHECK(w1.weights[l].data == w2.weights[l].data);
        CHECK(w1.biases[l] == w2.biases[l]);
    }
}

TEST_CASE("identity-like single layer passes inputs through") {
    MlpSpec spec{.input_dim = 2, .hidden_dims = {}, .output_dim = 2};
    MlpWeights w;
    w.weights.emplace_back(2, 2);
    w.weights[0].at(0, 0) = 1.0;
    w.weights[0].at(1, 1) = 1.0;
    w.biases.emplace_back(2, 0.0);
    Matrix x(3, 2);
    x.at(0, 0) = 0.3;
    x.at(0, 1) = -1.2;
    x.at(1, 0) = 2.0;
    x.at(2, 1) = 0.25;
    auto out = predict_mlp(spec, w, x, Task::Regression);
    CHECK(out.data == x.data);
}

TEST_CASE("classification probabilities sum to one") {
    Rng rng(31);
    Matrix x(10, 2);
    for (auto& v : x.data) {
        v = rng.normal();
    }
    MlpSpec spec{.input_dim = 2, .hidden_dims = {4}, .output_dim = 3};
    auto w = initialize_mlp(spec, 8);
    auto out = predict_mlp(spec, w, x, Task::Classification);
    for (std::size_t r = 0; r < out.rows; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < out.cols; ++c) {
            CHECK(out.at(r, c) >= 0.0);
            sum += out.at(r, c);
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("prediction agrees with a hand-rolled product on a fixed 2x3x2 net") {
    MlpSpec spec{.input_dim = 2, .hidden_dims = {3}, .output_dim = 2};
    MlpWeights w;
    w.weights.emplace_back(3, 2);
    w.weights.emplace_back(2, 3);
    w.biases.emplace_back(3, 0.1);
    w.biases.emplace_back(2, -0.2);
    double w0[] = {0.5, -1.0, 0.25, 0.75, -0.5, 0.3};
    double w1[] = {1.0, 0.2, -0.7, 0.4, -0.3, 0.6};
    std::copy(std::begin(w0), std::end(w0), w.weights[0].data.begin());
    std::copy(std::begin(w1), std::end(w1), w.weights[1].data.begin());

    Matrix x(1, 2);
    x.at(0, 0) = 0.8;
    x.at(0, 1) = -0.4;
    auto out = predict_mlp(spec, w, x, Task::Regression);

    double hidden[3];
    for (int o = 0; o < 3; ++o) {
        hidden[o] = std::max(0.1 + w0[o * 2] * 0.8 + w0[o * 2 + 1] * -0.4, 0.0);
    }
    for (int o = 0; o < 2; ++o) {
        double z = -0.2;
        for (int c = 0; c < 3; ++c) {
            z += w1[o * 3 + c] * hidden[c];
        }
        CHECK(out.at(0, o) == doctest::Approx(z).epsilon(1e-12));
    }
}

TEST_CASE("dimension mismatches are rejected") {
    MlpSpec spec{.input_dim = 2, .hidden_dims = {}, .output_dim = 1};
    auto w = initialize_mlp(spec, 1);
    Matrix x(4, 3);
    CHECK_THROWS_AS(predict_mlp(spec, w, x, Task::Regression), DimensionMismatch);
}

TEST_SUITE_END();
