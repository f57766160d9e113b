#include "doctest.h"

#include <cmath>

#include "qbridge/eval/metrics.hpp"
#include "qbridge/rng.hpp"

using namespace qbridge;
using namespace qbridge::eval;

TEST_SUITE_BEGIN("metrics");

TEST_CASE("perfect regression predictions") {
    std::vector<double> y{1.0, -2.0, 0.5};
    auto m = regression_metrics(y, y);
    CHECK(m.mse == 0.0);
    CHECK(m.residual_mean == 0.0);
    CHECK(m.residual_std == 0.0);
}

TEST_CASE("hand-computed regression example") {
    std::vector<double> y{0.0, 0.0};
    std::vector<double> y_hat{1.0, -1.0};
    auto m = regression_metrics(y, y_hat);
    CHECK(m.mse == doctest::Approx(1.0));
    CHECK(m.residual_mean == doctest::Approx(0.0));
    CHECK(m.residual_std == doctest::Approx(1.0));
}

TEST_CASE("mse decomposes into residual mean and std") {
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.uniform_index(40);
        std::vector<double> y(n);
        std::vector<double> y_hat(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = rng.normal() * 3.0;
            y_hat[i] = rng.normal() * 3.0;
        }
        auto m = regression_metrics(y, y_hat);
        const double reconstructed =
            m.residual_mean * m.residual_mean + m.residual_std * m.residual_std;
        CHECK(std::abs(m.mse - reconstructed) < 1e-12);
    }
}

TEST_CASE("regression error paths") {
    std::vector<double> y{1.0};
    std::vector<double> two{1.0, 2.0};
    CHECK_THROWS_AS(regression_metrics(y, two), LengthMismatch);
    std::vector<double> empty;
    CHECK_THROWS_AS(regression_metrics(empty, empty), EmptyInput);
}

namespace {

Matrix one_hot_rows(const std::vector<int>& labels, int num_classes) {
    Matrix m(labels.size(), num_classes);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        m.at(i, labels[i]) = 1.0;
    }
    return m;
}

} // namespace

TEST_CASE("perfect one-hot classification") {
    std::vector<int> y{0, 1, 2, 1};
    auto m = classification_metrics(y, one_hot_rows(y, 3));
    CHECK(m.accuracy == 1.0);
    CHECK(m.f1_macro == 1.0);
    CHECK(m.f1_weighted == 1.0);
    CHECK(m.log_loss <= 1e-10);
    CHECK(m.brier == 0.0);
    CHECK(m.auroc == 1.0);
}

TEST_CASE("hand-computed three-class example") {
    // y = (0,1,2,2), argmax predictions (0,2,2,2):
    // class 0: P=1, R=1 -> F1 = 1; class 1: no predictions -> F1 = 0;
    // class 2: P = 2/3, R = 1 -> F1 = 0.8.
    std::vector<int> y{0, 1, 2, 2};
    std::vector<int> predicted{0, 2, 2, 2};
    auto m = classification_metrics(y, one_hot_rows(predicted, 3));
    CHECK(m.accuracy == doctest::Approx(0.75));
    CHECK(m.per_class_f1[0] == doctest::Approx(1.0));
    CHECK(m.per_class_f1[1] == doctest::Approx(0.0));
    CHECK(m.per_class_f1[2] == doctest::Approx(0.8));
    CHECK(m.f1_macro == doctest::Approx(0.6));
    // weighted by supports (1, 1, 2) / 4
    CHECK(m.f1_weighted == doctest::Approx((1.0 + 0.0 + 2.0 * 0.8) / 4.0));
}

TEST_CASE("confusion row sums equal class supports") {
    Rng rng(77);
    std::vector<int> y;
    Matrix proba(60, 4);
    for (int i = 0; i < 60; ++i) {
        y.push_back(static_cast<int>(rng.uniform_index(4)));
        double sum = 0.0;
        for (int c = 0; c < 4; ++c) {
            proba.at(i, c) = rng.uniform() + 1e-3;
            sum += proba.at(i, c);
        }
        for (int c = 0; c < 4; ++c) {
            proba.at(i, c) /= sum;
        }
    }
    auto m = classification_metrics(y, proba);
    std::vector<int> support(4, 0);
    for (int label : y) {
        support[label] += 1;
    }
    for (int c = 0; c < 4; ++c) {
        int row_sum = 0;
        for (int k = 0; k < 4; ++k) {
            row_sum += m.confusion[c][k];
        }
        CHECK(row_sum == support[c]);
    }
    // accuracy == trace / N
    int trace = 0;
    for (int c = 0; c < 4; ++c) {
        trace += m.confusion[c][c];
    }
    CHECK(m.accuracy == doctest::Approx(trace / 60.0).epsilon(1e-12));
}

TEST_CASE("binary auroc matches a brute-force pair count") {
    Rng rng(99);
    std::vector<int> y;
    Matrix proba(40, 2);
    for (int i = 0; i < 40; ++i) {
        y.push_back(static_cast<int>(rng.uniform_index(2)));
        const double p = rng.uniform();
        proba.at(i, 0) = 1.0 - p;
        proba.at(i, 1) = p;
    }
    auto m = classification_metrics(y, proba);

    // Pair counting over (positive, negative) pairs for each class, ties 0.5.
    double macro = 0.0;
    for (int c = 0; c < 2; ++c) {
        double wins = 0.0;
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (y[i] == c && y[j] != c) {
                    ++pairs;
                    if (proba.at(i, c) > proba.at(j, c)) {
                        wins += 1.0;
                    } else if (proba.at(i, c) == proba.at(j, c)) {
                        wins += 0.5;
                    }
                }
            }
        }
        macro += wins / static_cast<double>(pairs);
    }
    CHECK(m.auroc == doctest::Approx(macro / 2.0).epsilon(1e-12));
}

TEST_CASE("invalid probability rows are rejected") {
    std::vector<int> y{0, 1};
    Matrix bad(2, 2);
    bad.at(0, 0) = 0.9;
    bad.at(0, 1) = 0.4;
    bad.at(1, 0) = 0.5;
    bad.at(1, 1) = 0.5;
    CHECK_THROWS_AS(classification_metrics(y, bad), InvalidDistribution);
}

TEST_SUITE_END();
