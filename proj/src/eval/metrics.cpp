#include "qbridge/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qbridge::eval {

RegressionMetrics regression_metrics(std::span<const double> y, std::span<const double> y_hat) {
    if (y.size() != y_hat.size()) {
        throw LengthMismatch("prediction count differs from target count");
    }
    if (y.empty()) {
        throw EmptyInput("no samples to score");
    }
    RegressionMetrics m;
    m.residuals.reserve(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double r = y[i] - y_hat[i];
        m.residuals.push_back(r);
        m.mse += r * r;
        m.residual_mean += r;
    }
    const double n = static_cast<double>(y.size());
    m.mse /= n;
    m.residual_mean /= n;
    double var = 0.0;
    for (double r : m.residuals) {
        var += (r - m.residual_mean) * (r - m.residual_mean);
    }
    m.residual_std = std::sqrt(var / n);
    return m;
}

ClassificationMetrics classification_metrics(const std::vector<int>& y, const Matrix& proba) {
    if (y.size() != proba.rows) {
        throw LengthMismatch("probability rows differ from label count");
    }
    if (y.empty()) {
        throw EmptyInput("no samples to score");
    }
    const int num_classes = static_cast<int>(proba.cols);
    for (int label : y) {
        if (label < 0 || label >= num_classes) {
            throw InvalidDistribution("label outside the probability columns");
        }
    }
    for (std::size_t r = 0; r < proba.rows; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < proba.cols; ++c) {
            if (proba.at(r, c) < -1e-9) {
                throw InvalidDistribution("negative probability");
            }
            sum += proba.at(r, c);
        }
        if (std::abs(sum - 1.0) > 1e-6) {
            throw InvalidDistribution("probability row does not sum to 1");
        }
    }

    ClassificationMetrics m;
    m.confusion.assign(num_classes, std::vector<int>(num_classes, 0));

    std::vector<int> hard(y.size());
    for (std::size_t r = 0; r < proba.rows; ++r) {
        int best = 0;
        for (std::size_t c = 1; c < proba.cols; ++c) {
            if (proba.at(r, c) > proba.at(r, best)) {
                best = static_cast<int>(c);
            }
        }
        hard[r] = best;
        m.confusion[y[r]][best] += 1;
    }

    const double n = static_cast<double>(y.size());
    int correct = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        correct += hard[i] == y[i];
    }
    m.accuracy = correct / n;

    // Per-class F1 from the confusion matrix. A class with no predictions
    // and no truths has precision + recall == 0 and contributes F1 = 0.
    double weighted = 0.0;
    for (int c = 0; c < num_classes; ++c) {
        int tp = m.confusion[c][c];
        int support = 0;
        int predicted = 0;
        for (int k = 0; k < num_classes; ++k) {
            support += m.confusion[c][k];
            predicted += m.confusion[k][c];
        }
        const double precision = predicted > 0 ? static_cast<double>(tp) / predicted : 0.0;
        const double recall = support > 0 ? static_cast<double>(tp) / support : 0.0;
        const double f1 =
            (precision + recall) > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
        m.per_class_f1.push_back(f1);
        m.f1_macro += f1;
        weighted += f1 * support;
    }
    m.f1_macro /= num_classes;
    m.f1_weighted = weighted / n;

    // One-vs-rest AUROC with midrank tie handling, averaged over classes
    // that have both positives and negatives.
    double auc_sum = 0.0;
    int auc_classes = 0;
    std::vector<std::size_t> order(y.size());
    for (int c = 0; c < num_classes; ++c) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return proba.at(a, c) < proba.at(b, c);
        });
        double positive_rank_sum = 0.0;
        std::size_t positives = 0;
        std::size_t i = 0;
        while (i < order.size()) {
            std::size_t j = i;
            while (j + 1 < order.size() &&
                   proba.at(order[j + 1], c) == proba.at(order[i], c)) {
                ++j;
            }
            const double midrank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
            for (std::size_t k = i; k <= j; ++k) {
                if (y[order[k]] == c) {
                    positive_rank_sum += midrank;
                    ++positives;
                }
            }
            i = j + 1;
        }
        const std::size_t negatives = y.size() - positives;
        if (positives == 0 || negatives == 0) {
            continue;
        }
        const double auc = (positive_rank_sum - positives * (positives + 1) / 2.0) /
                           (static_cast<double>(positives) * static_cast<double>(negatives));
        auc_sum += auc;
        ++auc_classes;
    }
    m.auroc = auc_classes > 0 ? auc_sum / auc_classes : 0.5;

    for (std::size_t r = 0; r < proba.rows; ++r) {
        m.log_loss -= std::log(std::max(proba.at(r, y[r]), 1e-12));
        for (std::size_t c = 0; c < proba.cols; ++c) {
            const double truth = static_cast<int>(c) == y[r] ? 1.0 : 0.0;
            const double diff = proba.at(r, c) - truth;
            m.brier += diff * diff;
        }
    }
    m.log_loss /= n;
    m.brier /= n;
    return m;
}

} // namespace qbridge::eval
