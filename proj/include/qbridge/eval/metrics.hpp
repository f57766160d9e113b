#pragma once

#include <span>
#include <vector>

#include "qbridge/data.hpp"

namespace qbridge::eval {

class LengthMismatch : public Error {
  public:
    using Error::Error;
};

class EmptyInput : public Error {
  public:
    using Error::Error;
};

class InvalidDistribution : public Error {
  public:
    using Error::Error;
};

struct RegressionMetrics {
    double mse = 0.0;
    double residual_mean = 0.0;
    double residual_std = 0.0; // population standard deviation
    std::vector<double> residuals;
};

RegressionMetrics regression_metrics(std::span<const double> y, std::span<const double> y_hat);

struct ClassificationMetrics {
    double accuracy = 0.0;
    double f1_macro = 0.0;    // unweighted mean of per-class F1; 0 when undefined
    double f1_weighted = 0.0; // support-weighted mean
    double auroc = 0.0;       // one-vs-rest macro over classes with both outcomes
    double log_loss = 0.0;    // probabilities clamped at 1e-12
    double brier = 0.0;       // mean squared error against one-hot truth
    std::vector<double> per_class_f1;
    std::vector<std::vector<int>> confusion; // [true][predicted]
};

// `proba` holds one probability row per sample (rows must sum to 1 within
// 1e-6); hard labels are the row argmax.
ClassificationMetrics classification_metrics(const std::vector<int>& y, const Matrix& proba);

} // namespace qbridge::eval
