#pragma once

#include <cstdint>
#include <vector>

#include "qbridge/data.hpp"
#include "qbridge/rng.hpp"

namespace qbridge::train {

class DivergenceDetected : public Error {
  public:
    using Error::Error;
};

// Dense feed-forward network: affine -> ReLU -> dropout per hidden layer,
// affine head, softmax on top for classification. hidden_dims may be empty,
// which leaves a plain linear model.
struct MlpSpec {
    int input_dim = 0;
    std::vector<int> hidden_dims;
    int output_dim = 1;
    double dropout_rate = 0.0; // in [0, 1); active only while training
};

// Per-layer weight matrices (row-major, out x in) and bias vectors.
struct MlpWeights {
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;
};

struct MlpTrainConfig {
    int epochs = 200;
    int batch_size = 32;
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

// Targets: one-column regression values or integer class labels.
struct MlpTargets {
    Task task = Task::Regression;
    std::vector<double> values; // regression
    std::vector<int> labels;    // classification
};

MlpWeights initialize_mlp(const MlpSpec& spec, std::uint64_t seed);

// Average loss over the batch (MSE for regression, clamped cross-entropy for
// classification) plus, when `gradients` is non-null, its analytic gradient
// via backprop. Dropout is applied only when a mask source is provided.
double mlp_loss_and_gradients(const MlpSpec& spec, const MlpWeights& weights, const Matrix& x,
                              const MlpTargets& targets, MlpWeights* gradients,
                              Rng* dropout_rng = nullptr);

MlpWeights fit_mlp(const MlpSpec& spec, const Matrix& x, const MlpTargets& targets,
                   const MlpTrainConfig& config, std::uint64_t seed);

// Inference-mode forward pass (dropout off). Regression: one column per
// output. Classification: per-row probability vectors summing to 1.
Matrix predict_mlp(const MlpSpec& spec, const MlpWeights& weights, const Matrix& x,
                   Task task);

} // namespace qbridge::train
