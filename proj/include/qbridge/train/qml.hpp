#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbridge/data.hpp"
#include "qbridge/train/cobyla.hpp"

namespace qbridge::train {

// Quantum model: ZZ-evolution feature map followed by the RY/CX ansatz.
// Regression reads mean-Z scaled by a trainable (scale, offset) pair that
// rides at the end of the parameter vector; classification reads per-class
// probability masses with basis index k assigned to class k mod C.
struct QmlModelSpec {
    int n_qubits = 2;
    int feature_reps = 2;
    int ansatz_reps = 2;
    double feature_alpha = 2.0; // phase scale of the encoding
    std::string entanglement = "linear";
    Task task = Task::Regression;
    int num_classes = 2;

    int ansatz_parameter_count() const { return n_qubits * (ansatz_reps + 1); }
    int parameter_count() const {
        return ansatz_parameter_count() + (task == Task::Regression ? 2 : 0);
    }
};

struct QmlTargets {
    Task task = Task::Regression;
    std::vector<double> values;
    std::vector<int> labels;
};

struct QmlFitResult {
    std::vector<double> parameters;
    OptimizerResult optimizer;
};

// Objective used by fit_qml: MSE of the scaled readout for regression,
// clamped cross-entropy of the class masses for classification.
double qml_objective(const QmlModelSpec& spec, const Matrix& x, const QmlTargets& targets,
                     const std::vector<double>& parameters);

QmlFitResult fit_qml(const QmlModelSpec& spec, const Matrix& x, const QmlTargets& targets,
                     const OptimizerConfig& config, std::uint64_t seed);

// Regression: one prediction column. Classification: probability rows
// summing to 1.
Matrix predict_qml(const QmlModelSpec& spec, const std::vector<double>& parameters,
                   const Matrix& x);

} // namespace qbridge::train
