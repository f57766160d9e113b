#include "qbridge/train/qml.hpp"

#include <cmath>
#include <numbers>

#include "qbridge/rng.hpp"
#include "qbridge/sim/builders.hpp"
#include "qbridge/sim/observable.hpp"
#include "qbridge/sim/statevector.hpp"

namespace qbridge::train {

namespace {

using sim::Circuit;
using sim::EntanglementGraph;
using sim::Observable;
using sim::StateVector;

// Post-feature-map states are fixed per sample; only the ansatz depends on
// the parameters, so campaigns of objective evaluations start from here.
std::vector<StateVector> encode_samples(const QmlModelSpec& spec, const Matrix& x) {
    if (static_cast<int>(x.cols) != spec.n_qubits) {
        throw DimensionMismatch("feature count does not match qubit count");
    }
    const auto graph = EntanglementGraph::make(spec.n_qubits, spec.entanglement);
    std::vector<StateVector> states;
    states.reserve(x.rows);
    for (std::size_t r = 0; r < x.rows; ++r) {
        std::vector<double> features(x.row(r), x.row(r) + x.cols);
        auto circuit = sim::build_zz_feature_map(
            features, graph, {.reps = spec.feature_reps, .alpha = spec.feature_alpha});
        states.push_back(sim::simulate(circuit));
    }
    return states;
}

// Ansatz with angles taken positionally from the parameter vector in the
// builder's layer-major order.
Circuit bound_ansatz(const QmlModelSpec& spec, const std::vector<double>& parameters) {
    const auto graph = EntanglementGraph::make(spec.n_qubits, spec.entanglement);
    auto ansatz = sim::build_real_amplitudes(spec.n_qubits, spec.ansatz_reps, graph);
    const auto& names = ansatz.free_parameters();
    if (parameters.size() < names.size()) {
        throw DimensionMismatch("parameter vector shorter than the ansatz needs");
    }
    std::map<std::string, double> values;
    for (std::size_t i = 0; i < names.size(); ++i) {
        values[names[i]] = parameters[i];
    }
    return ansatz.bind(values);
}

struct Readout {
    const QmlModelSpec& spec;
    Observable observable;

    explicit Readout(const QmlModelSpec& s)
        : spec(s), observable(s.task == Task::Regression
                                  ? Observable::mean_z()
                                  : Observable::class_masses(s.num_classes)) {}
};

} // namespace

double qml_objective(const QmlModelSpec& spec, const Matrix& x, const QmlTargets& targets,
                     const std::vector<double>& parameters) {
    if (static_cast<int>(parameters.size()) != spec.parameter_count()) {
        throw DimensionMismatch("unexpected parameter vector length");
    }
    const auto states = encode_samples(spec, x);
    const auto circuit = bound_ansatz(spec, parameters);
    const Readout readout(spec);

    double loss = 0.0;
    if (spec.task == Task::Regression) {
        if (targets.values.size() != x.rows) {
            throw DimensionMismatch("target count does not match the sample count");
        }
        const double scale = parameters[parameters.size() - 2];
        const double offset = parameters[parameters.size() - 1];
        for (std::size_t r = 0; r < x.rows; ++r) {
            const auto state = sim::simulate(circuit, states[r]);
            const double prediction = scale * sim::expectation(state, readout.observable) + offset;
            const double diff = prediction - targets.values[r];
            loss += diff * diff;
        }
    } else {
        if (targets.labels.size() != x.rows) {
            throw DimensionMismatch("label count does not match the sample count");
        }
        for (std::size_t r = 0; r < x.rows; ++r) {
            const auto state = sim::simulate(circuit, states[r]);
            const auto masses = sim::probability_masses(state, readout.observable);
            const double p = std::max(masses.at(targets.labels[r]), 1e-12);
            loss -= std::log(p);
        }
    }
    return loss / static_cast<double>(x.rows);
}

QmlFitResult fit_qml(const QmlModelSpec& spec, const Matrix& x, const QmlTargets& targets,
                     const OptimizerConfig& config, std::uint64_t seed) {
    const auto states = encode_samples(spec, x);
    const Readout readout(spec);

    Rng rng(seed);
    std::vector<double> x0(spec.parameter_count());
    for (auto& v : x0) {
        v = rng.uniform(-std::numbers::pi, std::numbers::pi);
    }

    auto objective = [&](const std::vector<double>& params) {
        const auto circuit = bound_ansatz(spec, params);
        double loss = 0.0;
        if (spec.task == Task::Regression) {
            const double scale = params[params.size() - 2];
            const double offset = params[params.size() - 1];
            for (std::size_t r = 0; r < x.rows; ++r) {
                const auto state = sim::simulate(circuit, states[r]);
                const double prediction =
                    scale * sim::expectation(state, readout.observable) + offset;
                const double diff = prediction - targets.values[r];
                loss += diff * diff;
            }
        } else {
            for (std::size_t r = 0; r < x.rows; ++r) {
                const auto state = sim::simulate(circuit, states[r]);
                const auto masses = sim::probability_masses(state, readout.observable);
                const double p = std::max(masses.at(targets.labels[r]), 1e-12);
                loss -= std::log(p);
            }
        }
        return loss / static_cast<double>(x.rows);
    };

    if (spec.task == Task::Regression && targets.values.size() != x.rows) {
        throw DimensionMismatch("target count does not match the sample count");
    }
    if (spec.task == Task::Classification && targets.labels.size() != x.rows) {
        throw DimensionMismatch("label count does not match the sample count");
    }

    QmlFitResult result;
    result.optimizer = minimize_derivative_free(objective, x0, config);
    result.parameters = result.optimizer.best_parameters;
    return result;
}

Matrix predict_qml(const QmlModelSpec& spec, const std::vector<double>& parameters,
                   const Matrix& x) {
    if (static_cast<int>(parameters.size()) != spec.parameter_count()) {
        throw DimensionMismatch("unexpected parameter vector length");
    }
    const auto states = encode_samples(spec, x);
    const auto circuit = bound_ansatz(spec, parameters);
    const Readout readout(spec);

    if (spec.task == Task::Regression) {
        const double scale = parameters[parameters.size() - 2];
        const double offset = parameters[parameters.size() - 1];
        Matrix out(x.rows, 1);
        for (std::size_t r = 0; r < x.rows; ++r) {
            const auto state = sim::simulate(circuit, states[r]);
            out.at(r, 0) = scale * sim::expectation(state, readout.observable) + offset;
        }
        return out;
    }
    Matrix out(x.rows, spec.num_classes);
    for (std::size_t r = 0; r < x.rows; ++r) {
        const auto state = sim::simulate(circuit, states[r]);
        const auto masses = sim::probability_masses(state, readout.observable);
        for (int c = 0; c < spec.num_classes; ++c) {
            out.at(r, c) = masses[c];
        }
    }
    return out;
}

} // namespace qbridge::train
