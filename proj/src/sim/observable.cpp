#include "qbridge/sim/observable.hpp"

namespace qbridge::sim {

Observable Observable::class_masses(int num_classes, std::function<int(std::size_t)> class_map) {
    Observable o;
    o.kind = Kind::ClassMasses;
    o.num_classes = num_classes;
    o.class_map = class_map ? std::move(class_map)
                            : [num_classes](std::size_t k) {
                                  return static_cast<int>(k % static_cast<std::size_t>(num_classes));
                              };
    return o;
}

namespace {

double z_expectation(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw DimensionMismatch("observable qubit out of range");
    }
    const auto amps = state.amplitudes();
    double value = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const double p = std::norm(amps[k]);
        value += ((k >> qubit) & 1U) ? -p : p;
    }
    return value;
}

} // namespace

double expectation(const StateVector& state, const Observable& observable) {
    switch (observable.kind) {
    case Observable::Kind::ZOn:
        return z_expectation(state, observable.qubit);
    case Observable::Kind::MeanZ: {
        double sum = 0.0;
        for (int q = 0; q < state.num_qubits(); ++q) {
            sum += z_expectation(state, q);
        }
        return sum / state.num_qubits();
    }
    case Observable::Kind::ClassMasses:
        throw DimensionMismatch("class-mass observable has no scalar expectation");
    }
    throw DimensionMismatch("unknown observable kind");
}

std::vector<double> probability_masses(const StateVector& state, const Observable& observable) {
    if (observable.kind != Observable::Kind::ClassMasses || observable.num_classes < 1) {
        throw DimensionMismatch("observable does not aggregate class probabilities");
    }
    std::vector<double> masses(observable.num_classes, 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const int label = observable.class_map(k);
        if (label < 0 || label >= observable.num_classes) {
            throw DimensionMismatch("class map label out of range");
        }
        masses[label] += std::norm(amps[k]);
    }
    return masses;
}

} // namespace qbridge::sim
