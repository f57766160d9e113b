#pragma once

#include <functional>
#include <vector>

#include "qbridge/sim/statevector.hpp"

namespace qbridge::sim {

// Measurement readouts.
//   z_on(q)      — <Z_q>, a real in [-1, 1]
//   mean_z()     — average of <Z_q> over all qubits
//   class_masses — probability mass per class under a basis-index -> class map
struct Observable {
    enum class Kind { ZOn, MeanZ, ClassMasses };

    Kind kind = Kind::MeanZ;
    int qubit = 0;                                 // ZOn
    int num_classes = 0;                           // ClassMasses
    std::function<int(std::size_t)> class_map;     // ClassMasses; total over basis indices

    static Observable z_on(int q) { return {Kind::ZOn, q, 0, {}}; }
    static Observable mean_z() { return {Kind::MeanZ, 0, 0, {}}; }
    // Default aggregation: basis index k maps to class k mod num_classes.
    static Observable class_masses(int num_classes,
                                   std::function<int(std::size_t)> class_map = {});
};

// Scalar expectation for ZOn / MeanZ observables.
double expectation(const StateVector& state, const Observable& observable);

// Per-class probability masses for ClassMasses observables; sums to 1.
std::vector<double> probability_masses(const StateVector& state, const Observable& observable);

} // namespace qbridge::sim
