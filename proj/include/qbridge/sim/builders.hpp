#pragma once

#include <functional>
#include <span>

#include "qbridge/sim/circuit.hpp"

namespace qbridge::sim {

using PointwiseMap = std::function<double(double)>;
using PairwiseMap = std::function<double(double, double)>;

struct FeatureMapOptions {
    int reps = 2;
    double alpha = 2.0;
    PointwiseMap phi1;       // default: identity
    PairwiseMap phi2;        // default: (pi - a) * (pi - b)
};

// Second-order Pauli-Z evolution circuit for the feature vector x:
// Hadamards on every qubit, then `reps` repetitions of single-qubit phases
// exp(i*alpha*phi1(x_j)*Z_j) followed by pair phases
// exp(i*alpha*phi2(x_i,x_j)*Z_i Z_j) along the entanglement edges. Fully
// bound (no free parameters).
Circuit build_zz_feature_map(std::span<const double> x, const EntanglementGraph& graph,
                             const FeatureMapOptions& options = {});

struct AnsatzOptions {
    bool final_rotation_layer = true; // one extra RY layer after the last entangler
};

// Alternating RY rotation layers and CX entanglers, `reps` repetitions plus
// an optional terminal rotation layer. Free parameters are named
// `theta_<layer>_<qubit>` in layer-major order; the default parameter count
// is n * (reps + 1).
Circuit build_real_amplitudes(int num_qubits, int reps, const EntanglementGraph& graph,
                              const AnsatzOptions& options = {});

} // namespace qbridge::sim
