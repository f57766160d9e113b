#include "qbridge/sim/builders.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qbridge::sim {

Circuit build_zz_feature_map(std::span<const double> x, const EntanglementGraph& graph,
                             const FeatureMapOptions& options) {
    const int n = graph.n;
    if (static_cast<int>(x.size()) != n) {
        throw DimensionMismatch("feature vector length does not match qubit count");
    }
    if (options.reps < 1) {
        throw CircuitError("feature map needs reps >= 1");
    }
    const auto phi1 = options.phi1 ? options.phi1 : [](double v) { return v; };
    const auto phi2 = options.phi2 ? options.phi2 : [](double a, double b) {
        return (std::numbers::pi - a) * (std::numbers::pi - b);
    };

    Circuit c(n);
    for (int q = 0; q < n; ++q) {
        c.append(Gate::h(q));
    }
    for (int rep = 0; rep < options.reps; ++rep) {
        for (int q = 0; q < n; ++q) {
            // exp(i*t*Z) == RZ(-2t) exactly under RZ(a) = diag(e^{-ia/2}, e^{ia/2}).
            c.append(Gate::rz(q, GateParam::fixed(-2.0 * options.alpha * phi1(x[q]))));
        }
        for (auto [i, j] : graph.edges) {
            c.append(Gate::zz_phase(i, j, GateParam::fixed(options.alpha * phi2(x[i], x[j]))));
        }
    }
    return c;
}

Circuit build_real_amplitudes(int num_qubits, int reps, const EntanglementGraph& graph,
                              const AnsatzOptions& options) {
    if (reps < 1) {
        throw CircuitError("ansatz needs reps >= 1");
    }
    if (graph.n != num_qubits) {
        throw DimensionMismatch("entanglement graph size does not match qubit count");
    }
    Circuit c(num_qubits);
    auto rotation_layer = [&](int layer) {
        for (int q = 0; q < num_qubits; ++q) {
            c.append(Gate::ry(q, GateParam::free("theta_" + std::to_string(layer) + "_" +
                                                 std::to_string(q))));
        }
    };
    for (int rep = 0; rep < reps; ++rep) {
        rotation_layer(rep);
        for (auto [i, j] : graph.edges) {
            c.append(Gate::cx(i, j));
        }
    }
    if (options.final_rotation_layer) {
        rotation_layer(reps);
    }
    return c;
}

} // namespace qbridge::sim
