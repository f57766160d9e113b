#include "qbridge/sim/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qbridge::sim {

namespace {

// Evaluates the expectation with explicit per-gate angles.
double evaluate(const Circuit& circuit, const Observable& observable,
                const std::vector<double>& angles) {
    Circuit bound(circuit.num_qubits());
    std::size_t idx = 0;
    for (Gate g : circuit.gates()) {
        if (!g.param.bound()) {
            g.param = GateParam::fixed(angles[idx]);
        }
        ++idx;
        bound.append(std::move(g));
    }
    return expectation(simulate(bound), observable);
}

} // namespace

std::vector<double> parameter_shift_gradient(const Circuit& circuit,
                                             const Observable& observable,
                                             const std::map<std::string, double>& values) {
    const auto& names = circuit.free_parameters();
    for (const auto& [name, _] : values) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw UnknownParameter("unknown parameter: " + name);
        }
    }

    // Per-gate angle table (entries for bound gates are ignored).
    const auto& gates = circuit.gates();
    std::vector<double> angles(gates.size(), 0.0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (!gates[i].param.bound()) {
            auto it = values.find(gates[i].param.name);
            if (it == values.end()) {
                throw MissingParameter("missing parameter: " + gates[i].param.name);
            }
            angles[i] = it->second;
        }
    }

    const double half_pi = std::numbers::pi / 2.0;
    const double c_plus = (std::numbers::sqrt2 + 1.0) / (4.0 * std::numbers::sqrt2);
    const double c_minus = (std::numbers::sqrt2 - 1.0) / (4.0 * std::numbers::sqrt2);

    auto shifted = [&](std::size_t gate_index, double delta) {
        std::vector<double> a = angles;
        a[gate_index] += delta;
        return evaluate(circuit, observable, a);
    };

    std::vector<double> grad(names.size(), 0.0);
    for (std::size_t p = 0; p < names.size(); ++p) {
        for (std::size_t gi = 0; gi < gates.size(); ++gi) {
            const Gate& g = gates[gi];
            if (g.param.bound() || g.param.name != names[p]) {
                continue;
            }
            switch (g.kind) {
            case GateKind::RX:
            case GateKind::RY:
            case GateKind::RZ:
                grad[p] += (shifted(gi, half_pi) - shifted(gi, -half_pi)) / 2.0;
                break;
            case GateKind::CRX:
                grad[p] += c_plus * (shifted(gi, half_pi) - shifted(gi, -half_pi)) -
                           c_minus * (shifted(gi, 3.0 * half_pi) - shifted(gi, -3.0 * half_pi));
                break;
            default:
                throw UnsupportedGateForShift(
                    std::string("no shift rule for free parameter on ") +
                    gate_kind_name(g.kind));
            }
        }
    }
    return grad;
}

} // namespace qbridge::sim
