#include "qbridge/sim/statevector.hpp"

#include <cmath>

#include "qbridge/sim/kernels.hpp"

namespace qbridge::sim {

using kernels::Matrix2;

StateVector::StateVector(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 20) {
        throw CircuitError("qubit count out of supported range [1, 20]");
    }
    amps_.assign(std::size_t(1) << num_qubits, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

StateVector StateVector::from_amplitudes(int num_qubits,
                                         std::vector<std::complex<double>> amps) {
    StateVector sv(num_qubits);
    if (amps.size() != sv.dim()) {
        throw DimensionMismatch("amplitude count does not match qubit count");
    }
    sv.amps_ = std::move(amps);
    if (std::abs(sv.norm() - 1.0) > 1e-10) {
        throw CircuitError("state vector is not unit norm");
    }
    return sv;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

double StateVector::probability(std::size_t basis_index) const {
    return std::norm(amps_.at(basis_index));
}

namespace {

Matrix2 rx_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {std::complex<double>(c, 0.0), std::complex<double>(0.0, -s),
            std::complex<double>(0.0, -s), std::complex<double>(c, 0.0)};
}

Matrix2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {std::complex<double>(c, 0.0), std::complex<double>(-s, 0.0),
            std::complex<double>(s, 0.0), std::complex<double>(c, 0.0)};
}

} // namespace

StateVector simulate(const Circuit& circuit, const StateVector& initial) {
    if (!circuit.is_bound()) {
        throw UnboundParameter("cannot simulate: unbound parameter " +
                               circuit.free_parameters().front());
    }
    if (initial.num_qubits() != circuit.num_qubits()) {
        throw DimensionMismatch("initial state qubit count does not match circuit");
    }
    StateVector state = initial;
    auto amps = state.mutable_amplitudes().data();
    const std::size_t dim = state.dim();
    const auto& k = kernels::active_kernels();

    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    static const Matrix2 hadamard = {std::complex<double>(inv_sqrt2), std::complex<double>(inv_sqrt2),
                                     std::complex<double>(inv_sqrt2), std::complex<double>(-inv_sqrt2)};

    for (const Gate& g : circuit.gates()) {
        const double theta = g.param.value;
        switch (g.kind) {
        case GateKind::H:
            k.apply_1q(amps, dim, g.q0, hadamard);
            break;
        case GateKind::RX:
            k.apply_1q(amps, dim, g.q0, rx_matrix(theta));
            break;
        case GateKind::RY:
            k.apply_1q(amps, dim, g.q0, ry_matrix(theta));
            break;
        case GateKind::RZ:
            k.apply_diag_1q(amps, dim, g.q0,
                            std::polar(1.0, -theta / 2.0), std::polar(1.0, theta / 2.0));
            break;
        case GateKind::CX:
            k.apply_cx(amps, dim, g.q0, g.q1);
            break;
        case GateKind::CRX:
            k.apply_controlled_1q(amps, dim, g.q0, g.q1, rx_matrix(theta));
            break;
        case GateKind::ZZPhase:
            k.apply_zz_phase(amps, dim, g.q0, g.q1, theta);
            break;
        }
    }
    return state;
}

StateVector simulate(const Circuit& circuit) {
    return simulate(circuit, StateVector(circuit.num_qubits()));
}

} // namespace qbridge::sim
