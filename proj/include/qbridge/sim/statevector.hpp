#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qbridge/sim/circuit.hpp"

namespace qbridge::sim {

// 2^n complex amplitudes, unit norm. Basis index bit b is the value of
// qubit b, with qubit 0 the least-significant bit.
class StateVector {
  public:
    // |0...0>
    explicit StateVector(int num_qubits);

    static StateVector from_amplitudes(int num_qubits, std::vector<std::complex<double>> amps);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::span<std::complex<double>> mutable_amplitudes() { return amps_; }

    double norm() const;
    double probability(std::size_t basis_index) const;

  private:
    int n_;
    std::vector<std::complex<double>> amps_;
};

// Applies the circuit's gates in order via in-place amplitude updates.
// Throws UnboundParameter when the circuit still has free parameters.
StateVector simulate(const Circuit& circuit, const StateVector& initial);
StateVector simulate(const Circuit& circuit);

} // namespace qbridge::sim
