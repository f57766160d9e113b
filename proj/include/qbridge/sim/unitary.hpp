#pragma once

#include <complex>
#include <vector>

#include "qbridge/sim/circuit.hpp"

namespace qbridge::sim {

class TooManyQubits : public CircuitError {
  public:
    using CircuitError::CircuitError;
};

// Row-major dense complex matrix.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<std::complex<double>> data;

    explicit DenseMatrix(std::size_t d) : dim(d), data(d * d, {0.0, 0.0}) {}
    static DenseMatrix identity(std::size_t d);

    std::complex<double>& at(std::size_t row, std::size_t col) { return data[row * dim + col]; }
    const std::complex<double>& at(std::size_t row, std::size_t col) const {
        return data[row * dim + col];
    }

    DenseMatrix multiply(const DenseMatrix& rhs) const;
    DenseMatrix adjoint() const;
    std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const;

    // Frobenius distance to the identity.
    double identity_distance() const;
};

// Full 2^n x 2^n matrix of the circuit, built by embedding each gate as a
// dense matrix and taking the ordered product. Deliberately separate from
// the in-place simulation path so the two can check each other. Capped at
// 10 qubits.
DenseMatrix circuit_unitary(const Circuit& circuit);

} // namespace qbridge::sim
