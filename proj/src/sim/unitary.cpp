#include "qbridge/sim/unitary.hpp"

#include <cmath>

namespace qbridge::sim {

DenseMatrix DenseMatrix::identity(std::size_t d) {
    DenseMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        m.at(i, i) = {1.0, 0.0};
    }
    return m;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
    DenseMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            const auto lik = at(i, k);
            if (lik == std::complex<double>{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                out.at(i, j) += lik * rhs.at(k, j);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out.at(i, j) = std::conj(at(j, i));
        }
    }
    return out;
}

std::vector<std::complex<double>> DenseMatrix::apply(
    const std::vector<std::complex<double>>& v) const {
    std::vector<std::complex<double>> out(dim, {0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

double DenseMatrix::identity_distance() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const std::complex<double> expected = (i == j) ? 1.0 : 0.0;
            sum += std::norm(at(i, j) - expected);
        }
    }
    return std::sqrt(sum);
}

namespace {

int bit(std::size_t x, int pos) { return static_cast<int>((x >> pos) & 1U); }

std::array<std::complex<double>, 4> gate_matrix_2x2(const Gate& g) {
    const double theta = g.param.value;
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    switch (g.kind) {
    case GateKind::H: {
        const double h = 1.0 / std::sqrt(2.0);
        return {std::complex<double>(h), std::complex<double>(h), std::complex<double>(h),
                std::complex<double>(-h)};
    }
    case GateKind::RX:
    case GateKind::CRX:
        return {std::complex<double>(c, 0.0), std::complex<double>(0.0, -s),
                std::complex<double>(0.0, -s), std::complex<double>(c, 0.0)};
    case GateKind::RY:
        return {std::complex<double>(c, 0.0), std::complex<double>(-s, 0.0),
                std::complex<double>(s, 0.0), std::complex<double>(c, 0.0)};
    case GateKind::RZ:
        return {std::polar(1.0, -theta / 2.0), std::complex<double>(0.0),
                std::complex<double>(0.0), std::polar(1.0, theta / 2.0)};
    default:
        throw CircuitError("gate has no 2x2 matrix");
    }
}

DenseMatrix embed_gate(const Gate& g, int n) {
    const std::size_t dim = std::size_t(1) << n;
    DenseMatrix e(dim);
    switch (g.kind) {
    case GateKind::CX: {
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t image =
                j ^ (static_cast<std::size_t>(bit(j, g.q0)) << g.q1);
            e.at(image, j) = {1.0, 0.0};
        }
        return e;
    }
    case GateKind::ZZPhase: {
        const double theta = g.param.value;
        for (std::size_t j = 0; j < dim; ++j) {
            const bool differ = bit(j, g.q0) != bit(j, g.q1);
            e.at(j, j) = std::polar(1.0, differ ? -theta : theta);
        }
        return e;
    }
    case GateKind::CRX: {
        const auto u = gate_matrix_2x2(g);
        const std::size_t tm = std::size_t(1) << g.q1;
        for (std::size_t j = 0; j < dim; ++j) {
            if (bit(j, g.q0) == 0) {
                e.at(j, j) = {1.0, 0.0};
                continue;
            }
            for (int row_bit = 0; row_bit < 2; ++row_bit) {
                const std::size_t i = (j & ~tm) | (static_cast<std::size_t>(row_bit) << g.q1);
                e.at(i, j) = u[row_bit * 2 + bit(j, g.q1)];
            }
        }
        return e;
    }
    default: {
        const auto u = gate_matrix_2x2(g);
        const std::size_t tm = std::size_t(1) << g.q0;
        for (std::size_t j = 0; j < dim; ++j) {
            for (int row_bit = 0; row_bit < 2; ++row_bit) {
                const std::size_t i = (j & ~tm) | (static_cast<std::size_t>(row_bit) << g.q0);
                e.at(i, j) = u[row_bit * 2 + bit(j, g.q0)];
            }
        }
        return e;
    }
    }
}

} // namespace

DenseMatrix circuit_unitary(const Circuit& circuit) {
    if (circuit.num_qubits() > 10) {
        throw TooManyQubits("circuit_unitary supports at most 10 qubits");
    }
    if (!circuit.is_bound()) {
        throw UnboundParameter("cannot build unitary: unbound parameter " +
                               circuit.free_parameters().front());
    }
    const std::size_t dim = std::size_t(1) << circuit.num_qubits();
    DenseMatrix u = DenseMatrix::identity(dim);
    for (const Gate& g : circuit.gates()) {
        u = embed_gate(g, circuit.num_qubits()).multiply(u);
    }
    return u;
}

} // namespace qbridge::sim
