#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qbridge/errors.hpp"

namespace qbridge::sim {

enum class GateKind { H, RX, RY, RZ, CX, CRX, ZZPhase };

const char* gate_kind_name(GateKind kind);

// Gate angle: either a bound value in radians or a named free parameter.
struct GateParam {
    double value = 0.0;
    std::string name; // non-empty means free

    bool bound() const { return name.empty(); }

    static GateParam fixed(double v) { return GateParam{v, {}}; }
    static GateParam free(std::string n) { return GateParam{0.0, std::move(n)}; }
};

struct Gate {
    GateKind kind;
    int q0 = 0;
    int q1 = -1; // second operand for CX/CRX/ZZPhase, -1 otherwise
    GateParam param;

    bool two_qubit() const { return q1 >= 0; }
    bool parameterized() const {
        return kind != GateKind::H && kind != GateKind::CX;
    }

    static Gate h(int q) { return {GateKind::H, q, -1, {}}; }
    static Gate rx(int q, GateParam p) { return {GateKind::RX, q, -1, std::move(p)}; }
    static Gate ry(int q, GateParam p) { return {GateKind::RY, q, -1, std::move(p)}; }
    static Gate rz(int q, GateParam p) { return {GateKind::RZ, q, -1, std::move(p)}; }
    static Gate cx(int control, int target) { return {GateKind::CX, control, target, {}}; }
    static Gate crx(int control, int target, GateParam p) {
        return {GateKind::CRX, control, target, std::move(p)};
    }
    // Diagonal two-qubit phase: amplitudes pick up exp(+i*theta) when the two
    // qubit bits agree and exp(-i*theta) when they differ.
    static Gate zz_phase(int a, int b, GateParam p) {
        return {GateKind::ZZPhase, a, b, std::move(p)};
    }
};

struct EntanglementGraph {
    enum class Scheme { Linear, ReverseLinear, Full, Custom };

    int n = 0;
    Scheme scheme = Scheme::Linear;
    std::vector<std::pair<int, int>> edges;

    static EntanglementGraph linear(int n);
    static EntanglementGraph reverse_linear(int n);
    static EntanglementGraph full(int n);
    static EntanglementGraph custom(int n, std::vector<std::pair<int, int>> edges);
    static EntanglementGraph make(int n, const std::string& scheme_name);
};

class CircuitError : public Error {
  public:
    using Error::Error;
};

class UnboundParameter : public CircuitError {
  public:
    using CircuitError::CircuitError;
};

class MissingParameter : public CircuitError {
  public:
    using CircuitError::CircuitError;
};

class UnknownParameter : public CircuitError {
  public:
    using CircuitError::CircuitError;
};

// Ordered gate program over n qubits. Qubit 0 is the least-significant bit
// of the basis index. Free parameter names are tracked in first-appearance
// order; one name may be shared by several gates.
class Circuit {
  public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return n_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<std::string>& free_parameters() const { return free_names_; }
    bool is_bound() const { return free_names_.empty(); }

    void append(Gate gate);

    // Returns a copy with every free parameter replaced by its value.
    // `values` must cover the free parameters exactly.
    Circuit bind(const std::map<std::string, double>& values) const;

    // One gate per line: `KIND q[,q2] [param-name|value]`.
    std::string dump() const;

  private:
    int n_;
    std::vector<Gate> gates_;
    std::vector<std::string> free_names_;
};

} // namespace qbridge::sim
