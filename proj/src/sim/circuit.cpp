#include "qbridge/sim/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace qbridge::sim {

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::CX:
        return "CX";
    case GateKind::CRX:
        return "CRX";
    case GateKind::ZZPhase:
        return "ZZ";
    }
    return "?";
}

EntanglementGraph EntanglementGraph::linear(int n) {
    EntanglementGraph g;
    g.n = n;
    g.scheme = Scheme::Linear;
    for (int i = 0; i + 1 < n; ++i) {
        g.edges.emplace_back(i, i + 1);
    }
    return g;
}

EntanglementGraph EntanglementGraph::reverse_linear(int n) {
    EntanglementGraph g = linear(n);
    g.scheme = Scheme::ReverseLinear;
    std::reverse(g.edges.begin(), g.edges.end());
    return g;
}

EntanglementGraph EntanglementGraph::full(int n) {
    EntanglementGraph g;
    g.n = n;
    g.scheme = Scheme::Full;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            g.edges.emplace_back(i, j);
        }
    }
    return g;
}

EntanglementGraph EntanglementGraph::custom(int n, std::vector<std::pair<int, int>> edges) {
    EntanglementGraph g;
    g.n = n;
    g.scheme = Scheme::Custom;
    for (auto [i, j] : edges) {
        if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
            throw CircuitError("entanglement edge out of range");
        }
    }
    for (std::size_t a = 0; a < edges.size(); ++a) {
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            if (edges[a] == edges[b]) {
                throw CircuitError("duplicate entanglement edge");
            }
        }
    }
    g.edges = std::move(edges);
    return g;
}

EntanglementGraph EntanglementGraph::make(int n, const std::string& scheme_name) {
    if (scheme_name == "linear") {
        return linear(n);
    }
    if (scheme_name == "reverse_linear") {
        return reverse_linear(n);
    }
    if (scheme_name == "full") {
        return full(n);
    }
    throw CircuitError("unknown entanglement scheme: " + scheme_name);
}

Circuit::Circuit(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 1) {
        throw CircuitError("circuit needs at least one qubit");
    }
}

void Circuit::append(Gate gate) {
    auto check = [this](int q) {
        if (q < 0 || q >= n_) {
            throw CircuitError("qubit index out of range: " + std::to_string(q));
        }
    };
    check(gate.q0);
    if (gate.two_qubit()) {
        check(gate.q1);
        if (gate.q0 == gate.q1) {
            throw CircuitError("two-qubit gate needs distinct qubits");
        }
    }
    const bool wants_param =
        gate.kind == GateKind::RX || gate.kind == GateKind::RY || gate.kind == GateKind::RZ ||
        gate.kind == GateKind::CRX || gate.kind == GateKind::ZZPhase;
    if (!wants_param && !gate.param.bound()) {
        throw CircuitError(std::string(gate_kind_name(gate.kind)) + " takes no parameter");
    }
    if (!gate.param.bound()) {
        if (std::find(free_names_.begin(), free_names_.end(), gate.param.name) ==
            free_names_.end()) {
            free_names_.push_back(gate.param.name);
        }
    }
    gates_.push_back(std::move(gate));
}

Circuit Circuit::bind(const std::map<std::string, double>& values) const {
    for (const auto& [name, _] : values) {
        if (std::find(free_names_.begin(), free_names_.end(), name) == free_names_.end()) {
            throw UnknownParameter("unknown parameter: " + name);
        }
    }
    Circuit out(n_);
    for (Gate g : gates_) {
        if (!g.param.bound()) {
            auto it = values.find(g.param.name);
            if (it == values.end()) {
                throw MissingParameter("missing parameter: " + g.param.name);
            }
            g.param = GateParam::fixed(it->second);
        }
        out.append(std::move(g));
    }
    return out;
}

std::string Circuit::dump() const {
    std::ostringstream os;
    for (const Gate& g : gates_) {
        os << gate_kind_name(g.kind) << ' ' << g.q0;
        if (g.two_qubit()) {
            os << ',' << g.q1;
        }
        if (g.parameterized()) {
            if (g.param.bound()) {
                char buf[32];
                auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), g.param.value,
                                               std::chars_format::general, 17);
                os << ' ' << std::string_view(buf, end - buf);
            } else {
                os << ' ' << g.param.name;
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace qbridge::sim
