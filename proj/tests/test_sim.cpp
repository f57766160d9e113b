#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qbridge/sim/builders.hpp"
#include "qbridge/sim/observable.hpp"
#include "qbridge/sim/statevector.hpp"
#include "qbridge/sim/unitary.hpp"
#include "support/sim_helpers.hpp"

using namespace qbridge;
using namespace qbridge::sim;
using qbridge::testsupport::max_diff;
using qbridge::testsupport::max_diff_up_to_global_phase;
using qbridge::testsupport::random_bound_circuit;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE_BEGIN("sim");

TEST_CASE("empty circuit leaves the initial state unchanged") {
    Circuit c(2);
    auto out = simulate(c);
    CHECK(out.amplitudes()[0] == std::complex<double>{1.0, 0.0});
    CHECK(out.amplitudes()[1] == std::complex<double>{0.0, 0.0});
}

TEST_CASE("H on qubit 0 of |00>") {
    Circuit c(2);
    c.append(Gate::h(0));
    auto out = simulate(c);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(out.amplitudes()[0] - std::complex<double>{s, 0.0}) < 1e-15);
    CHECK(std::abs(out.amplitudes()[1] - std::complex<double>{s, 0.0}) < 1e-15);
    CHECK(std::abs(out.amplitudes()[2]) < 1e-15);
    CHECK(std::abs(out.amplitudes()[3]) < 1e-15);
}

TEST_CASE("random circuits match the dense-matrix route") {
    Rng rng(20250901);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform_index(3));
        auto c = random_bound_circuit(rng, n, 12);
        auto fast = simulate(c);
        auto dense = circuit_unitary(c);
        std::vector<std::complex<double>> e0(dense.dim, {0.0, 0.0});
        e0[0] = {1.0, 0.0};
        auto expected = dense.apply(e0);
        CHECK(max_diff_up_to_global_phase(fast.amplitudes(), expected) < 1e-10);
        CHECK(std::abs(fast.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("circuit_unitary basics") {
    SUBCASE("empty circuit is the identity") {
        Circuit c(1);
        CHECK(circuit_unitary(c).identity_distance() < 1e-15);
    }
    SUBCASE("CX(0->1) permutes basis states 1 and 3") {
        Circuit c(2);
        c.append(Gate::cx(0, 1));
        auto u = circuit_unitary(c);
        CHECK(u.at(0, 0) == std::complex<double>{1.0, 0.0});
        CHECK(u.at(2, 2) == std::complex<double>{1.0, 0.0});
        CHECK(u.at(3, 1) == std::complex<double>{1.0, 0.0});
        CHECK(u.at(1, 3) == std::complex<double>{1.0, 0.0});
        CHECK(u.at(1, 1) == std::complex<double>{0.0, 0.0});
    }
    SUBCASE("composition equals the product of sub-circuit unitaries") {
        Rng rng(7);
        auto a = random_bound_circuit(rng, 2, 6);
        auto b = random_bound_circuit(rng, 2, 6);
        Circuit ab(2);
        for (const auto& g : a.gates()) {
            ab.append(g);
        }
        for (const auto& g : b.gates()) {
            ab.append(g);
        }
        auto product = circuit_unitary(b).multiply(circuit_unitary(a));
        auto direct = circuit_unitary(ab);
        double worst = 0.0;
        for (std::size_t i = 0; i < product.data.size(); ++i) {
            worst = std::max(worst, std::abs(product.data[i] - direct.data[i]));
        }
        CHECK(worst < 1e-10);
    }
    SUBCASE("unitarity on random circuits up to n=4") {
        Rng rng(99);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 1 + static_cast<int>(rng.uniform_index(4));
            auto c = random_bound_circuit(rng, n, 10);
            auto u = circuit_unitary(c);
            CHECK(u.adjoint().multiply(u).identity_distance() < 1e-9);
        }
    }
    SUBCASE("caps at 10 qubits") {
        Circuit c(11);
        CHECK_THROWS_AS(circuit_unitary(c), TooManyQubits);
    }
}

TEST_CASE("zz feature map: single qubit at x=0 is |+>") {
    const double x[] = {0.0};
    auto c = build_zz_feature_map(x, EntanglementGraph::linear(1), {.reps = 1});
    auto out = simulate(c);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(out.amplitudes()[0] - std::complex<double>{s, 0.0}) < 1e-15);
    CHECK(std::abs(out.amplitudes()[1] - std::complex<double>{s, 0.0}) < 1e-15);
}

TEST_CASE("zz feature map matches the closed-form state for n=2") {
    // Direct evaluation of the evolution: amplitude of basis state k is
    // (1/2) * exp(i * [s0*a0 + s1*a1 + s0*s1*a01]) with s = +1 for bit 0 and
    // -1 for bit 1. Written out in full so this check shares nothing with
    // the builder or either simulation route.
    const double x0 = 0.3;
    const double x1 = 0.7;
    const double alpha = 2.0;
    const double a0 = alpha * x0;
    const double a1 = alpha * x1;
    const double a01 = alpha * (pi - x0) * (pi - x1);

    const double x[] = {x0, x1};
    auto c = build_zz_feature_map(x, EntanglementGraph::linear(2), {.reps = 1});
    auto out = simulate(c);

    std::vector<std::complex<double>> expected(4);
    for (int k = 0; k < 4; ++k) {
        const double s0 = (k & 1) ? -1.0 : 1.0;
        const double s1 = (k & 2) ? -1.0 : 1.0;
        expected[k] = 0.5 * std::polar(1.0, s0 * a0 + s1 * a1 + s0 * s1 * a01);
    }
    CHECK(max_diff_up_to_global_phase(out.amplitudes(), expected) < 1e-10);
}

TEST_CASE("zz feature map with reps=2 squares the single-rep unitary") {
    const double x[] = {0.4, -1.1};
    auto graph = EntanglementGraph::linear(2);
    auto once = build_zz_feature_map(x, graph, {.reps = 1});
    auto twice = build_zz_feature_map(x, graph, {.reps = 2});

    // Strip the Hadamard layer from the single-rep circuit, square the rest.
    Circuit phases(2);
    for (const auto& g : once.gates()) {
        if (g.kind != GateKind::H) {
            phases.append(g);
        }
    }
    auto u_phase = circuit_unitary(phases);
    Circuit h_layer(2);
    h_layer.append(Gate::h(0));
    h_layer.append(Gate::h(1));
    auto expected =
        u_phase.multiply(u_phase).multiply(circuit_unitary(h_layer));
    std::vector<std::complex<double>> e0(4, {0.0, 0.0});
    e0[0] = {1.0, 0.0};
    CHECK(max_diff_up_to_global_phase(simulate(twice).amplitudes(), expected.apply(e0)) <
          1e-10);
}

TEST_CASE("zz feature map rejects mismatched input length") {
    const double x[] = {0.1, 0.2, 0.3};
    CHECK_THROWS_AS(build_zz_feature_map(x, EntanglementGraph::linear(2), {}),
                    DimensionMismatch);
}

TEST_CASE("zz feature map zero input with a vanishing pair map gives |+>^n") {
    // The shipped default pair map (pi-a)(pi-b) does not vanish at zero, so
    // the plus-state anchor uses the product map, which does.
    FeatureMapOptions opts;
    opts.phi2 = [](double a, double b) { return a * b; };
    for (int n = 1; n <= 3; ++n) {
        for (int r = 1; r <= 3; ++r) {
            opts.reps = r;
            std::vector<double> x(n, 0.0);
            auto out = simulate(build_zz_feature_map(x, EntanglementGraph::linear(n), opts));
            const double expected = std::pow(2.0, -n / 2.0);
            for (const auto& a : out.amplitudes()) {
                CHECK(std::abs(a - std::complex<double>{expected, 0.0}) < 1e-12);
            }
        }
    }
}

TEST_CASE("real amplitudes: zero angles act as identity on |00>") {
    auto c = build_real_amplitudes(2, 1, EntanglementGraph::linear(2));
    CHECK(c.free_parameters().size() == 4); // n*(reps+1)
    std::map<std::string, double> values;
    for (const auto& name : c.free_parameters()) {
        values[name] = 0.0;
    }
    auto out = simulate(c.bind(values));
    CHECK(out.probability(0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("real amplitudes: RY(pi) flips a single qubit") {
    auto c = build_real_amplitudes(1, 1, EntanglementGraph::linear(1));
    auto out = simulate(c.bind({{"theta_0_0", pi}, {"theta_1_0", 0.0}}));
    CHECK(out.probability(1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("real amplitudes keeps amplitudes real") {
    Rng rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform_index(3));
        const int reps = 1 + static_cast<int>(rng.uniform_index(2));
        auto c = build_real_amplitudes(n, reps, EntanglementGraph::linear(n));
        std::map<std::string, double> values;
        for (const auto& name : c.free_parameters()) {
            values[name] = rng.uniform(-pi, pi);
        }
        auto out = simulate(c.bind(values));
        for (const auto& a : out.amplitudes()) {
            CHECK(std::abs(a.imag()) < 1e-12);
        }
    }
}

TEST_CASE("real amplitudes parameter naming and optional terminal layer") {
    auto c = build_real_amplitudes(2, 2, EntanglementGraph::linear(2));
    const auto& names = c.free_parameters();
    REQUIRE(names.size() == 6);
    CHECK(names[0] == "theta_0_0");
    CHECK(names[1] == "theta_0_1");
    CHECK(names[4] == "theta_2_0");

    auto no_tail = build_real_amplitudes(2, 2, EntanglementGraph::linear(2),
                                         {.final_rotation_layer = false});
    CHECK(no_tail.free_parameters().size() == 4);
}

TEST_CASE("bind covers parameters exactly") {
    auto c = build_real_amplitudes(2, 1, EntanglementGraph::linear(2),
                                   {.final_rotation_layer = false});
    std::map<std::string, double> values = {{"theta_0_0", 0.1}, {"theta_0_1", 0.2}};
    CHECK(c.bind(values).free_parameters().empty());

    values.erase("theta_0_1");
    CHECK_THROWS_AS(c.bind(values), MissingParameter);

    values["theta_0_1"] = 0.2;
    values["theta_9_9"] = 1.0;
    CHECK_THROWS_AS(c.bind(values), UnknownParameter);

    CHECK_THROWS_AS(simulate(c), UnboundParameter);
}

TEST_CASE("expectation of Z after RY rotation") {
    for (double theta : {0.0, 0.4, pi / 2.0, 2.2}) {
        Circuit c(1);
        c.append(Gate::ry(0, GateParam::fixed(theta)));
        const double z = expectation(simulate(c), Observable::z_on(0));
        CHECK(z == doctest::Approx(std::cos(theta)).epsilon(1e-12));
    }
}

TEST_CASE("mean Z of the ground state is 1") {
    Circuit c(2);
    CHECK(expectation(simulate(c), Observable::mean_z()) == doctest::Approx(1.0));
}

TEST_CASE("class masses match a brute-force sum over basis states") {
    Rng rng(555);
    auto amps = testsupport::random_amplitudes(rng, 3);
    auto state = StateVector::from_amplitudes(3, amps);
    auto parity = [](std::size_t k) { return static_cast<int>(__builtin_popcountll(k) & 1); };
    auto masses = probability_masses(state, Observable::class_masses(2, parity));

    double expected0 = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (parity(k) == 0) {
            expected0 += std::norm(amps[k]);
        }
    }
    CHECK(masses[0] == doctest::Approx(expected0).epsilon(1e-12));
    CHECK(masses[0] + masses[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm is preserved across random simulations") {
    Rng rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform_index(4));
        auto c = random_bound_circuit(rng, n, 15);
        auto initial = StateVector::from_amplitudes(n, testsupport::random_amplitudes(rng, n));
        CHECK(std::abs(simulate(c, initial).norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("circuit dump lists one gate per line") {
    Circuit c(2);
    c.append(Gate::h(0));
    c.append(Gate::ry(1, GateParam::free("theta_0_1")));
    c.append(Gate::cx(0, 1));
    c.append(Gate::zz_phase(0, 1, GateParam::fixed(0.5)));
    CHECK(c.dump() == "H 0\nRY 1 theta_0_1\nCX 0,1\nZZ 0,1 0.5\n");
}

TEST_SUITE_END();
