#pragma once

#include <map>
#include <string>
#include <vector>

#include "qbridge/sim/observable.hpp"

namespace qbridge::sim {

class UnsupportedGateForShift : public CircuitError {
  public:
    using CircuitError::CircuitError;
};

// Exact gradient of expectation(simulate(circuit), observable) with respect
// to each free parameter, in first-appearance order.
//
// RX/RY/RZ occurrences use the two-term rule
//   d<O>/dt = [f(t + pi/2) - f(t - pi/2)] / 2.
// CRX occurrences use the four-term rule for controlled rotations, whose
// generator also has a zero eigenvalue:
//   d<O>/dt = c+ [f(t + pi/2) - f(t - pi/2)] - c- [f(t + 3pi/2) - f(t - 3pi/2)]
// with c± = (sqrt(2) ± 1) / (4 sqrt(2)).
// Parameters shared across gates accumulate one shift term per occurrence.
std::vector<double> parameter_shift_gradient(const Circuit& circuit,
                                             const Observable& observable,
                                             const std::map<std::string, double>& values);

} // namespace qbridge::sim
