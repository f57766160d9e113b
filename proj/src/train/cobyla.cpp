#include "qbridge/train/cobyla.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qbridge::train {

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

// Solves A g = b in place by Gaussian elimination with partial pivoting.
// Returns false when the system is numerically singular.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& g) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) {
                pivot = row;
            }
        }
        if (std::abs(a[pivot][col]) < 1e-14) {
            return false;
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    g.assign(n, 0.0);
    for (std::size_t row = n; row-- > 0;) {
        double s = b[row];
        for (std::size_t k = row + 1; k < n; ++k) {
            s -= a[row][k] * g[k];
        }
        g[row] = s / a[row][row];
    }
    return true;
}

struct Simplex {
    std::vector<std::vector<double>> points;
    std::vector<double> values;

    std::size_t best() const {
        std::size_t b = 0;
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (values[i] < values[b]) {
                b = i;
            }
        }
        return b;
    }

    std::size_t worst() const {
        std::size_t w = 0;
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (values[i] > values[w]) {
                w = i;
            }
        }
        return w;
    }
};

} // namespace

OptimizerResult minimize_derivative_free(const Objective& objective, std::vector<double> x0,
                                         const OptimizerConfig& config) {
    const std::size_t dim = x0.size();
    OptimizerResult result;
    result.best_parameters = x0;
    result.best_objective = std::numeric_limits<double>::infinity();

    auto evaluate = [&](const std::vector<double>& x) {
        const double f = objective(x);
        if (!std::isfinite(f)) {
            std::string at = "(";
            for (std::size_t i = 0; i < x.size(); ++i) {
                at += (i ? ", " : "") + std::to_string(x[i]);
            }
            throw NonFiniteObjective("objective not finite at " + at + ")");
        }
        ++result.evaluations;
        if (f < result.best_objective) {
            result.best_objective = f;
            result.best_parameters = x;
        }
        result.trace.emplace_back(result.evaluations, result.best_objective);
        return f;
    };
    auto budget_left = [&] { return result.evaluations < config.max_evals; };

    double rho = config.initial_step;
    Simplex s;
    s.points.push_back(x0);
    s.values.push_back(evaluate(x0));

    // Initial simplex: coordinate offsets at the starting radius.
    for (std::size_t i = 0; i < dim && budget_left(); ++i) {
        auto p = x0;
        p[i] += rho;
        s.points.push_back(p);
        s.values.push_back(evaluate(p));
    }
    if (s.points.size() < dim + 1) {
        return result; // budget too small to even form the simplex
    }

    // Rebuilds the non-best vertices around the current best at radius r.
    // Returns false when the evaluation budget runs out mid-rebuild.
    auto rebuild = [&](double r) {
        const auto center = s.points[s.best()];
        const double center_value = s.values[s.best()];
        s.points.assign(1, center);
        s.values.assign(1, center_value);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!budget_left()) {
                return false;
            }
            auto p = center;
            p[i] += r;
            s.points.push_back(p);
            s.values.push_back(evaluate(p));
        }
        return true;
    };

    int stale_steps = 0;
    while (budget_left() && rho >= config.final_step) {
        const std::size_t b = s.best();
        std::vector<std::vector<double>> edges(dim, std::vector<double>(dim));
        std::vector<double> deltas(dim);
        std::size_t row = 0;
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (i == b) {
                continue;
            }
            for (std::size_t k = 0; k < dim; ++k) {
                edges[row][k] = s.points[i][k] - s.points[b][k];
            }
            deltas[row] = s.values[i] - s.values[b];
            ++row;
        }

        std::vector<double> gradient;
        if (!solve_linear(edges, deltas, gradient)) {
            // Degenerate geometry: replace the worst-conditioned vertex.
            // With coordinate simplices degeneracy means two vertices
            // collapsed; the worst vertex is the safe casualty.
            if (!budget_left()) {
                break;
            }
            const std::size_t w = s.worst();
            auto p = s.points[b];
            p[result.evaluations % dim] += rho;
            s.points[w] = p;
            s.values[w] = evaluate(p);
            continue;
        }

        const double glen = norm2(gradient);
        bool improved = false;
        if (glen > 1e-14) {
            auto candidate = s.points[b];
            for (std::size_t k = 0; k < dim; ++k) {
                candidate[k] -= rho * gradient[k] / glen;
            }
            const double fc = evaluate(candidate);
            if (fc < s.values[b]) {
                const std::size_t w = s.worst();
                s.points[w] = std::move(candidate);
                s.values[w] = fc;
                improved = true;
                stale_steps = 0;
            }
        }

        if (!improved) {
            // The linear model stopped paying at this radius; either refresh
            // the geometry once or shrink the region around the incumbent.
            if (++stale_steps < 2) {
                if (!rebuild(rho)) {
                    break;
                }
            } else {
                rho *= 0.5;
                stale_steps = 0;
                if (rho >= config.final_step && !rebuild(rho)) {
                    break;
                }
            }
        }
    }

    result.converged = rho < config.final_step;
    return result;
}

} // namespace qbridge::train
