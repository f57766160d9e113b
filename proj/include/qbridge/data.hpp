#pragma once

#include <cstddef>
#include <vector>

#include "qbridge/errors.hpp"

namespace qbridge {

enum class Task { Regression, Classification };

// Minimal row-major matrix of doubles; rows are samples.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    const double* row(std::size_t r) const { return data.data() + r * cols; }
    double* row(std::size_t r) { return data.data() + r * cols; }

    Matrix select_rows(const std::vector<std::size_t>& indices) const {
        Matrix out(indices.size(), cols);
        for (std::size_t i = 0; i < indices.size(); ++i) {
            for (std::size_t c = 0; c < cols; ++c) {
                out.at(i, c) = at(indices[i], c);
            }
        }
        return out;
    }
};

inline std::vector<double> select(const std::vector<double>& v,
                                  const std::vector<std::size_t>& indices) {
    std::vector<double> out;
    out.reserve(indices.size());
    for (auto i : indices) {
        out.push_back(v.at(i));
    }
    return out;
}

inline std::vector<int> select(const std::vector<int>& v,
                               const std::vector<std::size_t>& indices) {
    std::vector<int> out;
    out.reserve(indices.size());
    for (auto i : indices) {
        out.push_back(v.at(i));
    }
    return out;
}

} // namespace qbridge
