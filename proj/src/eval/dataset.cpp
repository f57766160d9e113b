#include "qbridge/eval/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "qbridge/rng.hpp"

namespace qbridge::eval {

namespace {

std::string resolve_data_dir(const std::string& configured) {
    if (!configured.empty()) {
        return configured;
    }
    if (const char* env = std::getenv("QBRIDGE_DATA_DIR")) {
        return env;
    }
    return "data";
}

void standardize(std::vector<double>& values) {
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) {
        var += (v - mean) * (v - mean);
    }
    var /= static_cast<double>(values.size());
    const double sd = std::sqrt(var);
    for (double& v : values) {
        v = sd > 0.0 ? (v - mean) / sd : 0.0;
    }
}

void standardize_columns(Matrix& x) {
    for (std::size_t c = 0; c < x.cols; ++c) {
        std::vector<double> column(x.rows);
        for (std::size_t r = 0; r < x.rows; ++r) {
            column[r] = x.at(r, c);
        }
        standardize(column);
        for (std::size_t r = 0; r < x.rows; ++r) {
            x.at(r, c) = column[r];
        }
    }
}

Dataset make_iris(const DatasetSpec& spec) {
    const auto path = std::filesystem::path(resolve_data_dir(spec.data_dir)) / "iris.csv";
    Dataset raw = load_csv_dataset(path.string(), "petal_width", Task::Regression, true);
    raw.name = "iris_regression_3f";
    standardize_columns(raw.x);
    return raw;
}

Dataset make_synthetic_regression(const DatasetSpec& spec) {
    Dataset ds;
    ds.name = "synthetic_regression_" + std::to_string(spec.features) + "f";
    ds.task = Task::Regression;
    Rng weight_rng(Rng::split(spec.seed, 1));
    std::vector<double> w(spec.features);
    for (auto& v : w) {
        v = weight_rng.normal();
    }
    Rng rng(Rng::split(spec.seed, 2));
    ds.x = Matrix(spec.samples, spec.features);
    for (int r = 0; r < spec.samples; ++r) {
        double dot = 0.0;
        for (int c = 0; c < spec.features; ++c) {
            const double v = rng.normal();
            ds.x.at(r, c) = v;
            dot += w[c] * v;
        }
        ds.y.push_back(dot + 0.1 * rng.normal());
    }
    for (int c = 0; c < spec.features; ++c) {
        ds.feature_names.push_back("f" + std::to_string(c));
    }
    return ds;
}

Dataset make_synthetic_classification(const DatasetSpec& spec) {
    if (spec.classes < 2) {
        throw UnknownKind("synthetic classification needs at least 2 classes");
    }
    Dataset ds;
    ds.name = "synthetic_classification_" + std::to_string(spec.features) + "f_" +
              std::to_string(spec.classes) + "c";
    ds.task = Task::Classification;
    Rng rng(Rng::split(spec.seed, 3));
    ds.x = Matrix(spec.samples, spec.features);
    for (int r = 0; r < spec.samples; ++r) {
        const int label = r % spec.classes;
        const double angle = 2.0 * std::numbers::pi * label / spec.classes;
        for (int c = 0; c < spec.features; ++c) {
            double mean = 0.0;
            if (c == 0) {
                mean = 3.0 * std::cos(angle);
            } else if (c == 1) {
                mean = 3.0 * std::sin(angle);
            }
            ds.x.at(r, c) = mean + rng.normal();
        }
        ds.labels.push_back(label);
    }
    for (int c = 0; c < spec.features; ++c) {
        ds.feature_names.push_back("f" + std::to_string(c));
    }
    return ds;
}

} // namespace

int Dataset::num_classes() const {
    int c = 0;
    for (int label : labels) {
        c = std::max(c, label + 1);
    }
    return c;
}

DatasetSpec::Kind parse_dataset_kind(const std::string& name) {
    if (name == "iris_regression_3f") {
        return DatasetSpec::Kind::IrisRegression3f;
    }
    if (name == "synthetic_regression") {
        return DatasetSpec::Kind::SyntheticRegression;
    }
    if (name == "synthetic_classification") {
        return DatasetSpec::Kind::SyntheticClassification;
    }
    throw UnknownKind("unknown dataset kind: " + name);
}

Dataset make_dataset(const DatasetSpec& spec) {
    if (spec.samples < 1 || spec.features < 1) {
        throw UnknownKind("dataset needs at least one sample and one feature");
    }
    switch (spec.kind) {
    case DatasetSpec::Kind::IrisRegression3f:
        return make_iris(spec);
    case DatasetSpec::Kind::SyntheticRegression:
        return make_synthetic_regression(spec);
    case DatasetSpec::Kind::SyntheticClassification:
        return make_synthetic_classification(spec);
    }
    throw UnknownKind("unknown dataset kind");
}

Dataset load_csv_dataset(const std::string& path, const std::string& target_column, Task task,
                         bool standardize_target) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open dataset: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError("empty dataset file: " + path);
    }
    auto split_row = [](const std::string& row) {
        std::vector<std::string> cells;
        std::stringstream ss(row);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            if (!cell.empty() && cell.back() == '\r') {
                cell.pop_back();
            }
            cells.push_back(cell);
        }
        return cells;
    };

    const auto header = split_row(line);
    int target_index = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == target_column) {
            target_index = static_cast<int>(i);
        }
    }
    if (target_index < 0) {
        throw MissingColumn("no column named '" + target_column + "' in " + path);
    }

    Dataset ds;
    ds.name = std::filesystem::path(path).stem().string();
    ds.task = task;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (static_cast<int>(i) != target_index) {
            ds.feature_names.push_back(header[i]);
        }
    }

    std::vector<double> values;
    std::size_t row_number = 1;
    while (std::getline(in, line)) {
        ++row_number;
        if (line.empty()) {
            continue;
        }
        const auto cells = split_row(line);
        if (cells.size() != header.size()) {
            throw NonNumericCell("row " + std::to_string(row_number) + " has " +
                                 std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(header.size()));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::size_t consumed = 0;
            double v = 0.0;
            try {
                v = std::stod(cells[c], &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (consumed != cells[c].size()) {
                throw NonNumericCell("non-numeric cell at row " + std::to_string(row_number) +
                                     ", column " + std::to_string(c + 1));
            }
            values.push_back(v);
        }
    }

    const std::size_t cols = header.size();
    const std::size_t rows = values.size() / cols;
    ds.x = Matrix(rows, cols - 1);
    std::vector<double> target;
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t out_col = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            const double v = values[r * cols + c];
            if (static_cast<int>(c) == target_index) {
                target.push_back(v);
            } else {
                ds.x.at(r, out_col++) = v;
            }
        }
    }

    if (task == Task::Regression) {
        if (standardize_target && !target.empty()) {
            standardize(target);
        }
        ds.y = std::move(target);
    } else {
        std::set<int> seen;
        for (double v : target) {
            const int label = static_cast<int>(std::llround(v));
            if (std::abs(v - label) > 1e-9 || label < 0) {
                throw NonNumericCell("classification target is not a small integer label");
            }
            ds.labels.push_back(label);
            seen.insert(label);
        }
        const int c = ds.num_classes();
        if (static_cast<int>(seen.size()) != c) {
            throw NonNumericCell("classification labels must cover 0..C-1");
        }
    }
    return ds;
}

} // namespace qbridge::eval
