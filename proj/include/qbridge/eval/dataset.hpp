#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbridge/data.hpp"

namespace qbridge::eval {

class UnknownKind : public Error {
  public:
    using Error::Error;
};

class MissingColumn : public Error {
  public:
    using Error::Error;
};

class NonNumericCell : public Error {
  public:
    using Error::Error;
};

struct Dataset {
    std::string name;
    Matrix x;
    Task task = Task::Regression;
    std::vector<double> y;    // regression targets
    std::vector<int> labels;  // classification labels, 0..C-1
    std::vector<std::string> feature_names;

    std::size_t size() const { return x.rows; }
    int num_classes() const;
};

struct DatasetSpec {
    enum class Kind { IrisRegression3f, SyntheticRegression, SyntheticClassification };

    Kind kind = Kind::IrisRegression3f;
    int features = 4;          // synthetic kinds
    int classes = 3;           // synthetic classification
    int samples = 150;
    std::uint64_t seed = 0;
    std::string data_dir;      // bundled-file lookup; falls back to $QBRIDGE_DATA_DIR, then ./data
};

// iris_regression_3f: the classic 150-row table from the bundled CSV, first
// three columns as features and petal width as the target, all standardized.
// synthetic_regression: X ~ N(0,1), y = w.x + 0.1 * noise with w fixed by the
// seed. synthetic_classification: C unit-covariance Gaussian blobs with means
// on a circle of radius 3 (first two feature dimensions).
Dataset make_dataset(const DatasetSpec& spec);

DatasetSpec::Kind parse_dataset_kind(const std::string& name);

// Comma-separated numeric table with a header row. X keeps the non-target
// columns in header order. `standardize_target` rescales the target to mean 0
// and unit standard deviation.
Dataset load_csv_dataset(const std::string& path, const std::string& target_column, Task task,
                         bool standardize_target = false);

} // namespace qbridge::eval
