#pragma once

#include <map>
#include <memory>
#include <string>

#include "qbridge/eval/metrics.hpp"
#include "qbridge/eval/splits.hpp"
#include "qbridge/train/mlp.hpp"
#include "qbridge/train/qml.hpp"

namespace qbridge::eval {

// Anything with a fit/predict surface can go through the k-fold harness.
class Model {
  public:
    virtual ~Model() = default;
    virtual Task task() const = 0;
    virtual std::string config_echo() const = 0;
    virtual void fit(const Matrix& x, const std::vector<double>& y,
                     const std::vector<int>& labels, std::uint64_t seed) = 0;
    // Regression: one column. Classification: probability rows.
    virtual Matrix predict(const Matrix& x) const = 0;
};

class QmlModel final : public Model {
  public:
    QmlModel(train::QmlModelSpec spec, train::OptimizerConfig optimizer)
        : spec_(std::move(spec)), optimizer_(optimizer) {}

    Task task() const override { return spec_.task; }
    std::string config_echo() const override;
    void fit(const Matrix& x, const std::vector<double>& y, const std::vector<int>& labels,
             std::uint64_t seed) override;
    Matrix predict(const Matrix& x) const override;

    const std::vector<double>& parameters() const { return parameters_; }

  private:
    train::QmlModelSpec spec_;
    train::OptimizerConfig optimizer_;
    std::vector<double> parameters_;
};

class MlpModel final : public Model {
  public:
    MlpModel(train::MlpSpec spec, Task task, train::MlpTrainConfig config)
        : spec_(std::move(spec)), task_(task), config_(config) {}

    Task task() const override { return task_; }
    std::string config_echo() const override;
    void fit(const Matrix& x, const std::vector<double>& y, const std::vector<int>& labels,
             std::uint64_t seed) override;
    Matrix predict(const Matrix& x) const override;

  private:
    train::MlpSpec spec_;
    Task task_;
    train::MlpTrainConfig config_;
    train::MlpWeights weights_;
};

struct MetricSummary {
    std::vector<double> per_fold;
    double mean = 0.0;
    double stddev = 0.0; // population
};

struct EvalReport {
    std::string dataset_name;
    std::string model_config;
    Task task = Task::Regression;
    int k = 0;
    // Keyed by metric name; iteration order is alphabetical and stable.
    std::map<std::string, MetricSummary> metrics;
    std::vector<double> residuals; // regression, pooled across validation folds
    std::size_t n_residuals = 0;
    std::vector<std::vector<int>> confusion; // classification, pooled
    int fold_failures = 0;
};

// Trains per fold on the k-1 training folds, scores the held-out fold, and
// aggregates fold means and population standard deviations. A fold whose
// model throws is counted in fold_failures and excluded from aggregates.
EvalReport evaluate_model(Model& model, const Dataset& dataset, int k, std::uint64_t seed);

// Plain-text table of the aggregate metrics.
std::string render_report_table(const EvalReport& report);

// One machine-readable record (JSON object) per report.
std::string report_to_record(const EvalReport& report);

} // namespace qbridge::eval
