#include "qbridge/eval/evaluate.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "qbridge/rng.hpp"

namespace qbridge::eval {

std::string QmlModel::config_echo() const {
    std::ostringstream os;
    os << "qml(n_qubits=" << spec_.n_qubits << ", feature_reps=" << spec_.feature_reps
       << ", ansatz_reps=" << spec_.ansatz_reps << ", alpha=" << spec_.feature_alpha
       << ", entanglement=" << spec_.entanglement << ")";
    return os.str();
}

void QmlModel::fit(const Matrix& x, const std::vector<double>& y, const std::vector<int>& labels,
                   std::uint64_t seed) {
    train::QmlTargets targets;
    targets.task = spec_.task;
    targets.values = y;
    targets.labels = labels;
    parameters_ = train::fit_qml(spec_, x, targets, optimizer_, seed).parameters;
}

Matrix QmlModel::predict(const Matrix& x) const {
    return train::predict_qml(spec_, parameters_, x);
}

std::string MlpModel::config_echo() const {
    std::ostringstream os;
    os << "mlp(hidden_dims=[";
    for (std::size_t i = 0; i < spec_.hidden_dims.size(); ++i) {
        os << (i ? ", " : "") << spec_.hidden_dims[i];
    }
    os << "], dropout=" << spec_.dropout_rate << ", epochs=" << config_.epochs
       << ", lr=" << config_.learning_rate << ")";
    return os.str();
}

void MlpModel::fit(const Matrix& x, const std::vector<double>& y, const std::vector<int>& labels,
                   std::uint64_t seed) {
    train::MlpTargets targets;
    targets.task = task_;
    targets.values = y;
    targets.labels = labels;
    weights_ = train::fit_mlp(spec_, x, targets, config_, seed);
}

Matrix MlpModel::predict(const Matrix& x) const {
    return predict_mlp(spec_, weights_, x, task_);
}

namespace {

void summarize(MetricSummary& s) {
    if (s.per_fold.empty()) {
        return;
    }
    double sum = 0.0;
    for (double v : s.per_fold) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(s.per_fold.size());
    double var = 0.0;
    for (double v : s.per_fold) {
        var += (v - s.mean) * (v - s.mean);
    }
    s.stddev = std::sqrt(var / static_cast<double>(s.per_fold.size()));
}

} // namespace

EvalReport evaluate_model(Model& model, const Dataset& dataset, int k, std::uint64_t seed) {
    if (model.task() != dataset.task) {
        throw DimensionMismatch("model task does not match the dataset task");
    }
    EvalReport report;
    report.dataset_name = dataset.name;
    report.model_config = model.config_echo();
    report.task = dataset.task;
    report.k = k;
    if (dataset.task == Task::Classification) {
        const int c = dataset.num_classes();
        report.confusion.assign(c, std::vector<int>(c, 0));
    }

    const auto plan = split_folds(dataset, SplitMode::kfold(k), seed);
    for (std::size_t fold = 0; fold < plan.folds.size(); ++fold) {
        const auto train_idx = plan.train_indices_for_fold(fold);
        const auto& val_idx = plan.folds[fold];
        std::vector<double> y_train;
        std::vector<int> labels_train;
        if (dataset.task == Task::Regression) {
            y_train = select(dataset.y, train_idx);
        } else {
            labels_train = select(dataset.labels, train_idx);
        }
        try {
            model.fit(dataset.x.select_rows(train_idx), y_train, labels_train,
                      Rng::split(seed, fold));
            const Matrix predictions = model.predict(dataset.x.select_rows(val_idx));

            if (dataset.task == Task::Regression) {
                std::vector<double> y_val = select(dataset.y, val_idx);
                std::vector<double> y_hat(predictions.rows);
                for (std::size_t i = 0; i < predictions.rows; ++i) {
                    y_hat[i] = predictions.at(i, 0);
                }
                const auto m = regression_metrics(y_val, y_hat);
                report.metrics["mse"].per_fold.push_back(m.mse);
                report.metrics["residual_mean"].per_fold.push_back(m.residual_mean);
                report.metrics["residual_std"].per_fold.push_back(m.residual_std);
                report.residuals.insert(report.residuals.end(), m.residuals.begin(),
                                        m.residuals.end());
            } else {
                const auto labels_val = select(dataset.labels, val_idx);
                const auto m = classification_metrics(labels_val, predictions);
                report.metrics["accuracy"].per_fold.push_back(m.accuracy);
                report.metrics["f1_macro"].per_fold.push_back(m.f1_macro);
                report.metrics["f1_weighted"].per_fold.push_back(m.f1_weighted);
                report.metrics["auroc"].per_fold.push_back(m.auroc);
                report.metrics["log_loss"].per_fold.push_back(m.log_loss);
                report.metrics["brier"].per_fold.push_back(m.brier);
                for (std::size_t i = 0; i < m.confusion.size(); ++i) {
                    for (std::size_t j = 0; j < m.confusion.size(); ++j) {
                        report.confusion[i][j] += m.confusion[i][j];
                    }
                }
            }
        } catch (const Error&) {
            ++report.fold_failures;
        }
    }
    report.n_residuals = report.residuals.size();
    for (auto& [_, summary] : report.metrics) {
        summarize(summary);
    }
    return report;
}

std::string render_report_table(const EvalReport& report) {
    std::ostringstream os;
    os << "dataset: " << report.dataset_name << "\n";
    os << "config:  " << report.model_config << "\n";
    os << "folds:   " << report.k;
    if (report.fold_failures > 0) {
        os << " (" << report.fold_failures << " failed)";
    }
    os << "\n";
    os << "metric            mean        std\n";
    os << "----------------  ----------  ----------\n";
    os.setf(std::ios::fixed);
    os.precision(4);
    for (const auto& [name, summary] : report.metrics) {
        os.width(16);
        os.setf(std::ios::left, std::ios::adjustfield);
        os << name;
        os.unsetf(std::ios::adjustfield);
        os << "  ";
        os.width(10);
        os << summary.mean;
        os << "  ";
        os.width(10);
        os << summary.stddev;
        os << "\n";
    }
    if (report.task == Task::Regression) {
        os << "n_residuals: " << report.n_residuals << "\n";
    } else if (!report.confusion.empty()) {
        os << "confusion (rows = true class):\n";
        for (const auto& row : report.confusion) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                os << (j ? " " : "  ") << row[j];
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string report_to_record(const EvalReport& report) {
    nlohmann::ordered_json j;
    j["dataset"] = report.dataset_name;
    j["config"] = report.model_config;
    j["task"] = report.task == Task::Regression ? "regression" : "classification";
    j["k"] = report.k;
    j["fold_failures"] = report.fold_failures;
    nlohmann::ordered_json metrics;
    for (const auto& [name, summary] : report.metrics) {
        metrics[name] = {{"mean", summary.mean},
                         {"std", summary.stddev},
                         {"per_fold", summary.per_fold}};
    }
    j["metrics"] = metrics;
    if (report.task == Task::Regression) {
        j["n_residuals"] = report.n_residuals;
    } else {
        j["confusion"] = report.confusion;
    }
    return j.dump();
}

} // namespace qbridge::eval
