#include "qbridge/train/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qbridge::train {

namespace {

std::vector<int> layer_dims(const MlpSpec& spec) {
    std::vector<int> dims;
    dims.push_back(spec.input_dim);
    for (int h : spec.hidden_dims) {
        dims.push_back(h);
    }
    dims.push_back(spec.output_dim);
    return dims;
}

void softmax_row(double* row, std::size_t n) {
    double peak = row[0];
    for (std::size_t i = 1; i < n; ++i) {
        peak = std::max(peak, row[i]);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        row[i] = std::exp(row[i] - peak);
        sum += row[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        row[i] /= sum;
    }
}

} // namespace

MlpWeights initialize_mlp(const MlpSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    MlpWeights w;
    const auto dims = layer_dims(spec);
    for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
        const int fan_in = dims[l];
        const int fan_out = dims[l + 1];
        const double limit = std::sqrt(6.0 / (fan_in + fan_out));
        Matrix m(fan_out, fan_in);
        for (auto& v : m.data) {
            v = rng.uniform(-limit, limit);
        }
        w.weights.push_back(std::move(m));
        w.biases.emplace_back(fan_out, 0.0);
    }
    return w;
}

double mlp_loss_and_gradients(const MlpSpec& spec, const MlpWeights& weights, const Matrix& x,
                              const MlpTargets& targets, MlpWeights* gradients,
                              Rng* dropout_rng) {
    if (static_cast<int>(x.cols) != spec.input_dim) {
        throw DimensionMismatch("input width does not match the model spec");
    }
    const std::size_t batch = x.rows;
    const std::size_t expected = targets.task == Task::Regression ? targets.values.size()
                                                                  : targets.labels.size();
    if (expected != batch) {
        throw DimensionMismatch("target count does not match the batch");
    }
    const std::size_t num_layers = weights.weights.size();

    if (gradients) {
        gradients->weights.clear();
        gradients->biases.clear();
        for (std::size_t l = 0; l < num_layers; ++l) {
            gradients->weights.emplace_back(weights.weights[l].rows, weights.weights[l].cols);
            gradients->biases.emplace_back(weights.biases[l].size(), 0.0);
        }
    }

    // Forward. Keep post-activation values (and dropout masks) per layer for
    // the backward pass.
    std::vector<Matrix> activations;
    std::vector<Matrix> masks;
    activations.push_back(x);
    for (std::size_t l = 0; l < num_layers; ++l) {
        const Matrix& in = activations.back();
        const Matrix& w = weights.weights[l];
        Matrix out(batch, w.rows);
        for (std::size_t r = 0; r < batch; ++r) {
            for (std::size_t o = 0; o < w.rows; ++o) {
                double z = weights.biases[l][o];
                for (std::size_t c = 0; c < w.cols; ++c) {
                    z += w.at(o, c) * in.at(r, c);
                }
                out.at(r, o) = z;
            }
        }
        const bool hidden = l + 1 < num_layers;
        Matrix mask;
        if (hidden) {
            for (auto& v : out.data) {
                v = std::max(v, 0.0);
            }
            if (dropout_rng && spec.dropout_rate > 0.0) {
                mask = Matrix(batch, w.rows);
                const double keep = 1.0 - spec.dropout_rate;
                for (std::size_t i = 0; i < out.data.size(); ++i) {
                    const bool kept = dropout_rng->uniform() >= spec.dropout_rate;
                    mask.data[i] = kept ? 1.0 / keep : 0.0;
                    out.data[i] *= mask.data[i];
                }
            }
        }
        masks.push_back(std::move(mask));
        activations.push_back(std::move(out));
    }

    Matrix& output = activations.back();
    double loss = 0.0;
    // d(loss)/d(pre-activation of the head), averaged over the batch.
    Matrix delta(batch, spec.output_dim);

    if (targets.task == Task::Regression) {
        for (std::size_t r = 0; r < batch; ++r) {
            const double diff = output.at(r, 0) - targets.values[r];
            loss += diff * diff;
            delta.at(r, 0) = 2.0 * diff / static_cast<double>(batch);
        }
        loss /= static_cast<double>(batch);
    } else {
        for (std::size_t r = 0; r < batch; ++r) {
            softmax_row(output.row(r), output.cols);
            const int label = targets.labels[r];
            const double p = std::max(output.at(r, label), 1e-12);
            loss -= std::log(p);
            for (std::size_t c = 0; c < output.cols; ++c) {
                const double one_hot = (static_cast<int>(c) == label) ? 1.0 : 0.0;
                delta.at(r, c) = (output.at(r, c) - one_hot) / static_cast<double>(batch);
            }
        }
        loss /= static_cast<double>(batch);
    }
    if (!std::isfinite(loss)) {
        throw DivergenceDetected("training loss is not finite");
    }
    if (!gradients) {
        return loss;
    }

    for (std::size_t l = num_layers; l-- > 0;) {
        const Matrix& in = activations[l];
        Matrix& gw = gradients->weights[l];
        auto& gb = gradients->biases[l];
        for (std::size_t r = 0; r < batch; ++r) {
            for (std::size_t o = 0; o < gw.rows; ++o) {
                const double d = delta.at(r, o);
                gb[o] += d;
                for (std::size_t c = 0; c < gw.cols; ++c) {
                    gw.at(o, c) += d * in.at(r, c);
                }
            }
        }
        if (l == 0) {
            break;
        }
        // Propagate through the affine map, then the previous layer's
        // dropout mask and ReLU.
        const Matrix& w = weights.weights[l];
        Matrix prev_delta(batch, w.cols);
        for (std::size_t r = 0; r < batch; ++r) {
            for (std::size_t c = 0; c < w.cols; ++c) {
                double s = 0.0;
                for (std::size_t o = 0; o < w.rows; ++o) {
                    s += w.at(o, c) * delta.at(r, o);
                }
                prev_delta.at(r, c) = s;
            }
        }
        const Matrix& act = activations[l];
        const Matrix& mask = masks[l - 1];
        for (std::size_t i = 0; i < prev_delta.data.size(); ++i) {
            if (act.data[i] <= 0.0) {
                prev_delta.data[i] = 0.0;
            } else if (!mask.data.empty()) {
                prev_delta.data[i] *= mask.data[i];
            }
        }
        delta = std::move(prev_delta);
    }
    return loss;
}

MlpWeights fit_mlp(const MlpSpec& spec, const Matrix& x, const MlpTargets& targets,
                   const MlpTrainConfig& config, std::uint64_t seed) {
    MlpWeights w = initialize_mlp(spec, seed);
    Rng shuffle_rng(Rng::split(seed, 1));
    Rng dropout_rng(Rng::split(seed, 2));

    // Adam state mirrors the weight layout.
    MlpWeights m;
    MlpWeights v;
    for (std::size_t l = 0; l < w.weights.size(); ++l) {
        m.weights.emplace_back(w.weights[l].rows, w.weights[l].cols);
        m.biases.emplace_back(w.biases[l].size(), 0.0);
        v.weights.emplace_back(w.weights[l].rows, w.weights[l].cols);
        v.biases.emplace_back(w.biases[l].size(), 0.0);
    }

    std::vector<std::size_t> order(x.rows);
    std::iota(order.begin(), order.end(), 0);
    const std::size_t batch_size =
        std::min<std::size_t>(std::max(config.batch_size, 1), std::max<std::size_t>(x.rows, 1));

    long step = 0;
    MlpWeights grads;
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        // Fisher-Yates against the local rng keeps runs reproducible.
        for (std::size_t i = order.size(); i > 1; --i) {
            std::swap(order[i - 1], order[shuffle_rng.uniform_index(i)]);
        }
        for (std::size_t start = 0; start < x.rows; start += batch_size) {
            const std::size_t end = std::min(start + batch_size, x.rows);
            std::vector<std::size_t> idx(order.begin() + start, order.begin() + end);
            const Matrix xb = x.select_rows(idx);
            MlpTargets tb;
            tb.task = targets.task;
            if (targets.task == Task::Regression) {
                tb.values = select(targets.values, idx);
            } else {
                tb.labels = select(targets.labels, idx);
            }
            Rng* dropout = spec.dropout_rate > 0.0 ? &dropout_rng : nullptr;
            mlp_loss_and_gradients(spec, w, xb, tb, &grads, dropout);

            ++step;
            const double bc1 = 1.0 - std::pow(config.beta1, step);
            const double bc2 = 1.0 - std::pow(config.beta2, step);
            for (std::size_t l = 0; l < w.weights.size(); ++l) {
                auto update = [&](double& param, double& m1, double& m2, double g) {
                    m1 = config.beta1 * m1 + (1.0 - config.beta1) * g;
                    m2 = config.beta2 * m2 + (1.0 - config.beta2) * g * g;
                    const double mhat = m1 / bc1;
                    const double vhat = m2 / bc2;
                    param -= config.learning_rate * mhat / (std::sqrt(vhat) + config.epsilon);
                };
                for (std::size_t i = 0; i < w.weights[l].data.size(); ++i) {
                    update(w.weights[l].data[i], m.weights[l].data[i], v.weights[l].data[i],
                           grads.weights[l].data[i]);
                }
                for (std::size_t i = 0; i < w.biases[l].size(); ++i) {
                    update(w.biases[l][i], m.biases[l][i], v.biases[l][i], grads.biases[l][i]);
                }
            }
        }
    }
    return w;
}

Matrix predict_mlp(const MlpSpec& spec, const MlpWeights& weights, const Matrix& x, Task task) {
    if (static_cast<int>(x.cols) != spec.input_dim) {
        throw DimensionMismatch("input width does not match the model spec");
    }
    Matrix current = x;
    const std::size_t num_layers = weights.weights.size();
    for (std::size_t l = 0; l < num_layers; ++l) {
        const Matrix& w = weights.weights[l];
        Matrix out(current.rows, w.rows);
        for (std::size_t r = 0; r < current.rows; ++r) {
            for (std::size_t o = 0; o < w.rows; ++o) {
                double z = weights.biases[l][o];
                for (std::size_t c = 0; c < w.cols; ++c) {
                    z += w.at(o, c) * current.at(r, c);
                }
                out.at(r, o) = z;
            }
        }
        if (l + 1 < num_layers) {
            for (auto& v : out.data) {
                v = std::max(v, 0.0);
            }
        }
        current = std::move(out);
    }
    if (task == Task::Classification) {
        for (std::size_t r = 0; r < current.rows; ++r) {
            softmax_row(current.row(r), current.cols);
        }
    }
    return current;
}

} // namespace qbridge::train
