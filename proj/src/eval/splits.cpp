#include "qbridge/eval/splits.hpp"

#include <algorithm>
#include <numeric>

#include "qbridge/rng.hpp"

namespace qbridge::eval {

namespace {

// Indices grouped by stratum: label for classification, target decile for
// regression.
std::vector<std::vector<std::size_t>> strata_for(const Dataset& dataset) {
    const std::size_t n = dataset.size();
    std::vector<std::vector<std::size_t>> strata;
    if (dataset.task == Task::Classification) {
        strata.resize(dataset.num_classes());
        for (std::size_t i = 0; i < n; ++i) {
            strata[dataset.labels[i]].push_back(i);
        }
    } else {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return dataset.y[a] < dataset.y[b];
        });
        const std::size_t buckets = std::min<std::size_t>(10, n);
        strata.resize(buckets);
        for (std::size_t rank = 0; rank < n; ++rank) {
            strata[rank * buckets / n].push_back(order[rank]);
        }
    }
    return strata;
}

void shuffle_indices(std::vector<std::size_t>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[rng.uniform_index(i)]);
    }
}

} // namespace

std::vector<std::size_t> SplitPlan::train_indices_for_fold(std::size_t fold) const {
    std::vector<std::size_t> train;
    for (std::size_t f = 0; f < folds.size(); ++f) {
        if (f == fold) {
            continue;
        }
        train.insert(train.end(), folds[f].begin(), folds[f].end());
    }
    std::sort(train.begin(), train.end());
    return train;
}

SplitPlan split_folds(const Dataset& dataset, const SplitMode& mode, std::uint64_t seed) {
    SplitPlan plan;
    plan.kind = mode.kind;
    Rng rng(Rng::split(seed, 17));
    auto strata = strata_for(dataset);

    if (mode.kind == SplitMode::Kind::KFold) {
        if (mode.k < 2) {
            throw Error("kfold needs k >= 2");
        }
        if (dataset.size() < static_cast<std::size_t>(mode.k)) {
            throw TooFewSamplesPerStratum("fewer samples than folds");
        }
        plan.folds.assign(mode.k, {});
        std::size_t next_fold = 0;
        for (auto& stratum : strata) {
            shuffle_indices(stratum, rng);
            for (std::size_t i = 0; i < stratum.size(); ++i) {
                plan.folds[next_fold].push_back(stratum[i]);
                next_fold = (next_fold + 1) % mode.k;
            }
        }
        for (auto& fold : plan.folds) {
            std::sort(fold.begin(), fold.end());
        }
        return plan;
    }

    // Holdout: floor allocation per stratum keeps each part within one
    // sample of the global 80/10/10 share.
    if (dataset.task == Task::Classification) {
        for (const auto& stratum : strata) {
            if (stratum.size() < 10) {
                throw TooFewSamplesPerStratum(
                    "a class has fewer than 10 samples; cannot hold out 10% slices");
            }
        }
    }
    for (auto& stratum : strata) {
        shuffle_indices(stratum, rng);
        const std::size_t n = stratum.size();
        const std::size_t train_end = (n * 8) / 10;
        const std::size_t val_end = (n * 9) / 10;
        for (std::size_t i = 0; i < n; ++i) {
            if (i < train_end) {
                plan.train.push_back(stratum[i]);
            } else if (i < val_end) {
                plan.validation.push_back(stratum[i]);
            } else {
                plan.test.push_back(stratum[i]);
            }
        }
    }
    std::sort(plan.train.begin(), plan.train.end());
    std::sort(plan.validation.begin(), plan.validation.end());
    std::sort(plan.test.begin(), plan.test.end());
    return plan;
}

} // namespace qbridge::eval
