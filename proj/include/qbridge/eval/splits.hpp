#pragma once

#include <cstdint>
#include <vector>

#include "qbridge/eval/dataset.hpp"

namespace qbridge::eval {

class TooFewSamplesPerStratum : public Error {
  public:
    using Error::Error;
};

struct SplitMode {
    enum class Kind { KFold, StratifiedHoldout };
    Kind kind = Kind::KFold;
    int k = 5;

    static SplitMode kfold(int k) { return {Kind::KFold, k}; }
    static SplitMode stratified_holdout() { return {Kind::StratifiedHoldout, 0}; }
};

struct SplitPlan {
    SplitMode::Kind kind = SplitMode::Kind::KFold;
    // KFold: validation indices per fold; training is the complement.
    std::vector<std::vector<std::size_t>> folds;
    // StratifiedHoldout: 80/10/10.
    std::vector<std::size_t> train;
    std::vector<std::size_t> validation;
    std::vector<std::size_t> test;

    std::vector<std::size_t> train_indices_for_fold(std::size_t fold) const;
};

// Stratified splitting: classification strata are the labels, regression
// strata are target deciles. KFold deals each shuffled stratum round-robin
// across k disjoint validation folds that cover every index exactly once;
// the holdout keeps per-stratum proportions within one sample of 80/10/10.
SplitPlan split_folds(const Dataset& dataset, const SplitMode& mode, std::uint64_t seed);

} // namespace qbridge::eval
