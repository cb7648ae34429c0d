#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "zera/domain.hpp"

namespace zera::scoring {

// Importance-weighted aggregate of the principle scores: sum of weight*score
// over the critique's entries. In [1,10] for a validated critique.
double unified_score(const CritiqueTuple& critique);

struct ExemplarSelection {
    // Positions into the input list. top is ordered best-first, bottom
    // worst-first; ties break toward the lower position.
    std::vector<std::size_t> top;
    std::vector<std::size_t> bottom;
};

// Top-3 plus bottom-2 (drawn from the non-top remainder, so the sets are
// disjoint). Requires at least 5 evaluations; throws TooFewSamples below that.
ExemplarSelection select_exemplars(const std::vector<SampleEvaluation>& evals);

// Same rule with top/bottom truncated to what is available; used when an
// iteration was recorded with fewer than 5 surviving evaluations.
ExemplarSelection select_exemplars_lenient(const std::vector<SampleEvaluation>& evals);

struct IterationAggregates {
    double mean_unified = 0.0;
    double top3_mean = 0.0;  // mean of the 3 largest unified scores (fewer if unavailable)
    std::array<double, kPrincipleCount> per_principle_score_means{};
    std::array<double, kPrincipleCount> per_principle_weight_means{};
};

IterationAggregates aggregate_iteration(const std::vector<SampleEvaluation>& evals);

}  // namespace zera::scoring
