#pragma once

#include "gwloc/fixed_graphs.hpp"
#include "gwloc/model.hpp"
#include "gwloc/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwloc {

/// A denominator of the fixed-point formula vanished at the chosen weights.
class DegenerateWeights : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Totals at different weight vectors disagree; indicates a bug, not bad input.
class WeightIndependenceFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Total insertion codimension differs from the dimension of the cut-down moduli space.
class DimensionMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kEngineVersion = "gwloc-1.0.0";

/// Sampled weights are integers in [1, kWeightBound].
inline constexpr std::uint64_t kWeightBound = 1u << 20;

/// Maximum number of resampling attempts within one seed lineage.
inline constexpr int kMaxWeightAttempts = 32;

/// Deterministic weights for (seed, attempt): n+1 distinct integers in [1, kWeightBound].
WeightVector sample_weights(std::uint64_t seed, int n, int attempt = 0);

/// Contribution of one fixed locus to the hyperplane-property integral of `target`.
/// Throws DegenerateWeights when a denominator vanishes.
Rational graph_contribution(const FixedGraph& g, const WeightVector& w, const CITarget& target);

/// Closed form of the degree-one integral as a sum over coordinate lines.
Rational lines_closed_form(int n, const std::vector<int>& degrees, const WeightVector& w);

struct SeedTotal {
    std::uint64_t seed = 0;
    int attempts = 1;  ///< weight vectors drawn before one was admissible
    Rational value;
};

struct EngineResult {
    Rational value;
    std::uint64_t graph_count = 0;
    std::vector<std::uint64_t> weight_seeds;
    std::vector<SeedTotal> per_seed;
    CITarget target;
};

/// Checks positivity, marks and the dimension constraint; throws InvalidInput or DimensionMismatch.
void validate_query(const CITarget& target);

/// Sum of graph contributions at the given weights. jobs <= 0 uses all hardware threads.
Rational sum_at_weights(const CITarget& target, const WeightVector& w, int jobs = 1);

/// Common value of all per-seed totals; throws WeightIndependenceFailure if any differ.
Rational certify_weight_independence(const std::vector<SeedTotal>& totals);

/// Graph sum certified weight-independent across at least two seeds.
EngineResult sum_invariant(const CITarget& target, const std::vector<std::uint64_t>& seeds, int jobs = 1);

/// Number of fixed-locus classes for the target's (n, d, k).
std::uint64_t count_graphs(int n, int d, int k);

} // namespace gwloc
