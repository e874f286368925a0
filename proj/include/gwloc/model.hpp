#pragma once

#include "gwloc/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwloc {

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Pullback of H^power along the evaluation map at one marked point.
struct Insertion {
    int power = 0;

    friend bool operator==(const Insertion&, const Insertion&) = default;
    friend auto operator<=>(const Insertion&, const Insertion&) = default;
};

/// Torus weights (λ_0, ..., λ_n): pairwise distinct and strictly positive.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> weights);

    int ambient_dim() const noexcept { return static_cast<int>(weights_.size()) - 1; }
    std::size_t size() const noexcept { return weights_.size(); }
    const Rational& operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<Rational>& values() const noexcept { return weights_; }

    /// Weights with index i moved to position perm[i].
    WeightVector permuted(const std::vector<int>& perm) const;
    WeightVector scaled(const Rational& factor) const;

private:
    std::vector<Rational> weights_;
};

/// A complete intersection Y ⊂ P^n cut out by a section of O(a_1) ⊕ ... ⊕ O(a_m),
/// together with a curve degree and point insertions.
///
/// Bundle degrees may be arbitrary integers so that positivity can be queried on
/// any split bundle; the engine refuses targets that are not positive.
class CITarget {
public:
    CITarget(int ambient_dim, std::vector<int> degrees, int curve_degree,
             std::vector<Insertion> insertions = {});

    int ambient_dim() const noexcept { return ambient_dim_; }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    int curve_degree() const noexcept { return curve_degree_; }
    const std::vector<Insertion>& insertions() const noexcept { return insertions_; }
    int marks() const noexcept { return static_cast<int>(insertions_.size()); }

    /// Same target with a different curve degree.
    CITarget with_curve_degree(int d) const;

    /// Order-independent text key, e.g. "n=4;a=5;d=2;ins=".
    std::string canonical_key() const;

    friend bool operator==(const CITarget&, const CITarget&) = default;

private:
    int ambient_dim_;
    std::vector<int> degrees_;
    int curve_degree_;
    std::vector<Insertion> insertions_;
};

struct DimensionQuery {
    int genus = 0;
    int marks = 0;
    int c1_dot_A = 0;
    int half_dim = 0;
    std::optional<int> bundle_c1_dot_A;
};

bool is_calabi_yau(const CITarget& target);

/// Every O(a_s) pairs positively with every class b·[line], 1 <= b <= d.
bool positivity_check(const CITarget& target);

/// Real expected dimension 2(<c1(TX),A> + (1-g)(n-3) + k), minus 2<c1(L),A>
/// when a bundle is supplied. Throws InvalidInput for genus outside {0, 1}.
long expected_dimension(const DimensionQuery& q);

/// Complex dimension of M̄_{0,k}(P^n, d).
long moduli_dimension_genus0(int n, int d, int k);

/// Complex rank of π_* ev^* (⊕ O(a_s)) over M̄_{0,k}(P^n, d).
long bundle_rank_genus0(const std::vector<int>& degrees, int d);

} // namespace gwloc
