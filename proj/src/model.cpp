#include "gwloc/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gwloc {

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.size() < 2) throw InvalidInput("weight vector needs at least two entries");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i].sign() <= 0) throw InvalidInput("weights must be strictly positive");
        for (std::size_t j = 0; j < i; ++j)
            if (weights_[i] == weights_[j]) throw InvalidInput("weights must be pairwise distinct");
    }
}

WeightVector WeightVector::permuted(const std::vector<int>& perm) const {
    if (perm.size() != weights_.size()) throw InvalidInput("permutation size mismatch");
    std::vector<Rational> out(weights_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out.at(static_cast<std::size_t>(perm[i])) = weights_[i];
    return WeightVector(std::move(out));
}

WeightVector WeightVector::scaled(const Rational& factor) const {
    std::vector<Rational> out = weights_;
    for (auto& w : out) w *= factor;
    return WeightVector(std::move(out));
}

CITarget::CITarget(int ambient_dim, std::vector<int> degrees, int curve_degree,
                   std::vector<Insertion> insertions)
    : ambient_dim_(ambient_dim), degrees_(std::move(degrees)), curve_degree_(curve_degree),
      insertions_(std::move(insertions)) {
    if (ambient_dim_ < 1) throw InvalidInput("ambient dimension must be >= 1");
    if (curve_degree_ < 1) throw InvalidInput("curve degree must be >= 1");
    if (static_cast<int>(degrees_.size()) >= ambient_dim_)
        throw InvalidInput("number of bundle factors must be smaller than the ambient dimension");
    for (const auto& ins : insertions_)
        if (ins.power < 0 || ins.power > ambient_dim_)
            throw InvalidInput("insertion power " + std::to_string(ins.power) + " outside [0, " +
                               std::to_string(ambient_dim_) + "]");
}

CITarget CITarget::with_curve_degree(int d) const { return CITarget(ambient_dim_, degrees_, d, insertions_); }

std::string CITarget::canonical_key() const {
    auto degrees = degrees_;
    std::sort(degrees.begin(), degrees.end());
    std::vector<int> powers;
    for (const auto& ins : insertions_) powers.push_back(ins.power);
    std::sort(powers.begin(), powers.end());
    std::ostringstream os;
    os << "n=" << ambient_dim_ << ";a=";
    for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
    os << ";d=" << curve_degree_ << ";ins=";
    for (std::size_t i = 0; i < powers.size(); ++i) os << (i ? "," : "") << powers[i];
    return os.str();
}

bool is_calabi_yau(const CITarget& target) {
    const int sum = std::accumulate(target.degrees().begin(), target.degrees().end(), 0);
    return sum == target.ambient_dim() + 1;
}

bool positivity_check(const CITarget& target) {
    // H_2(P^n) = Z·[line]; the classes of area at most that of A are b·[line], 1 <= b <= d.
    for (int a : target.degrees())
        for (int b = 1; b <= target.curve_degree(); ++b)
            if (static_cast<long>(a) * b <= 0) return false;
    return true;
}

long expected_dimension(const DimensionQuery& q) {
    if (q.genus != 0 && q.genus != 1) throw InvalidInput("genus must be 0 or 1");
    if (q.marks < 0) throw InvalidInput("number of marked points must be nonnegative");
    long dim = 2L * (q.c1_dot_A + static_cast<long>(1 - q.genus) * (q.half_dim - 3) + q.marks);
    if (q.bundle_c1_dot_A) dim -= 2L * *q.bundle_c1_dot_A;
    return dim;
}

long moduli_dimension_genus0(int n, int d, int k) {
    return static_cast<long>(n + 1) * d + n - 3 + k;
}

long bundle_rank_genus0(const std::vector<int>& degrees, int d) {
    long rank = 0;
    for (int a : degrees) rank += static_cast<long>(a) * d + 1;
    return rank;
}

} // namespace gwloc
