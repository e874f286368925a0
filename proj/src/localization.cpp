#include "gwloc/localization.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace gwloc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

Rational factorial(int m) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return Rational(f);
}

// Euler class of H^0 of ⊕ O(a_s) pulled back along a degree-de cover of the line
// through fixed points i and j: one factor per section weight.
Rational edge_bundle_factor(const std::vector<Rational>& lambda, const std::vector<int>& degrees, int i, int j,
                            int de) {
    Rational out(1);
    const Rational inv_de(1, de);
    for (int a : degrees) {
        const int top = a * de;
        for (int c = 0; c <= top; ++c)
            out *= (Rational(c) * lambda[idx(i)] + Rational(top - c) * lambda[idx(j)]) * inv_de;
    }
    return out;
}

// Inverse equivariant Euler class of the moving part of the deformation space along
// a degree-de edge joining fixed points i and j (nodes and vertex terms excluded).
Rational edge_normal_factor(const std::vector<Rational>& lambda, int i, int j, int de) {
    const Rational diff = lambda[idx(i)] - lambda[idx(j)];
    const Rational fact = factorial(de);
    Rational out = Rational(de).pow(2 * de) / (fact * fact * diff.pow(2 * de));
    if (de % 2 == 1) out = -out;
    const Rational rde(de);
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
        for (int c = 0; c <= de; ++c) {
            const Rational denom = Rational(c) * lambda[idx(i)] + Rational(de - c) * lambda[idx(j)] - rde * lambda[k];
            if (denom.is_zero()) {
                std::ostringstream os;
                os << "edge factor vanishes for (i=" << i << ", j=" << j << ", k=" << k << ", c=" << c
                   << ", degree=" << de << ")";
                throw DegenerateWeights(os.str());
            }
            out *= rde / denom;
        }
    }
    return out;
}

Rational tangent_euler(const std::vector<Rational>& lambda, int i) {
    Rational out(1);
    for (std::size_t k = 0; k < lambda.size(); ++k)
        if (static_cast<int>(k) != i) out *= lambda[idx(i)] - lambda[k];
    return out;
}

Rational bundle_vertex_weight(const std::vector<Rational>& lambda, const std::vector<int>& degrees, int i) {
    Rational out(1);
    for (int a : degrees) out *= Rational(a) * lambda[idx(i)];
    return out;
}

struct Flag {
    int other_label;
    int degree;
};

// Mark-independent part of a vertex factor plus the flag sum Σ ω_F^{-1}.
struct VertexParts {
    Rational base;
    Rational flag_sum;
    int edge_valence = 0;
};

VertexParts vertex_parts(const std::vector<Rational>& lambda, const std::vector<int>& degrees, int label,
                         const std::vector<Flag>& flags, const Rational& tangent, const Rational& bundle_vertex) {
    VertexParts out;
    out.edge_valence = static_cast<int>(flags.size());
    Rational omega_product(1);
    for (const auto& f : flags) {
        const Rational omega = (lambda[idx(label)] - lambda[idx(f.other_label)]) / Rational(f.degree);
        omega_product *= omega;
        out.flag_sum += omega.inverse();
    }
    out.base = tangent.pow(out.edge_valence - 1) / omega_product;
    if (!degrees.empty()) out.base *= bundle_vertex.pow(1 - out.edge_valence);
    return out;
}

Rational flag_sum_power(const VertexParts& parts, int marks) {
    const int exponent = parts.edge_valence + marks - 3;
    if (parts.flag_sum.is_zero()) {
        if (exponent < 0) throw DegenerateWeights("vertex flag sum vanishes with a negative exponent");
        return exponent == 0 ? Rational(1) : Rational(0);
    }
    return parts.flag_sum.pow(exponent);
}

/// Per-weight-vector tables of every edge and vertex factor for one target.
class WeightTables {
public:
    WeightTables(const WeightVector& w, const CITarget& target)
        : lambda_(w.values()), labels_(static_cast<int>(lambda_.size())), max_degree_(target.curve_degree()) {
        const auto& degrees = target.degrees();
        edge_.resize(idx(labels_ * labels_ * (max_degree_ + 1)));
        for (int i = 0; i < labels_; ++i)
            for (int j = i + 1; j < labels_; ++j)
                for (int de = 1; de <= max_degree_; ++de) {
                    Rational f = edge_bundle_factor(lambda_, degrees, i, j, de) * edge_normal_factor(lambda_, i, j, de) /
                                 Rational(de);
                    edge_[slot(j, i, de)] = f;
                    edge_[slot(i, j, de)] = std::move(f);
                }
        for (int i = 0; i < labels_; ++i) {
            tangent_.push_back(tangent_euler(lambda_, i));
            bundle_vertex_.push_back(bundle_vertex_weight(lambda_, degrees, i));
        }
    }

    const std::vector<Rational>& lambda() const { return lambda_; }
    const Rational& edge(int i, int j, int de) const { return edge_[slot(i, j, de)]; }
    const Rational& tangent(int i) const { return tangent_[idx(i)]; }
    const Rational& bundle_vertex(int i) const { return bundle_vertex_[idx(i)]; }

private:
    std::size_t slot(int i, int j, int de) const { return idx((i * labels_ + j) * (max_degree_ + 1) + de); }

    std::vector<Rational> lambda_;
    int labels_;
    int max_degree_;
    std::vector<Rational> edge_;
    std::vector<Rational> tangent_;
    std::vector<Rational> bundle_vertex_;
};

std::vector<std::vector<Flag>> flags_of(int vertex_count, const std::vector<int>& labels,
                                        const std::vector<GraphEdge>& edges) {
    std::vector<std::vector<Flag>> flags(idx(vertex_count));
    for (const auto& e : edges) {
        flags[idx(e.a)].push_back({labels[idx(e.b)], e.degree});
        flags[idx(e.b)].push_back({labels[idx(e.a)], e.degree});
    }
    return flags;
}

// Σ over markings of one unmarked family, accumulating the number of classes visited.
Rational family_sum(const GraphFamily& fam, const WeightTables& tables, const CITarget& target,
                    std::uint64_t& graph_count) {
    const auto& lambda = tables.lambda();
    const int nv = fam.vertex_count();
    const int k = target.marks();
    const auto flags = flags_of(nv, fam.labels(), fam.edges());

    Rational base(1);
    for (const auto& e : fam.edges())
        base *= tables.edge(fam.labels()[idx(e.a)], fam.labels()[idx(e.b)], e.degree);

    // flag_power[v][m]: (Σ ω_F^{-1})^{t(v)-3} with m marks at v; computed on demand.
    std::vector<VertexParts> parts;
    std::vector<std::vector<std::optional<Rational>>> flag_power(idx(nv));
    for (int v = 0; v < nv; ++v) {
        const int label = fam.labels()[idx(v)];
        parts.push_back(vertex_parts(lambda, target.degrees(), label, flags[idx(v)], tables.tangent(label),
                                     tables.bundle_vertex(label)));
        base *= parts.back().base;
        flag_power[idx(v)].resize(idx(k + 1));
    }

    int max_power = 0;
    for (const auto& ins : target.insertions()) max_power += ins.power;
    std::vector<std::vector<Rational>> lambda_power(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        lambda_power[i].push_back(Rational(1));
        for (int p = 1; p <= max_power; ++p) lambda_power[i].push_back(lambda_power[i].back() * lambda[i]);
    }

    // Markings with the same per-vertex (mark count, insertion power) profile contribute
    // the same vertex factors; accumulate Σ |G|/stabilizer per profile in integers.
    const std::uint64_t group_order = fam.automorphisms().size();
    std::map<std::vector<int>, std::uint64_t> weight_by_profile;
    std::vector<int> profile(idx(2 * nv));
    fam.for_each_marking(k, [&](const std::vector<int>& assignment, std::uint64_t stabilizer) {
        ++graph_count;
        std::fill(profile.begin(), profile.end(), 0);
        for (std::size_t l = 0; l < assignment.size(); ++l) {
            ++profile[idx(2 * assignment[l])];
            profile[idx(2 * assignment[l] + 1)] += target.insertions()[l].power;
        }
        weight_by_profile[profile] += group_order / stabilizer;
    });

    Rational total;
    for (const auto& [prof, weight] : weight_by_profile) {
        Rational term(1);
        for (int v = 0; v < nv; ++v) {
            const int marks_here = prof[idx(2 * v)];
            const int power_here = prof[idx(2 * v + 1)];
            auto& cached = flag_power[idx(v)][idx(marks_here)];
            if (!cached) cached = flag_sum_power(parts[idx(v)], marks_here);
            term *= *cached;
            if (power_here > 0) term *= lambda_power[idx(fam.labels()[idx(v)])][idx(power_here)];
        }
        total += term * Rational(static_cast<std::int64_t>(weight));
    }
    total /= Rational(static_cast<std::int64_t>(group_order));
    return total * base;
}

Rational sum_families(const std::vector<GraphFamily>& families, const CITarget& target, const WeightVector& w,
                      int jobs, std::uint64_t& graph_count) {
    const WeightTables tables(w, target);
    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1u, std::thread::hardware_concurrency());
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(families.size())));

    if (workers == 1) {
        Rational total;
        graph_count = 0;
        for (const auto& fam : families) total += family_sum(fam, tables, target, graph_count);
        return total;
    }

    std::atomic<std::size_t> next{0};
    std::vector<Rational> partial(workers);
    std::vector<std::uint64_t> counts(workers, 0);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t f = next++; f < families.size(); f = next++)
                    partial[t] += family_sum(families[f], tables, target, counts[t]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = families.size();
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    Rational total;
    for (const auto& p : partial) total += p;
    graph_count = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    return total;
}

} // namespace

WeightVector sample_weights(std::uint64_t seed, int n, int attempt) {
    if (n < 1) throw InvalidInput("sample_weights requires n >= 1");
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(n)};
    std::mt19937_64 rng(seq);
    std::set<std::uint64_t> seen;
    std::vector<Rational> weights;
    while (static_cast<int>(weights.size()) < n + 1) {
        const std::uint64_t value = 1 + rng() % kWeightBound;
        if (seen.insert(value).second) weights.emplace_back(static_cast<std::int64_t>(value));
    }
    return WeightVector(std::move(weights));
}

Rational graph_contribution(const FixedGraph& g, const WeightVector& w, const CITarget& target) {
    const auto& lambda = w.values();
    if (w.ambient_dim() != target.ambient_dim()) throw InvalidInput("weight vector size does not match target");
    const int k = target.marks();
    const auto problems = g.invariant_violations(target.ambient_dim(), g.total_degree(), k);
    if (!problems.empty()) throw InvalidInput("invalid fixed graph: " + problems.front());

    std::vector<int> labels;
    for (const auto& v : g.vertices()) labels.push_back(v.label);
    const int nv = static_cast<int>(labels.size());
    const auto flags = flags_of(nv, labels, g.edges());

    Rational value(1);
    std::int64_t cover_degrees = 1;
    for (const auto& e : g.edges()) {
        const int i = labels[idx(e.a)];
        const int j = labels[idx(e.b)];
        value *= edge_bundle_factor(lambda, target.degrees(), i, j, e.degree);
        value *= edge_normal_factor(lambda, i, j, e.degree);
        cover_degrees *= e.degree;
    }
    for (int v = 0; v < nv; ++v) {
        const int label = labels[idx(v)];
        const auto& vertex = g.vertices()[idx(v)];
        const auto parts = vertex_parts(lambda, target.degrees(), label, flags[idx(v)], tangent_euler(lambda, label),
                                        bundle_vertex_weight(lambda, target.degrees(), label));
        value *= parts.base * flag_sum_power(parts, static_cast<int>(vertex.marks.size()));
        for (int m : vertex.marks) value *= lambda[idx(label)].pow(target.insertions()[idx(m - 1)].power);
    }
    return value / Rational(static_cast<std::int64_t>(g.aut_order()) * cover_degrees);
}

Rational lines_closed_form(int n, const std::vector<int>& degrees, const WeightVector& w) {
    if (w.ambient_dim() != n) throw InvalidInput("weight vector size does not match ambient dimension");
    const auto& lambda = w.values();
    Rational total;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rational numerator(1);
            for (int a : degrees)
                for (int c = 0; c <= a; ++c)
                    numerator *= Rational(c) * lambda[idx(i)] + Rational(a - c) * lambda[idx(j)];
            Rational denominator(1);
            for (int k = 0; k <= n; ++k)
                if (k != i && k != j) denominator *= (lambda[idx(i)] - lambda[idx(k)]) * (lambda[idx(j)] - lambda[idx(k)]);
            if (denominator.is_zero()) throw DegenerateWeights("coincident weights in closed form");
            total += numerator / denominator;
        }
    return total;
}

void validate_query(const CITarget& target) {
    if (!positivity_check(target)) throw InvalidInput("bundle is not positive on curves of degree <= d");
    const long cut_down = moduli_dimension_genus0(target.ambient_dim(), target.curve_degree(), target.marks()) -
                          bundle_rank_genus0(target.degrees(), target.curve_degree());
    long codim = 0;
    for (const auto& ins : target.insertions()) codim += ins.power;
    if (codim != cut_down) {
        std::ostringstream os;
        os << "insertions have total codimension " << codim << " but the cut-down moduli space has dimension "
           << cut_down;
        throw DimensionMismatch(os.str());
    }
}

Rational sum_at_weights(const CITarget& target, const WeightVector& w, int jobs) {
    if (w.ambient_dim() != target.ambient_dim()) throw InvalidInput("weight vector size does not match target");
    std::uint64_t count = 0;
    return sum_families(enumerate_families(target.ambient_dim(), target.curve_degree()), target, w, jobs, count);
}

Rational certify_weight_independence(const std::vector<SeedTotal>& totals) {
    if (totals.empty()) throw InvalidInput("no per-seed totals to certify");
    for (const auto& s : totals)
        if (s.value != totals.front().value) {
            std::ostringstream os;
            os << "graph sum depends on weights:";
            for (const auto& t : totals) os << " seed " << t.seed << " -> " << t.value << ";";
            throw WeightIndependenceFailure(os.str());
        }
    return totals.front().value;
}

EngineResult sum_invariant(const CITarget& target, const std::vector<std::uint64_t>& seeds, int jobs) {
    if (seeds.size() < 2) throw InvalidInput("at least two weight seeds are required");
    if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size())
        throw InvalidInput("weight seeds must be distinct");
    validate_query(target);

    const auto families = enumerate_families(target.ambient_dim(), target.curve_degree());
    EngineResult result{Rational(), 0, seeds, {}, target};
    for (const auto seed : seeds) {
        bool done = false;
        for (int attempt = 0; attempt < kMaxWeightAttempts && !done; ++attempt) {
            try {
                std::uint64_t count = 0;
                Rational total = sum_families(families, target, sample_weights(seed, target.ambient_dim(), attempt),
                                              jobs, count);
                result.graph_count = count;
                result.per_seed.push_back({seed, attempt + 1, std::move(total)});
                done = true;
            } catch (const DegenerateWeights&) {
            }
        }
        if (!done)
            throw DegenerateWeights("no admissible weights after " + std::to_string(kMaxWeightAttempts) +
                                    " attempts for seed " + std::to_string(seed));
    }
    result.value = certify_weight_independence(result.per_seed);
    return result;
}

std::uint64_t count_graphs(int n, int d, int k) {
    std::uint64_t count = 0;
    for (const auto& fam : enumerate_families(n, d))
        fam.for_each_marking(k, [&](const std::vector<int>&, std::uint64_t) { ++count; });
    return count;
}

} // namespace gwloc
