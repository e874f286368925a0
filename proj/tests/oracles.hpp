#pragma once

// Test-only oracles, independent of the library's enumeration and evaluation paths.

#include "gwloc/fixed_graphs.hpp"
#include "gwloc/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

/// Counts fully labeled decorated trees for (n, d, k): vertex set {0..V-1}, any tree
/// (via Pruefer codes), any edge degrees summing to d, labels in 0..n distinct on
/// adjacent vertices, any placement of k distinguishable marks.
inline std::uint64_t labeled_decorated_trees(int n, int d, int k) {
    std::uint64_t total = 0;
    for (int vertex_count = 2; vertex_count <= d + 1; ++vertex_count) {
        const int edge_count = vertex_count - 1;
        std::vector<std::vector<std::pair<int, int>>> trees;
        if (vertex_count == 2) {
            trees.push_back({{0, 1}});
        } else {
            std::vector<int> code(static_cast<std::size_t>(vertex_count - 2), 0);
            while (true) {
                std::vector<int> deg(static_cast<std::size_t>(vertex_count), 1);
                for (int x : code) ++deg[static_cast<std::size_t>(x)];
                std::vector<std::pair<int, int>> edges;
                for (int x : code) {
                    int leaf = 0;
                    while (deg[static_cast<std::size_t>(leaf)] != 1) ++leaf;
                    edges.emplace_back(leaf, x);
                    --deg[static_cast<std::size_t>(leaf)];
                    --deg[static_cast<std::size_t>(x)];
                }
                std::vector<int> rest;
                for (int v = 0; v < vertex_count; ++v)
                    if (deg[static_cast<std::size_t>(v)] == 1) rest.push_back(v);
                edges.emplace_back(rest[0], rest[1]);
                trees.push_back(edges);
                int pos = static_cast<int>(code.size()) - 1;
                while (pos >= 0 && ++code[static_cast<std::size_t>(pos)] == vertex_count) code[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 0) break;
            }
        }
        // every degree vector in {1..d}^E summing to d
        std::uint64_t degree_vectors = 0;
        std::vector<int> degs(static_cast<std::size_t>(edge_count), 1);
        while (true) {
            if (std::accumulate(degs.begin(), degs.end(), 0) == d) ++degree_vectors;
            int pos = edge_count - 1;
            while (pos >= 0 && ++degs[static_cast<std::size_t>(pos)] > d) degs[static_cast<std::size_t>(pos--)] = 1;
            if (pos < 0) break;
        }
        std::uint64_t mark_placements = 1;
        for (int m = 0; m < k; ++m) mark_placements *= static_cast<std::uint64_t>(vertex_count);

        for (const auto& edges : trees) {
            std::uint64_t colorings = 0;
            std::vector<int> labels(static_cast<std::size_t>(vertex_count), 0);
            while (true) {
                bool ok = true;
                for (const auto& [a, b] : edges)
                    if (labels[static_cast<std::size_t>(a)] == labels[static_cast<std::size_t>(b)]) ok = false;
                if (ok) ++colorings;
                int pos = vertex_count - 1;
                while (pos >= 0 && ++labels[static_cast<std::size_t>(pos)] > n) labels[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 0) break;
            }
            total += colorings * degree_vectors * mark_placements;
        }
    }
    return total;
}

/// Automorphism count by trying every vertex permutation.
inline std::uint64_t brute_force_automorphisms(const gwloc::FixedGraph& g) {
    const int nv = static_cast<int>(g.vertices().size());
    std::map<std::pair<int, int>, int> edge_degree;
    for (const auto& e : g.edges()) {
        edge_degree[{e.a, e.b}] = e.degree;
        edge_degree[{e.b, e.a}] = e.degree;
    }
    std::vector<int> perm(static_cast<std::size_t>(nv));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v) {
            const auto& src = g.vertices()[static_cast<std::size_t>(v)];
            const auto& dst = g.vertices()[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
            ok = src.label == dst.label && src.marks == dst.marks;
        }
        for (const auto& e : g.edges()) {
            if (!ok) break;
            const auto it = edge_degree.find({perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)]});
            ok = it != edge_degree.end() && it->second == e.degree;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline std::uint64_t factorial(int m) {
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Closed-form degree-one sum written out independently of the library.
inline gwloc::Rational quintic_lines_sum(const std::vector<gwloc::Rational>& l) {
    gwloc::Rational total;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) {
            gwloc::Rational num(1);
            for (int c = 0; c <= 5; ++c) num *= gwloc::Rational(c) * l[i] + gwloc::Rational(5 - c) * l[j];
            gwloc::Rational den(1);
            for (std::size_t k = 0; k < l.size(); ++k)
                if (k != i && k != j) den *= (l[i] - l[k]) * (l[j] - l[k]);
            total += num / den;
        }
    return total;
}

} // namespace oracle
