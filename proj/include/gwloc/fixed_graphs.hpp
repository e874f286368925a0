#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace gwloc {

struct GraphVertex {
    int label = 0;           ///< torus-fixed point of P^n, in 0..n
    std::vector<int> marks;  ///< 1-based mark indices, ascending

    friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

struct GraphEdge {
    int a = 0;
    int b = 0;
    int degree = 1;

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Decorated tree indexing one torus-fixed locus of M̄_{0,k}(P^n, d).
class FixedGraph {
public:
    FixedGraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges, std::uint64_t aut_order);

    const std::vector<GraphVertex>& vertices() const noexcept { return vertices_; }
    const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
    std::uint64_t aut_order() const noexcept { return aut_order_; }

    int total_degree() const;
    int mark_count() const;
    /// Number of edges incident to vertex v.
    int edge_valence(int v) const;

    /// Human-readable list of violated invariants for a (n, d, k) query; empty when valid.
    std::vector<std::string> invariant_violations(int n, int d, int k) const;

private:
    std::vector<GraphVertex> vertices_;
    std::vector<GraphEdge> edges_;
    std::uint64_t aut_order_;
};

/// Isomorphism-invariant encoding of a decorated tree (labels, edge degrees, marks).
///
/// Layout: `<tree code>|<mark string>` where the tree code is a bracketed AHU code
/// rooted at the tree center and the mark string holds, for marks 1..k, the canonical
/// vertex position as the character '0' + position, minimized over the automorphisms
/// of the unmarked tree. The tree code never contains '|', so encodings sharing an
/// unmarked class sort contiguously.
std::string canonical_form(const FixedGraph& g);

/// Order of the decoration-preserving automorphism group, read off the stabilizer of
/// the canonical mark string. Ignores the stored aut_order.
std::uint64_t automorphism_order(const FixedGraph& g);

/// An isomorphism class of unmarked decorated trees, in canonical vertex numbering,
/// together with its automorphism group.
class GraphFamily {
public:
    const std::string& code() const noexcept { return code_; }
    const std::vector<int>& labels() const noexcept { return labels_; }
    const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
    int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
    /// Automorphisms as vertex permutations; entry 0 is the identity.
    const std::vector<std::vector<int>>& automorphisms() const noexcept { return automorphisms_; }

    /// Calls visit(assignment, stabilizer_order) for every orbit-minimal mark assignment
    /// (assignment[l] = vertex of mark l+1), in ascending lexicographic order.
    void for_each_marking(int k, const std::function<void(const std::vector<int>&, std::uint64_t)>& visit) const;

    FixedGraph make_graph(const std::vector<int>& assignment, std::uint64_t aut_order) const;
    std::string marked_code(const std::vector<int>& assignment) const;

    /// Canonical family of an arbitrary unmarked decorated tree. When position_out is
    /// given it receives the canonical position of each input vertex.
    static GraphFamily from_tree(const std::vector<int>& labels, const std::vector<GraphEdge>& edges,
                                 std::vector<int>* position_out = nullptr);

private:
    GraphFamily() = default;

    std::string code_;
    std::vector<int> labels_;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<int>> automorphisms_;
};

/// Unmarked classes for degree-d genus-zero maps to P^n, sorted by code.
std::vector<GraphFamily> enumerate_families(int n, int d);

/// Streams one representative per isomorphism class, sorted by canonical_form.
void for_each_graph(int n, int d, int k, const std::function<void(const FixedGraph&)>& visit);

std::vector<FixedGraph> enumerate_graphs(int n, int d, int k);

/// Debug dump: `<canonical form>\t<aut_order>` per line.
void write_graph_dump(std::ostream& os, int n, int d, int k);

} // namespace gwloc
