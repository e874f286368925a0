#include "gwloc/fixed_graphs.hpp"

#include "gwloc/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <tuple>
#include <utility>

namespace gwloc {

namespace {

struct Adjacent {
    int vertex;
    int degree;
};

using Adjacency = std::vector<std::vector<Adjacent>>;

Adjacency build_adjacency(int vertex_count, const std::vector<GraphEdge>& edges) {
    Adjacency adj(static_cast<std::size_t>(vertex_count));
    for (const auto& e : edges) {
        adj.at(static_cast<std::size_t>(e.a)).push_back({e.b, e.degree});
        adj.at(static_cast<std::size_t>(e.b)).push_back({e.a, e.degree});
    }
    return adj;
}

struct Rooted {
    std::string code;
    std::vector<int> order;  // preorder, children sorted by code
};

Rooted rooted_code(int v, int parent, const Adjacency& adj, const std::vector<int>& labels) {
    std::vector<std::pair<std::string, Rooted>> children;
    for (const auto& [c, deg] : adj[static_cast<std::size_t>(v)]) {
        if (c == parent) continue;
        Rooted sub = rooted_code(c, v, adj, labels);
        std::string key = ":" + std::to_string(deg) + sub.code;
        children.emplace_back(std::move(key), std::move(sub));
    }
    std::sort(children.begin(), children.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Rooted out;
    out.code = "(" + std::to_string(labels[static_cast<std::size_t>(v)]);
    out.order.push_back(v);
    for (auto& [key, sub] : children) {
        out.code += key;
        out.order.insert(out.order.end(), sub.order.begin(), sub.order.end());
    }
    out.code += ")";
    return out;
}

std::vector<int> tree_centers(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size());
    if (n <= 2) {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> valence(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        valence[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (valence[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (const auto& [u, deg] : adj[static_cast<std::size_t>(v)])
                if (--valence[static_cast<std::size_t>(u)] == 1) next.push_back(u);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

Rooted tree_code(const std::vector<int>& labels, const std::vector<GraphEdge>& edges) {
    const Adjacency adj = build_adjacency(static_cast<int>(labels.size()), edges);
    const auto centers = tree_centers(adj);
    if (centers.size() == 1) return rooted_code(centers[0], -1, adj, labels);

    const int c1 = centers[0];
    const int c2 = centers[1];
    int central_degree = 0;
    for (const auto& [u, deg] : adj[static_cast<std::size_t>(c1)])
        if (u == c2) central_degree = deg;
    Rooted a = rooted_code(c1, c2, adj, labels);
    Rooted b = rooted_code(c2, c1, adj, labels);
    const std::string mid = ":" + std::to_string(central_degree);
    std::string ab = "[" + a.code + mid + b.code + "]";
    std::string ba = "[" + b.code + mid + a.code + "]";
    Rooted out;
    if (ba < ab) {
        std::swap(a, b);
        ab = std::move(ba);
    }
    out.code = std::move(ab);
    out.order = std::move(a.order);
    out.order.insert(out.order.end(), b.order.begin(), b.order.end());
    return out;
}

// All label- and degree-preserving vertex permutations of a tree whose vertices are
// numbered in a preorder from vertex 0, so every vertex i > 0 has its parent before it.
std::vector<std::vector<int>> tree_automorphisms(const std::vector<int>& labels,
                                                 const std::vector<GraphEdge>& edges) {
    const int n = static_cast<int>(labels.size());
    const Adjacency adj = build_adjacency(n, edges);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> parent_degree(static_cast<std::size_t>(n), 0);
    for (int v = 1; v < n; ++v)
        for (const auto& [u, deg] : adj[static_cast<std::size_t>(v)])
            if (u < v) {
                parent[static_cast<std::size_t>(v)] = u;
                parent_degree[static_cast<std::size_t>(v)] = deg;
            }

    std::vector<std::vector<int>> result;
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto compatible = [&](int v, int w) {
        return labels[static_cast<std::size_t>(v)] == labels[static_cast<std::size_t>(w)] &&
               adj[static_cast<std::size_t>(v)].size() == adj[static_cast<std::size_t>(w)].size() &&
               !used[static_cast<std::size_t>(w)];
    };
    std::function<void(int)> extend = [&](int v) {
        if (v == n) {
            result.push_back(image);
            return;
        }
        auto assign = [&](int w) {
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            extend(v + 1);
            used[static_cast<std::size_t>(w)] = 0;
        };
        if (v == 0) {
            for (int w = 0; w < n; ++w)
                if (compatible(0, w)) assign(w);
            return;
        }
        const int pimg = image[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        for (const auto& [w, deg] : adj[static_cast<std::size_t>(pimg)])
            if (deg == parent_degree[static_cast<std::size_t>(v)] && compatible(v, w)) assign(w);
    };
    extend(0);
    std::sort(result.begin(), result.end());
    return result;
}

bool lex_less_image(const std::vector<int>& perm, const std::vector<int>& assignment, bool& equal) {
    for (std::size_t l = 0; l < assignment.size(); ++l) {
        const int mapped = perm[static_cast<std::size_t>(assignment[l])];
        if (mapped != assignment[l]) {
            equal = false;
            return mapped < assignment[l];
        }
    }
    equal = true;
    return false;
}

// Free tree shapes on `vertex_count` vertices, one per isomorphism class.
std::vector<std::vector<GraphEdge>> tree_shapes(int vertex_count) {
    std::vector<std::vector<GraphEdge>> shapes;
    if (vertex_count == 2) {
        shapes.push_back({{0, 1, 1}});
        return shapes;
    }
    const int len = vertex_count - 2;
    std::vector<int> pruefer(static_cast<std::size_t>(len), 0);
    std::set<std::string> seen;
    const std::vector<int> blank(static_cast<std::size_t>(vertex_count), 0);
    while (true) {
        std::vector<int> valence(static_cast<std::size_t>(vertex_count), 1);
        for (int x : pruefer) ++valence[static_cast<std::size_t>(x)];
        std::vector<GraphEdge> edges;
        for (int x : pruefer) {
            int leaf = 0;
            while (valence[static_cast<std::size_t>(leaf)] != 1) ++leaf;
            edges.push_back({leaf, x, 1});
            --valence[static_cast<std::size_t>(leaf)];
            --valence[static_cast<std::size_t>(x)];
        }
        int u = -1;
        for (int v = 0; v < vertex_count; ++v)
            if (valence[static_cast<std::size_t>(v)] == 1) {
                if (u < 0) u = v;
                else edges.push_back({u, v, 1});
            }
        if (seen.insert(tree_code(blank, edges).code).second) shapes.push_back(std::move(edges));

        int pos = len - 1;
        while (pos >= 0 && ++pruefer[static_cast<std::size_t>(pos)] == vertex_count) pruefer[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return shapes;
}

void compositions(int total, int parts, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& visit) {
    if (parts == 1) {
        current.push_back(total);
        visit(current);
        current.pop_back();
        return;
    }
    for (int first = 1; first <= total - (parts - 1); ++first) {
        current.push_back(first);
        compositions(total - first, parts - 1, current, visit);
        current.pop_back();
    }
}

} // namespace

FixedGraph::FixedGraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges, std::uint64_t aut_order)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), aut_order_(aut_order) {
    for (auto& v : vertices_) std::sort(v.marks.begin(), v.marks.end());
}

int FixedGraph::total_degree() const {
    int sum = 0;
    for (const auto& e : edges_) sum += e.degree;
    return sum;
}

int FixedGraph::mark_count() const {
    int k = 0;
    for (const auto& v : vertices_) k += static_cast<int>(v.marks.size());
    return k;
}

int FixedGraph::edge_valence(int v) const {
    int count = 0;
    for (const auto& e : edges_) count += (e.a == v) + (e.b == v);
    return count;
}

std::vector<std::string> FixedGraph::invariant_violations(int n, int d, int k) const {
    std::vector<std::string> out;
    const int nv = static_cast<int>(vertices_.size());
    if (nv == 0) out.emplace_back("no vertices");
    if (static_cast<int>(edges_.size()) != nv - 1) out.emplace_back("edge count is not vertex count - 1");
    for (const auto& v : vertices_)
        if (v.label < 0 || v.label > n) out.emplace_back("vertex label out of range");
    for (const auto& e : edges_) {
        if (e.a < 0 || e.a >= nv || e.b < 0 || e.b >= nv) {
            out.emplace_back("edge endpoint out of range");
            return out;
        }
        if (e.degree < 1) out.emplace_back("edge degree < 1");
        if (vertices_[static_cast<std::size_t>(e.a)].label == vertices_[static_cast<std::size_t>(e.b)].label)
            out.emplace_back("adjacent vertices share a label");
    }
    if (nv > 0) {
        // connectivity by union-find
        std::vector<int> root(static_cast<std::size_t>(nv));
        std::iota(root.begin(), root.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return root[static_cast<std::size_t>(x)] == x ? x : root[static_cast<std::size_t>(x)] = find(root[static_cast<std::size_t>(x)]);
        };
        for (const auto& e : edges_) root[static_cast<std::size_t>(find(e.a))] = find(e.b);
        for (int v = 1; v < nv; ++v)
            if (find(v) != find(0)) {
                out.emplace_back("graph is not connected");
                break;
            }
    }
    if (total_degree() != d) out.emplace_back("edge degrees do not sum to d");
    std::vector<int> seen(static_cast<std::size_t>(k) + 1, 0);
    bool marks_ok = true;
    for (const auto& v : vertices_)
        for (int m : v.marks) {
            if (m < 1 || m > k) marks_ok = false;
            else ++seen[static_cast<std::size_t>(m)];
        }
    for (int m = 1; m <= k; ++m)
        if (seen[static_cast<std::size_t>(m)] != 1) marks_ok = false;
    if (!marks_ok) out.emplace_back("marks do not partition {1..k}");
    if (aut_order_ < 1) out.emplace_back("aut_order < 1");
    return out;
}

void GraphFamily::for_each_marking(int k, const std::function<void(const std::vector<int>&, std::uint64_t)>& visit) const {
    std::vector<int> assignment(static_cast<std::size_t>(k), 0);
    const int nv = vertex_count();
    while (true) {
        bool minimal = true;
        std::uint64_t stabilizer = 0;
        for (const auto& g : automorphisms_) {
            bool equal = false;
            if (lex_less_image(g, assignment, equal)) {
                minimal = false;
                break;
            }
            if (equal) ++stabilizer;
        }
        if (minimal) visit(assignment, stabilizer);

        int pos = k - 1;
        while (pos >= 0 && ++assignment[static_cast<std::size_t>(pos)] == nv) assignment[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
}

FixedGraph GraphFamily::make_graph(const std::vector<int>& assignment, std::uint64_t aut_order) const {
    std::vector<GraphVertex> vertices(labels_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v) vertices[v].label = labels_[v];
    for (std::size_t l = 0; l < assignment.size(); ++l)
        vertices[static_cast<std::size_t>(assignment[l])].marks.push_back(static_cast<int>(l) + 1);
    return FixedGraph(std::move(vertices), edges_, aut_order);
}

std::string GraphFamily::marked_code(const std::vector<int>& assignment) const {
    std::string out = code_ + "|";
    for (int v : assignment) out.push_back(static_cast<char>('0' + v));
    return out;
}

GraphFamily GraphFamily::from_tree(const std::vector<int>& labels, const std::vector<GraphEdge>& edges,
                                   std::vector<int>* position_out) {
    Rooted canon = tree_code(labels, edges);
    std::vector<int> position(labels.size());
    for (std::size_t i = 0; i < canon.order.size(); ++i)
        position[static_cast<std::size_t>(canon.order[i])] = static_cast<int>(i);
    GraphFamily fam;
    fam.code_ = std::move(canon.code);
    fam.labels_.resize(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) fam.labels_[static_cast<std::size_t>(position[v])] = labels[v];
    for (const auto& e : edges) {
        int a = position[static_cast<std::size_t>(e.a)];
        int b = position[static_cast<std::size_t>(e.b)];
        if (a > b) std::swap(a, b);
        fam.edges_.push_back({a, b, e.degree});
    }
    std::sort(fam.edges_.begin(), fam.edges_.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return std::tie(x.a, x.b, x.degree) < std::tie(y.a, y.b, y.degree);
    });
    fam.automorphisms_ = tree_automorphisms(fam.labels_, fam.edges_);
    if (position_out) *position_out = std::move(position);
    return fam;
}

namespace {

struct CanonicalMarking {
    GraphFamily family;
    std::vector<int> assignment;
    std::uint64_t stabilizer = 0;
};

CanonicalMarking canonicalize(const FixedGraph& g) {
    std::vector<int> labels;
    for (const auto& v : g.vertices()) labels.push_back(v.label);
    std::vector<int> position;
    CanonicalMarking out{GraphFamily::from_tree(labels, g.edges(), &position), {}, 0};

    const int k = g.mark_count();
    std::vector<int> assignment(static_cast<std::size_t>(k), -1);
    for (std::size_t v = 0; v < g.vertices().size(); ++v)
        for (int m : g.vertices()[v].marks) {
            if (m < 1 || m > k || assignment[static_cast<std::size_t>(m - 1)] != -1)
                throw InvalidInput("marks do not partition {1..k}");
            assignment[static_cast<std::size_t>(m - 1)] = position[v];
        }

    std::vector<int> best = assignment;
    for (const auto& perm : out.family.automorphisms()) {
        std::vector<int> image(assignment.size());
        for (std::size_t l = 0; l < assignment.size(); ++l) image[l] = perm[static_cast<std::size_t>(assignment[l])];
        best = std::min(best, image);
    }
    for (const auto& perm : out.family.automorphisms()) {
        bool equal = false;
        lex_less_image(perm, best, equal);
        if (equal) ++out.stabilizer;
    }
    out.assignment = std::move(best);
    return out;
}

} // namespace

std::string canonical_form(const FixedGraph& g) {
    const auto c = canonicalize(g);
    return c.family.marked_code(c.assignment);
}

std::uint64_t automorphism_order(const FixedGraph& g) { return canonicalize(g).stabilizer; }

std::vector<GraphFamily> enumerate_families(int n, int d) {
    if (n < 1 || d < 1) throw InvalidInput("enumerate_families requires n >= 1 and d >= 1");
    std::map<std::string, GraphFamily> classes;
    for (int edge_count = 1; edge_count <= d; ++edge_count) {
        const int vertex_count = edge_count + 1;
        for (const auto& shape : tree_shapes(vertex_count)) {
            // BFS order so that each labeled vertex only needs to differ from its parent.
            const Adjacency adj = build_adjacency(vertex_count, shape);
            std::vector<int> bfs{0};
            std::vector<int> parent(static_cast<std::size_t>(vertex_count), -1);
            for (std::size_t i = 0; i < bfs.size(); ++i)
                for (const auto& [u, deg] : adj[static_cast<std::size_t>(bfs[i])])
                    if (u != 0 && parent[static_cast<std::size_t>(u)] == -1) {
                        parent[static_cast<std::size_t>(u)] = bfs[i];
                        bfs.push_back(u);
                    }

            std::vector<int> parts;
            compositions(d, edge_count, parts, [&](const std::vector<int>& edge_degrees) {
                std::vector<GraphEdge> edges = shape;
                for (std::size_t e = 0; e < edges.size(); ++e) edges[e].degree = edge_degrees[e];
                std::vector<int> labels(static_cast<std::size_t>(vertex_count), 0);
                std::function<void(std::size_t)> label_from = [&](std::size_t i) {
                    if (i == bfs.size()) {
                        GraphFamily fam = GraphFamily::from_tree(labels, edges);
                        std::string key = fam.code();
                        classes.try_emplace(std::move(key), std::move(fam));
                        return;
                    }
                    const int v = bfs[i];
                    for (int label = 0; label <= n; ++label) {
                        if (i > 0 && label == labels[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])]) continue;
                        labels[static_cast<std::size_t>(v)] = label;
                        label_from(i + 1);
                    }
                };
                label_from(0);
            });
        }
    }
    std::vector<GraphFamily> out;
    out.reserve(classes.size());
    for (auto& [code, fam] : classes) out.push_back(std::move(fam));
    return out;
}

void for_each_graph(int n, int d, int k, const std::function<void(const FixedGraph&)>& visit) {
    if (k < 0) throw InvalidInput("number of marks must be nonnegative");
    for (const auto& fam : enumerate_families(n, d))
        fam.for_each_marking(k, [&](const std::vector<int>& assignment, std::uint64_t stab) {
            visit(fam.make_graph(assignment, stab));
        });
}

std::vector<FixedGraph> enumerate_graphs(int n, int d, int k) {
    std::vector<FixedGraph> out;
    for_each_graph(n, d, k, [&](const FixedGraph& g) { out.push_back(g); });
    return out;
}

void write_graph_dump(std::ostream& os, int n, int d, int k) {
    if (k < 0) throw InvalidInput("number of marks must be nonnegative");
    for (const auto& fam : enumerate_families(n, d))
        fam.for_each_marking(k, [&](const std::vector<int>& assignment, std::uint64_t stab) {
            os << fam.marked_code(assignment) << '\t' << stab << '\n';
        });
}

} // namespace gwloc
