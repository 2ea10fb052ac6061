/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_TARGETS_HH
#define ROLLBACK_TARGETS_HH

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rollback
{
    struct Incidence
    {
        int neighbour;
        int colour;
    };

    struct ParentLink
    {
        int vertex;
        int colour;
    };

    struct ColouredEdge
    {
        int u;
        int v;
        int colour;

        friend auto operator<=>(const ColouredEdge &, const ColouredEdge &) = default;
    };

    /**
     * The graph being embedded: a simple graph with coloured edges, where every vertex is either a
     * root or hangs off a parent via a specific edge. Following parent links from a non-root
     * always reaches a root.
     *
     * Vertex ids are dense. remove_vertex shifts every larger id down by one.
     */
    class EdgeColouredRootedGraph
    {
    public:
        auto size() const -> int { return int(_adj.size()); }

        auto add_root() -> int;
        auto add_child(int parent, int colour) -> int;
        auto add_edge(int u, int v, int colour) -> void;

        /// Makes v (already adjacent to parent) a non-root whose parent edge is (v, parent).
        auto set_parent(int v, int parent) -> void;

        /// Relabels v and every ancestor of v as roots.
        auto promote_to_root(int v) -> void;

        /// Removes v and its edges; ids above v shift down by one. Children of v lose their parent,
        /// so callers only remove leaves or isolated vertices.
        auto remove_vertex(int v) -> void;

        auto is_root(int v) const -> bool { return ! _parent[v].has_value(); }
        auto parent(int v) const -> std::optional<ParentLink> { return _parent[v]; }
        auto incident(int v) const -> std::span<const Incidence> { return _adj[v]; }
        auto degree(int v) const -> int { return int(_adj[v].size()); }
        auto degree(int v, int colour) const -> int;
        auto edge_colour(int u, int v) const -> std::optional<int>;
        auto adjacent(int u, int v) const -> bool { return edge_colour(u, v).has_value(); }
        auto edges() const -> std::vector<ColouredEdge>;
        auto edge_count() const -> int;
        auto roots() const -> std::vector<int>;

        /// Largest colour in use plus one (0 for an edgeless graph).
        auto colours_used() const -> int;

        /**
         * Structural invariants: parent entries name existing edges with matching colours and
         * parent chains end at a root without revisiting a vertex. colours, when non-negative,
         * bounds the edge colours. Throws InvalidInput naming the violation.
         */
        auto validate(int colours = -1) const -> void;

        /**
         * The stronger condition the roll-back engine maintains: non-roots form pendant trees
         * (every neighbour of a non-root other than its parent is its child), so there is a unique
         * path from each non-root to the roots, and the roots of each component induce a connected
         * subgraph.
         */
        auto validate_pendant() const -> void;

        /// Renumbers vertices: vertex v becomes new_id[v]. new_id must be a permutation.
        auto relabel(std::span<const int> new_id) const -> EdgeColouredRootedGraph;

        friend auto operator==(const EdgeColouredRootedGraph &, const EdgeColouredRootedGraph &) -> bool;

    private:
        std::vector<std::vector<Incidence>> _adj;
        std::vector<std::optional<ParentLink>> _parent;

        auto check_vertex(int v) const -> void;
    };

    /// Colours along a path, one per edge, starting at the first endpoint.
    struct PathPattern
    {
        std::vector<int> colours;

        auto length() const -> int { return int(colours.size()); }
        auto validate(int colours_available = -1) const -> void;
    };

    auto constant_pattern(int length, int colour = 0) -> PathPattern;
    auto alternating_pattern(int length, int first, int second) -> PathPattern;
    auto random_pattern(int length, int colours, std::uint64_t seed) -> PathPattern;

    /**
     * 𝓗 described as a base vertex set plus an ordered list of paths (vertex sequences in 𝓗).
     * The base graph 𝓗_0 has the base vertices and every edge of 𝓗 that is not on a path.
     */
    struct PathConstructibleDecomposition
    {
        std::vector<int> base;
        std::vector<std::vector<int>> paths;
    };

    struct ValidationResult
    {
        bool ok = true;
        std::string clause;     // "(i)", "(ii)" or "(iii)" on failure
        std::string message;
    };

    /// Checks edge cover and edge-disjointness (i), fresh internal vertices (ii) and anchoring
    /// (iii), in the given path order.
    auto validate_path_constructible(const EdgeColouredRootedGraph & h,
            const PathConstructibleDecomposition & decomposition) -> ValidationResult;

    /// Colours along a decomposition path as read from 𝓗.
    auto path_pattern(const EdgeColouredRootedGraph & h, std::span<const int> path) -> PathPattern;

    /// Δ^mon: max over colours i and vertices v of d_i(v).
    auto mono_max_degree(const EdgeColouredRootedGraph & h) -> int;

    /// Smallest k ≥ 0 with (D-1)^k ≥ s, i.e. ⌈log s / log(D-1)⌉ computed without rounding.
    auto tree_height(int s, int d) -> int;

    /// 2⌈log s / log(D-1)⌉ + 3. Throws PreconditionError for D < 3 or s < 1.
    auto required_path_length(int s, int d) -> int;

    struct Subdivision
    {
        EdgeColouredRootedGraph target;
        std::vector<int> branches;
        /// One path per pair i < j of branch indices, listed from branch i to branch j.
        std::vector<std::vector<int>> paths;

        auto decomposition() const -> PathConstructibleDecomposition;
    };

    /**
     * Subdivision of K_k with branch vertices 0..k-1. patterns[i][j] (i < j) is the colour pattern
     * of the path from branch i to branch j; its length is the path length. Interior vertices
     * are non-roots whose parents point toward branch i.
     */
    auto build_subdivision(int branch_count, const std::vector<std::vector<PathPattern>> & patterns) -> Subdivision;

    /// Every pair gets a copy of the same pattern.
    auto build_uniform_subdivision(int branch_count, const PathPattern & pattern) -> Subdivision;

    struct BranchTree
    {
        int size = 1;
        std::vector<ColouredEdge> edges;    // local vertex ids 0..size-1
    };

    struct ExpansionEnd
    {
        int tree;
        int vertex;     // local id inside the tree
    };

    struct ExpansionPath
    {
        int y, z;       // the pair of branches this path joins
        ExpansionEnd from, to;
        PathPattern pattern;
    };

    struct Expansion
    {
        EdgeColouredRootedGraph target;
        std::vector<std::vector<int>> trees;     // vertex ids of each branch
        std::vector<std::vector<int>> paths;     // listed from `from` to `to`

        auto decomposition() const -> PathConstructibleDecomposition;
    };

    /**
     * Builds an expansion, checking that branches are trees (1), paths are paths (2), pieces are
     * disjoint apart from path ends (3), a path avoids trees other than its own pair (5) and
     * joins its two branches (6). Throws InvalidInput naming the violated condition.
     */
    auto build_expansion(const std::vector<BranchTree> & trees, const std::vector<ExpansionPath> & paths) -> Expansion;

    struct StarForest
    {
        EdgeColouredRootedGraph target;
        std::vector<int> centres;
        std::vector<std::vector<int>> leaves;
    };

    /// Disjoint stars, all vertices roots. colourings[i] lists the colour of each leaf edge of
    /// star i; an empty colourings means colour 0 throughout.
    auto build_star_forest(const std::vector<int> & degrees,
            const std::vector<std::vector<int>> & colourings = { }) -> StarForest;
}

#endif
