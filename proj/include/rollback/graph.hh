/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_GRAPH_HH
#define ROLLBACK_GRAPH_HH

#include <rollback/bitset.hh>

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rollback
{
    /**
     * Simple undirected graph on vertices 0..n-1, stored as one adjacency bit row per vertex.
     * Immutable once built.
     */
    class Graph
    {
    public:
        Graph() = default;

        /// Throws InvalidInput on out-of-range ids or self-loops. Repeated edges are merged.
        Graph(int n, std::span<const std::pair<int, int>> edges);

        static auto complete(int n) -> Graph;
        static auto from_rows(std::vector<Bitset> rows) -> Graph;

        auto size() const -> int { return int(_rows.size()); }
        auto adjacent(int u, int v) const -> bool { return _rows[u].test(v); }
        auto neighbours(int v) const -> const Bitset & { return _rows[v]; }
        auto degree(int v) const -> int { return _rows[v].count(); }
        auto edge_count() const -> long;
        auto edges() const -> std::vector<std::pair<int, int>>;

        /// Degree if every vertex has the same degree.
        auto regular_degree() const -> std::optional<int>;

    private:
        std::vector<Bitset> _rows;
    };

    /// A pair (v, i) in V × [t]. Colours are 0-based everywhere in code and files.
    struct ColouredVertex
    {
        int vertex;
        int colour;

        friend auto operator<=>(const ColouredVertex &, const ColouredVertex &) = default;
    };

    /// Sorted, duplicate-free set of coloured vertices.
    class ColouredVertexSet
    {
    public:
        ColouredVertexSet() = default;
        ColouredVertexSet(std::initializer_list<ColouredVertex> items);
        explicit ColouredVertexSet(std::vector<ColouredVertex> items);

        auto size() const -> int { return int(_items.size()); }
        auto empty() const -> bool { return _items.empty(); }
        auto contains(ColouredVertex x) const -> bool;
        auto insert(ColouredVertex x) -> void;
        auto items() const -> std::span<const ColouredVertex> { return _items; }
        auto begin() const { return _items.begin(); }
        auto end() const { return _items.end(); }

        /// X|_V: the underlying host vertices.
        auto vertices() const -> std::vector<int>;

        /// Throws InvalidInput unless every pair lies in {0..n-1} × {0..t-1}.
        auto validate(int n, int t) const -> void;

        friend auto operator==(const ColouredVertexSet &, const ColouredVertexSet &) -> bool = default;

    private:
        std::vector<ColouredVertex> _items;
    };

    auto set_union(const ColouredVertexSet &, const ColouredVertexSet &) -> ColouredVertexSet;
    auto set_intersection(const ColouredVertexSet &, const ColouredVertexSet &) -> ColouredVertexSet;

    /**
     * A family {G_0, ..., G_{t-1}} of graphs on one shared vertex set. Colour i selects G_i.
     */
    class GraphFamily
    {
    public:
        GraphFamily() = default;
        explicit GraphFamily(std::vector<Graph> graphs);

        auto size() const -> int { return _n; }
        auto colours() const -> int { return int(_graphs.size()); }
        auto graph(int colour) const -> const Graph & { return _graphs[colour]; }
        auto graphs() const -> const std::vector<Graph> & { return _graphs; }

        /// Neighbourhood of v in G_colour.
        auto row(int v, int colour) const -> const Bitset & { return _graphs[colour].neighbours(v); }
        auto row(ColouredVertex x) const -> const Bitset & { return row(x.vertex, x.colour); }

        /// Flat index of (v, i) in V × [t], ordered by vertex then colour.
        auto index(ColouredVertex x) const -> int { return x.vertex * colours() + x.colour; }
        auto coloured(int index) const -> ColouredVertex { return { index / colours(), index % colours() }; }
        auto left_size() const -> int { return _n * colours(); }

        auto row(int flat_index) const -> const Bitset & { return row(coloured(flat_index)); }

    private:
        int _n = 0;
        std::vector<Graph> _graphs;
    };

    /// e(X, Y): ordered pairs (x, y) ∈ X × Y with xy ∈ E(G).
    auto edge_count(const Graph & g, std::span<const int> xs, std::span<const int> ys) -> long;

    /// Γ_𝒢(X) = ⋃_{(v,i) ∈ X} Γ_{G_i}(v).
    auto family_neighbourhood(const GraphFamily & family, const ColouredVertexSet & xs) -> Bitset;

    /// N*(X, Y) = (Γ_𝒢(X) ∩ Y) ∖ X|_V.
    auto external_family_neighbourhood(const GraphFamily & family, const ColouredVertexSet & xs,
            const Bitset & ys) -> Bitset;

    auto to_bitset(int n, std::span<const int> vertices) -> Bitset;

    /**
     * B_𝒢: left side V × [t] (flat index v·t + i), right side V, with (u, i) ~ v iff u ~ v in G_i.
     */
    class AuxiliaryBipartite
    {
    public:
        explicit AuxiliaryBipartite(const GraphFamily & family);

        auto left_size() const -> int { return int(_left.size()); }
        auto right_size() const -> int { return int(_right.size()); }
        auto left_neighbours(int left) const -> const Bitset & { return _left[left]; }
        auto right_neighbours(int right) const -> const Bitset & { return _right[right]; }
        auto adjacent(int left, int right) const -> bool { return _left[left].test(right); }
        auto edge_count() const -> long;

    private:
        std::vector<Bitset> _left, _right;
    };

    auto build_auxiliary(const GraphFamily & family) -> AuxiliaryBipartite;

    /// 𝒢[V'] with contiguous ids; new_to_old[i] is the original id of new vertex i.
    struct RestrictedFamily
    {
        GraphFamily family;
        std::vector<int> new_to_old;
        std::vector<int> old_to_new;       // -1 outside V'
    };

    /// Throws InvalidInput on an empty or out-of-range vertex set.
    auto restrict_family(const GraphFamily & family, std::span<const int> vertices) -> RestrictedFamily;
}

#endif
