/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rollback/graph.hh>
#include <rollback/errors.hh>

#include <algorithm>
#include <string>

using std::pair;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace rollback
{
    Graph::Graph(int n, span<const pair<int, int>> edges)
    {
        if (n < 0)
            throw InvalidInput{ "negative vertex count" };
        _rows.assign(n, Bitset(n));
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InvalidInput{ "edge (" + to_string(u) + ", " + to_string(v) + ") out of range for n = " + to_string(n) };
            if (u == v)
                throw InvalidInput{ "self-loop at vertex " + to_string(u) };
            _rows[u].set(v);
            _rows[v].set(u);
        }
    }

    auto Graph::complete(int n) -> Graph
    {
        vector<Bitset> rows(n, Bitset(n));
        for (int v = 0 ; v < n ; ++v) {
            rows[v].set_all();
            rows[v].reset(v);
        }
        return from_rows(std::move(rows));
    }

    auto Graph::from_rows(vector<Bitset> rows) -> Graph
    {
        int n = int(rows.size());
        for (int v = 0 ; v < n ; ++v) {
            if (rows[v].size() != n)
                throw InvalidInput{ "adjacency row " + to_string(v) + " has the wrong width" };
            if (rows[v].test(v))
                throw InvalidInput{ "self-loop at vertex " + to_string(v) };
        }
        for (int u = 0 ; u < n ; ++u)
            rows[u].for_each([&] (int v) {
                if (! rows[v].test(u))
                    throw InvalidInput{ "adjacency is not symmetric at (" + to_string(u) + ", " + to_string(v) + ")" };
            });
        Graph g;
        g._rows = std::move(rows);
        return g;
    }

    auto Graph::edge_count() const -> long
    {
        long twice = 0;
        for (auto & r : _rows)
            twice += r.count();
        return twice / 2;
    }

    auto Graph::edges() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (int u = 0 ; u < size() ; ++u)
            _rows[u].for_each([&] (int v) {
                if (u < v)
                    result.emplace_back(u, v);
            });
        return result;
    }

    auto Graph::regular_degree() const -> std::optional<int>
    {
        if (_rows.empty())
            return 0;
        int d = degree(0);
        for (int v = 1 ; v < size() ; ++v)
            if (degree(v) != d)
                return std::nullopt;
        return d;
    }

    ColouredVertexSet::ColouredVertexSet(std::initializer_list<ColouredVertex> items) :
        ColouredVertexSet(vector<ColouredVertex>(items))
    {
    }

    ColouredVertexSet::ColouredVertexSet(vector<ColouredVertex> items) :
        _items(std::move(items))
    {
        std::sort(_items.begin(), _items.end());
        _items.erase(std::unique(_items.begin(), _items.end()), _items.end());
    }

    auto ColouredVertexSet::contains(ColouredVertex x) const -> bool
    {
        return std::binary_search(_items.begin(), _items.end(), x);
    }

    auto ColouredVertexSet::insert(ColouredVertex x) -> void
    {
        auto it = std::lower_bound(_items.begin(), _items.end(), x);
        if (it == _items.end() || *it != x)
            _items.insert(it, x);
    }

    auto ColouredVertexSet::vertices() const -> vector<int>
    {
        vector<int> result;
        for (auto & x : _items)
            result.push_back(x.vertex);
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    auto ColouredVertexSet::validate(int n, int t) const -> void
    {
        for (auto & x : _items)
            if (x.vertex < 0 || x.vertex >= n || x.colour < 0 || x.colour >= t)
                throw InvalidInput{ "coloured vertex (" + to_string(x.vertex) + ", " + to_string(x.colour) + ") out of range" };
    }

    auto set_union(const ColouredVertexSet & a, const ColouredVertexSet & b) -> ColouredVertexSet
    {
        vector<ColouredVertex> out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return ColouredVertexSet{ std::move(out) };
    }

    auto set_intersection(const ColouredVertexSet & a, const ColouredVertexSet & b) -> ColouredVertexSet
    {
        vector<ColouredVertex> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return ColouredVertexSet{ std::move(out) };
    }

    GraphFamily::GraphFamily(vector<Graph> graphs) :
        _graphs(std::move(graphs))
    {
        if (_graphs.empty())
            throw InvalidInput{ "a graph family needs at least one colour" };
        _n = _graphs.front().size();
        for (auto & g : _graphs)
            if (g.size() != _n)
                throw InvalidInput{ "family members have different vertex counts" };
    }

    auto edge_count(const Graph & g, span<const int> xs, span<const int> ys) -> long
    {
        auto check = [&] (int v) {
            if (v < 0 || v >= g.size())
                throw InvalidInput{ "vertex " + to_string(v) + " out of range" };
        };
        for (int x : xs)
            check(x);
        Bitset y_bits(g.size());
        for (int y : ys) {
            check(y);
            y_bits.set(y);
        }
        long result = 0;
        for (int x : xs)
            result += g.neighbours(x).count_and(y_bits);
        return result;
    }

    auto family_neighbourhood(const GraphFamily & family, const ColouredVertexSet & xs) -> Bitset
    {
        xs.validate(family.size(), family.colours());
        Bitset result(family.size());
        for (auto & x : xs)
            result |= family.row(x);
        return result;
    }

    auto external_family_neighbourhood(const GraphFamily & family, const ColouredVertexSet & xs,
            const Bitset & ys) -> Bitset
    {
        if (ys.size() != family.size())
            throw InvalidInput{ "vertex set has the wrong width" };
        auto result = family_neighbourhood(family, xs);
        result &= ys;
        for (int v : xs.vertices())
            result.reset(v);
        return result;
    }

    auto to_bitset(int n, span<const int> vertices) -> Bitset
    {
        Bitset result(n);
        for (int v : vertices) {
            if (v < 0 || v >= n)
                throw InvalidInput{ "vertex " + to_string(v) + " out of range" };
            result.set(v);
        }
        return result;
    }

    AuxiliaryBipartite::AuxiliaryBipartite(const GraphFamily & family)
    {
        int n = family.size(), t = family.colours();
        _left.reserve(n * t);
        _right.assign(n, Bitset(n * t));
        for (int u = 0 ; u < n ; ++u)
            for (int i = 0 ; i < t ; ++i) {
                int left = family.index({ u, i });
                _left.push_back(family.row(u, i));
                _left.back().for_each([&] (int v) { _right[v].set(left); });
            }
    }

    auto AuxiliaryBipartite::edge_count() const -> long
    {
        long result = 0;
        for (auto & r : _left)
            result += r.count();
        return result;
    }

    auto build_auxiliary(const GraphFamily & family) -> AuxiliaryBipartite
    {
        return AuxiliaryBipartite{ family };
    }

    auto restrict_family(const GraphFamily & family, span<const int> vertices) -> RestrictedFamily
    {
        if (vertices.empty())
            throw InvalidInput{ "cannot restrict a family to an empty vertex set" };

        RestrictedFamily result;
        result.old_to_new.assign(family.size(), -1);
        vector<int> sorted(vertices.begin(), vertices.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v : sorted) {
            if (v < 0 || v >= family.size())
                throw InvalidInput{ "vertex " + to_string(v) + " out of range" };
            result.old_to_new[v] = int(result.new_to_old.size());
            result.new_to_old.push_back(v);
        }

        int m = int(sorted.size());
        vector<Graph> graphs;
        for (int i = 0 ; i < family.colours() ; ++i) {
            vector<Bitset> rows(m, Bitset(m));
            for (int a = 0 ; a < m ; ++a)
                family.row(result.new_to_old[a], i).for_each([&] (int v) {
                    if (int b = result.old_to_new[v] ; b >= 0)
                        rows[a].set(b);
                });
            graphs.push_back(Graph::from_rows(std::move(rows)));
        }
        result.family = GraphFamily{ std::move(graphs) };
        return result;
    }
}
