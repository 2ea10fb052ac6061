/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rollback/targets.hh>
#include <rollback/errors.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>

using std::optional;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace rollback
{
    auto EdgeColouredRootedGraph::check_vertex(int v) const -> void
    {
        if (v < 0 || v >= size())
            throw InvalidInput{ "target vertex " + to_string(v) + " out of range" };
    }

    auto EdgeColouredRootedGraph::add_root() -> int
    {
        _adj.emplace_back();
        _parent.emplace_back();
        return size() - 1;
    }

    auto EdgeColouredRootedGraph::add_child(int parent, int colour) -> int
    {
        check_vertex(parent);
        if (colour < 0)
            throw InvalidInput{ "negative colour" };
        int v = add_root();
        _adj[v].push_back({ parent, colour });
        _adj[parent].push_back({ v, colour });
        _parent[v] = ParentLink{ parent, colour };
        return v;
    }

    auto EdgeColouredRootedGraph::add_edge(int u, int v, int colour) -> void
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw InvalidInput{ "self-loop at target vertex " + to_string(u) };
        if (colour < 0)
            throw InvalidInput{ "negative colour" };
        if (adjacent(u, v))
            throw InvalidInput{ "target vertices " + to_string(u) + " and " + to_string(v) + " already adjacent" };
        _adj[u].push_back({ v, colour });
        _adj[v].push_back({ u, colour });
    }

    auto EdgeColouredRootedGraph::set_parent(int v, int parent) -> void
    {
        auto c = edge_colour(v, parent);
        if (! c)
            throw InvalidInput{ "parent " + to_string(parent) + " not adjacent to " + to_string(v) };
        _parent[v] = ParentLink{ parent, *c };
    }

    auto EdgeColouredRootedGraph::promote_to_root(int v) -> void
    {
        check_vertex(v);
        int steps = 0;
        while (_parent[v]) {
            int next = _parent[v]->vertex;
            _parent[v].reset();
            v = next;
            if (++steps > size())
                throw InvalidInput{ "parent cycle" };
        }
    }

    auto EdgeColouredRootedGraph::remove_vertex(int v) -> void
    {
        check_vertex(v);
        for (auto & [w, c] : _adj[v]) {
            std::erase_if(_adj[w], [&] (const Incidence & i) { return i.neighbour == v; });
            if (_parent[w] && _parent[w]->vertex == v)
                _parent[w].reset();
        }
        _adj.erase(_adj.begin() + v);
        _parent.erase(_parent.begin() + v);
        for (auto & row : _adj)
            for (auto & i : row)
                if (i.neighbour > v)
                    --i.neighbour;
        for (auto & p : _parent)
            if (p && p->vertex > v)
                --p->vertex;
    }

    auto EdgeColouredRootedGraph::degree(int v, int colour) const -> int
    {
        return int(std::count_if(_adj[v].begin(), _adj[v].end(), [&] (const Incidence & i) { return i.colour == colour; }));
    }

    auto EdgeColouredRootedGraph::edge_colour(int u, int v) const -> optional<int>
    {
        for (auto & i : _adj[u])
            if (i.neighbour == v)
                return i.colour;
        return std::nullopt;
    }

    auto EdgeColouredRootedGraph::edges() const -> vector<ColouredEdge>
    {
        vector<ColouredEdge> result;
        for (int u = 0 ; u < size() ; ++u)
            for (auto & [v, c] : _adj[u])
                if (u < v)
                    result.push_back({ u, v, c });
        std::sort(result.begin(), result.end());
        return result;
    }

    auto EdgeColouredRootedGraph::edge_count() const -> int
    {
        int total = 0;
        for (auto & row : _adj)
            total += int(row.size());
        return total / 2;
    }

    auto EdgeColouredRootedGraph::roots() const -> vector<int>
    {
        vector<int> result;
        for (int v = 0 ; v < size() ; ++v)
            if (is_root(v))
                result.push_back(v);
        return result;
    }

    auto EdgeColouredRootedGraph::colours_used() const -> int
    {
        int result = 0;
        for (auto & row : _adj)
            for (auto & i : row)
                result = std::max(result, i.colour + 1);
        return result;
    }

    auto EdgeColouredRootedGraph::validate(int colours) const -> void
    {
        for (int u = 0 ; u < size() ; ++u) {
            std::set<int> seen;
            for (auto & [v, c] : _adj[u]) {
                if (v < 0 || v >= size() || v == u)
                    throw InvalidInput{ "bad incidence at target vertex " + to_string(u) };
                if (! seen.insert(v).second)
                    throw InvalidInput{ "multi-edge between " + to_string(u) + " and " + to_string(v) };
                if (c < 0 || (colours >= 0 && c >= colours))
                    throw InvalidInput{ "colour " + to_string(c) + " out of range on edge " + to_string(u) + "-" + to_string(v) };
                if (edge_colour(v, u) != c)
                    throw InvalidInput{ "asymmetric edge " + to_string(u) + "-" + to_string(v) };
            }
        }

        for (int v = 0 ; v < size() ; ++v) {
            if (! _parent[v])
                continue;
            auto [p, c] = *_parent[v];
            if (p < 0 || p >= size() || edge_colour(v, p) != c)
                throw InvalidInput{ "parent edge of " + to_string(v) + " missing or miscoloured" };
        }

        // parent chains: colour 0 unvisited, 1 on the current chain, 2 known to reach a root
        vector<int> state(size(), 0);
        for (int v = 0 ; v < size() ; ++v) {
            vector<int> chain;
            int w = v;
            while (state[w] == 0 && _parent[w]) {
                state[w] = 1;
                chain.push_back(w);
                w = _parent[w]->vertex;
            }
            if (state[w] == 1)
                throw InvalidInput{ "parent links from " + to_string(v) + " revisit " + to_string(w) };
            state[w] = 2;
            for (int x : chain)
                state[x] = 2;
        }
    }

    auto EdgeColouredRootedGraph::validate_pendant() const -> void
    {
        validate();
        for (int v = 0 ; v < size() ; ++v) {
            if (! _parent[v])
                continue;
            for (auto & [w, c] : _adj[v])
                if (w != _parent[v]->vertex && ! (_parent[w] && _parent[w]->vertex == v))
                    throw InvalidInput{ "non-root " + to_string(v) + " has a second route to the roots via " + to_string(w) };
        }

        // components of the whole graph versus components of the roots
        auto components = [&] (bool roots_only) {
            vector<int> label(size(), -1);
            int next = 0;
            for (int v = 0 ; v < size() ; ++v) {
                if (label[v] != -1 || (roots_only && ! is_root(v)))
                    continue;
                vector<int> stack{ v };
                label[v] = next;
                while (! stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (auto & [w, c] : _adj[u])
                        if (label[w] == -1 && (! roots_only || is_root(w))) {
                            label[w] = next;
                            stack.push_back(w);
                        }
                }
                ++next;
            }
            return label;
        };
        auto whole = components(false), rooted = components(true);
        std::map<int, int> root_component_of;
        for (int v = 0 ; v < size() ; ++v) {
            if (! is_root(v))
                continue;
            auto [it, fresh] = root_component_of.emplace(whole[v], rooted[v]);
            if (! fresh && it->second != rooted[v])
                throw InvalidInput{ "roots in the component of " + to_string(v) + " are not connected" };
        }
    }

    auto EdgeColouredRootedGraph::relabel(span<const int> new_id) const -> EdgeColouredRootedGraph
    {
        if (int(new_id.size()) != size())
            throw InvalidInput{ "relabelling has the wrong length" };
        vector<int> check(new_id.begin(), new_id.end());
        std::sort(check.begin(), check.end());
        for (int i = 0 ; i < size() ; ++i)
            if (check[i] != i)
                throw InvalidInput{ "relabelling is not a permutation" };

        EdgeColouredRootedGraph result;
        result._adj.resize(size());
        result._parent.resize(size());
        for (int v = 0 ; v < size() ; ++v) {
            for (auto & [w, c] : _adj[v])
                result._adj[new_id[v]].push_back({ new_id[w], c });
            if (_parent[v])
                result._parent[new_id[v]] = ParentLink{ new_id[_parent[v]->vertex], _parent[v]->colour };
        }
        for (auto & row : result._adj)
            std::sort(row.begin(), row.end(), [] (const Incidence & a, const Incidence & b) { return a.neighbour < b.neighbour; });
        return result;
    }

    auto operator==(const EdgeColouredRootedGraph & a, const EdgeColouredRootedGraph & b) -> bool
    {
        if (a.size() != b.size() || a.edges() != b.edges())
            return false;
        for (int v = 0 ; v < a.size() ; ++v) {
            auto pa = a.parent(v), pb = b.parent(v);
            if (pa.has_value() != pb.has_value())
                return false;
            if (pa && (pa->vertex != pb->vertex || pa->colour != pb->colour))
                return false;
        }
        return true;
    }

    auto PathPattern::validate(int colours_available) const -> void
    {
        if (colours.empty())
            throw InvalidInput{ "empty path pattern" };
        for (int c : colours)
            if (c < 0 || (colours_available >= 0 && c >= colours_available))
                throw InvalidInput{ "pattern colour " + to_string(c) + " out of range" };
    }

    auto constant_pattern(int length, int colour) -> PathPattern
    {
        return PathPattern{ vector<int>(length, colour) };
    }

    auto alternating_pattern(int length, int first, int second) -> PathPattern
    {
        PathPattern result;
        for (int i = 0 ; i < length ; ++i)
            result.colours.push_back(i % 2 == 0 ? first : second);
        return result;
    }

    auto random_pattern(int length, int colours, std::uint64_t seed) -> PathPattern
    {
        if (colours < 1)
            throw InvalidInput{ "need at least one colour" };
        std::mt19937_64 rng{ seed };
        std::uniform_int_distribution<int> pick(0, colours - 1);
        PathPattern result;
        for (int i = 0 ; i < length ; ++i)
            result.colours.push_back(pick(rng));
        return result;
    }

    auto path_pattern(const EdgeColouredRootedGraph & h, span<const int> path) -> PathPattern
    {
        PathPattern result;
        for (std::size_t i = 0 ; i + 1 < path.size() ; ++i) {
            auto c = h.edge_colour(path[i], path[i + 1]);
            if (! c)
                throw InvalidInput{ "path step " + to_string(path[i]) + "-" + to_string(path[i + 1]) + " is not an edge" };
            result.colours.push_back(*c);
        }
        return result;
    }

    auto validate_path_constructible(const EdgeColouredRootedGraph & h,
            const PathConstructibleDecomposition & decomposition) -> ValidationResult
    {
        auto fail = [] (string clause, string message) {
            return ValidationResult{ false, std::move(clause), std::move(message) };
        };
        auto key = [] (int u, int v) { return std::pair{ std::min(u, v), std::max(u, v) }; };

        vector<char> present(h.size(), 0);
        for (int b : decomposition.base) {
            if (b < 0 || b >= h.size())
                return fail("(i)", "base vertex " + to_string(b) + " out of range");
            if (present[b])
                return fail("(i)", "base vertex " + to_string(b) + " repeated");
            present[b] = 1;
        }

        std::set<std::pair<int, int>> path_edges;
        for (std::size_t j = 0 ; j < decomposition.paths.size() ; ++j) {
            auto & path = decomposition.paths[j];
            string name = "path " + to_string(j);
            if (path.size() < 2)
                return fail("(i)", name + " has no edges");
            for (int v : path)
                if (v < 0 || v >= h.size())
                    return fail("(i)", name + " uses out-of-range vertex " + to_string(v));
            for (std::size_t i = 0 ; i + 1 < path.size() ; ++i) {
                if (! h.adjacent(path[i], path[i + 1]))
                    return fail("(i)", name + " step " + to_string(path[i]) + "-" + to_string(path[i + 1]) + " is not an edge");
                if (! path_edges.insert(key(path[i], path[i + 1])).second)
                    return fail("(i)", name + " reuses edge " + to_string(path[i]) + "-" + to_string(path[i + 1]));
            }

            std::set<int> interior;
            for (std::size_t i = 1 ; i + 1 < path.size() ; ++i) {
                if (present[path[i]])
                    return fail("(ii)", name + " internal vertex " + to_string(path[i]) + " already present");
                if (! interior.insert(path[i]).second)
                    return fail("(ii)", name + " repeats internal vertex " + to_string(path[i]));
            }
            if (path.front() == path.back() || interior.contains(path.front()) || interior.contains(path.back()))
                return fail("(ii)", name + " is not a path");

            if (! present[path.front()] && ! present[path.back()])
                return fail("(iii)", name + " has no endpoint in the graph built so far");

            for (int v : path)
                present[v] = 1;
        }

        for (int v = 0 ; v < h.size() ; ++v)
            if (! present[v])
                return fail("(i)", "vertex " + to_string(v) + " not covered");

        vector<char> in_base(h.size(), 0);
        for (int b : decomposition.base)
            in_base[b] = 1;
        for (auto & e : h.edges())
            if (! path_edges.contains(key(e.u, e.v)) && ! (in_base[e.u] && in_base[e.v]))
                return fail("(i)", "edge " + to_string(e.u) + "-" + to_string(e.v) + " lies in neither the base nor a path");

        return ValidationResult{ };
    }

    auto mono_max_degree(const EdgeColouredRootedGraph & h) -> int
    {
        int result = 0;
        for (int v = 0 ; v < h.size() ; ++v) {
            std::map<int, int> per_colour;
            for (auto & i : h.incident(v))
                result = std::max(result, ++per_colour[i.colour]);
        }
        return result;
    }

    auto tree_height(int s, int d) -> int
    {
        if (d < 3)
            throw PreconditionError{ "D >= 3 required (got D = " + to_string(d) + ")" };
        if (s < 1)
            throw PreconditionError{ "s >= 1 required" };
        int k = 0;
        long long reach = 1;
        while (reach < s) {
            reach *= (d - 1);
            ++k;
        }
        return k;
    }

    auto required_path_length(int s, int d) -> int
    {
        return 2 * tree_height(s, d) + 3;
    }

    auto Subdivision::decomposition() const -> PathConstructibleDecomposition
    {
        return PathConstructibleDecomposition{ branches, paths };
    }

    auto build_subdivision(int branch_count, const vector<vector<PathPattern>> & patterns) -> Subdivision
    {
        if (branch_count < 1)
            throw InvalidInput{ "need at least one branch vertex" };
        if (int(patterns.size()) < branch_count)
            throw InvalidInput{ "pattern matrix has too few rows" };

        Subdivision result;
        for (int i = 0 ; i < branch_count ; ++i)
            result.branches.push_back(result.target.add_root());

        for (int i = 0 ; i < branch_count ; ++i)
            for (int j = i + 1 ; j < branch_count ; ++j) {
                if (int(patterns[i].size()) <= j)
                    throw InvalidInput{ "no pattern for pair " + to_string(i) + "," + to_string(j) };
                auto & pattern = patterns[i][j];
                pattern.validate();
                vector<int> path{ i };
                int at = i;
                for (int e = 0 ; e + 1 < pattern.length() ; ++e) {
                    at = result.target.add_child(at, pattern.colours[e]);
                    path.push_back(at);
                }
                result.target.add_edge(at, j, pattern.colours.back());
                path.push_back(j);
                result.paths.push_back(std::move(path));
            }

        result.target.validate();
        return result;
    }

    auto build_uniform_subdivision(int branch_count, const PathPattern & pattern) -> Subdivision
    {
        vector<vector<PathPattern>> patterns(branch_count, vector<PathPattern>(branch_count, pattern));
        return build_subdivision(branch_count, patterns);
    }

    auto Expansion::decomposition() const -> PathConstructibleDecomposition
    {
        PathConstructibleDecomposition result;
        for (auto & tree : trees)
            result.base.insert(result.base.end(), tree.begin(), tree.end());
        result.paths = paths;
        return result;
    }

    auto build_expansion(const vector<BranchTree> & trees, const vector<ExpansionPath> & paths) -> Expansion
    {
        Expansion result;
        auto & h = result.target;

        for (std::size_t x = 0 ; x < trees.size() ; ++x) {
            auto & tree = trees[x];
            string name = "branch tree " + to_string(x);
            if (tree.size < 1)
                throw InvalidInput{ "condition (1): " + name + " is empty" };
            if (int(tree.edges.size()) != tree.size - 1)
                throw InvalidInput{ "condition (1): " + name + " has the wrong number of edges for a tree" };

            int offset = h.size();
            vector<int> ids;
            for (int v = 0 ; v < tree.size ; ++v)
                ids.push_back(h.add_root());
            for (auto & e : tree.edges) {
                if (e.u < 0 || e.u >= tree.size || e.v < 0 || e.v >= tree.size)
                    throw InvalidInput{ "condition (1): " + name + " edge endpoint out of range" };
                try {
                    h.add_edge(offset + e.u, offset + e.v, e.colour);
                }
                catch (const InvalidInput & err) {
                    throw InvalidInput{ "condition (1): " + name + ": " + err.what() };
                }
            }

            // connected with size-1 edges means a tree
            vector<char> seen(tree.size, 0);
            vector<int> stack{ 0 };
            seen[0] = 1;
            int reached = 1;
            while (! stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto & i : h.incident(offset + u))
                    if (! seen[i.neighbour - offset]) {
                        seen[i.neighbour - offset] = 1;
                        ++reached;
                        stack.push_back(i.neighbour - offset);
                    }
            }
            if (reached != tree.size)
                throw InvalidInput{ "condition (1): " + name + " is not connected" };
            result.trees.push_back(std::move(ids));
        }

        std::set<std::pair<int, int>> pairs;
        for (std::size_t j = 0 ; j < paths.size() ; ++j) {
            auto & spec = paths[j];
            string name = "path " + to_string(j);
            int nt = int(trees.size());
            if (spec.y < 0 || spec.y >= nt || spec.z < 0 || spec.z >= nt || spec.y == spec.z)
                throw InvalidInput{ "condition (6): " + name + " names an invalid branch pair" };
            if (! pairs.insert({ std::min(spec.y, spec.z), std::max(spec.y, spec.z) }).second)
                throw InvalidInput{ "condition (3): " + name + " repeats branch pair " + to_string(spec.y) + "," + to_string(spec.z) };
            if (spec.pattern.colours.empty())
                throw InvalidInput{ "condition (2): " + name + " has no edges" };
            spec.pattern.validate();

            for (auto & end : { spec.from, spec.to }) {
                if (end.tree < 0 || end.tree >= nt || end.vertex < 0 || end.vertex >= trees[end.tree].size)
                    throw InvalidInput{ "condition (2): " + name + " endpoint out of range" };
                if (end.tree != spec.y && end.tree != spec.z)
                    throw InvalidInput{ "condition (5): " + name + " touches branch " + to_string(end.tree)
                        + " outside its pair " + to_string(spec.y) + "," + to_string(spec.z) };
            }
            if (spec.from.tree == spec.to.tree)
                throw InvalidInput{ "condition (6): " + name + " does not join branches " + to_string(spec.y) + " and " + to_string(spec.z) };

            int a = result.trees[spec.from.tree][spec.from.vertex];
            int b = result.trees[spec.to.tree][spec.to.vertex];
            // parents point toward the end lying in the lower-indexed branch
            bool forward = spec.from.tree < spec.to.tree;
            auto colours = spec.pattern.colours;
            if (! forward) {
                std::swap(a, b);
                std::reverse(colours.begin(), colours.end());
            }
            vector<int> path{ a };
            int at = a;
            for (std::size_t e = 0 ; e + 1 < colours.size() ; ++e) {
                at = h.add_child(at, colours[e]);
                path.push_back(at);
            }
            try {
                h.add_edge(at, b, colours.back());
            }
            catch (const InvalidInput & err) {
                throw InvalidInput{ "condition (3): " + name + ": " + err.what() };
            }
            path.push_back(b);
            if (! forward)
                std::reverse(path.begin(), path.end());
            result.paths.push_back(std::move(path));
        }

        h.validate();
        return result;
    }

    auto build_star_forest(const vector<int> & degrees, const vector<vector<int>> & colourings) -> StarForest
    {
        if (! colourings.empty() && colourings.size() != degrees.size())
            throw InvalidInput{ "one colouring per star required" };
        StarForest result;
        for (std::size_t i = 0 ; i < degrees.size() ; ++i) {
            if (degrees[i] < 0)
                throw InvalidInput{ "negative star degree" };
            if (! colourings.empty() && int(colourings[i].size()) != degrees[i])
                throw InvalidInput{ "star " + to_string(i) + " colouring length differs from its degree" };
            int centre = result.target.add_root();
            result.centres.push_back(centre);
            result.leaves.emplace_back();
            for (int l = 0 ; l < degrees[i] ; ++l) {
                int leaf = result.target.add_root();
                result.target.add_edge(centre, leaf, colourings.empty() ? 0 : colourings[i][l]);
                result.leaves.back().push_back(leaf);
            }
        }
        result.target.validate_pendant();
        return result;
    }
}
