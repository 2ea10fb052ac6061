/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rollback/errors.hh>
#include <rollback/generate.hh>

#include <random>
#include <string>
#include <vector>

using std::pair;
using std::vector;

namespace rollback
{
    auto complete_family(int n, int t) -> GraphFamily
    {
        if (t < 1)
            throw InvalidInput{ "need at least one colour" };
        return GraphFamily{ vector<Graph>(t, Graph::complete(n)) };
    }

    auto complete_minus_matching(int n) -> Graph
    {
        if (n < 0 || n % 2 != 0)
            throw InvalidInput{ "perfect matching needs an even vertex count" };
        vector<pair<int, int>> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (! (u % 2 == 0 && v == u + 1))
                    edges.emplace_back(u, v);
        return Graph{ n, edges };
    }

    auto random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        if (! (p >= 0 && p <= 1))
            throw InvalidInput{ "edge probability must lie in [0, 1]" };
        std::mt19937_64 rng{ seed };
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        vector<pair<int, int>> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (coin(rng) < p)
                    edges.emplace_back(u, v);
        return Graph{ n, edges };
    }

    auto random_family(int n, int t, double p, std::uint64_t seed) -> GraphFamily
    {
        if (t < 1)
            throw InvalidInput{ "need at least one colour" };
        vector<Graph> graphs;
        for (int i = 0 ; i < t ; ++i)
            graphs.push_back(random_graph(n, p, seed + i));
        return GraphFamily{ std::move(graphs) };
    }

    auto with_isolated(const Graph & g, int extra) -> Graph
    {
        if (extra < 0)
            throw InvalidInput{ "negative vertex count" };
        return Graph{ g.size() + extra, g.edges() };
    }

    auto single(Graph g) -> GraphFamily
    {
        return GraphFamily{ vector<Graph>{ std::move(g) } };
    }
}
