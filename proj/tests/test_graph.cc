/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "oracles.hh"

#include <rollback/errors.hh>
#include <rollback/ffdist.hh>
#include <rollback/generate.hh>
#include <rollback/graph.hh>

#include <doctest.h>

#include <random>

using namespace rollback;

namespace
{
    auto triangle_and_edge() -> GraphFamily
    {
        std::vector<std::pair<int, int>> tri{ { 0, 1 }, { 1, 2 }, { 0, 2 } }, one{ { 0, 1 } };
        return GraphFamily{ { Graph{ 3, tri }, Graph{ 3, one } } };
    }

    auto set_of(const Bitset & b) -> std::set<int>
    {
        auto v = b.to_vector();
        return { v.begin(), v.end() };
    }
}

TEST_SUITE("graph")
{
    TEST_CASE("graph rejects self-loops and bad ids")
    {
        std::vector<std::pair<int, int>> loop{ { 1, 1 } }, bad{ { 0, 3 } };
        CHECK_THROWS_AS(Graph(3, loop), InvalidInput);
        CHECK_THROWS_AS(Graph(3, bad), InvalidInput);
    }

    TEST_CASE("adjacency is symmetric and repeated edges merge")
    {
        std::vector<std::pair<int, int>> edges{ { 0, 1 }, { 1, 0 }, { 2, 3 } };
        Graph g{ 4, edges };
        CHECK(g.edge_count() == 2);
        CHECK(g.adjacent(1, 0));
        CHECK(g.adjacent(3, 2));
        CHECK(! g.adjacent(0, 2));
    }

    TEST_CASE("edge_count counts ordered pairs")
    {
        auto k3 = Graph::complete(3);
        std::vector<int> x0{ 0 }, y12{ 1, 2 }, x01{ 0, 1 };
        CHECK(edge_count(k3, x0, y12) == 2);
        CHECK(edge_count(k3, x01, x01) == 2);
        Graph empty{ 5, std::vector<std::pair<int, int>>{ } };
        std::vector<int> all{ 0, 1, 2, 3, 4 };
        CHECK(edge_count(empty, all, all) == 0);
    }

    TEST_CASE("family neighbourhood examples")
    {
        auto f = triangle_and_edge();
        CHECK(set_of(family_neighbourhood(f, { { 0, 0 } })) == std::set<int>{ 1, 2 });
        CHECK(set_of(family_neighbourhood(f, { { 0, 0 }, { 2, 1 } })) == std::set<int>{ 1, 2 });
        CHECK(set_of(family_neighbourhood(f, { })).empty());
    }

    TEST_CASE("external family neighbourhood examples")
    {
        auto f = single(Graph::complete(3));
        std::vector<int> all{ 0, 1, 2 };
        auto ys = to_bitset(3, all);
        CHECK(set_of(external_family_neighbourhood(f, { { 0, 0 } }, ys)) == std::set<int>{ 1, 2 });
        CHECK(set_of(external_family_neighbourhood(f, { { 0, 0 }, { 1, 0 } }, ys)) == std::set<int>{ 2 });
        CHECK(set_of(external_family_neighbourhood(f, { }, ys)).empty());
    }

    TEST_CASE("auxiliary bipartite graph")
    {
        auto f = triangle_and_edge();
        auto b = build_auxiliary(f);
        CHECK(b.left_size() == 6);
        CHECK(b.right_size() == 3);
        CHECK(! b.left_neighbours(f.index({ 2, 1 })).any());
        CHECK(b.edge_count() == 2 * 3 + 2 * 1);

        auto g = single(Graph::complete(4));
        auto bg = build_auxiliary(g);
        for (int v = 0 ; v < 4 ; ++v)
            CHECK(bg.left_neighbours(v).count() == bg.right_neighbours(v).count());
    }

    TEST_CASE("restriction")
    {
        auto k4 = complete_family(4);
        std::vector<int> three{ 0, 2, 3 };
        auto r = restrict_family(k4, three);
        CHECK(r.family.size() == 3);
        CHECK(r.family.graph(0).edge_count() == 3);
        CHECK(r.new_to_old == three);
        CHECK(r.old_to_new[1] == -1);

        std::vector<int> all{ 0, 1, 2, 3 };
        auto id = restrict_family(k4, all);
        CHECK(id.new_to_old == all);

        std::vector<int> empty;
        CHECK_THROWS_AS(restrict_family(k4, empty), InvalidInput);
    }

    TEST_CASE("restricting a distance family matches direct norms")
    {
        auto df = build_distance_family({ 3, 2, { 1, 2 } });
        std::vector<int> chosen{ 0, 2, 4, 5, 7 };
        auto r = restrict_family(df.family, chosen);
        for (int i = 0 ; i < 5 ; ++i)
            for (int j = 0 ; j < 5 ; ++j)
                if (i != j) {
                    int norm = ff_norm(df.points[chosen[i]], df.points[chosen[j]]);
                    CHECK(r.family.graph(0).adjacent(i, j) == (norm == 1));
                    CHECK(r.family.graph(1).adjacent(i, j) == (norm == 2));
                }
    }

    TEST_CASE("neighbourhood properties against the matrix oracle")
    {
        std::mt19937_64 rng{ 11 };
        for (int round = 0 ; round < 200 ; ++round) {
            int n = std::uniform_int_distribution<int>{ 2, 16 }(rng), t = std::uniform_int_distribution<int>{ 1, 3 }(rng);
            auto f = oracle::random_family(n, t, 0.4, rng);
            auto ms = oracle::matrices(f);
            auto x = oracle::random_pairs(rng, n, t, 5), y = oracle::random_pairs(rng, n, t, 5);
            auto gx = set_of(family_neighbourhood(f, oracle::to_set(x)));
            auto gy = set_of(family_neighbourhood(f, oracle::to_set(y)));
            auto gxy = set_of(family_neighbourhood(f, oracle::to_set(oracle::pair_union(x, y))));
            CHECK(gx == oracle::gamma(ms, x));
            std::set<int> both = gx;
            both.insert(gy.begin(), gy.end());
            CHECK(gxy == both);
            for (int v : gx)
                CHECK(gxy.count(v));

            std::vector<int> xs, ys;
            for (int v = 0 ; v < n ; ++v) {
                if (rng() % 2)
                    xs.push_back(v);
                if (rng() % 2)
                    ys.push_back(v);
            }
            CHECK(edge_count(f.graph(0), xs, ys) == oracle::edge_count(ms[0], xs, ys));
            CHECK(edge_count(f.graph(0), xs, ys) == edge_count(f.graph(0), ys, xs));

            auto b = build_auxiliary(f);
            for (int u = 0 ; u < n ; ++u)
                for (int c = 0 ; c < t ; ++c)
                    for (int v = 0 ; v < n ; ++v)
                        CHECK(b.adjacent(f.index({ u, c }), v) == bool(ms[c][u][v]));
            if (t == 1)
                for (int v = 0 ; v < n ; ++v)
                    CHECK(family_neighbourhood(f, { { v, 0 } }) == f.graph(0).neighbours(v));
        }
    }

    TEST_CASE("coloured vertex sets")
    {
        ColouredVertexSet a{ { 2, 0 }, { 1, 1 }, { 2, 0 } };
        CHECK(a.size() == 2);
        CHECK(a.items()[0].vertex == 1);
        ColouredVertexSet b{ { 2, 0 }, { 3, 0 } };
        CHECK(set_union(a, b).size() == 3);
        CHECK(set_intersection(a, b).size() == 1);
        CHECK_THROWS_AS(a.validate(2, 2), InvalidInput);
        CHECK_NOTHROW(a.validate(3, 2));
    }
}
