/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rollback/errors.hh>
#include <rollback/targets.hh>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace rollback;

namespace
{
    auto path_graph(const std::vector<int> & colours) -> EdgeColouredRootedGraph
    {
        EdgeColouredRootedGraph g;
        int at = g.add_root();
        for (int c : colours)
            at = g.add_child(at, c);
        return g;
    }

    auto two_vertex_tree() -> BranchTree
    {
        return BranchTree{ 2, { { 0, 1, 0 } } };
    }

    auto k3_expansion_paths(int length) -> std::vector<ExpansionPath>
    {
        return {
            { 0, 1, { 0, 1 }, { 1, 0 }, constant_pattern(length) },
            { 0, 2, { 0, 0 }, { 2, 1 }, constant_pattern(length) },
            { 1, 2, { 1, 1 }, { 2, 0 }, constant_pattern(length) } };
    }
}

TEST_SUITE("targets")
{
    TEST_CASE("rooted graph bookkeeping")
    {
        EdgeColouredRootedGraph g;
        int r = g.add_root();
        int a = g.add_child(r, 0);
        int b = g.add_child(a, 1);
        CHECK(g.size() == 3);
        CHECK(g.is_root(r));
        CHECK(g.parent(b)->vertex == a);
        CHECK(g.parent(b)->colour == 1);
        CHECK(g.edge_colour(a, b) == 1);
        CHECK_THROWS_AS(g.add_edge(a, b, 0), InvalidInput);
        CHECK_THROWS_AS(g.add_edge(a, a, 0), InvalidInput);
        g.promote_to_root(b);
        CHECK(g.is_root(a));
        CHECK(g.is_root(b));
        CHECK_NOTHROW(g.validate());
        CHECK_NOTHROW(g.validate_pendant());
        g.remove_vertex(0);
        CHECK(g.size() == 2);
        CHECK(g.edge_count() == 1);
    }

    TEST_CASE("pendant condition")
    {
        auto g = path_graph({ 0, 0, 0 });
        CHECK_NOTHROW(g.validate_pendant());
        // Two roots joined only through a non-root.
        EdgeColouredRootedGraph h;
        int x = h.add_root(), y = h.add_root();
        int m = h.add_child(x, 0);
        h.add_edge(m, y, 0);
        CHECK_NOTHROW(h.validate());
        CHECK_THROWS_AS(h.validate_pendant(), InvalidInput);
    }

    TEST_CASE("relabelling is a permutation")
    {
        auto g = path_graph({ 0, 1 });
        std::vector<int> perm{ 2, 0, 1 };
        auto h = g.relabel(perm);
        CHECK(h.is_root(2));
        CHECK(h.edge_colour(2, 0) == 0);
        CHECK(h.edge_colour(0, 1) == 1);
        std::vector<int> bad{ 0, 0, 1 };
        CHECK_THROWS_AS(g.relabel(bad), InvalidInput);
    }

    TEST_CASE("monochromatic maximum degree")
    {
        EdgeColouredRootedGraph rainbow;
        for (int i = 0 ; i < 3 ; ++i)
            rainbow.add_root();
        rainbow.add_edge(0, 1, 0);
        rainbow.add_edge(1, 2, 1);
        rainbow.add_edge(0, 2, 2);
        CHECK(mono_max_degree(rainbow) == 1);

        auto star = build_star_forest({ 5 });
        CHECK(mono_max_degree(star.target) == 5);

        CHECK(mono_max_degree(path_graph({ 0, 0, 1 })) == 2);
    }

    TEST_CASE("tree heights and path lengths")
    {
        CHECK(required_path_length(1, 3) == 3);
        CHECK(required_path_length(1, 7) == 3);
        CHECK(required_path_length(4, 3) == 7);
        CHECK(required_path_length(5, 3) == 9);
        CHECK(required_path_length(9, 4) == 7);
        CHECK(required_path_length(10, 4) == 9);
        CHECK(tree_height(1, 3) == 0);
        CHECK(tree_height(8, 3) == 3);
        CHECK_THROWS_AS(required_path_length(2, 2), PreconditionError);
        CHECK_THROWS_AS(required_path_length(0, 3), PreconditionError);
        for (int s = 1 ; s <= 200 ; ++s)
            for (int d = 3 ; d <= 8 ; ++d) {
                int k = tree_height(s, d);
                long reach = 1, below = 1;
                for (int i = 0 ; i < k ; ++i)
                    reach *= d - 1;
                for (int i = 0 ; i + 1 < k ; ++i)
                    below *= d - 1;
                CHECK(reach >= s);
                if (k > 0)
                    CHECK(below < s);
            }
    }

    TEST_CASE("subdivision counts")
    {
        auto k3 = build_uniform_subdivision(3, constant_pattern(3));
        CHECK(k3.target.size() == 9);
        CHECK(k3.target.edge_count() == 9);
        CHECK(k3.branches == std::vector<int>{ 0, 1, 2 });
        for (int ell = 1 ; ell <= 6 ; ++ell)
            for (int k = 1 ; k <= 5 ; ++k) {
                auto s = build_uniform_subdivision(k, constant_pattern(ell));
                CHECK(s.target.size() == k + k * (k - 1) / 2 * (ell - 1));
                CHECK_NOTHROW(s.target.validate());
                auto valid = validate_path_constructible(s.target, s.decomposition());
                CHECK(valid.ok);
            }

        PathPattern pattern{ { 0, 1, 0, 1, 0 } };
        auto alt = build_uniform_subdivision(3, pattern);
        CHECK(mono_max_degree(alt.target) == 2);
        for (auto & path : alt.paths)
            CHECK(path_pattern(alt.target, path).colours == pattern.colours);
    }

    TEST_CASE("subdivision paths in any order are path-constructible")
    {
        auto k4 = build_uniform_subdivision(4, constant_pattern(4));
        auto dec = k4.decomposition();
        std::mt19937_64 rng{ 3 };
        for (int round = 0 ; round < 20 ; ++round) {
            std::shuffle(dec.paths.begin(), dec.paths.end(), rng);
            CHECK(validate_path_constructible(k4.target, dec).ok);
        }
    }

    TEST_CASE("decomposition clause failures")
    {
        auto k3 = build_uniform_subdivision(3, constant_pattern(3));
        auto dec = k3.decomposition();

        auto unanchored = dec;
        unanchored.base = { 0 };
        unanchored.paths = { dec.paths[2], dec.paths[0], dec.paths[1] };     // 1..2 first, neither end present
        auto r = validate_path_constructible(k3.target, unanchored);
        CHECK(! r.ok);
        CHECK(r.clause == "(iii)");

        auto shared = dec;
        shared.paths.push_back({ dec.paths[0][0], dec.paths[0][1], dec.paths[0][2] });
        auto s = validate_path_constructible(k3.target, shared);
        CHECK(! s.ok);

        // Second path crossing the first path's interior.
        EdgeColouredRootedGraph g;
        for (int i = 0 ; i < 5 ; ++i)
            g.add_root();
        g.add_edge(0, 2, 0);
        g.add_edge(2, 1, 0);
        g.add_edge(3, 2, 0);
        g.add_edge(2, 4, 0);
        PathConstructibleDecomposition crossing{ { 0, 1, 3, 4 }, { { 0, 2, 1 }, { 3, 2, 4 } } };
        auto c = validate_path_constructible(g, crossing);
        CHECK(! c.ok);
        CHECK(c.clause == "(ii)");
    }

    TEST_CASE("expansions")
    {
        auto e = build_expansion({ two_vertex_tree(), two_vertex_tree(), two_vertex_tree() }, k3_expansion_paths(3));
        CHECK(e.target.size() == 12);
        CHECK(validate_path_constructible(e.target, e.decomposition()).ok);

        auto single = build_expansion({ BranchTree{ }, BranchTree{ }, BranchTree{ } }, {
                { 0, 1, { 0, 0 }, { 1, 0 }, constant_pattern(3) },
                { 0, 2, { 0, 0 }, { 2, 0 }, constant_pattern(3) },
                { 1, 2, { 1, 0 }, { 2, 0 }, constant_pattern(3) } });
        auto sub = build_uniform_subdivision(3, constant_pattern(3));
        CHECK(single.target.size() == sub.target.size());
        CHECK(single.target.edge_count() == sub.target.edge_count());

        auto bad = k3_expansion_paths(3);
        bad[0].to = { 2, 0 };
        try {
            build_expansion({ two_vertex_tree(), two_vertex_tree(), two_vertex_tree() }, bad);
            FAIL("expected a condition (5) error");
        }
        catch (const InvalidInput & err) {
            CHECK(std::string{ err.what() }.find("(5)") != std::string::npos);
        }

        CHECK_THROWS_AS(build_expansion({ BranchTree{ 2, { } } }, { }), InvalidInput);
    }

    TEST_CASE("star forests")
    {
        auto two = build_star_forest({ 3, 3 });
        CHECK(two.target.size() == 8);
        CHECK(mono_max_degree(two.target) == 3);
        CHECK(two.target.roots().size() == 8);

        auto rainbow = build_star_forest({ 3 }, { { 0, 1, 2 } });
        CHECK(mono_max_degree(rainbow.target) == 1);

        auto empty = build_star_forest({ });
        CHECK(empty.target.size() == 0);
        CHECK_THROWS_AS(build_star_forest({ 2 }, { { 0 } }), InvalidInput);
    }

    TEST_CASE("patterns")
    {
        CHECK(constant_pattern(4, 1).colours == std::vector<int>{ 1, 1, 1, 1 });
        CHECK(alternating_pattern(5, 0, 1).colours == std::vector<int>{ 0, 1, 0, 1, 0 });
        CHECK(random_pattern(20, 3, 7).colours == random_pattern(20, 3, 7).colours);
        for (int c : random_pattern(50, 3, 1).colours)
            CHECK((c >= 0 && c < 3));
        CHECK_THROWS_AS(PathPattern{ }.validate(), InvalidInput);
        CHECK_THROWS_AS(constant_pattern(3, 2).validate(2), InvalidInput);
    }
}
