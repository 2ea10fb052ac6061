/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "oracles.hh"

#include <rollback/errors.hh>
#include <rollback/ffdist.hh>

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace rollback;

namespace
{
    auto point(int q, std::vector<int> coords) -> FieldPoint
    {
        return FieldPoint{ q, int(coords.size()), std::move(coords) };
    }

    auto distance_subdivision(int ell, int distance) -> Subdivision
    {
        return build_uniform_subdivision(3, constant_pattern(ell, distance));
    }

    auto best_effort() -> DistanceEmbeddingOptions
    {
        DistanceEmbeddingOptions options;
        options.params = { 0, 5 };
        options.pipeline.engine.mode = VerifyMode::best_effort;
        options.pipeline.engine.best_effort_fallback = true;
        options.pipeline.engine.enforce_hypotheses = false;
        options.pipeline.anchors = AnchorPolicy::spread;
        options.attempts = 32;
        return options;
    }
}

TEST_SUITE("ffdist")
{
    TEST_CASE("norms")
    {
        CHECK(ff_norm(point(3, { 0, 0 }), point(3, { 0, 1 })) == 1);
        CHECK(ff_norm(point(3, { 1, 2 }), point(3, { 1, 2 })) == 0);
        CHECK(ff_norm(point(3, { 0, 0 }), point(3, { 1, 1 })) == 2);
        CHECK_THROWS_AS(ff_norm(point(3, { 0, 0 }), point(5, { 0, 0 })), InvalidInput);
        CHECK_THROWS_AS(point(3, { 0, 3 }).validate(), InvalidInput);
        CHECK_THROWS_AS(point(9, { 0, 1 }).validate(), InvalidInput);
        for (int i = 0 ; i < 27 ; ++i)
            CHECK(FieldPoint::from_index(3, 3, i).index() == i);
        CHECK(FieldPoint::from_index(5, 2, 7).coords == std::vector<int>{ 1, 2 });
    }

    TEST_CASE("distance graphs")
    {
        auto g = build_distance_graph(3, 2, 1);
        CHECK(g.graph.size() == 9);
        CHECK(g.graph.regular_degree() == 4);
        CHECK(g.graph.edge_count() == 18);
        auto h = build_distance_graph(5, 2, 1);
        CHECK(h.graph.size() == 25);
        CHECK(h.graph.regular_degree() == 4);
        CHECK_THROWS_AS(build_distance_graph(3, 2, 0), PreconditionError);
        CHECK_THROWS_AS(build_distance_graph(4, 2, 1), PreconditionError);
        CHECK_THROWS_AS(build_distance_graph(13, 4, 1, 20'000), PreconditionError);
        for (auto [u, v] : h.graph.edges())
            CHECK(ff_norm(h.points[u], h.points[v]) == 1);
    }

    TEST_CASE("degrees match brute-force sphere counts")
    {
        for (int q : { 3, 5, 7, 11 })
            for (int d : { 2, 3 })
                for (int r = 1 ; r < q ; ++r) {
                    long expected = oracle::sphere(q, d, r);
                    CHECK(sphere_size(q, d, r) == expected);
                    if (q <= 7)
                        CHECK(build_distance_graph(q, d, r).graph.regular_degree() == expected);
                }
    }

    TEST_CASE("distance families")
    {
        auto f = build_distance_family({ 3, 2, { 1, 2 } });
        CHECK(f.family.colours() == 2);
        CHECK(f.family.size() == 9);
        for (int u = 0 ; u < 9 ; ++u)
            for (int v = 0 ; v < 9 ; ++v)
                CHECK(! (f.family.graph(0).adjacent(u, v) && f.family.graph(1).adjacent(u, v)));
        CHECK(f.spec.colour_of(2) == 1);
        CHECK(! f.spec.colour_of(0));

        auto one = build_distance_family({ 3, 2, { 1 } });
        CHECK(one.family.colours() == 1);
        CHECK(one.family.graph(0).edges() == build_distance_graph(3, 2, 1).graph.edges());

        CHECK_THROWS_AS((DistanceGraphSpec{ 3, 2, { 0, 1 } }.validate()), PreconditionError);
        CHECK_THROWS_AS((DistanceGraphSpec{ 3, 2, { 2, 1 } }.validate()), PreconditionError);
        CHECK_THROWS_AS((DistanceGraphSpec{ 3, 2, { } }.validate()), PreconditionError);
    }

    TEST_CASE("spectral parameters")
    {
        auto small = spectral_params(3, 2, 1);
        CHECK(small.measured.p == doctest::Approx(4.0 / 9.0));
        CHECK(small.measured.beta == doctest::Approx(2.0));
        CHECK(small.beta_paper == doctest::Approx(2.0 * std::sqrt(3.0)));
        CHECK(small.degree == 4);

        auto five = spectral_params(5, 2, 1);
        CHECK(five.measured.beta <= 2.0 * std::sqrt(5.0) + 1e-9);
    }

    TEST_CASE("character sums agree with dense spectra")
    {
        for (int q : { 3, 5, 7 })
            for (int d : { 2, 3 })
                for (int r = 1 ; r < q ; ++r) {
                    if (q == 7 && d == 3 && r > 2)
                        continue;
                    auto chars = character_spectrum(q, d, r);
                    std::sort(chars.begin(), chars.end(), std::greater<>());
                    auto dense = adjacency_spectrum(build_distance_graph(q, d, r).graph).eigenvalues;
                    REQUIRE(chars.size() == dense.size());
                    for (std::size_t i = 0 ; i < chars.size() ; ++i)
                        CHECK(std::abs(chars[i] - dense[i]) < 1e-9);
                    CHECK(chars.front() == doctest::Approx(double(sphere_size(q, d, r))));
                }
    }

    TEST_CASE("threshold formulas")
    {
        auto r = threshold_formulas(3, 3, 1, 0.5);
        CHECK(r.c_small == doctest::Approx(648.0));
        CHECK(r.ell_small == 26);
        CHECK(r.ell_large == 20);
        CHECK(c_small_squared(3, 3, 1) == 648u * 648u);
        CHECK(threshold_formulas(5, 2, 1, 0.25).ell_large == 24);
        CHECK(threshold_formulas(7, 2, 1, 0.5).ell_small == 4 * 3 + 16);
        CHECK_THROWS_AS(threshold_formulas(3, 2, 1, 0.0), PreconditionError);
        CHECK_THROWS_AS(threshold_formulas(3, 2, 1, 0.75), PreconditionError);

        auto measured = thresholds({ 3, 2, { 1, 2 } }, 0.5);
        CHECK(measured.p == doctest::Approx(4.0 / 9.0));
        CHECK(measured.s == joined_from_jumbled({ measured.p, measured.beta }));
    }

    TEST_CASE("point sets")
    {
        std::istringstream in{ "# corners\nq=5,d=2\n0,0\n\n1,2\n4,4\n" };
        auto set = parse_point_set(in);
        CHECK(set.q == 5);
        CHECK(set.points.size() == 3);
        std::ostringstream out;
        write_point_set(out, set);
        std::istringstream back{ out.str() };
        auto again = parse_point_set(back);
        CHECK(again.points == set.points);

        std::istringstream dup{ "q=3,d=2\n0,1\n0,1\n" };
        CHECK_THROWS_AS(parse_point_set(dup), InvalidInput);
        std::istringstream headless{ "0,1\n" };
        CHECK_THROWS_AS(parse_point_set(headless), InvalidInput);
        std::istringstream wide{ "q=3,d=2\n0,1,2\n" };
        CHECK_THROWS_AS(parse_point_set(wide), InvalidInput);
        CHECK(all_points(3, 2).points.size() == 9);
    }

    TEST_CASE("distance embedding into F_5^2")
    {
        auto result = embed_distance_subdivision(all_points(5, 2), { 5, 2, { 1 } }, distance_subdivision(7, 1), best_effort());
        CHECK(result.s_measured);
        CHECK(result.s == 11);
        CHECK(result.image.size() == 21);
        for (auto & e : result.result.embedding.target().edges())
            CHECK(ff_norm(result.image[e.u], result.image[e.v]) == 1);
        for (int r : result.realised)
            CHECK(r == 1);
        std::set<int> distinct;
        for (auto & p : result.image)
            distinct.insert(p.index());
        CHECK(distinct.size() == result.image.size());
    }

    TEST_CASE("distance embedding errors")
    {
        CHECK_THROWS_AS(embed_distance_subdivision(all_points(5, 2), { 5, 2, { 1 } }, distance_subdivision(7, 2), best_effort()),
                PreconditionError);
        PointSet three{ 5, 2, { point(5, { 0, 0 }), point(5, { 0, 1 }), point(5, { 1, 1 }) } };
        try {
            embed_distance_subdivision(three, { 5, 2, { 1 } }, distance_subdivision(7, 1), best_effort());
            FAIL("expected no feasible s");
        }
        catch (const PreconditionError & e) {
            CHECK(std::string{ e.what() }.find("no feasible s") != std::string::npos);
        }
    }
}
