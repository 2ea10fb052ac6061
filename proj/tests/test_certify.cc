/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "oracles.hh"

#include <rollback/certify.hh>
#include <rollback/errors.hh>
#include <rollback/ffdist.hh>
#include <rollback/generate.hh>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace rollback;

namespace
{
    auto perfect_matching(int n) -> Graph
    {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0 ; i + 1 < n ; i += 2)
            edges.emplace_back(i, i + 1);
        return Graph{ n, edges };
    }

    auto cycle(int n) -> Graph
    {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0 ; i < n ; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph{ n, edges };
    }

    auto petersen() -> Graph
    {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0 ; i < 5 ; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(i + 5, (i + 2) % 5 + 5);
        }
        return Graph{ 10, edges };
    }

    // A witness (X, Y) really violates: recount e(X, Y) from the matrices.
    auto witness_violates(const GraphFamily & family, const CertWitness & w, JumbledParams params) -> bool
    {
        auto ms = oracle::matrices(family);
        long e = 0;
        for (auto x : w.left)
            for (int y : w.right)
                e += ms[x.colour][x.vertex][y];
        double size = double(w.left.size()) * double(w.right.size());
        return std::abs(e - params.p * size) > params.beta * std::sqrt(size) + 1e-9;
    }
}

TEST_SUITE("certify")
{
    TEST_CASE("complete graphs are 2-joined but not 1-joined")
    {
        // A single vertex never reaches itself, so |V ∖ Γ({v})| = 1 and s = 1 fails.
        auto k5 = complete_family(5);
        CHECK(! is_joined(k5, 1).pass);
        CHECK(is_joined(k5, 2).pass);
        for (int n = 2 ; n <= 12 ; ++n)
            CHECK(min_joined(complete_family(n), n) == 2);
    }

    TEST_CASE("K5 plus an isolated vertex")
    {
        auto f = single(with_isolated(Graph::complete(5), 1));
        auto two = is_joined(f, 2);
        CHECK(! two.pass);
        REQUIRE(two.witness);
        CHECK(two.witness->left.size() == 2);
        CHECK(two.witness->left.contains({ 5, 0 }) + two.witness->left.contains({ 0, 0 }) >= 1);
        CHECK(int(two.witness->right.size()) >= 2);
        // Witness re-evaluated: the right side misses Γ(left) and has at least s vertices.
        auto gamma = family_neighbourhood(f, two.witness->left);
        for (int y : two.witness->right)
            CHECK(! gamma.test(y));
        CHECK(is_joined(f, 3).pass);
        CHECK(min_joined(f, 6) == 3);
        CHECK(oracle::min_joined(f, 6) == 3);
    }

    TEST_CASE("perfect matching on six vertices needs s = 4")
    {
        auto f = single(perfect_matching(6));
        CHECK(min_joined(f, 6) == 4);
        CHECK(oracle::min_joined(f, 6) == 4);
    }

    TEST_CASE("distance graph over F_5^2 regression")
    {
        auto df = build_distance_family({ 5, 2, { 1 } });
        CHECK(min_joined(df.family, 25) == 11);
    }

    TEST_CASE("is_joined argument checks")
    {
        auto k5 = complete_family(5);
        CHECK_THROWS_AS(is_joined(k5, 0), InvalidInput);
        CHECK_THROWS_AS(is_joined(k5, 6), PreconditionError);
        CertifyOptions tight;
        tight.joined_cap = 3;
        CHECK_THROWS_AS(is_joined(k5, 2, tight), CapExceeded);
    }

    TEST_CASE("joinedness agrees with the oracle and is monotone")
    {
        std::mt19937_64 rng{ 5 };
        for (int round = 0 ; round < 60 ; ++round) {
            int n = std::uniform_int_distribution<int>{ 3, 9 }(rng), t = std::uniform_int_distribution<int>{ 1, 2 }(rng);
            auto f = oracle::random_family(n, t, std::uniform_real_distribution<double>{ 0.2, 0.8 }(rng), rng);
            bool seen_pass = false;
            for (int s = 1 ; s <= n ; ++s) {
                bool pass = is_joined(f, s).pass;
                CHECK(pass == oracle::is_joined(f, s));
                if (seen_pass)
                    CHECK(pass);
                seen_pass = seen_pass || pass;
            }
        }
    }

    TEST_CASE("threads do not change the joinedness witness")
    {
        auto f = single(with_isolated(Graph::complete(7), 2));
        CertifyOptions one, four;
        four.threads = 4;
        auto a = is_joined(f, 3, one), b = is_joined(f, 3, four);
        CHECK(a.pass == b.pass);
        REQUIRE(a.witness);
        REQUIRE(b.witness);
        CHECK(a.witness->left == b.witness->left);
    }

    TEST_CASE("K4 is (3/4, 1)-jumbled")
    {
        auto k4 = complete_family(4);
        auto report = jumbled_check(k4, { 0.75, 1.0 }, JumbledMode::exhaustive);
        CHECK(report.pass);
        CHECK(report.certifying());
        REQUIRE(report.measured);
        CHECK(*report.measured == doctest::Approx(oracle::jumbled_deficit(k4, 0.75)));
    }

    TEST_CASE("beta below the deficit fails with a valid witness")
    {
        std::mt19937_64 rng{ 9 };
        for (int round = 0 ; round < 20 ; ++round) {
            int n = std::uniform_int_distribution<int>{ 3, 7 }(rng), t = std::uniform_int_distribution<int>{ 1, 2 }(rng);
            auto f = oracle::random_family(n, t, 0.5, rng);
            double deficit = oracle::jumbled_deficit(f, 0.5);
            CHECK(max_jumbled_deficit(f, 0.5).deficit == doctest::Approx(deficit));
            if (deficit <= 1.0)
                continue;
            JumbledParams params{ 0.5, std::max(1.0, deficit * 0.9) };
            auto report = jumbled_check(f, params, JumbledMode::exhaustive);
            CHECK(! report.pass);
            REQUIRE(report.witness);
            CHECK(witness_violates(f, *report.witness, params));
        }
    }

    TEST_CASE("sampled mode is labelled evidence and reproducible")
    {
        auto f = single(petersen());
        CertifyOptions options;
        options.samples = 20'000;
        auto a = jumbled_check(f, { 0.3, 2.0 }, JumbledMode::sampled, options);
        auto b = jumbled_check(f, { 0.3, 2.0 }, JumbledMode::sampled, options);
        CHECK(! a.certifying());
        CHECK(a.measured == b.measured);
    }

    TEST_CASE("exhaustive jumbledness is capped")
    {
        CertifyOptions options;
        options.jumbled_max_vertices = 6;
        CHECK_THROWS_AS(jumbled_check(complete_family(7), { 0.5, 1.0 }, JumbledMode::exhaustive, options), CapExceeded);
    }

    TEST_CASE("spectra")
    {
        auto g = build_distance_graph(3, 2, 1).graph;
        auto spectrum = adjacency_spectrum(g);
        std::vector<double> expected{ 4, 1, 1, 1, 1, -2, -2, -2, -2 };
        REQUIRE(spectrum.eigenvalues.size() == expected.size());
        for (std::size_t i = 0 ; i < expected.size() ; ++i)
            CHECK(spectrum.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-9));
        auto params = spectral_jumbled(g);
        CHECK(params.p == doctest::Approx(4.0 / 9.0));
        CHECK(params.beta == doctest::Approx(2.0));

        auto k4 = spectral_jumbled(Graph::complete(4));
        CHECK(k4.p == doctest::Approx(0.75));
        CHECK(k4.beta == doctest::Approx(1.0));

        auto c6 = adjacency_spectrum(cycle(6));
        CHECK(c6.degree == 2);
        CHECK(c6.lambda < 2.0 + 1e-9);

        std::vector<std::pair<int, int>> path{ { 0, 1 }, { 1, 2 } };
        CHECK_THROWS_AS(spectral_jumbled(Graph{ 3, path }), PreconditionError);
    }

    TEST_CASE("spectral parameters pass the exhaustive check")
    {
        std::vector<Graph> graphs{ Graph::complete(5), cycle(7), cycle(8), petersen(), build_distance_graph(3, 2, 1).graph,
            build_distance_graph(3, 2, 2).graph, perfect_matching(8) };
        for (auto & g : graphs) {
            auto params = spectral_jumbled(g);
            CHECK(jumbled_check(single(g), params, JumbledMode::exhaustive).pass);
        }
    }

    TEST_CASE("family parameters")
    {
        auto four = family_jumbled({ { 0.5, 1.5 }, { 0.5, 1.5 }, { 0.5, 1.5 }, { 0.5, 1.5 } });
        CHECK(four.p == doctest::Approx(0.5));
        CHECK(four.beta == doctest::Approx(3.0));
        auto one = family_jumbled({ { 0.3, 1.2 } });
        CHECK(one.beta == doctest::Approx(1.2));
        auto two = family_jumbled({ { 0.5, 1.0 }, { 0.5, 1.5 } });
        CHECK(two.beta == doctest::Approx(1.5 * std::sqrt(2.0)));
        CHECK_THROWS_AS(family_jumbled({ { 0.5, 1.0 }, { 0.4, 1.0 } }), InvalidInput);
        CHECK_THROWS_AS(make_jumbled_params(1.5, 1.0), InvalidInput);
        CHECK_THROWS_AS(make_jumbled_params(0.5, 0.5), InvalidInput);
    }

    TEST_CASE("joinedness from jumbledness")
    {
        CHECK(joined_from_jumbled({ 0.5, 1.0 }) == 3);
        CHECK(joined_from_jumbled({ 0.25, 1.0 }) == 5);
        CHECK(joined_from_jumbled({ 4.0 / 9.0, 2.0 }) == 5);
    }

    TEST_CASE("jumbled families are joined from the derived s on")
    {
        std::mt19937_64 rng{ 21 };
        for (int round = 0 ; round < 15 ; ++round) {
            int n = std::uniform_int_distribution<int>{ 4, 8 }(rng);
            auto f = oracle::random_family(n, 1, 0.6, rng);
            double p = 0.6;
            JumbledParams params{ p, std::max(1.0, max_jumbled_deficit(f, p).deficit) };
            REQUIRE(jumbled_check(f, params, JumbledMode::exhaustive).pass);
            for (int s = joined_from_jumbled(params) ; s <= n ; ++s)
                CHECK(is_joined(f, s).pass);
        }
    }
}
