/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rollback/errors.hh>
#include <rollback/generate.hh>
#include <rollback/io.hh>

#include <doctest.h>

using namespace rollback;

TEST_SUITE("io")
{
    TEST_CASE("family round trip")
    {
        FamilyFile file{ random_family(12, 2, 0.5, 4), std::nullopt, { } };
        auto j = family_to_json(file);
        auto back = family_from_json(j);
        REQUIRE(back.family.colours() == 2);
        for (int c = 0 ; c < 2 ; ++c)
            CHECK(back.family.graph(c).edges() == file.family.graph(c).edges());
        CHECK(family_to_json(back).dump() == j.dump());
    }

    TEST_CASE("distance family round trip")
    {
        auto df = build_distance_family({ 3, 2, { 1, 2 } });
        FamilyFile file{ df.family, df.spec, df.points };
        auto back = family_from_json(family_to_json(file));
        REQUIRE(back.spec);
        CHECK(back.spec->distances == std::vector<int>{ 1, 2 });
        CHECK(back.points == df.points);
    }

    TEST_CASE("malformed families")
    {
        CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 3, "t": 1, "edges": [[[0, 3]]]})")), InvalidInput);
        CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 3, "t": 2, "edges": [[[0, 1]]]})")), InvalidInput);
        CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 3})")), InvalidInput);
        CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 2, "t": 1, "edges": [[[1, 1]]]})")), InvalidInput);
    }

    TEST_CASE("target round trip")
    {
        auto sub = build_uniform_subdivision(3, alternating_pattern(5, 0, 1));
        TargetFile file{ "subdivision", sub.target, sub.branches, sub.decomposition(), false };
        auto back = target_file_from_json(target_file_to_json(file));
        CHECK(back.graph == sub.target);
        CHECK(back.subdivision().paths == sub.paths);

        auto j = target_file_to_json(file);
        j["paths"].erase(j["paths"].size() - 1);
        CHECK_THROWS_AS(target_file_from_json(j), InvalidInput);
    }

    TEST_CASE("embedding round trip")
    {
        auto host = std::make_shared<const GraphFamily>(complete_family(6));
        Embedding e{ host };
        e.add_root(3);
        e.add_child(0, 0, 5);
        auto j = embedding_to_json(e, Json{ { "seed", 0 } });
        auto back = embedding_from_json(j);
        CHECK(back.map == e.map());
        CHECK(back.target == e.target());
        CHECK(back.provenance["seed"] == 0);
        j["map"].push_back(1);
        CHECK_THROWS_AS(embedding_from_json(j), InvalidInput);
    }

    TEST_CASE("dot export")
    {
        auto f = random_family(5, 2, 0.5, 1);
        auto dot = family_to_dot(f, 1);
        CHECK(dot.rfind("graph G1 {", 0) == 0);
        CHECK(family_to_dot_merged(f).find("colour=") != std::string::npos);
        CHECK_THROWS_AS(family_to_dot(f, 2), InvalidInput);
        auto star = build_star_forest({ 2 });
        CHECK(target_to_dot(star.target).find("doublecircle") != std::string::npos);
    }
}
