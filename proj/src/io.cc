/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rollback/errors.hh>
#include <rollback/io.hh>

#include <fstream>
#include <sstream>

using std::string;
using std::vector;

namespace rollback
{
    using std::to_string;

    namespace
    {
        const char * const palette[] = { "black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan" };

        auto colour_name(int c) -> string
        {
            return palette[c % std::size(palette)];
        }

        template <typename F_>
        auto parse_guard(const string & what, F_ && f) -> decltype(f())
        {
            try {
                return f();
            }
            catch (const Json::exception & e) {
                throw InvalidInput{ what + ": " + e.what() };
            }
        }

        auto check_range(int v, int n, const string & what) -> void
        {
            if (v < 0 || v >= n)
                throw InvalidInput{ what + " " + to_string(v) + " out of range 0.." + to_string(n - 1) };
        }
    }

    auto family_to_json(const FamilyFile & file) -> Json
    {
        auto & family = file.family;
        Json j;
        j["n"] = family.size();
        j["t"] = family.colours();
        Json edges = Json::array();
        for (int c = 0 ; c < family.colours() ; ++c) {
            Json list = Json::array();
            for (auto [u, v] : family.graph(c).edges())
                list.push_back({ u, v });
            edges.push_back(std::move(list));
        }
        j["edges"] = std::move(edges);
        if (file.spec) {
            j["field"] = { { "q", file.spec->q }, { "d", file.spec->d } };
            j["distances"] = file.spec->distances;
            Json points = Json::array();
            for (auto & p : file.points)
                points.push_back(p.coords);
            j["points"] = std::move(points);
        }
        return j;
    }

    auto family_from_json(const Json & j) -> FamilyFile
    {
        return parse_guard("family", [&] {
            int n = j.at("n").get<int>(), t = j.at("t").get<int>();
            if (n < 0)
                throw InvalidInput{ "family: negative n" };
            if (t < 1)
                throw InvalidInput{ "family: t must be at least 1" };
            auto & edges = j.at("edges");
            if (! edges.is_array() || int(edges.size()) != t)
                throw InvalidInput{ "family: edges must hold one list per colour" };
            vector<Graph> graphs;
            for (int c = 0 ; c < t ; ++c) {
                vector<std::pair<int, int>> list;
                for (auto & e : edges[c]) {
                    int u = e.at(0).get<int>(), v = e.at(1).get<int>();
                    check_range(u, n, "family: vertex");
                    check_range(v, n, "family: vertex");
                    list.emplace_back(u, v);
                }
                graphs.emplace_back(n, list);
            }
            FamilyFile result;
            result.family = graphs.empty() ? GraphFamily{ } : GraphFamily{ std::move(graphs) };
            if (j.contains("field")) {
                DistanceGraphSpec spec{ j["field"].at("q").get<int>(), j["field"].at("d").get<int>(),
                    j.at("distances").get<vector<int>>() };
                spec.validate();
                if (int(spec.distances.size()) != t)
                    throw InvalidInput{ "family: one distance per colour required" };
                result.spec = spec;
                for (auto & p : j.at("points")) {
                    FieldPoint point{ spec.q, spec.d, p.get<vector<int>>() };
                    point.validate();
                    result.points.push_back(std::move(point));
                }
                if (int(result.points.size()) != n)
                    throw InvalidInput{ "family: one point per vertex required" };
            }
            return result;
        });
    }

    auto TargetFile::subdivision() const -> Subdivision
    {
        if (kind != "subdivision" || ! decomposition)
            throw InvalidInput{ "target is not a subdivision" };
        return Subdivision{ graph, branches, decomposition->paths };
    }

    auto target_to_json(const EdgeColouredRootedGraph & g) -> Json
    {
        Json j;
        j["n"] = g.size();
        Json edges = Json::array();
        for (auto & e : g.edges())
            edges.push_back({ e.u, e.v, e.colour });
        j["edges"] = std::move(edges);
        Json parents = Json::array();
        for (int v = 0 ; v < g.size() ; ++v) {
            auto p = g.parent(v);
            parents.push_back(p ? Json(p->vertex) : Json(nullptr));
        }
        j["parents"] = std::move(parents);
        return j;
    }

    auto target_graph_from_json(const Json & j) -> EdgeColouredRootedGraph
    {
        return parse_guard("target", [&] {
            int n = j.at("n").get<int>();
            if (n < 0)
                throw InvalidInput{ "target: negative n" };
            EdgeColouredRootedGraph g;
            for (int v = 0 ; v < n ; ++v)
                g.add_root();
            for (auto & e : j.at("edges")) {
                int u = e.at(0).get<int>(), v = e.at(1).get<int>(), c = e.at(2).get<int>();
                check_range(u, n, "target: vertex");
                check_range(v, n, "target: vertex");
                g.add_edge(u, v, c);
            }
            if (j.contains("parents")) {
                auto & parents = j["parents"];
                if (int(parents.size()) != n)
                    throw InvalidInput{ "target: one parent entry per vertex required" };
                for (int v = 0 ; v < n ; ++v)
                    if (! parents[v].is_null()) {
                        int p = parents[v].get<int>();
                        check_range(p, n, "target: parent");
                        g.set_parent(v, p);
                    }
            }
            g.validate();
            return g;
        });
    }

    auto target_file_to_json(const TargetFile & file) -> Json
    {
        Json j;
        j["kind"] = file.kind;
        j["labels"] = file.distance_labels ? "distance" : "colour";
        j["graph"] = target_to_json(file.graph);
        if (! file.branches.empty())
            j["branches"] = file.branches;
        if (file.decomposition) {
            j["base"] = file.decomposition->base;
            j["paths"] = file.decomposition->paths;
        }
        return j;
    }

    auto target_file_from_json(const Json & j) -> TargetFile
    {
        return parse_guard("target", [&] {
            TargetFile result;
            result.kind = j.value("kind", string{ "general" });
            result.distance_labels = j.value("labels", string{ "colour" }) == "distance";
            result.graph = target_graph_from_json(j.at("graph"));
            if (j.contains("branches"))
                result.branches = j["branches"].get<vector<int>>();
            if (j.contains("paths")) {
                PathConstructibleDecomposition dec;
                dec.base = j.value("base", vector<int>{ });
                dec.paths = j["paths"].get<vector<vector<int>>>();
                auto valid = validate_path_constructible(result.graph, dec);
                if (! valid.ok)
                    throw InvalidInput{ "target: decomposition violates clause " + valid.clause + ": " + valid.message };
                result.decomposition = std::move(dec);
            }
            return result;
        });
    }

    auto step_to_json(const Step & step) -> Json
    {
        Json j;
        j["kind"] = step.kind;
        j["data"] = step.data;
        if (! step.note.empty())
            j["note"] = step.note;
        return j;
    }

    auto coloured_set_to_json(const ColouredVertexSet & xs) -> Json
    {
        Json j = Json::array();
        for (auto & x : xs)
            j.push_back({ x.vertex, x.colour });
        return j;
    }

    auto goodness_to_json(const GoodnessReport & report) -> Json
    {
        Json j;
        j["pass"] = report.pass;
        j["mode"] = to_string(report.mode);
        j["proof"] = report.proof();
        j["bound"] = report.bound;
        j["sets_checked"] = report.sets_checked;
        if (report.min_residual)
            j["min_residual"] = *report.min_residual;
        if (report.witness)
            j["witness"] = coloured_set_to_json(*report.witness);
        if (report.witness_residual)
            j["witness_residual"] = *report.witness_residual;
        return j;
    }

    auto cert_to_json(const CertReport & report) -> Json
    {
        Json j;
        j["pass"] = report.pass;
        j["method"] = to_string(report.method);
        j["certifying"] = report.certifying();
        if (report.measured)
            j["measured"] = *report.measured;
        if (report.witness) {
            j["witness"]["left"] = coloured_set_to_json(report.witness->left);
            j["witness"]["right"] = report.witness->right;
        }
        return j;
    }

    auto embedding_to_json(const Embedding & e, Json provenance) -> Json
    {
        Json j;
        j["host_n"] = e.host().size();
        j["target"] = target_to_json(e.target());
        j["map"] = e.map();
        j["provenance"] = std::move(provenance);
        return j;
    }

    auto embedding_from_json(const Json & j) -> EmbeddingFile
    {
        return parse_guard("embedding", [&] {
            EmbeddingFile result;
            result.target = target_graph_from_json(j.at("target"));
            result.map = j.at("map").get<vector<int>>();
            if (int(result.map.size()) != result.target.size())
                throw InvalidInput{ "embedding: map has " + to_string(result.map.size()) + " entries for "
                    + to_string(result.target.size()) + " target vertices" };
            result.provenance = j.value("provenance", Json::object());
            return result;
        });
    }

    auto pipeline_provenance(const PipelineResult & result) -> Json
    {
        Json j;
        j["s"] = result.s;
        j["host_certified"] = result.host_certified;
        j["carving_skipped"] = result.regions.skipped;
        j["blocker"] = coloured_set_to_json(result.regions.blocker);
        j["working_vertices"] = result.working_to_host;
        Json log = Json::array();
        for (auto & step : result.log)
            log.push_back(step_to_json(step));
        j["log"] = std::move(log);
        j["warnings"] = result.warnings;
        Json milestones = Json::array();
        for (auto & m : result.milestones)
            milestones.push_back(goodness_to_json(m));
        j["milestones"] = std::move(milestones);
        return j;
    }

    auto family_to_dot(const GraphFamily & family, int colour) -> string
    {
        if (colour < 0 || colour >= family.colours())
            throw InvalidInput{ "no colour " + to_string(colour) };
        std::ostringstream out;
        out << "graph G" << colour << " {\n";
        for (int v = 0 ; v < family.size() ; ++v)
            out << "  " << v << ";\n";
        for (auto [u, v] : family.graph(colour).edges())
            out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }

    auto family_to_dot_merged(const GraphFamily & family) -> string
    {
        std::ostringstream out;
        out << "graph family {\n";
        for (int v = 0 ; v < family.size() ; ++v)
            out << "  " << v << ";\n";
        for (int c = 0 ; c < family.colours() ; ++c)
            for (auto [u, v] : family.graph(c).edges())
                out << "  " << u << " -- " << v << " [colour=" << c << ", color=" << colour_name(c) << "];\n";
        out << "}\n";
        return out.str();
    }

    auto target_to_dot(const EdgeColouredRootedGraph & g) -> string
    {
        std::ostringstream out;
        out << "graph target {\n";
        for (int v = 0 ; v < g.size() ; ++v)
            out << "  " << v << (g.is_root(v) ? " [shape=doublecircle]" : "") << ";\n";
        for (auto & e : g.edges())
            out << "  " << e.u << " -- " << e.v << " [colour=" << e.colour << ", color=" << colour_name(e.colour) << "];\n";
        out << "}\n";
        return out.str();
    }

    auto read_json_file(const string & path) -> Json
    {
        std::ifstream in{ path };
        if (! in)
            throw InvalidInput{ "cannot open " + path };
        try {
            return Json::parse(in);
        }
        catch (const Json::exception & e) {
            throw InvalidInput{ path + ": " + e.what() };
        }
    }

    auto write_text_file(const string & path, const string & text) -> void
    {
        std::ofstream out{ path };
        if (! out)
            throw InvalidInput{ "cannot write " + path };
        out << text;
    }
}
