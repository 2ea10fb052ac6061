/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rollback/bootstrap.hh>
#include <rollback/certify.hh>
#include <rollback/engine.hh>
#include <rollback/errors.hh>
#include <rollback/ffdist.hh>
#include <rollback/generate.hh>
#include <rollback/io.hh>
#include <rollback/targets.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace rollback;

using std::cerr;
using std::cout;
using std::map;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    constexpr int exit_pass = 0, exit_fail = 1, exit_usage = 2;

    /// A negative result: reported, exit 1.
    struct Negative
    {
        string message;
        Json report;
    };

    struct Usage : Error
    {
        using Error::Error;
    };

    /// key=value arguments, each key used at most once and only from the allowed set.
    class Params
    {
    public:
        Params(const vector<string> & args, std::set<string> allowed)
        {
            for (auto & a : args) {
                auto eq = a.find('=');
                if (eq == string::npos || eq == 0)
                    throw Usage{ "expected key=value, got '" + a + "'" };
                auto key = a.substr(0, eq);
                if (! allowed.contains(key))
                    throw Usage{ "unknown parameter '" + key + "'" };
                if (_values.contains(key))
                    throw Usage{ "parameter '" + key + "' given twice" };
                _values[key] = a.substr(eq + 1);
            }
        }

        auto has(const string & key) const -> bool { return _values.contains(key); }

        auto str(const string & key, const string & fallback) const -> string
        {
            auto it = _values.find(key);
            return it == _values.end() ? fallback : it->second;
        }

        auto integer(const string & key, long fallback) const -> long
        {
            if (! has(key))
                return fallback;
            try {
                std::size_t used = 0;
                long v = std::stol(_values.at(key), &used);
                if (used != _values.at(key).size())
                    throw std::invalid_argument{ key };
                return v;
            }
            catch (const std::exception &) {
                throw Usage{ "parameter '" + key + "' must be an integer" };
            }
        }

        auto real(const string & key, double fallback) const -> double
        {
            if (! has(key))
                return fallback;
            try {
                std::size_t used = 0;
                double v = std::stod(_values.at(key), &used);
                if (used != _values.at(key).size())
                    throw std::invalid_argument{ key };
                return v;
            }
            catch (const std::exception &) {
                throw Usage{ "parameter '" + key + "' must be a number" };
            }
        }

        auto list(const string & key) const -> vector<int>
        {
            vector<int> result;
            std::stringstream in{ str(key, "") };
            string item;
            while (std::getline(in, item, ','))
                try {
                    result.push_back(std::stoi(item));
                }
                catch (const std::exception &) {
                    throw Usage{ "parameter '" + key + "' must be a comma-separated integer list" };
                }
            return result;
        }

        auto required(const string & key) const -> void
        {
            if (! has(key))
                throw Usage{ "missing parameter '" + key + "'" };
        }

    private:
        map<string, string> _values;
    };

    auto env_cap(const char * name, std::uint64_t fallback) -> std::uint64_t
    {
        if (auto v = std::getenv(name)) {
            try {
                return std::stoull(v);
            }
            catch (const std::exception &) {
                throw Usage{ string{ name } + " must be an integer" };
            }
        }
        return fallback;
    }

    auto emit(const Json & j, const string & path) -> void
    {
        auto text = j.dump(2) + "\n";
        if (path.empty() || path == "-")
            cout << text;
        else
            write_text_file(path, text);
    }

    struct Globals
    {
        std::uint64_t seed = 0;
        int threads = 1;
        string output;
    };

    auto load_family(const string & path) -> FamilyFile
    {
        return family_from_json(read_json_file(path));
    }

    auto cmd_gen(const Globals & g, const string & kind, const vector<string> & args) -> int
    {
        FamilyFile file;
        if (kind == "ffdist") {
            Params p{ args, { "q", "d", "R" } };
            p.required("q");
            p.required("R");
            auto distances = p.list("R");
            std::sort(distances.begin(), distances.end());
            DistanceGraphSpec spec{ int(p.integer("q", 3)), int(p.integer("d", 2)), distances };
            try {
                spec.validate();
            }
            catch (const PreconditionError & e) {
                throw Usage{ e.what() };
            }
            int cap = int(env_cap("ROLLBACK_VERTEX_CAP", distance_vertex_cap));
            auto family = build_distance_family(spec, cap);
            file.family = family.family;
            file.spec = spec;
            file.points = family.points;
        }
        else {
            Params p{ args, { "n", "t", "p", "isolated" } };
            p.required("n");
            int n = int(p.integer("n", 0)), t = int(p.integer("t", 1)), isolated = int(p.integer("isolated", 0));
            if (n < 1 || t < 1 || isolated < 0)
                throw Usage{ "need n >= 1, t >= 1 and isolated >= 0" };
            vector<Graph> graphs;
            for (int i = 0 ; i < t ; ++i) {
                Graph base;
                if (kind == "complete")
                    base = Graph::complete(n);
                else if (kind == "minus-matching") {
                    if (n % 2)
                        throw Usage{ "minus-matching needs an even n" };
                    base = complete_minus_matching(n);
                }
                else if (kind == "random")
                    base = random_graph(n, p.real("p", 0.5), g.seed + i);
                else
                    throw Usage{ "unknown family kind '" + kind + "'" };
                graphs.push_back(with_isolated(base, isolated));
            }
            file.family = GraphFamily{ std::move(graphs) };
        }
        auto j = family_to_json(file);
        j["generator"] = { { "kind", kind }, { "args", args }, { "seed", g.seed } };
        emit(j, g.output);
        cerr << "family: n = " << file.family.size() << ", t = " << file.family.colours() << "\n";
        return exit_pass;
    }

    auto cmd_certify(const Globals & g, const string & what, const string & family_path, const vector<string> & args) -> int
    {
        auto file = load_family(family_path);
        auto & family = file.family;
        CertifyOptions co;
        co.threads = g.threads;
        co.seed = g.seed;
        co.joined_cap = env_cap("ROLLBACK_JOINED_CAP", co.joined_cap);

        Json report;
        report["seed"] = g.seed;
        bool pass = true;
        try {
            if (what == "joined") {
                Params p{ args, { "s", "cap" } };
                p.required("s");
                co.joined_cap = p.integer("cap", co.joined_cap);
                auto r = is_joined(family, int(p.integer("s", 1)), co);
                report["joined"] = cert_to_json(r);
                report["s"] = p.integer("s", 1);
                pass = r.pass;
            }
            else if (what == "min-joined") {
                Params p{ args, { "max", "cap" } };
                co.joined_cap = p.integer("cap", co.joined_cap);
                auto s = min_joined(family, int(p.integer("max", family.size())), co);
                report["min_joined"] = s ? Json(*s) : Json(nullptr);
                pass = s.has_value();
            }
            else if (what == "spectral") {
                Params p{ args, { } };
                vector<JumbledParams> members;
                Json list = Json::array();
                for (int c = 0 ; c < family.colours() ; ++c) {
                    auto m = spectral_jumbled(family.graph(c), co);
                    members.push_back(m);
                    list.push_back({ { "p", m.p }, { "beta", m.beta } });
                }
                auto f = family_jumbled(members);
                report["members"] = std::move(list);
                report["family"] = { { "p", f.p }, { "beta", f.beta } };
                report["joined_from_jumbled"] = joined_from_jumbled(f);
            }
            else if (what == "exhaustive" || what == "sampled") {
                Params p{ args, { "p", "beta", "samples" } };
                p.required("p");
                p.required("beta");
                co.samples = p.integer("samples", co.samples);
                auto r = jumbled_check(family, make_jumbled_params(p.real("p", 0), p.real("beta", 0)),
                        what == "exhaustive" ? JumbledMode::exhaustive : JumbledMode::sampled, co);
                report["jumbled"] = cert_to_json(r);
                pass = r.pass;
            }
            else
                throw Usage{ "unknown certification '" + what + "'" };
        }
        catch (const PreconditionError & e) {
            throw Usage{ e.what() };
        }
        catch (const CapExceeded & e) {
            throw Usage{ e.what() };
        }
        report["pass"] = pass;
        emit(report, g.output);
        return pass ? exit_pass : exit_fail;
    }

    auto make_pattern(const Params & p, int length) -> PathPattern
    {
        auto kind = p.str("pattern", "constant");
        auto colours = p.list("colours");
        if (colours.empty())
            colours.push_back(int(p.integer("colour", 0)));
        if (kind == "constant")
            return constant_pattern(length, colours[0]);
        if (kind == "alternating") {
            if (colours.size() < 2)
                throw Usage{ "alternating pattern needs colours=a,b" };
            return alternating_pattern(length, colours[0], colours[1]);
        }
        if (kind == "random") {
            auto pattern = random_pattern(length, int(colours.size()), std::uint64_t(p.integer("pattern_seed", 0)));
            for (int & c : pattern.colours)
                c = colours[c];
            return pattern;
        }
        throw Usage{ "unknown pattern '" + kind + "'" };
    }

    auto cmd_target(const Globals & g, const string & kind, const vector<string> & args) -> int
    {
        TargetFile file;
        file.kind = kind;
        if (kind == "subdivision") {
            Params p{ args, { "K", "ell", "s", "D", "pattern", "colour", "colours", "labels", "pattern_seed" } };
            p.required("K");
            int k = int(p.integer("K", 3));
            int ell;
            if (p.has("ell"))
                ell = int(p.integer("ell", 3));
            else if (p.has("s") && p.has("D"))
                ell = required_path_length(int(p.integer("s", 1)), int(p.integer("D", 3)));
            else
                throw Usage{ "give ell= or both s= and D=" };
            if (k < 1 || ell < 1)
                throw Usage{ "need K >= 1 and ell >= 1" };
            auto pattern = make_pattern(p, ell);
            auto sub = build_uniform_subdivision(k, pattern);
            file.graph = sub.target;
            file.branches = sub.branches;
            file.decomposition = sub.decomposition();
            file.distance_labels = p.str("labels", "colour") == "distance";
        }
        else if (kind == "star-forest") {
            Params p{ args, { "degrees", "colour" } };
            p.required("degrees");
            auto degrees = p.list("degrees");
            vector<vector<int>> colourings;
            for (int d : degrees)
                colourings.push_back(vector<int>(std::max(d, 0), int(p.integer("colour", 0))));
            auto forest = build_star_forest(degrees, colourings);
            file.graph = forest.target;
            file.branches = forest.centres;
        }
        else
            throw Usage{ "unknown target kind '" + kind + "'" };

        emit(target_file_to_json(file), g.output);
        cerr << "target: " << file.graph.size() << " vertices, " << file.graph.edge_count() << " edges\n";
        return exit_pass;
    }

    auto cmd_embed(const Globals & g, const string & family_path, const string & target_path, const vector<string> & args) -> int
    {
        auto family_file = load_family(family_path);
        auto target = target_file_from_json(read_json_file(target_path));
        Params p{ args, { "s", "D", "mode", "fallback", "relaxed", "cap", "milestones", "pipeline", "c", "p", "beta",
            "shuffle", "certify", "attempts", "anchors" } };

        PipelineOptions options;
        auto mode_name = p.str("mode", "exact");
        try {
            options.engine.mode = parse_verify_mode(mode_name);
        }
        catch (const Error & e) {
            throw Usage{ e.what() };
        }
        bool best_effort = options.engine.mode == VerifyMode::best_effort;
        options.engine.cap = std::uint64_t(p.integer("cap", long(env_cap("ROLLBACK_CAP", options.engine.cap))));
        options.engine.threads = g.threads;
        options.engine.seed = g.seed;
        options.engine.shuffle = p.integer("shuffle", 0) != 0;
        options.engine.best_effort_fallback = p.integer("fallback", best_effort) != 0;
        options.engine.enforce_hypotheses = p.integer("relaxed", best_effort) == 0;
        options.certify_host = p.integer("certify", 1) != 0;
        options.joined_cap = env_cap("ROLLBACK_JOINED_CAP", options.joined_cap);
        options.blocker.cap = options.engine.cap;
        options.blocker.threads = g.threads;
        options.verify_milestones = p.integer("milestones", 0) != 0;
        try {
            options.anchors = parse_anchor_policy(p.str("anchors", best_effort ? "spread" : "lowest"));
        }
        catch (const Error & e) {
            throw Usage{ e.what() };
        }
        GoodnessParams params{ int(p.integer("s", 0)), int(p.integer("D", 3)) };

        Json provenance;
        provenance["command"] = "embed";
        provenance["seed"] = g.seed;
        provenance["mode"] = to_string(options.engine.mode);
        provenance["D"] = params.d;

        auto host = std::make_shared<const GraphFamily>(family_file.family);
        std::optional<Embedding> result;
        auto pipeline = p.str("pipeline", target.distance_labels ? "distance" : "joined");
        try {
            if (pipeline == "distance") {
                if (! family_file.spec)
                    throw Usage{ "distance-labelled target needs a distance family" };
                PointSet points{ family_file.spec->q, family_file.spec->d, family_file.points };
                DistanceEmbeddingOptions dopts;
                dopts.pipeline = options;
                dopts.params = params;
                dopts.attempts = int(p.integer("attempts", best_effort ? 32 : 1));
                auto out = embed_distance_subdivision(points, *family_file.spec, target.subdivision(), dopts);
                // restricted ids are the family's vertices sorted by point index
                map<int, int> vertex_of;
                for (int v = 0 ; v < int(family_file.points.size()) ; ++v)
                    vertex_of[family_file.points[v].index()] = v;
                vector<int> map_to_family;
                for (auto & pt : out.image)
                    map_to_family.push_back(vertex_of.at(pt.index()));
                result.emplace(host, out.result.embedding.target(), map_to_family);
                provenance["pipeline"] = pipeline_provenance(out.result);
                provenance["s"] = out.s;
                provenance["s_measured"] = out.s_measured;
                provenance["warnings"] = out.warnings;
                Json pts = Json::array();
                for (auto & pt : out.image)
                    pts.push_back(pt.coords);
                provenance["points"] = std::move(pts);
                provenance["realised_distances"] = out.realised;
            }
            else if (pipeline == "joined") {
                if (params.s < 1)
                    throw Usage{ "joined pipeline needs s >= 1" };
                PipelineResult out = [&] {
                    if (target.kind == "subdivision")
                        return embed_subdivision_joined(host, target.subdivision(), params, options);
                    if (! target.decomposition)
                        throw Usage{ "target has no path-constructible decomposition" };
                    auto roots = target.graph.roots();
                    return embed_rooted_forest_anchored(host, target.graph, *target.decomposition, roots, { }, params, options);
                }();
                result.emplace(out.embedding);
                provenance["s"] = params.s;
                provenance["pipeline"] = pipeline_provenance(out);
            }
            else if (pipeline == "jumbled") {
                p.required("c");
                p.required("p");
                p.required("beta");
                auto jp = make_jumbled_params(p.real("p", 0), p.real("beta", 0));
                auto out = embed_subdivision_jumbled(host, target.subdivision(), p.real("c", 0.5), jp, params.d, options);
                result.emplace(out.embedding);
                provenance["s"] = out.s;
                provenance["pipeline"] = pipeline_provenance(out);
            }
            else
                throw Usage{ "unknown pipeline '" + pipeline + "'" };
        }
        catch (const PreconditionError & e) {
            throw Negative{ string{ "precondition failed: " } + e.what(), { { "error", "precondition" }, { "message", e.what() } } };
        }
        catch (const SearchFailure & e) {
            throw Negative{ string{ "search failed: " } + e.what(), { { "error", "search" }, { "message", e.what() } } };
        }
        catch (const HostNotJoined & e) {
            throw Negative{ string{ "host not joined: " } + e.what(), { { "error", "not-joined" }, { "message", e.what() } } };
        }
        catch (const CapExceeded & e) {
            throw Negative{ string{ "cap exceeded: " } + e.what(), { { "error", "cap" }, { "message", e.what() } } };
        }

        emit(embedding_to_json(*result, provenance), g.output);
        cerr << "embedded " << result->target().size() << " target vertices\n";
        return exit_pass;
    }

    auto cmd_verify(const Globals & g, const string & family_path, const string & embedding_path,
            bool goodness, const vector<string> & args) -> int
    {
        auto family_file = load_family(family_path);
        auto file = embedding_from_json(read_json_file(embedding_path));
        Params p{ args, { "s", "D", "bound", "mode", "cap" } };
        auto & family = family_file.family;
        int n = family.size();

        Json report;
        auto fail = [&] (const string & what) -> int {
            report["pass"] = false;
            report["violation"] = what;
            emit(report, g.output);
            cerr << "verify: " << what << "\n";
            return exit_fail;
        };

        vector<int> owner(n, -1);
        for (int h = 0 ; h < file.target.size() ; ++h) {
            int v = file.map[h];
            if (v < 0 || v >= n)
                return fail("target vertex " + to_string(h) + " maps outside the host");
            if (owner[v] >= 0)
                return fail("target vertices " + to_string(owner[v]) + " and " + to_string(h) + " share host vertex " + to_string(v));
            owner[v] = h;
        }
        for (auto & e : file.target.edges()) {
            if (e.colour >= family.colours())
                return fail("edge " + to_string(e.u) + "-" + to_string(e.v) + " has colour " + to_string(e.colour) + " outside the family");
            if (! family.graph(e.colour).adjacent(file.map[e.u], file.map[e.v]))
                return fail("edge " + to_string(e.u) + "-" + to_string(e.v) + " of colour " + to_string(e.colour)
                        + " maps to non-edge " + to_string(file.map[e.u]) + "-" + to_string(file.map[e.v]));
            if (family_file.spec) {
                int norm = ff_norm(family_file.points[file.map[e.u]], family_file.points[file.map[e.v]]);
                if (norm != family_file.spec->distances[e.colour])
                    return fail("edge " + to_string(e.u) + "-" + to_string(e.v) + " realises distance " + to_string(norm)
                            + ", expected " + to_string(family_file.spec->distances[e.colour]));
            }
        }
        report["injective"] = true;
        report["colours"] = true;
        if (family_file.spec)
            report["distances"] = true;

        if (goodness) {
            p.required("s");
            GoodnessParams params{ int(p.integer("s", 1)), int(p.integer("D", 3)) };
            VerifyOptions vo;
            try {
                vo.mode = parse_verify_mode(p.str("mode", "exact"));
            }
            catch (const Error & e) {
                throw Usage{ e.what() };
            }
            vo.bound = int(p.integer("bound", params.bound()));
            vo.cap = std::uint64_t(p.integer("cap", long(env_cap("ROLLBACK_CAP", vo.cap))));
            vo.threads = g.threads;
            Embedding e{ std::make_shared<const GraphFamily>(family), file.target, file.map };
            GoodnessReport r;
            try {
                r = verify_good(e, params, vo);
            }
            catch (const CapExceeded & ex) {
                throw Usage{ ex.what() };
            }
            report["goodness"] = goodness_to_json(r);
            if (! r.pass) {
                string witness;
                for (auto & x : *r.witness)
                    witness += " (" + to_string(x.vertex) + "," + to_string(x.colour) + ")";
                return fail("residual " + to_string(*r.witness_residual) + " < 0 at X =" + witness);
            }
        }
        report["pass"] = true;
        emit(report, g.output);
        return exit_pass;
    }

    auto cmd_export(const string & path, const string & prefix) -> int
    {
        auto j = read_json_file(path);
        if (prefix.empty())
            throw Usage{ "--dot PREFIX is required" };
        if (j.contains("t") && j.contains("edges")) {
            auto file = family_from_json(j);
            for (int c = 0 ; c < file.family.colours() ; ++c)
                write_text_file(prefix + "_colour" + to_string(c) + ".dot", family_to_dot(file.family, c));
            write_text_file(prefix + "_merged.dot", family_to_dot_merged(file.family));
        }
        else if (j.contains("graph"))
            write_text_file(prefix + ".dot", target_to_dot(target_file_from_json(j).graph));
        else if (j.contains("map"))
            write_text_file(prefix + ".dot", target_to_dot(embedding_from_json(j).target));
        else
            throw Usage{ path + " is not a family, target or embedding file" };
        return exit_pass;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Roll-back embeddings of edge-coloured graphs into graph families" };
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--seed", globals.seed, "Seed for all randomness")->default_val(0);
    app.add_option("--threads", globals.threads, "Worker threads for exhaustive checks")->default_val(1)
        ->check(CLI::PositiveNumber);
    app.add_option("-o,--output", globals.output, "Output file (stdout when absent)");

    vector<string> args;
    string family_path, target_path, embedding_path, file_path, prefix;

    auto gen = app.add_subcommand("gen", "Generate a host family");
    auto gen_kinds = gen->add_option_group("kind");
    bool ffdist = false, complete = false, random = false, minus_matching = false;
    gen_kinds->add_flag("--ffdist", ffdist, "Distance family over F_q^d: q= d= R=r1,r2");
    gen_kinds->add_flag("--complete", complete, "t copies of K_n: n= t= isolated=");
    gen_kinds->add_flag("--random", random, "t independent G(n,p): n= t= p= isolated=");
    gen_kinds->add_flag("--minus-matching", minus_matching, "K_n minus a perfect matching: n=");
    gen_kinds->require_option(1);
    gen->add_option("params", args, "key=value parameters");

    auto certify = app.add_subcommand("certify", "Certify joinedness or jumbledness");
    certify->add_option("family", family_path, "Family file")->required();
    auto cert_kinds = certify->add_option_group("check");
    bool joined = false, min_joined_flag = false;
    string jumbled_mode;
    cert_kinds->add_flag("--joined", joined, "is_joined at s=");
    cert_kinds->add_flag("--min-joined", min_joined_flag, "Smallest s with the family s-joined, up to max=");
    cert_kinds->add_option("--jumbled", jumbled_mode, "spectral, exhaustive or sampled (p= beta=)");
    cert_kinds->require_option(1);
    certify->add_option("params", args, "key=value parameters");

    auto target = app.add_subcommand("target", "Build a target graph");
    string target_kind;
    target->add_option("kind", target_kind, "subdivision or star-forest")->required();
    target->add_option("params", args, "key=value parameters");

    auto embed = app.add_subcommand("embed", "Embed a target into a family");
    embed->add_option("family", family_path, "Family file")->required();
    embed->add_option("target", target_path, "Target file")->required();
    embed->add_option("params", args, "key=value parameters");

    auto verify = app.add_subcommand("verify", "Revalidate an embedding");
    bool goodness = false;
    verify->add_option("family", family_path, "Family file")->required();
    verify->add_option("embedding", embedding_path, "Embedding file")->required();
    verify->add_flag("--goodness", goodness, "Also check (s, D)-goodness: s= D= bound= mode=");
    verify->add_option("params", args, "key=value parameters");

    auto exporter = app.add_subcommand("export", "Export a family, target or embedding as DOT");
    exporter->add_option("file", file_path, "Input file")->required();
    exporter->add_option("--dot", prefix, "Output prefix")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*gen) {
            string kind = ffdist ? "ffdist" : complete ? "complete" : random ? "random" : "minus-matching";
            return cmd_gen(globals, kind, args);
        }
        if (*certify) {
            string what = joined ? "joined" : min_joined_flag ? "min-joined" : jumbled_mode;
            return cmd_certify(globals, what, family_path, args);
        }
        if (*target)
            return cmd_target(globals, target_kind, args);
        if (*embed)
            return cmd_embed(globals, family_path, target_path, args);
        if (*verify)
            return cmd_verify(globals, family_path, embedding_path, goodness, args);
        if (*exporter)
            return cmd_export(file_path, prefix);
    }
    catch (const Negative & n) {
        cerr << n.message << "\n";
        auto report = n.report;
        report["pass"] = false;
        report["seed"] = globals.seed;
        emit(report, globals.output);
        return exit_fail;
    }
    catch (const Usage & e) {
        cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const InvalidInput & e) {
        cerr << "invalid input: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const PreconditionError & e) {
        cerr << "precondition failed: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const CapExceeded & e) {
        cerr << "cap exceeded: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const Error & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}
