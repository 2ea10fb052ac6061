/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rollback/bootstrap.hh>
#include <rollback/enumerate.hh>
#include <rollback/errors.hh>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

using std::optional;
using std::shared_ptr;
using std::span;
using std::string;
using std::vector;

namespace rollback
{
    using std::to_string;

    namespace
    {
        auto describe(const ColouredVertexSet & xs) -> string
        {
            string result = "{";
            for (auto & x : xs) {
                if (result.size() > 1)
                    result += ", ";
                result += "(" + to_string(x.vertex) + "," + to_string(x.colour) + ")";
            }
            return result + "}";
        }

        /// Throws or records a warning, depending on enforcement.
        struct Hypotheses
        {
            bool enforce;
            vector<string> & warnings;

            auto check(bool holds, const string & what) -> void
            {
                if (holds)
                    return;
                if (enforce)
                    throw PreconditionError{ what };
                warnings.push_back("hypothesis relaxed: " + what);
            }
        };

        auto all_vertices(int n) -> vector<int>
        {
            vector<int> result(n);
            for (int v = 0 ; v < n ; ++v)
                result[v] = v;
            return result;
        }

        auto skipped_regions(int n) -> CarvedRegions
        {
            CarvedRegions result;
            result.v_prime = all_vertices(n);
            result.w = result.v_prime;
            result.skipped = true;
            return result;
        }

        /// Carving, or V' = W = V with a warning when relaxed and carving is impossible.
        auto carve_or_skip(const GraphFamily & family, const GoodnessParams & params, span<const int> anchors,
                const PipelineOptions & options, vector<string> & warnings) -> CarvedRegions
        {
            try {
                return carve_regions(family, params, anchors, options.blocker);
            }
            catch (const Error & e) {
                if (options.engine.enforce_hypotheses)
                    throw;
                warnings.push_back(string{ "hypothesis relaxed: carving skipped, V' = W = V (" } + e.what() + ")");
                return skipped_regions(family.size());
            }
        }

        /// Runs is_joined when asked to; returns whether the host is certified s-joined.
        auto certify_joined(const GraphFamily & family, int s, const PipelineOptions & options,
                Hypotheses & hypotheses) -> bool
        {
            if (options.engine.host_certified)
                return true;
            if (! options.certify_host)
                return false;
            try {
                CertifyOptions co;
                co.joined_cap = options.joined_cap;
                co.threads = options.engine.threads;
                auto report = is_joined(family, s, co);
                if (report.pass)
                    return true;
                if (hypotheses.enforce)
                    throw HostNotJoined{ "host is not " + to_string(s) + "-joined: X = " + describe(report.witness->left)
                        + " has " + to_string(report.witness->right.size()) + " non-neighbours" };
                hypotheses.warnings.push_back("hypothesis relaxed: host is not " + to_string(s) + "-joined");
            }
            catch (const CapExceeded & e) {
                hypotheses.warnings.push_back(string{ "joinedness not certified: " } + e.what());
            }
            catch (const PreconditionError & e) {
                hypotheses.check(false, e.what());
            }
            return false;
        }

        auto spread_anchors(const GraphFamily & family, const vector<int> & pool, int count) -> vector<int>
        {
            int n = family.size();
            Bitset blocked(n);
            vector<int> result;
            vector<char> taken(n, 0);
            for (int v : pool) {
                if (int(result.size()) == count)
                    break;
                Bitset closed(n);
                closed.set(v);
                for (int c = 0 ; c < family.colours() ; ++c)
                    closed |= family.row(v, c);
                if (closed.count_and(blocked) > 0)
                    continue;
                blocked |= closed;
                result.push_back(v);
                taken[v] = 1;
            }
            for (int v : pool) {
                if (int(result.size()) == count)
                    break;
                if (! taken[v])
                    result.push_back(v);
            }
            return result;
        }

        auto translate(const vector<int> & map, const vector<int> & to_host) -> vector<int>
        {
            vector<int> result;
            for (int v : map)
                result.push_back(to_host[v]);
            return result;
        }

        auto milestone_hook(const PipelineOptions & options, vector<GoodnessReport> & milestones) -> MilestoneHook
        {
            if (! options.verify_milestones)
                return { };
            return [&milestones] (Engine & engine, const string &) {
                try {
                    milestones.push_back(engine.verify(VerifyMode::exact));
                }
                catch (const CapExceeded &) {
                    milestones.push_back(engine.verify());
                }
            };
        }
    }

    auto parse_anchor_policy(const string & name) -> AnchorPolicy
    {
        if (name == "lowest")
            return AnchorPolicy::lowest;
        if (name == "spread")
            return AnchorPolicy::spread;
        throw InvalidInput{ "unknown anchor policy '" + name + "'" };
    }

    auto find_blocker(const GraphFamily & family, span<const int> y0, const GoodnessParams & params,
            const BlockerOptions & options) -> ColouredVertexSet
    {
        params.validate();
        int s = params.s, d = params.d;
        if (int(y0.size()) < 3 * s * d + 4 * s)
            throw PreconditionError{ "|Y_0| = " + to_string(y0.size()) + " is below 3sD + 4s = " + to_string(3 * s * d + 4 * s) };
        Bitset y0_set = to_bitset(family.size(), y0);

        vector<int> absorbed;           // flat indices in U_0
        vector<ColouredVertexSet> trace;
        while (true) {
            vector<char> in_u(family.left_size(), 0);
            Bitset y = y0_set;
            for (int f : absorbed) {
                in_u[f] = 1;
                y.reset(family.coloured(f).vertex);
            }
            vector<int> avail;
            for (int f = 0 ; f < family.left_size() ; ++f)
                if (! in_u[f])
                    avail.push_back(f);

            int bound = 2 * s;
            auto count = subset_count(int(avail.size()), 1, bound);
            if (count > options.cap)
                throw CapExceeded{ "blocker search needs " + to_string(count) + " sets, cap is " + to_string(options.cap) };

            int parts = options.threads > 1 ? options.threads * 4 : 1;
            vector<optional<vector<int>>> found(parts);
            run_partitioned(parts, options.threads, [&] (int part, int part_count) {
                vector<Bitset> unions(bound + 1, Bitset(family.size())), verts(bound + 1, Bitset(family.size()));
                vector<int> items(bound + 1);
                Bitset scratch(family.size());
                enumerate_subsets(int(avail.size()), bound, part, part_count,
                        [&] (int depth, int i) {
                            items[depth] = avail[i];
                            unions[depth] = unions[depth - 1];
                            unions[depth] |= family.row(avail[i]);
                            verts[depth] = verts[depth - 1];
                            verts[depth].set(family.coloured(avail[i]).vertex);
                        },
                        [&] (int depth) {
                            scratch = unions[depth];
                            scratch &= y;
                            scratch.subtract(verts[depth]);
                            if (scratch.count() < d * depth) {
                                found[part] = vector<int>(items.begin() + 1, items.begin() + depth + 1);
                                return Visit::stop;
                            }
                            return Visit::descend;
                        });
            });

            optional<vector<int>> first;
            for (auto & f : found)
                if (f && (! first || *f < *first))
                    first = f;
            if (! first)
                break;

            vector<ColouredVertex> xs;
            for (int f : *first) {
                absorbed.push_back(f);
                xs.push_back(family.coloured(f));
            }
            trace.emplace_back(std::move(xs));
            if (int(absorbed.size()) > s) {
                string text;
                for (auto & x : trace)
                    text += " " + describe(x);
                throw HostNotJoined{ "blocker grew to " + to_string(absorbed.size()) + " > s = " + to_string(s)
                    + " pairs; absorbed sets:" + text };
            }
        }

        vector<ColouredVertex> result;
        for (int f : absorbed)
            result.push_back(family.coloured(f));
        return ColouredVertexSet{ std::move(result) };
    }

    auto carve_regions(const GraphFamily & family, const GoodnessParams & params, span<const int> anchors,
            const BlockerOptions & options) -> CarvedRegions
    {
        params.validate();
        int n = family.size(), s = params.s, d = params.d;
        if (n <= s)
            throw PreconditionError{ "carving needs n > s (n = " + to_string(n) + ", s = " + to_string(s) + ")" };

        Bitset anchor_set = to_bitset(n, anchors);
        int want = 3 * s * d + 4 * s;
        CarvedRegions result;
        for (int v = 0 ; v < n && int(result.y0.size()) < want ; ++v)
            if (! anchor_set.test(v))
                result.y0.push_back(v);
        if (int(result.y0.size()) < want)
            throw PreconditionError{ "only " + to_string(result.y0.size()) + " non-anchor vertices for Y_0, need 3sD + 4s = " + to_string(want) };

        result.blocker = find_blocker(family, result.y0, params, options);
        Bitset removed(n), in_y0 = to_bitset(n, result.y0);
        for (auto & x : result.blocker)
            removed.set(x.vertex);
        for (int v = 0 ; v < n ; ++v)
            if (! removed.test(v)) {
                result.v_prime.push_back(v);
                if (! in_y0.test(v))
                    result.w.push_back(v);
            }

        if (int(result.v_prime.size()) < n - s || int(result.w.size()) < n - 3 * s * d - 5 * s)
            throw InternalInconsistency{ "carved regions are smaller than their guaranteed sizes" };
        return result;
    }

    auto min_mono_degree_vertex(const GraphFamily & family, double c, const JumbledParams & params,
            span<const int> allowed) -> int
    {
        if (! (c > 0 && c < 1))
            throw PreconditionError{ "need 0 < c < 1" };
        vector<int> pool = allowed.empty() ? all_vertices(family.size()) : vector<int>(allowed.begin(), allowed.end());
        int t = family.colours();
        double size = double(pool.size());
        double need_size = std::sqrt(double(t)) * params.beta / (c * params.p);
        if (size < need_size)
            throw PreconditionError{ "|V| = " + to_string(pool.size()) + " is below c^-1 t^1/2 beta / p = " + to_string(need_size) };

        Bitset in_pool = to_bitset(family.size(), pool);
        double threshold = (1 - c) * params.p * size;
        vector<int> best(t, 0);
        for (int v : pool) {
            bool ok = true;
            for (int i = 0 ; i < t ; ++i) {
                int deg = family.row(v, i).count_and(in_pool);
                best[i] = std::max(best[i], deg);
                if (deg < threshold)
                    ok = false;
            }
            if (ok)
                return v;
        }
        string text;
        for (int i = 0 ; i < t ; ++i)
            text += " " + to_string(best[i]);
        throw SearchFailure{ "no vertex has degree >= " + to_string(threshold) + " in every colour; largest degree per colour:" + text };
    }

    auto jumbled_working_s(int t, const JumbledParams & params) -> int
    {
        return int(std::ceil(2.0 * std::sqrt(double(t)) * params.beta / params.p - 1e-9));
    }

    auto embed_rooted_forest_anchored(shared_ptr<const GraphFamily> host, const EdgeColouredRootedGraph & h,
            const PathConstructibleDecomposition & decomposition, span<const int> roots,
            span<const int> anchors, const GoodnessParams & params, const PipelineOptions & options) -> PipelineResult
    {
        params.validate();
        if (params.d < 3)
            throw PreconditionError{ "D >= 3 required (got D = " + to_string(params.d) + ")" };
        h.validate(host->colours());
        auto valid = validate_path_constructible(h, decomposition);
        if (! valid.ok)
            throw InvalidInput{ "decomposition violates clause " + valid.clause + ": " + valid.message };

        int n = host->size(), s = params.s, d = params.d;
        vector<string> warnings;
        Hypotheses hypotheses{ options.engine.enforce_hypotheses, warnings };

        int need = required_path_length(s, d);
        for (auto & path : decomposition.paths)
            if (int(path.size()) - 1 < need)
                throw PreconditionError{ "a path of length " + to_string(path.size() - 1)
                    + " is below required_path_length(s, D) = " + to_string(need) };
        if (mono_max_degree(h) > d)
            throw PreconditionError{ "mono_max_degree(H) = " + to_string(mono_max_degree(h)) + " exceeds D = " + to_string(d) };
        hypotheses.check(h.size() <= n - 6 * s * d,
                "|V(H)| = " + to_string(h.size()) + " exceeds n - 6sD = " + to_string(n - 6 * s * d));

        // 𝓗_0: base vertices with the edges not on any path
        vector<char> in_base(h.size(), 0);
        for (int b : decomposition.base)
            in_base[b] = 1;
        std::set<std::pair<int, int>> on_path;
        for (auto & path : decomposition.paths)
            for (std::size_t i = 0 ; i + 1 < path.size() ; ++i)
                on_path.insert({ std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1]) });
        auto base_edge = [&] (int u, int v) {
            return in_base[u] && in_base[v] && ! on_path.contains({ std::min(u, v), std::max(u, v) });
        };
        for (int r : roots)
            if (r < 0 || r >= h.size() || ! in_base[r])
                throw InvalidInput{ "root " + to_string(r) + " is not a base vertex" };
        auto steps = growth_order(h, roots, base_edge);
        int base_edges = 0;
        for (auto & e : h.edges())
            if (base_edge(e.u, e.v))
                ++base_edges;
        if (steps.size() + roots.size() != decomposition.base.size() || base_edges != int(steps.size()))
            throw InvalidInput{ "base is not a forest with exactly one given root per component" };

        bool certified = certify_joined(*host, s, options, hypotheses);

        if (! anchors.empty()) {
            if (anchors.size() != roots.size())
                throw InvalidInput{ "one anchor per root required" };
            std::set<int> distinct(anchors.begin(), anchors.end());
            if (distinct.size() != anchors.size())
                throw PreconditionError{ "anchors must be distinct" };
            for (int v : anchors)
                if (v < 0 || v >= n)
                    throw InvalidInput{ "anchor " + to_string(v) + " out of range" };
        }

        auto regions = carve_or_skip(*host, params, anchors, options, warnings);
        vector<int> chosen(anchors.begin(), anchors.end());
        if (chosen.empty()) {
            if (regions.w.size() < roots.size())
                throw PreconditionError{ "W has " + to_string(regions.w.size()) + " vertices, need " + to_string(roots.size()) + " anchors" };
            chosen = options.anchors == AnchorPolicy::spread ? spread_anchors(*host, regions.w, int(roots.size()))
                : vector<int>(regions.w.begin(), regions.w.begin() + roots.size());
        }
        Bitset in_w = to_bitset(n, regions.w);
        for (int v : chosen)
            if (! in_w.test(v))
                throw PreconditionError{ "anchor " + to_string(v) + " lies outside W" };

        auto restricted = restrict_family(*host, regions.v_prime);
        auto working_host = std::make_shared<const GraphFamily>(restricted.family);

        EngineOptions eo = options.engine;
        eo.host_certified = certified && ! regions.skipped;
        Engine engine{ Embedding{ working_host }, params, eo };
        for (auto & w : warnings)
            engine.note("warning", { }, w);
        vector<GoodnessReport> milestones;
        engine.set_milestone_hook(milestone_hook(options, milestones));

        vector<int> placed(h.size(), -1);
        for (std::size_t i = 0 ; i < roots.size() ; ++i)
            placed[roots[i]] = engine.add_root(restricted.old_to_new[chosen[i]]);

        vector<ForestVertex> forest;
        vector<int> index_of(h.size(), -1);
        for (std::size_t j = 0 ; j < steps.size() ; ++j) {
            int p = steps[j].parent;
            forest.push_back({ placed[p] >= 0 ? placed[p] : -index_of[p] - 1, steps[j].colour });
            index_of[steps[j].vertex] = int(j);
        }
        auto ids = engine.extend_forest(forest);
        for (std::size_t j = 0 ; j < steps.size() ; ++j)
            placed[steps[j].vertex] = ids[j];
        engine.milestone("base embedded");

        vector<int> base_map;
        for (int b : decomposition.base)
            base_map.push_back(placed[b]);
        auto working = embed_path_constructible(engine, h, decomposition, base_map);

        auto full = working.with_host(host, translate(working.map(), restricted.new_to_old));
        return PipelineResult{ std::move(full), working_host, restricted.new_to_old, std::move(working),
            std::move(regions), s, eo.host_certified, engine.log(), engine.warnings(), std::move(milestones) };
    }

    auto embed_subdivision_joined(shared_ptr<const GraphFamily> host, const Subdivision & subdivision,
            const GoodnessParams & params, const PipelineOptions & options) -> PipelineResult
    {
        return embed_rooted_forest_anchored(host, subdivision.target, subdivision.decomposition(),
                subdivision.branches, { }, params, options);
    }

    auto embed_expansion_joined(shared_ptr<const GraphFamily> host, const Expansion & expansion,
            const GoodnessParams & params, const PipelineOptions & options) -> PipelineResult
    {
        vector<int> roots;
        for (auto & tree : expansion.trees)
            roots.push_back(tree.front());
        return embed_rooted_forest_anchored(host, expansion.target, expansion.decomposition(), roots, { }, params, options);
    }

    auto embed_star_forest(shared_ptr<const GraphFamily> host, const StarForest & forest, double c,
            const JumbledParams & params, int d, const PipelineOptions & options) -> StarForestResult
    {
        if (! (c > 0 && c < 1))
            throw PreconditionError{ "need 0 < c < 1" };
        int n = host->size(), t = host->colours();
        int s = jumbled_working_s(t, params);
        vector<string> warnings;
        Hypotheses hypotheses{ options.engine.enforce_hypotheses, warnings };

        int max_degree = 0;
        for (auto & leaves : forest.leaves)
            max_degree = std::max(max_degree, int(leaves.size()));
        hypotheses.check(max_degree <= (1 - c) * params.p * n,
                "star degree " + to_string(max_degree) + " exceeds (1 - c)pn = " + to_string((1 - c) * params.p * n));
        hypotheses.check(forest.target.size() + 5 * s * d < c * n / 2,
                "|V(F)| + 5sD = " + to_string(forest.target.size() + 5 * s * d) + " is not below cn/2 = " + to_string(c * n / 2));

        auto regions = carve_or_skip(*host, { s, d }, { }, options, warnings);
        auto restricted = restrict_family(*host, regions.v_prime);
        auto working_host = std::make_shared<const GraphFamily>(restricted.family);
        auto & g = *working_host;

        vector<int> map(forest.target.size(), -1);
        Bitset free(g.size());
        for (int v : regions.w)
            free.set(restricted.old_to_new[v]);

        for (std::size_t i = 0 ; i < forest.centres.size() ; ++i) {
            auto pool = free.to_vector();
            vector<int> colours;
            for (int leaf : forest.leaves[i])
                colours.push_back(*forest.target.edge_colour(forest.centres[i], leaf));

            // leaves to distinct neighbours of the right colour (augmenting paths)
            auto try_centre = [&] (int centre) -> optional<vector<int>> {
                Bitset avail = free;
                avail.reset(centre);
                vector<int> owner(g.size(), -1), match(colours.size(), -1);
                std::function<bool (int, vector<char> &)> augment = [&] (int leaf, vector<char> & seen) {
                    auto options = g.row(centre, colours[leaf]);
                    options &= avail;
                    for (int v = options.find_first() ; v >= 0 ; v = options.find_next(v + 1)) {
                        if (seen[v])
                            continue;
                        seen[v] = 1;
                        if (owner[v] == -1 || augment(owner[v], seen)) {
                            owner[v] = leaf;
                            match[leaf] = v;
                            return true;
                        }
                    }
                    return false;
                };
                for (std::size_t leaf = 0 ; leaf < colours.size() ; ++leaf) {
                    vector<char> seen(g.size(), 0);
                    if (! augment(int(leaf), seen))
                        return std::nullopt;
                }
                return match;
            };

            optional<int> centre;
            optional<vector<int>> leaves;
            try {
                centre = min_mono_degree_vertex(g, c / 2, params, pool);
                leaves = try_centre(*centre);
            }
            catch (const Error & e) {
                if (options.engine.enforce_hypotheses)
                    throw;
                warnings.push_back(string{ "hypothesis relaxed: " } + e.what());
            }
            if (! leaves) {
                if (options.engine.enforce_hypotheses)
                    throw SearchFailure{ "centre " + to_string(*centre) + " lacks distinct neighbours for star " + to_string(i) };
                for (int v : pool)
                    if ((leaves = try_centre(v))) {
                        centre = v;
                        break;
                    }
                if (! leaves)
                    throw SearchFailure{ "no vertex of W can carry star " + to_string(i) };
            }

            map[forest.centres[i]] = *centre;
            free.reset(*centre);
            for (std::size_t l = 0 ; l < leaves->size() ; ++l) {
                map[forest.leaves[i][l]] = (*leaves)[l];
                free.reset((*leaves)[l]);
            }
        }

        Embedding working{ working_host, forest.target, map };
        return StarForestResult{ std::move(regions), working_host, restricted.new_to_old, std::move(working), s, std::move(warnings) };
    }

    auto embed_subdivision_jumbled(shared_ptr<const GraphFamily> host, const Subdivision & subdivision,
            double c, const JumbledParams & params, int d, const PipelineOptions & options) -> PipelineResult
    {
        auto & h = subdivision.target;
        h.validate(host->colours());
        int n = host->size(), t = host->colours();
        int s = jumbled_working_s(t, params);
        int ell = required_path_length(s, d);
        int branch_count = int(subdivision.branches.size());
        vector<string> warnings;
        Hypotheses hypotheses{ options.engine.enforce_hypotheses, warnings };

        if (! (c > 8.0 / ell && c < 1))
            throw PreconditionError{ "need 8/l < c < 1 with l = " + to_string(ell) + " (c = " + to_string(c) + ")" };
        if (branch_count < 3 || branch_count > (1 - c) * params.p * n)
            throw PreconditionError{ "need 3 <= Delta <= (1 - c)pn, Delta = " + to_string(branch_count)
                + ", (1 - c)pn = " + to_string((1 - c) * params.p * n) };
        // the leaf-to-leaf connections are two edges shorter than the paths and still need length l
        for (auto & path : subdivision.paths)
            if (int(path.size()) - 1 < ell + 2)
                throw PreconditionError{ "a path of length " + to_string(path.size() - 1) + " leaves a leaf-to-leaf connection below l = "
                    + to_string(ell) + " (required_path_length(s, D) + 2 = " + to_string(ell + 2) + " needed)" };
        hypotheses.check(h.size() <= n - 6 * s * d,
                "|V(H)| = " + to_string(h.size()) + " exceeds n - 6sD = " + to_string(n - 6 * s * d));
        hypotheses.check(branch_count * (branch_count + 1) <= c * n / 2 - 5 * s * d,
                "Delta(Delta + 1) = " + to_string(branch_count * (branch_count + 1)) + " exceeds cn/2 - 5sD = "
                + to_string(c * n / 2 - 5 * s * d));

        // star forest: each branch vertex with its neighbours along its paths
        vector<int> degrees(branch_count, 0);
        vector<vector<int>> colourings(branch_count), leaf_of(branch_count);
        for (auto & path : subdivision.paths) {
            int x = path.front(), y = path.back();
            colourings[x].push_back(*h.edge_colour(x, path[1]));
            leaf_of[x].push_back(path[1]);
            colourings[y].push_back(*h.edge_colour(y, path[path.size() - 2]));
            leaf_of[y].push_back(path[path.size() - 2]);
            ++degrees[x];
            ++degrees[y];
        }
        auto stars = build_star_forest(degrees, colourings);
        auto star_result = embed_star_forest(host, stars, c, params, d, options);
        warnings.insert(warnings.end(), star_result.warnings.begin(), star_result.warnings.end());

        // drop the centres from the host; the leaves become isolated roots
        auto & g1 = *star_result.working_host;
        Bitset centres(g1.size());
        for (int x : stars.centres)
            centres.set(star_result.working.image(x));
        vector<int> keep;
        for (int v = 0 ; v < g1.size() ; ++v)
            if (! centres.test(v))
                keep.push_back(v);
        auto restricted = restrict_family(g1, keep);
        auto working_host = std::make_shared<const GraphFamily>(restricted.family);

        bool certified = options.engine.host_certified;
        EngineOptions eo = options.engine;
        eo.host_certified = certified && ! star_result.regions.skipped;
        Engine engine{ Embedding{ working_host }, { s, d }, eo };
        for (auto & w : warnings)
            engine.note("warning", { }, w);
        vector<GoodnessReport> milestones;
        engine.set_milestone_hook(milestone_hook(options, milestones));

        vector<int> placed(h.size(), -1);
        for (int x = 0 ; x < branch_count ; ++x)
            for (std::size_t l = 0 ; l < leaf_of[x].size() ; ++l)
                placed[leaf_of[x][l]] = engine.add_root(restricted.old_to_new[star_result.working.image(stars.leaves[x][l])]);
        engine.milestone("leaves placed");

        PathConstructibleDecomposition inner;
        for (auto & path : subdivision.paths)
            inner.paths.emplace_back(path.begin() + 1, path.end() - 1);
        engine.embed_paths(h, inner, placed);

        // the leaf-phase embedding, relabelled to 𝓗 ids minus the branch vertices
        vector<int> h_ids;
        for (int v = 0 ; v < h.size() ; ++v)
            if (v >= branch_count)
                h_ids.push_back(v);
        vector<int> new_id(engine.embedding().target().size(), -1);
        for (std::size_t i = 0 ; i < h_ids.size() ; ++i)
            new_id[placed[h_ids[i]]] = int(i);
        auto working = engine.embedding().relabel(new_id);

        vector<int> working_to_host;
        for (int v : restricted.new_to_old)
            working_to_host.push_back(star_result.working_to_host[v]);

        vector<int> full_map(h.size(), -1);
        for (int x = 0 ; x < branch_count ; ++x)
            full_map[x] = star_result.working_to_host[star_result.working.image(stars.centres[x])];
        for (std::size_t i = 0 ; i < h_ids.size() ; ++i)
            full_map[h_ids[i]] = working_to_host[working.image(int(i))];
        Embedding full{ host, h, full_map };

        auto log = engine.log();
        return PipelineResult{ std::move(full), working_host, std::move(working_to_host), std::move(working),
            std::move(star_result.regions), s, eo.host_certified, std::move(log), engine.warnings(), std::move(milestones) };
    }
}
