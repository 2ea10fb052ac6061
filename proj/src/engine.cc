/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rollback/engine.hh>
#include <rollback/enumerate.hh>
#include <rollback/errors.hh>

#include <algorithm>
#include <climits>
#include <deque>
#include <random>
#include <sstream>

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

        auto describe(const vector<int> & xs) -> string
        {
            string result = "{";
            for (auto x : xs) {
                if (result.size() > 1)
                    result += ", ";
                result += to_string(x);
            }
            return result + "}";
        }

        auto from_flat(const GraphFamily & family, const vector<int> & flat) -> ColouredVertexSet
        {
            vector<ColouredVertex> items;
            for (int f : flat)
                items.push_back(family.coloured(f));
            return ColouredVertexSet{ std::move(items) };
        }
    }

    auto GoodnessParams::validate() const -> void
    {
        if (s < 1 || d < 1)
            throw InvalidInput{ "goodness parameters need s >= 1 and D >= 1" };
    }

    auto to_string(VerifyMode mode) -> string
    {
        switch (mode) {
            case VerifyMode::exact:       return "exact";
            case VerifyMode::incremental: return "incremental";
            case VerifyMode::best_effort: return "best-effort";
        }
        return "?";
    }

    auto parse_verify_mode(const string & name) -> VerifyMode
    {
        if (name == "exact")
            return VerifyMode::exact;
        if (name == "incremental")
            return VerifyMode::incremental;
        if (name == "best-effort" || name == "best_effort")
            return VerifyMode::best_effort;
        throw InvalidInput{ "unknown verification mode '" + name + "'" };
    }

    Embedding::Embedding(shared_ptr<const GraphFamily> host) :
        _host(std::move(host))
    {
        if (! _host)
            throw InvalidInput{ "embedding needs a host" };
        _preimage.assign(_host->size(), -1);
        _used = Bitset(_host->size());
    }

    Embedding::Embedding(shared_ptr<const GraphFamily> host, EdgeColouredRootedGraph target, vector<int> map) :
        Embedding(std::move(host))
    {
        if (int(map.size()) != target.size())
            throw InvalidInput{ "map has " + to_string(map.size()) + " entries for " + to_string(target.size()) + " target vertices" };
        for (std::size_t h = 0 ; h < map.size() ; ++h) {
            check_host_vertex(map[h]);
            if (_preimage[map[h]] != -1)
                throw InvalidInput{ "map is not injective: target vertices " + to_string(_preimage[map[h]]) + " and "
                    + to_string(h) + " both go to host vertex " + to_string(map[h]) };
            _preimage[map[h]] = int(h);
            _used.set(map[h]);
        }
        _target = std::move(target);
        _map = std::move(map);
        revalidate();
    }

    auto Embedding::check_host_vertex(int v) const -> void
    {
        if (v < 0 || v >= _host->size())
            throw InvalidInput{ "host vertex " + to_string(v) + " out of range" };
    }

    auto Embedding::parent_pairs() const -> ColouredVertexSet
    {
        vector<ColouredVertex> items;
        for (int h = 0 ; h < _target.size() ; ++h)
            if (auto p = _target.parent(h))
                items.push_back({ _map[h], p->colour });
        return ColouredVertexSet{ std::move(items) };
    }

    auto Embedding::host_degree(int v, int colour) const -> int
    {
        int h = _preimage[v];
        return h < 0 ? 0 : _target.degree(h, colour);
    }

    auto Embedding::revalidate() const -> void
    {
        if (int(_map.size()) != _target.size())
            throw InvalidInput{ "map and target sizes differ" };
        _target.validate(_host->colours());
        vector<int> seen(_host->size(), -1);
        for (int h = 0 ; h < _target.size() ; ++h) {
            int v = _map[h];
            check_host_vertex(v);
            if (seen[v] != -1)
                throw InvalidInput{ "map is not injective: target vertices " + to_string(seen[v]) + " and " + to_string(h)
                    + " both go to host vertex " + to_string(v) };
            seen[v] = h;
            if (_preimage[v] != h || ! _used.test(v))
                throw InvalidInput{ "inverse map out of step at host vertex " + to_string(v) };
        }
        if (_used.count() != _target.size())
            throw InvalidInput{ "used-vertex set out of step" };
        for (auto & e : _target.edges())
            if (! _host->row(_map[e.u], e.colour).test(_map[e.v]))
                throw InvalidInput{ "target edge " + to_string(e.u) + "-" + to_string(e.v) + " of colour " + to_string(e.colour)
                    + " maps to host pair " + to_string(_map[e.u]) + "-" + to_string(_map[e.v]) + ", not an edge of that colour" };
    }

    auto Embedding::add_root(int host_vertex) -> int
    {
        check_host_vertex(host_vertex);
        if (_used.test(host_vertex))
            throw InvalidInput{ "host vertex " + to_string(host_vertex) + " already used" };
        int h = _target.add_root();
        _map.push_back(host_vertex);
        _preimage[host_vertex] = h;
        _used.set(host_vertex);
        return h;
    }

    auto Embedding::add_child(int parent, int colour, int host_vertex) -> int
    {
        check_host_vertex(host_vertex);
        if (parent < 0 || parent >= _target.size())
            throw InvalidInput{ "target vertex " + to_string(parent) + " out of range" };
        if (colour < 0 || colour >= _host->colours())
            throw InvalidInput{ "colour " + to_string(colour) + " out of range" };
        if (_used.test(host_vertex))
            throw InvalidInput{ "host vertex " + to_string(host_vertex) + " already used" };
        if (! _host->row(_map[parent], colour).test(host_vertex))
            throw InvalidInput{ "host vertex " + to_string(host_vertex) + " is not a colour-" + to_string(colour)
                + " neighbour of " + to_string(_map[parent]) };
        int h = _target.add_child(parent, colour);
        _map.push_back(host_vertex);
        _preimage[host_vertex] = h;
        _used.set(host_vertex);
        return h;
    }

    auto Embedding::add_edge(int h, int h2, int colour) -> void
    {
        if (h < 0 || h >= _target.size() || h2 < 0 || h2 >= _target.size() || h == h2)
            throw InvalidInput{ "bad target vertices for a new edge" };
        if (colour < 0 || colour >= _host->colours())
            throw InvalidInput{ "colour " + to_string(colour) + " out of range" };
        if (_target.adjacent(h, h2))
            throw PreconditionError{ "target vertices " + to_string(h) + " and " + to_string(h2) + " are already adjacent" };
        if (! _host->row(_map[h], colour).test(_map[h2]))
            throw PreconditionError{ "images " + to_string(_map[h]) + " and " + to_string(_map[h2])
                + " are not adjacent in colour " + to_string(colour) };
        _target.add_edge(h, h2, colour);
        _target.promote_to_root(h);
        _target.promote_to_root(h2);
    }

    auto Embedding::remove_leaf(int h) -> void
    {
        if (h < 0 || h >= _target.size())
            throw InvalidInput{ "target vertex " + to_string(h) + " out of range" };
        if (_target.is_root(h) && _target.degree(h) != 0)
            throw PreconditionError{ "vertex " + to_string(h) + " is a root of degree " + to_string(_target.degree(h)) };
        if (! _target.is_root(h) && _target.degree(h) != 1)
            throw PreconditionError{ "vertex " + to_string(h) + " is a non-root of degree " + to_string(_target.degree(h)) };
        int v = _map[h];
        _target.remove_vertex(h);
        _map.erase(_map.begin() + h);
        _preimage[v] = -1;
        _used.reset(v);
        for (int i = h ; i < int(_map.size()) ; ++i)
            _preimage[_map[i]] = i;
    }

    auto Embedding::relabel(span<const int> new_id) const -> Embedding
    {
        auto target = _target.relabel(new_id);
        vector<int> map(_map.size());
        for (std::size_t h = 0 ; h < _map.size() ; ++h)
            map[new_id[h]] = _map[h];
        return Embedding{ _host, std::move(target), std::move(map) };
    }

    auto Embedding::with_host(shared_ptr<const GraphFamily> host, vector<int> map) const -> Embedding
    {
        return Embedding{ std::move(host), _target, std::move(map) };
    }

    auto make_residual_table(const Embedding & e, int d) -> ResidualTable
    {
        auto & family = e.host();
        ResidualTable table;
        table.free = Bitset(family.size());
        table.free.set_all();
        table.free.subtract(e.used());
        table.weight.assign(family.left_size(), d);
        for (int h = 0 ; h < e.target().size() ; ++h) {
            for (auto & i : e.target().incident(h))
                --table.weight[family.index({ e.image(h), i.colour })];
            if (auto p = e.target().parent(h))
                ++table.weight[family.index({ e.image(h), p->colour })];
        }
        return table;
    }

    auto residual(const Embedding & e, const GoodnessParams & params, const ColouredVertexSet & xs) -> long
    {
        xs.validate(e.host().size(), e.host().colours());
        auto gamma = family_neighbourhood(e.host(), xs);
        long result = gamma.count_and_not(e.used());
        for (auto & x : xs)
            result -= params.d - e.host_degree(x.vertex, x.colour);
        result -= set_intersection(e.parent_pairs(), xs).size();
        return result;
    }

    namespace
    {
        struct ScanOutcome
        {
            long min_residual = LONG_MAX;
            optional<vector<int>> negative;
            long negative_residual = 0;
            Bitset blocked;
            std::uint64_t count = 0;
        };

        /**
         * Every X with |X| ≤ bound, stopping at the first negative residual. With want_blocked,
         * also collects ⋃ Γ(X) over tight X avoiding the flat index `excluded`.
         */
        auto scan(const GraphFamily & family, const ResidualTable & table, int bound, int threads,
                int excluded, bool want_blocked) -> ScanOutcome
        {
            int universe = family.left_size();
            int parts = threads > 1 ? threads * 4 : 1;
            vector<ScanOutcome> results(parts);

            run_partitioned(parts, threads, [&] (int part, int part_count) {
                auto & out = results[part];
                out.blocked = Bitset(family.size());
                vector<Bitset> unions(bound + 1, Bitset(family.size()));
                vector<long> weights(bound + 1, 0);
                vector<int> items(bound + 1, -1);
                vector<char> has_excluded(bound + 1, 0);

                enumerate_subsets(universe, bound, part, part_count,
                        [&] (int d, int x) {
                            items[d] = x;
                            unions[d] = unions[d - 1];
                            unions[d] |= family.row(x);
                            weights[d] = weights[d - 1] + table.weight[x];
                            has_excluded[d] = has_excluded[d - 1] || x == excluded;
                        },
                        [&] (int d) {
                            ++out.count;
                            long r = long(unions[d].count_and(table.free)) - weights[d];
                            out.min_residual = std::min(out.min_residual, r);
                            if (r < 0) {
                                out.negative = vector<int>(items.begin() + 1, items.begin() + d + 1);
                                out.negative_residual = r;
                                return Visit::stop;
                            }
                            if (want_blocked && r == 0 && ! has_excluded[d])
                                out.blocked |= unions[d];
                            return Visit::descend;
                        });
            });

            ScanOutcome merged;
            merged.blocked = Bitset(family.size());
            for (auto & r : results) {
                merged.count += r.count;
                merged.min_residual = std::min(merged.min_residual, r.min_residual);
                merged.blocked |= r.blocked;
                if (r.negative && (! merged.negative || *r.negative < *merged.negative)) {
                    merged.negative = r.negative;
                    merged.negative_residual = r.negative_residual;
                }
            }
            return merged;
        }

        struct Evaluator
        {
            const GraphFamily & family;
            const ResidualTable & table;

            auto operator()(const vector<int> & flat) const -> long
            {
                Bitset u(family.size());
                long w = 0;
                for (int f : flat) {
                    u |= family.row(f);
                    w += table.weight[f];
                }
                return long(u.count_and(table.free)) - w;
            }
        };

        struct Tracker
        {
            GoodnessReport & report;
            const GraphFamily & family;

            auto see(const vector<int> & flat, long r) -> void
            {
                ++report.sets_checked;
                if (! report.min_residual || r < *report.min_residual) {
                    report.min_residual = r;
                    if (r < 0) {
                        report.witness = from_flat(family, flat);
                        report.witness_residual = r;
                    }
                }
            }
        };

        /// Greedy growth from each start: repeatedly add the element giving the smallest residual.
        auto greedy(const GraphFamily & family, const ResidualTable & table, int bound, const vector<int> & starts,
                Tracker & tracker, std::set<vector<int>> * cache, int near_tight, std::size_t cache_limit) -> void
        {
            int universe = family.left_size();
            Bitset scratch(family.size());
            for (int start : starts) {
                vector<int> xs{ start };
                vector<char> in(universe, 0);
                in[start] = 1;
                Bitset u = family.row(start);
                long w = table.weight[start];
                long r = long(u.count_and(table.free)) - w;
                tracker.see(xs, r);
                while (int(xs.size()) < bound) {
                    int best = -1;
                    long best_r = LONG_MAX;
                    for (int y = 0 ; y < universe ; ++y) {
                        if (in[y])
                            continue;
                        scratch = family.row(y);
                        scratch &= table.free;
                        scratch.subtract(u);
                        long ry = r + scratch.count() - table.weight[y];
                        if (ry < best_r) {
                            best_r = ry;
                            best = y;
                        }
                    }
                    if (best < 0)
                        break;
                    in[best] = 1;
                    u |= family.row(best);
                    r = best_r;
                    xs.push_back(best);
                    auto sorted = xs;
                    std::sort(sorted.begin(), sorted.end());
                    tracker.see(sorted, r);
                    if (cache && r <= near_tight && sorted.size() > 2 && cache->size() < cache_limit)
                        cache->insert(sorted);
                }
            }
        }
    }

    auto verify_good(const Embedding & e, const GoodnessParams & params, const VerifyOptions & options) -> GoodnessReport
    {
        params.validate();
        auto & family = e.host();
        int bound = options.bound < 0 ? params.bound() : options.bound;
        GoodnessReport report;
        report.mode = options.mode;
        report.bound = bound;
        if (bound <= 0)
            return report;

        auto table = make_residual_table(e, params.d);
        int universe = family.left_size();

        switch (options.mode) {
            case VerifyMode::exact: {
                auto count = subset_count(universe, 1, bound);
                if (count > options.cap)
                    throw CapExceeded{ "exact verification needs " + to_string(count) + " sets (|X| <= " + to_string(bound)
                        + " over " + to_string(universe) + " pairs), cap is " + to_string(options.cap) };
                auto out = scan(family, table, bound, options.threads, -1, false);
                report.sets_checked = out.count;
                report.min_residual = out.min_residual == LONG_MAX ? optional<long>{ } : optional<long>{ out.min_residual };
                if (out.negative) {
                    report.pass = false;
                    report.witness = from_flat(family, *out.negative);
                    report.witness_residual = out.negative_residual;
                    report.min_residual = std::nullopt;
                }
                return report;
            }

            case VerifyMode::incremental: {
                Tracker tracker{ report, family };
                Evaluator eval{ family, table };
                int small = std::min(bound, 2);
                vector<std::pair<long, int>> singles;
                for (int x = 0 ; x < universe ; ++x) {
                    long r = eval({ x });
                    tracker.see({ x }, r);
                    singles.emplace_back(r, x);
                    for (int y = x + 1 ; small >= 2 && y < universe ; ++y)
                        tracker.see({ x, y }, eval({ x, y }));
                }
                if (options.cache)
                    for (auto & flat : *options.cache)
                        if (int(flat.size()) <= bound)
                            tracker.see(flat, eval(flat));
                if (bound > 2) {
                    std::sort(singles.begin(), singles.end());
                    vector<int> starts;
                    for (std::size_t i = 0 ; i < singles.size() && i < 8 ; ++i)
                        starts.push_back(singles[i].second);
                    greedy(family, table, bound, starts, tracker, options.cache, options.near_tight, options.cache_limit);
                }
                report.pass = ! report.min_residual || *report.min_residual >= 0;
                return report;
            }

            case VerifyMode::best_effort: {
                Tracker tracker{ report, family };
                vector<int> starts(universe);
                for (int x = 0 ; x < universe ; ++x)
                    starts[x] = x;
                greedy(family, table, bound, starts, tracker, options.cache, options.near_tight, options.cache_limit);
                report.pass = ! report.min_residual || *report.min_residual >= 0;
                return report;
            }
        }
        return report;
    }

    auto delta_residual(const Embedding & e, const GoodnessParams & params, int w, int r, int a,
            const ColouredVertexSet & xs) -> int
    {
        auto & family = e.host();
        if (w < 0 || w >= e.target().size())
            throw PreconditionError{ "target vertex " + to_string(w) + " out of range" };
        if (r < 0 || r >= family.colours() || a < 0 || a >= family.size())
            throw PreconditionError{ "colour or host vertex out of range" };
        if (e.used().test(a))
            throw PreconditionError{ "host vertex " + to_string(a) + " is already used" };
        if (! family.row(e.image(w), r).test(a))
            throw PreconditionError{ "host vertex " + to_string(a) + " is not a colour-" + to_string(r) + " neighbour of phi(w)" };
        if (e.target().degree(w, r) >= params.d)
            throw PreconditionError{ "deg_{H_r}(w) = " + to_string(e.target().degree(w, r)) + " is not below D" };
        int gain = xs.contains({ e.image(w), r }) ? 1 : 0;
        int loss = family_neighbourhood(family, xs).test(a) ? 1 : 0;
        return gain - loss;
    }

    Engine::Engine(Embedding embedding, GoodnessParams params, EngineOptions options) :
        _embedding(std::move(embedding)),
        _params(params),
        _options(options)
    {
        _params.validate();
    }

    auto Engine::warnings() const -> vector<string>
    {
        vector<string> result;
        for (auto & step : _log)
            if (step.kind == "warning")
                result.push_back(step.note);
        return result;
    }

    auto Engine::note(string kind, vector<int> data, string text) -> void
    {
        _log.push_back(Step{ std::move(kind), std::move(data), std::move(text) });
    }

    auto Engine::check_hypothesis(bool holds, const string & what) -> void
    {
        if (holds)
            return;
        if (_options.enforce_hypotheses)
            throw PreconditionError{ what };
        note("warning", { }, "hypothesis relaxed: " + what);
    }

    auto Engine::verify(optional<VerifyMode> mode) -> GoodnessReport
    {
        VerifyOptions vo;
        vo.mode = mode.value_or(_options.mode);
        vo.cap = _options.cap;
        vo.threads = _options.threads;
        vo.cache = &_cache;
        auto report = verify_good(_embedding, _params, vo);
        note("verify", { report.pass ? 1 : 0, report.bound }, to_string(report.mode));
        return report;
    }

    auto Engine::add_root(int host_vertex) -> int
    {
        int h = _embedding.add_root(host_vertex);
        note("root", { h, host_vertex });
        return h;
    }

    auto Engine::candidate_order(vector<int> candidates) -> vector<int>
    {
        if (_options.shuffle) {
            std::mt19937_64 rng{ _options.seed ^ (0x9e3779b97f4a7c15ULL * ++_shuffle_counter) };
            std::shuffle(candidates.begin(), candidates.end(), rng);
        }
        return candidates;
    }

    auto Engine::extend_vertex(int w, int r) -> int
    {
        int n = _embedding.host().size(), s = _params.s, d = _params.d;
        int size = _embedding.target().size();
        check_hypothesis(size <= n - 2 * s * d - 3 * s,
                "|V(H)| = " + to_string(size) + " exceeds n - 2sD - 3s = " + to_string(n - 2 * s * d - 3 * s));
        return extend_vertex_unchecked(w, r);
    }

    auto Engine::extend_vertex_unchecked(int w, int r) -> int
    {
        auto & family = _embedding.host();
        auto & target = _embedding.target();
        if (w < 0 || w >= target.size())
            throw InvalidInput{ "target vertex " + to_string(w) + " out of range" };
        if (r < 0 || r >= family.colours())
            throw InvalidInput{ "colour " + to_string(r) + " out of range" };
        if (target.degree(w, r) >= _params.d)
            throw PreconditionError{ "deg_{H_r}(w) = " + to_string(target.degree(w, r)) + " for w = " + to_string(w)
                + ", r = " + to_string(r) + " is not below D = " + to_string(_params.d) };

        int pw = _embedding.image(w);
        Bitset a_set = family.row(pw, r);
        a_set.subtract(_embedding.used());
        if (! a_set.any())
            throw SearchFailure{ "A empty: every colour-" + to_string(r) + " neighbour of host vertex " + to_string(pw) + " is used" };
        auto order = candidate_order(a_set.to_vector());

        auto place = [&] (int a, const string & how) {
            int h = _embedding.add_child(w, r, a);
            note("extend", { h, w, r, a }, how);
            return h;
        };

        if (_options.mode == VerifyMode::exact) {
            auto table = make_residual_table(_embedding, _params.d);
            int bound = _params.bound();
            auto count = subset_count(family.left_size(), 1, bound);
            if (count > _options.cap)
                throw CapExceeded{ "exact extension needs " + to_string(count) + " sets, cap is " + to_string(_options.cap) };
            auto out = scan(family, table, bound, _options.threads, family.index({ pw, r }), true);
            if (out.negative)
                throw PreconditionError{ "embedding is not (2s,D)-good: R(X) = " + to_string(out.negative_residual)
                    + " at X = " + describe(from_flat(family, *out.negative)) };
            for (int a : order)
                if (! out.blocked.test(a))
                    return place(a, "exact");

            string dump = "every candidate in A = " + describe(order) + " lies in a tight set's neighbourhood (w = "
                + to_string(w) + ", phi(w) = " + to_string(pw) + ", r = " + to_string(r) + ", |V(H)| = "
                + to_string(target.size()) + ")";
            if (_options.host_certified && _options.enforce_hypotheses)
                throw InternalInconsistency{ dump };
            throw SearchFailure{ dump };
        }

        optional<int> best;
        long best_score = LONG_MIN;
        for (int a : order) {
            int h = _embedding.add_child(w, r, a);
            VerifyOptions vo;
            vo.mode = _options.mode;
            vo.cap = _options.cap;
            vo.threads = _options.threads;
            vo.cache = &_cache;
            auto report = verify_good(_embedding, _params, vo);
            _embedding.remove_leaf(h);
            if (report.pass)
                return place(a, to_string(_options.mode));
            long score = report.min_residual.value_or(0);
            if (score > best_score) {
                best_score = score;
                best = a;
            }
        }
        if (_options.best_effort_fallback && best) {
            note("warning", { w, r, *best }, "no candidate passed " + to_string(_options.mode)
                    + " verification; took the one with largest residual " + to_string(best_score));
            return place(*best, "fallback");
        }
        throw SearchFailure{ "no candidate in A = " + describe(order) + " passes " + to_string(_options.mode) + " verification" };
    }

    auto Engine::roll_back_to(int size) -> void
    {
        int removed = 0;
        while (_embedding.target().size() > size) {
            _embedding.remove_leaf(_embedding.target().size() - 1);
            ++removed;
        }
        if (removed)
            note("rollback", { removed });
    }

    auto Engine::extend_forest(span<const ForestVertex> forest) -> vector<int>
    {
        int n = _embedding.host().size(), s = _params.s, d = _params.d;
        int base = _embedding.target().size();
        int total = base + int(forest.size());
        check_hypothesis(total <= n - 2 * s * d - 3 * s,
                "|V(H)| = " + to_string(total) + " exceeds n - 2sD - 3s = " + to_string(n - 2 * s * d - 3 * s));

        vector<int> depth(forest.size());
        for (std::size_t j = 0 ; j < forest.size() ; ++j) {
            int p = forest[j].parent;
            if (p >= 0) {
                if (p >= base)
                    throw InvalidInput{ "forest vertex " + to_string(j) + " hangs below a missing vertex" };
                depth[j] = 1;
            }
            else {
                int q = -p - 1;
                if (q >= int(j))
                    throw InvalidInput{ "forest vertex " + to_string(j) + " hangs below a later vertex" };
                depth[j] = depth[q] + 1;
            }
        }
        vector<int> order(forest.size());
        for (std::size_t j = 0 ; j < order.size() ; ++j)
            order[j] = int(j);
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return depth[a] < depth[b]; });

        vector<int> ids(forest.size(), -1);
        try {
            for (int j : order) {
                int p = forest[j].parent;
                int parent = p >= 0 ? p : ids[-p - 1];
                ids[j] = extend_vertex_unchecked(parent, forest[j].colour);
            }
        }
        catch (...) {
            roll_back_to(base);
            throw;
        }
        return ids;
    }

    auto Engine::add_edge(int h, int h2, int r) -> void
    {
        _embedding.add_edge(h, h2, r);
        note("edge", { h, h2, r });
    }

    auto Engine::remove_leaf(int u) -> void
    {
        _embedding.remove_leaf(u);
        note("remove", { u });
    }

    auto Engine::connect_path(int a, int b, const PathPattern & pattern) -> vector<int>
    {
        auto & family = _embedding.host();
        int n = family.size(), s = _params.s, d = _params.d;
        pattern.validate(family.colours());
        int size = _embedding.target().size();
        if (a < 0 || a >= size || b < 0 || b >= size || a == b)
            throw InvalidInput{ "path ends must be distinct existing vertices" };
        if (d < 3)
            throw PreconditionError{ "path connection needs D >= 3 (got D = " + to_string(d) + ")" };
        int ell = pattern.length();
        int k = tree_height(s, d);
        if (ell < 2 * k + 3)
            throw PreconditionError{ "path length " + to_string(ell) + " is below required_path_length(s, D) = " + to_string(2 * k + 3) };
        auto & c = pattern.colours;
        auto & target = _embedding.target();
        if (target.degree(a, c.front()) > d - 1 || target.degree(b, c.back()) > d - 1)
            throw PreconditionError{ "an end vertex has no spare degree in its path colour" };
        check_hypothesis(size + ell - 1 <= n - 4 * s * d - 5 * s,
                "|V(H + P)| = " + to_string(size + ell - 1) + " exceeds n - 4sD - 5s = " + to_string(n - 4 * s * d - 5 * s));

        note("connect", { a, b, ell, k });
        bool prune = _options.mode != VerifyMode::exact && _options.best_effort_fallback;

        try {
            int m = ell - 2 * k - 3;
            vector<int> q{ a };
            for (int i = 0 ; i < m ; ++i)
                q.push_back(extend_vertex_unchecked(q.back(), c[i]));
            int a0 = q.back();

            // complete (D-1)-ary tree of height k hanging off `anchor` by one edge
            auto grow = [&] (int anchor, int attach, auto layer) {
                vector<int> frontier{ extend_vertex_unchecked(anchor, attach) };
                for (int j = 1 ; j <= k ; ++j) {
                    vector<int> next;
                    for (int v : frontier)
                        for (int child = 0 ; child < d - 1 ; ++child) {
                            try {
                                next.push_back(extend_vertex_unchecked(v, layer(j)));
                            }
                            catch (const SearchFailure & f) {
                                if (! prune)
                                    throw;
                                note("prune", { v, j }, f.what());
                            }
                        }
                    if (next.empty())
                        throw SearchFailure{ "scaffold tree died out at layer " + to_string(j) };
                    frontier = std::move(next);
                }
                return frontier;
            };
            auto a_leaves = grow(a0, c[m], [&] (int j) { return c[m + j]; });
            auto b_leaves = grow(b, c[ell - 1], [&] (int j) { return c[ell - 1 - j]; });

            int r = c[ell - k - 2];
            auto by_image = [&] (int x, int y) { return _embedding.image(x) < _embedding.image(y); };
            std::sort(a_leaves.begin(), a_leaves.end(), by_image);
            std::sort(b_leaves.begin(), b_leaves.end(), by_image);
            optional<std::pair<int, int>> crossing;
            for (int x : a_leaves) {
                for (int y : b_leaves)
                    if (family.row(_embedding.image(x), r).test(_embedding.image(y))) {
                        crossing = { x, y };
                        break;
                    }
                if (crossing)
                    break;
            }
            if (! crossing) {
                vector<int> ia, ib;
                for (int x : a_leaves)
                    ia.push_back(_embedding.image(x));
                for (int y : b_leaves)
                    ib.push_back(_embedding.image(y));
                throw HostNotJoined{ "no colour-" + to_string(r) + " edge between phi(A') = " + describe(ia)
                    + " and phi(B') = " + describe(ib) };
            }

            auto chain = [&] (int x, int stop) {
                vector<int> result{ x };
                while (x != stop) {
                    x = _embedding.target().parent(x)->vertex;
                    result.push_back(x);
                }
                return result;
            };
            auto from_x = chain(crossing->first, a0);       // x ... a0
            auto from_y = chain(crossing->second, b);       // y ... b

            add_edge(crossing->first, crossing->second, r);

            vector<int> path = q;
            for (auto it = from_x.rbegin() + 1 ; it != from_x.rend() ; ++it)
                path.push_back(*it);
            path.insert(path.end(), from_y.begin(), from_y.end());

            vector<char> keep(_embedding.target().size(), 0);
            for (int v : path)
                keep[v] = 1;
            int removed = 0;
            for (int v = _embedding.target().size() - 1 ; v >= size ; --v)
                if (! keep[v]) {
                    _embedding.remove_leaf(v);
                    ++removed;
                    for (auto & p : path)
                        if (p > v)
                            --p;
                }
            note("rollback", { removed });
            note("connected", path);
            return path;
        }
        catch (const Error & e) {
            roll_back_to(size);
            if (prune && (dynamic_cast<const SearchFailure *>(&e) || dynamic_cast<const HostNotJoined *>(&e))) {
                note("warning", { a, b }, string{ "roll-back connection failed (" } + e.what() + "); trying a direct path search");
                if (auto path = direct_path(a, b, pattern))
                    return *path;
            }
            throw;
        }
    }

    auto Engine::direct_path(int a, int b, const PathPattern & pattern) -> optional<vector<int>>
    {
        auto & family = _embedding.host();
        auto & c = pattern.colours;
        int ell = pattern.length();
        int start = _embedding.image(a), finish = _embedding.image(b);
        Bitset used = _embedding.used();

        vector<int> route{ start };
        std::uint64_t budget = _options.path_search_budget;
        bool found = false;

        std::function<void (int)> search = [&] (int at) {
            if (found || budget == 0)
                return;
            --budget;
            int step = int(route.size()) - 1;
            if (step == ell - 1) {
                if (family.row(at, c[step]).test(finish)) {
                    route.push_back(finish);
                    found = true;
                }
                return;
            }
            auto next = family.row(at, c[step]);
            next.subtract(used);
            next.for_each([&] (int v) {
                if (found || v == finish)
                    return;
                used.set(v);
                route.push_back(v);
                search(v);
                if (! found) {
                    route.pop_back();
                    used.reset(v);
                }
            });
        };
        search(start);
        if (! found)
            return std::nullopt;

        vector<int> path{ a };
        for (int i = 1 ; i < ell ; ++i)
            path.push_back(_embedding.add_child(path.back(), c[i - 1], route[i]));
        _embedding.add_edge(path.back(), b, c[ell - 1]);
        path.push_back(b);
        note("warning", path, "path placed by direct search; goodness not maintained for this step");
        note("connected", path);
        return path;
    }

    auto Engine::milestone(const string & what) -> void
    {
        note("milestone", { }, what);
        if (_milestone)
            _milestone(*this, what);
    }

    auto Engine::embed_paths(const EdgeColouredRootedGraph & h, const PathConstructibleDecomposition & decomposition,
            vector<int> & placed) -> void
    {
        for (std::size_t j = 0 ; j < decomposition.paths.size() ; ++j) {
            auto & path = decomposition.paths[j];
            bool front = placed[path.front()] >= 0, back = placed[path.back()] >= 0;
            if (front && back) {
                auto ids = connect_path(placed[path.front()], placed[path.back()], path_pattern(h, path));
                for (std::size_t i = 1 ; i + 1 < path.size() ; ++i)
                    placed[path[i]] = ids[i];
                milestone("path " + to_string(j) + " connected");
                continue;
            }
            if (! front && ! back)
                throw InvalidInput{ "decomposition path has no placed endpoint" };

            vector<int> oriented(path.begin(), path.end());
            if (! front)
                std::reverse(oriented.begin(), oriented.end());
            auto pattern = path_pattern(h, oriented);
            vector<ForestVertex> chain;
            for (int i = 0 ; i < pattern.length() ; ++i)
                chain.push_back({ i == 0 ? placed[oriented[0]] : -i, pattern.colours[i] });
            auto ids = extend_forest(chain);
            for (std::size_t i = 1 ; i < oriented.size() ; ++i)
                placed[oriented[i]] = ids[i - 1];
            milestone("path " + to_string(j) + " grown");
        }
    }

    auto growth_order(const EdgeColouredRootedGraph & g, span<const int> starts,
            const std::function<bool (int, int)> & use_edge) -> vector<GrowthStep>
    {
        vector<char> seen(g.size(), 0);
        std::deque<int> queue;
        for (int v : starts) {
            seen[v] = 1;
            queue.push_back(v);
        }
        vector<GrowthStep> result;
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            vector<Incidence> around(g.incident(u).begin(), g.incident(u).end());
            std::sort(around.begin(), around.end(), [] (auto & x, auto & y) { return x.neighbour < y.neighbour; });
            for (auto & [v, c] : around) {
                if (seen[v] || (use_edge && ! use_edge(u, v)))
                    continue;
                seen[v] = 1;
                result.push_back({ v, u, c });
                queue.push_back(v);
            }
        }
        return result;
    }

    auto embed_tree_anchored(shared_ptr<const GraphFamily> host, const EdgeColouredRootedGraph & tree,
            int v0, const GoodnessParams & params, const EngineOptions & options) -> Embedding
    {
        auto roots = tree.roots();
        if (roots.size() != 1)
            throw InvalidInput{ "tree must have exactly one root" };
        if (tree.edge_count() != tree.size() - 1)
            throw InvalidInput{ "target is not a tree" };
        tree.validate(host->colours());

        Engine engine{ Embedding{ host }, params, options };
        int h0 = roots.front();
        engine.add_root(v0);
        auto steps = growth_order(tree, { &h0, 1 });
        if (int(steps.size()) != tree.size() - 1)
            throw InvalidInput{ "target is not connected" };

        vector<int> engine_id(tree.size(), -1);
        engine_id[h0] = 0;
        vector<ForestVertex> forest;
        for (std::size_t j = 0 ; j < steps.size() ; ++j) {
            int p = steps[j].parent;
            forest.push_back({ p == h0 ? 0 : -engine_id[p] - 1, steps[j].colour });
            engine_id[steps[j].vertex] = int(j);         // index among new vertices for now
        }
        auto ids = engine.extend_forest(forest);

        vector<int> new_id(tree.size());
        new_id[0] = h0;
        for (std::size_t j = 0 ; j < steps.size() ; ++j)
            new_id[ids[j]] = steps[j].vertex;
        return engine.embedding().relabel(new_id);
    }

    auto embed_path_constructible(Engine & engine, const EdgeColouredRootedGraph & h,
            const PathConstructibleDecomposition & decomposition, span<const int> base_map) -> Embedding
    {
        auto valid = validate_path_constructible(h, decomposition);
        if (! valid.ok)
            throw InvalidInput{ "decomposition violates clause " + valid.clause + ": " + valid.message };
        if (base_map.size() != decomposition.base.size())
            throw InvalidInput{ "one target id per base vertex required" };

        auto & params = engine.params();
        int n = engine.embedding().host().size();
        int need = required_path_length(params.s, params.d);
        for (auto & path : decomposition.paths)
            if (int(path.size()) - 1 < need)
                throw PreconditionError{ "a path of length " + to_string(path.size() - 1)
                    + " is below required_path_length(s, D) = " + to_string(need) };
        if (mono_max_degree(h) > params.d)
            throw PreconditionError{ "mono_max_degree(H) = " + to_string(mono_max_degree(h)) + " exceeds D = " + to_string(params.d) };
        engine.check_hypothesis(h.size() <= n - 6 * params.s * params.d,
                "|V(H)| = " + to_string(h.size()) + " exceeds n - 6sD = " + to_string(n - 6 * params.s * params.d));

        vector<int> placed(h.size(), -1);
        for (std::size_t i = 0 ; i < base_map.size() ; ++i)
            placed[decomposition.base[i]] = base_map[i];
        engine.embed_paths(h, decomposition, placed);

        auto & e = engine.embedding();
        if (e.target().size() != h.size())
            throw InternalInconsistency{ "embedded graph has " + to_string(e.target().size()) + " vertices, expected " + to_string(h.size()) };
        vector<int> new_id(h.size(), -1);
        for (int v = 0 ; v < h.size() ; ++v)
            new_id[placed[v]] = v;
        auto result = e.relabel(new_id);
        if (result.target().edges() != h.edges())
            throw InternalInconsistency{ "embedded graph differs from the target" };
        return result;
    }
}
