/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_TESTS_ORACLES_HH
#define ROLLBACK_TESTS_ORACLES_HH

// Slow, obviously-correct reimplementations used to cross-check the library. Nothing here uses
// bitsets, the subset enumerator or the residual table.

#include <rollback/engine.hh>
#include <rollback/graph.hh>
#include <rollback/targets.hh>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle
{
    using Matrix = std::vector<std::vector<char>>;

    /// Adjacency matrices, one per colour, built from the edge lists.
    inline auto matrices(const rollback::GraphFamily & family) -> std::vector<Matrix>
    {
        std::vector<Matrix> result;
        int n = family.size();
        for (int c = 0 ; c < family.colours() ; ++c) {
            Matrix m(n, std::vector<char>(n, 0));
            for (auto [u, v] : family.graph(c).edges())
                m[u][v] = m[v][u] = 1;
            result.push_back(std::move(m));
        }
        return result;
    }

    inline auto edge_count(const Matrix & m, const std::vector<int> & xs, const std::vector<int> & ys) -> long
    {
        long total = 0;
        for (int x : xs)
            for (int y : ys)
                total += m[x][y];
        return total;
    }

    using Pairs = std::vector<std::pair<int, int>>;     // (vertex, colour)

    inline auto gamma(const std::vector<Matrix> & ms, const Pairs & xs) -> std::set<int>
    {
        std::set<int> result;
        for (auto [v, c] : xs)
            for (int u = 0 ; u < int(ms[c].size()) ; ++u)
                if (ms[c][v][u])
                    result.insert(u);
        return result;
    }

    /// Calls f on every subset of {0..universe-1} of size lo..hi, as a sorted vector.
    inline auto for_subsets(int universe, int lo, int hi, const std::function<bool (const std::vector<int> &)> & f) -> bool
    {
        std::vector<int> current;
        std::function<bool (int)> go = [&] (int from) -> bool {
            if (int(current.size()) >= lo && ! current.empty() && ! f(current))
                return false;
            if (int(current.size()) == hi)
                return true;
            for (int i = from ; i < universe ; ++i) {
                current.push_back(i);
                if (! go(i + 1))
                    return false;
                current.pop_back();
            }
            return true;
        };
        if (lo == 0 && ! f(current))
            return false;
        return go(0);
    }

    inline auto pairs_of(int t, const std::vector<int> & flat) -> Pairs
    {
        Pairs result;
        for (int i : flat)
            result.emplace_back(i / t, i % t);
        return result;
    }

    /// Every |X| = s has |V ∖ Γ(X)| < s.
    inline auto is_joined(const rollback::GraphFamily & family, int s) -> bool
    {
        auto ms = matrices(family);
        int n = family.size(), t = family.colours();
        if (s > n * t)
            return true;
        return for_subsets(n * t, s, s, [&] (const std::vector<int> & flat) {
            return n - int(gamma(ms, pairs_of(t, flat)).size()) < s;
        });
    }

    inline auto min_joined(const rollback::GraphFamily & family, int cap) -> std::optional<int>
    {
        for (int s = 1 ; s <= cap ; ++s)
            if (is_joined(family, s))
                return s;
        return std::nullopt;
    }

    /// R(X, φ) from the definition, using only the target's edge list and parent links.
    inline auto residual(const rollback::Embedding & e, int d, const Pairs & xs) -> long
    {
        auto ms = matrices(e.host());
        auto & h = e.target();
        std::set<int> image(e.map().begin(), e.map().end());
        long available = 0;
        for (int u : gamma(ms, xs))
            available += ! image.count(u);
        std::set<std::pair<int, int>> parents;
        for (int v = 0 ; v < h.size() ; ++v)
            if (auto p = h.parent(v))
                parents.emplace(e.image(v), p->colour);
        long reserved = 0, overlap = 0;
        for (auto [v, c] : xs) {
            int deg = 0;
            for (int u = 0 ; u < h.size() ; ++u)
                if (e.image(u) == v)
                    for (auto & edge : h.edges())
                        deg += edge.colour == c && (edge.u == u || edge.v == u);
            reserved += d - deg;
            overlap += parents.count({ v, c });
        }
        return available - reserved - overlap;
    }

    inline auto to_set(const Pairs & xs) -> rollback::ColouredVertexSet
    {
        rollback::ColouredVertexSet result;
        for (auto [v, c] : xs)
            result.insert({ v, c });
        return result;
    }

    /// R(X, φ) ≥ 0 for every 1 ≤ |X| ≤ bound.
    inline auto is_good(const rollback::Embedding & e, int d, int bound) -> bool
    {
        int t = e.host().colours();
        return for_subsets(e.host().size() * t, 1, bound, [&] (const std::vector<int> & flat) {
            return residual(e, d, pairs_of(t, flat)) >= 0;
        });
    }

    /// max |e(X, Y) - p|X||Y|| / √(|X||Y|) over non-empty X ⊆ V × [t], Y ⊆ V, with e counted in
    /// the auxiliary bipartite graph.
    inline auto jumbled_deficit(const rollback::GraphFamily & family, double p) -> double
    {
        auto ms = matrices(family);
        int n = family.size(), t = family.colours();
        double best = 0.0;
        for (std::uint64_t xm = 1 ; xm < (std::uint64_t{ 1 } << (n * t)) ; ++xm)
            for (std::uint64_t ym = 1 ; ym < (std::uint64_t{ 1 } << n) ; ++ym) {
                long e = 0;
                int xs = 0, ys = std::popcount(ym);
                for (int i = 0 ; i < n * t ; ++i)
                    if (xm >> i & 1) {
                        ++xs;
                        for (int y = 0 ; y < n ; ++y)
                            if (ym >> y & 1)
                                e += ms[i % t][i / t][y];
                    }
                double size = double(xs) * ys;
                best = std::max(best, std::abs(e - p * size) / std::sqrt(size));
            }
        return best;
    }

    /// |{z ∈ F_q^d : Σ z_i^2 ≡ r}| by listing every z.
    inline auto sphere(int q, int d, int r) -> long
    {
        long total = 0, size = 1;
        for (int i = 0 ; i < d ; ++i)
            size *= q;
        for (long z = 0 ; z < size ; ++z) {
            long rest = z, norm = 0;
            for (int i = 0 ; i < d ; ++i) {
                norm += (rest % q) * (rest % q);
                rest /= q;
            }
            total += norm % q == r;
        }
        return total;
    }

    /// A random host, a random embedded target grown by legal extensions, and one more legal
    /// extension (w, r, a) not yet applied.
    struct Instance
    {
        std::shared_ptr<const rollback::GraphFamily> host;
        rollback::Embedding embedding;
        int d;
        int w, r, a;
    };

    inline auto random_family(int n, int t, double p, std::mt19937_64 & rng) -> rollback::GraphFamily
    {
        std::uniform_real_distribution<double> coin{ 0.0, 1.0 };
        std::vector<rollback::Graph> graphs;
        for (int c = 0 ; c < t ; ++c) {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v)
                    if (coin(rng) < p)
                        edges.emplace_back(u, v);
            graphs.emplace_back(n, edges);
        }
        return rollback::GraphFamily{ std::move(graphs) };
    }

    /// Legal extensions (w, r, a) of e: deg_{H_r}(w) < D and a a free colour-r neighbour of φ(w).
    inline auto legal_extensions(const rollback::Embedding & e, int d) -> std::vector<std::tuple<int, int, int>>
    {
        std::vector<std::tuple<int, int, int>> result;
        auto & host = e.host();
        for (int w = 0 ; w < e.target().size() ; ++w)
            for (int r = 0 ; r < host.colours() ; ++r) {
                if (e.target().degree(w, r) >= d)
                    continue;
                for (int a = 0 ; a < host.size() ; ++a)
                    if (host.graph(r).adjacent(e.image(w), a) && e.preimage(a) < 0)
                        result.emplace_back(w, r, a);
            }
        return result;
    }

    inline auto random_instance(std::mt19937_64 & rng, int max_n = 20, int max_t = 3, int max_target = 10) -> std::optional<Instance>
    {
        std::uniform_int_distribution<int> n_dist{ 4, max_n }, t_dist{ 1, max_t }, d_dist{ 1, 4 };
        std::uniform_real_distribution<double> p_dist{ 0.2, 0.9 };
        int n = n_dist(rng), t = t_dist(rng), d = d_dist(rng);
        auto host = std::make_shared<const rollback::GraphFamily>(random_family(n, t, p_dist(rng), rng));
        rollback::Embedding e{ host };
        int roots = std::uniform_int_distribution<int>{ 1, 2 }(rng);
        std::vector<int> order(n);
        for (int v = 0 ; v < n ; ++v)
            order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        for (int i = 0 ; i < roots ; ++i)
            e.add_root(order[i]);
        int size = std::uniform_int_distribution<int>{ roots, std::min(max_target, n) - 1 }(rng);
        while (e.target().size() < size) {
            auto options = legal_extensions(e, d);
            if (options.empty())
                break;
            auto [w, r, a] = options[std::uniform_int_distribution<std::size_t>{ 0, options.size() - 1 }(rng)];
            e.add_child(w, r, a);
        }
        auto options = legal_extensions(e, d);
        if (options.empty())
            return std::nullopt;
        auto [w, r, a] = options[std::uniform_int_distribution<std::size_t>{ 0, options.size() - 1 }(rng)];
        return Instance{ host, std::move(e), d, w, r, a };
    }

    inline auto random_pairs(std::mt19937_64 & rng, int n, int t, int max_size) -> Pairs
    {
        std::set<std::pair<int, int>> chosen;
        int size = std::uniform_int_distribution<int>{ 0, std::min(max_size, n * t) }(rng);
        while (int(chosen.size()) < size)
            chosen.emplace(std::uniform_int_distribution<int>{ 0, n - 1 }(rng), std::uniform_int_distribution<int>{ 0, t - 1 }(rng));
        return Pairs(chosen.begin(), chosen.end());
    }

    inline auto pair_union(const Pairs & a, const Pairs & b) -> Pairs
    {
        std::set<std::pair<int, int>> s(a.begin(), a.end());
        s.insert(b.begin(), b.end());
        return Pairs(s.begin(), s.end());
    }

    inline auto pair_intersection(const Pairs & a, const Pairs & b) -> Pairs
    {
        std::set<std::pair<int, int>> s(a.begin(), a.end());
        Pairs result;
        for (auto & x : b)
            if (s.count(x))
                result.push_back(x);
        return result;
    }
}

#endif
