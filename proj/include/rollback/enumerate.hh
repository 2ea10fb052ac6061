/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_ENUMERATE_HH
#define ROLLBACK_ENUMERATE_HH

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace rollback
{
    /// Σ_{k=lo..hi} C(universe, k), saturating at UINT64_MAX.
    inline auto subset_count(int universe, int lo, int hi) -> std::uint64_t
    {
        constexpr auto top = ~std::uint64_t{ 0 };
        std::uint64_t total = 0, binom = 1;            // C(universe, 0)
        hi = std::min(hi, universe);
        for (int k = 0 ; k <= hi ; ++k) {
            if (k > 0) {
                // binom = binom * (universe - k + 1) / k, exact because the product is C(u, k) * k
                unsigned __int128 next = static_cast<unsigned __int128>(binom) * unsigned(universe - k + 1) / unsigned(k);
                binom = next > top ? top : std::uint64_t(next);
            }
            if (k >= lo)
                total = (top - total < binom) ? top : total + binom;
        }
        return total;
    }

    enum class Visit
    {
        descend,
        prune,
        stop
    };

    /**
     * Depth-first lexicographic enumeration of subsets {x_1 < ... < x_d} of {0..universe-1} with
     * 1 ≤ d ≤ max_size, restricted to subsets whose smallest element x_1 ≡ part (mod parts).
     *
     * enter(d, x) is called when x becomes the d-th element (the caller keeps per-depth state);
     * visit(d) is called once per subset and decides whether to extend it, skip its supersets, or
     * stop the whole enumeration. Returns false if stopped early.
     */
    template <typename Enter_, typename Visit_>
    auto enumerate_subsets(int universe, int max_size, int part, int parts, Enter_ && enter, Visit_ && visit) -> bool
    {
        if (max_size <= 0 || universe <= 0)
            return true;
        max_size = std::min(max_size, universe);
        std::vector<int> items(max_size + 1, -1);
        int depth = 1;
        items[1] = part - parts;
        while (depth > 0) {
            int step = (depth == 1) ? parts : 1;
            int next = items[depth] + step;
            if (next >= universe) {
                --depth;
                continue;
            }
            items[depth] = next;
            enter(depth, next);
            auto what = visit(depth);
            if (what == Visit::stop)
                return false;
            if (what == Visit::descend && depth < max_size && next + 1 < universe) {
                ++depth;
                items[depth] = next;
            }
        }
        return true;
    }

    /**
     * Runs body(part, parts) for part in 0..parts-1, on up to `threads` threads. Results are the
     * caller's to merge, in part order, so outcomes do not depend on the thread count.
     */
    inline auto run_partitioned(int parts, int threads, const std::function<void (int, int)> & body) -> void
    {
        threads = std::max(1, std::min(threads, parts));
        if (threads == 1) {
            for (int p = 0 ; p < parts ; ++p)
                body(p, parts);
            return;
        }
        std::vector<std::thread> pool;
        for (int t = 0 ; t < threads ; ++t)
            pool.emplace_back([&, t] {
                for (int p = t ; p < parts ; p += threads)
                    body(p, parts);
            });
        for (auto & th : pool)
            th.join();
    }
}

#endif
