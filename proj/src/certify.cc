/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rollback/certify.hh>
#include <rollback/enumerate.hh>
#include <rollback/errors.hh>

#include <lapacke.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>

using std::optional;
using std::string;
using std::vector;

namespace rollback
{
    using std::to_string;

    namespace
    {
        constexpr double p_tolerance = 1e-12;

        auto within(double value, double bound) -> bool
        {
            return value <= bound + 1e-12 * std::max(1.0, std::abs(bound));
        }

        auto to_coloured_set(const GraphFamily & family, const vector<int> & flat) -> ColouredVertexSet
        {
            vector<ColouredVertex> items;
            for (int i : flat)
                items.push_back(family.coloured(i));
            return ColouredVertexSet{ std::move(items) };
        }
    }

    auto make_jumbled_params(double p, double beta) -> JumbledParams
    {
        if (! (p > 0.0 && p < 1.0 && beta >= 1.0))
            throw InvalidInput{ "jumbled parameters need 0 < p < 1 <= beta, got p = " + to_string(p) + ", beta = " + to_string(beta) };
        return { p, beta };
    }

    auto to_string(CertMethod m) -> string
    {
        switch (m) {
            case CertMethod::exhaustive: return "exhaustive";
            case CertMethod::sampled:    return "sampled";
            case CertMethod::spectral:   return "spectral";
        }
        return "?";
    }

    auto is_joined(const GraphFamily & family, int s, const CertifyOptions & options) -> CertReport
    {
        int n = family.size(), universe = family.left_size();
        if (s < 1)
            throw InvalidInput{ "s must be positive" };
        if (s > n)
            throw PreconditionError{ "s = " + to_string(s) + " exceeds n = " + to_string(n) };
        if (s > universe) {
            CertReport vacuous;
            vacuous.pass = true;
            return vacuous;
        }
        if (auto count = subset_count(universe, s, s) ; count > options.joined_cap)
            throw CapExceeded{ "joinedness check needs C(" + to_string(universe) + ", " + to_string(s) + ") = "
                + to_string(count) + " sets, cap is " + to_string(options.joined_cap) };

        int parts = std::max(1, options.threads) * 4;
        vector<optional<vector<int>>> first_failure(parts);

        run_partitioned(parts, options.threads, [&] (int part, int nparts) {
            vector<Bitset> unions(s + 1, Bitset(n));
            vector<int> items(s + 1);
            enumerate_subsets(universe, s, part, nparts,
                    [&] (int d, int x) {
                        items[d] = x;
                        unions[d] = unions[d - 1];
                        unions[d] |= family.row(x);
                    },
                    [&] (int d) {
                        int missing = n - unions[d].count();
                        if (missing < s)
                            return Visit::prune;
                        if (d == s) {
                            first_failure[part] = vector<int>(items.begin() + 1, items.begin() + 1 + s);
                            return Visit::stop;
                        }
                        return Visit::descend;
                    });
        });

        CertReport report;
        report.method = CertMethod::exhaustive;
        optional<vector<int>> witness;
        for (auto & f : first_failure)
            if (f && (! witness || *f < *witness))
                witness = f;

        report.pass = ! witness.has_value();
        if (witness) {
            CertWitness w;
            w.left = to_coloured_set(family, *witness);
            Bitset rest(n);
            rest.set_all();
            rest.subtract(family_neighbourhood(family, w.left));
            w.right = rest.to_vector();
            report.witness = std::move(w);
        }
        return report;
    }

    auto min_joined(const GraphFamily & family, int cap, const CertifyOptions & options) -> optional<int>
    {
        cap = std::min(cap, family.size());
        for (int s = 1 ; s <= cap ; ++s)
            if (is_joined(family, s, options).pass)
                return s;
        return std::nullopt;
    }

    auto max_jumbled_deficit(const GraphFamily & family, double p, const CertifyOptions & options) -> DeficitResult
    {
        int n = family.size(), left = family.left_size();
        if (n > options.jumbled_max_vertices)
            throw CapExceeded{ "exhaustive jumbledness enumerates 2^" + to_string(n) + " right-hand sets, limit is 2^"
                + to_string(options.jumbled_max_vertices) };

        // For a fixed Y, e(X, Y) = Σ_{x ∈ X} deg_Y(x), so among all X of size k the extreme values
        // of e are the k largest and the k smallest of deg_Y. This is an exact maximisation over X.
        vector<vector<int>> right_to_left(n);
        for (int x = 0 ; x < left ; ++x)
            family.row(x).for_each([&] (int y) { right_to_left[y].push_back(x); });

        vector<int> deg(left, 0), order(left);
        Bitset ys(n);
        int y_size = 0;

        DeficitResult best;
        best.deficit = -1.0;
        std::uint64_t best_y_mask = 0;
        int best_k = 0;
        bool best_top = true;

        std::uint64_t total = std::uint64_t{ 1 } << n;
        vector<long> prefix(left + 1);
        for (std::uint64_t i = 1 ; i < total ; ++i) {
            int y = std::countr_zero(i);
            int delta = ys.test(y) ? -1 : 1;
            if (delta > 0) ys.set(y); else ys.reset(y);
            y_size += delta;
            for (int x : right_to_left[y])
                deg[x] += delta;

            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return deg[a] > deg[b]; });
            for (int k = 0 ; k < left ; ++k)
                prefix[k + 1] = prefix[k] + deg[order[k]];

            for (int k = 1 ; k <= left ; ++k) {
                double expected = p * double(k) * double(y_size);
                double scale = std::sqrt(double(k) * double(y_size));
                double top = std::abs(double(prefix[k]) - expected) / scale;
                double bottom = std::abs(double(prefix[left] - prefix[left - k]) - expected) / scale;
                if (top > best.deficit || bottom > best.deficit) {
                    best_top = top >= bottom;
                    best.deficit = std::max(top, bottom);
                    best_k = k;
                    best_y_mask = i ^ (i >> 1);
                }
            }

            if (i + 1 == total)
                break;
        }

        if (best.deficit < 0.0)
            best.deficit = 0.0;
        else {
            // Rebuild the extremal pair.
            vector<int> yv;
            for (int y = 0 ; y < n ; ++y)
                if ((best_y_mask >> y) & 1)
                    yv.push_back(y);
            Bitset yb = to_bitset(n, yv);
            vector<int> d(left);
            for (int x = 0 ; x < left ; ++x)
                d[x] = family.row(x).count_and(yb);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return d[a] > d[b]; });
            vector<int> xs;
            if (best_top)
                xs.assign(order.begin(), order.begin() + best_k);
            else
                xs.assign(order.end() - best_k, order.end());
            best.witness.left = to_coloured_set(family, xs);
            best.witness.right = std::move(yv);
        }
        return best;
    }

    namespace
    {
        auto sampled_deficit(const GraphFamily & family, double p, const CertifyOptions & options) -> DeficitResult
        {
            int n = family.size(), left = family.left_size();
            std::mt19937_64 rng(options.seed);
            std::uniform_int_distribution<int> x_size(1, left), y_size(1, n);
            vector<int> lefts(left), rights(n);
            std::iota(lefts.begin(), lefts.end(), 0);
            std::iota(rights.begin(), rights.end(), 0);

            DeficitResult best;
            best.deficit = -1.0;
            Bitset yb(n);
            for (std::uint64_t sample = 0 ; sample < options.samples ; ++sample) {
                int kx = x_size(rng), ky = y_size(rng);
                for (int i = 0 ; i < kx ; ++i)
                    std::swap(lefts[i], lefts[std::uniform_int_distribution<int>(i, left - 1)(rng)]);
                for (int i = 0 ; i < ky ; ++i)
                    std::swap(rights[i], rights[std::uniform_int_distribution<int>(i, n - 1)(rng)]);
                yb.clear();
                for (int i = 0 ; i < ky ; ++i)
                    yb.set(rights[i]);
                long e = 0;
                for (int i = 0 ; i < kx ; ++i)
                    e += family.row(lefts[i]).count_and(yb);
                double dev = std::abs(double(e) - p * kx * ky) / std::sqrt(double(kx) * ky);
                if (dev > best.deficit) {
                    best.deficit = dev;
                    best.witness.left = to_coloured_set(family, vector<int>(lefts.begin(), lefts.begin() + kx));
                    best.witness.right.assign(rights.begin(), rights.begin() + ky);
                    std::sort(best.witness.right.begin(), best.witness.right.end());
                }
            }
            if (best.deficit < 0.0)
                best.deficit = 0.0;
            return best;
        }
    }

    auto jumbled_check(const GraphFamily & family, JumbledParams params, JumbledMode mode,
            const CertifyOptions & options) -> CertReport
    {
        make_jumbled_params(params.p, params.beta);
        auto result = (mode == JumbledMode::exhaustive)
            ? max_jumbled_deficit(family, params.p, options)
            : sampled_deficit(family, params.p, options);

        CertReport report;
        report.method = (mode == JumbledMode::exhaustive) ? CertMethod::exhaustive : CertMethod::sampled;
        report.measured = result.deficit;
        report.pass = within(result.deficit, params.beta);
        if (! report.pass)
            report.witness = std::move(result.witness);
        return report;
    }

    auto adjacency_spectrum(const Graph & g, const CertifyOptions & options) -> Spectrum
    {
        int n = g.size();
        auto degree = g.regular_degree();
        if (! degree)
            throw PreconditionError{ "spectral certification needs a regular graph" };
        if (n > options.spectral_max_vertices)
            throw CapExceeded{ "dense eigendecomposition limited to " + to_string(options.spectral_max_vertices) + " vertices" };
        if (n == 0)
            throw InvalidInput{ "empty graph" };

        // Divide and conquer (dsyevd); Eigen's implicit QR stalls on some highly degenerate
        // distance graph spectra.
        vector<double> a(std::size_t(n) * n, 0.0), ev(n);
        for (int u = 0 ; u < n ; ++u)
            g.neighbours(u).for_each([&] (int v) { a[std::size_t(u) * n + v] = 1.0; });
        if (LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', n, a.data(), n, ev.data()) != 0)
            throw InternalInconsistency{ "eigendecomposition did not converge" };

        Spectrum result;
        result.degree = *degree;
        for (int i = n - 1 ; i >= 0 ; --i)
            result.eigenvalues.push_back(ev[i]);
        result.lambda = 0.0;
        for (int i = 1 ; i < n ; ++i)
            result.lambda = std::max(result.lambda, std::abs(result.eigenvalues[i]));
        return result;
    }

    auto spectral_jumbled(const Graph & g, const CertifyOptions & options) -> JumbledParams
    {
        auto spectrum = adjacency_spectrum(g, options);
        if (spectrum.degree == 0)
            throw PreconditionError{ "edgeless graph has p = 0" };
        return make_jumbled_params(double(spectrum.degree) / g.size(), std::max(spectrum.lambda, 1.0));
    }

    auto family_jumbled(const vector<JumbledParams> & members) -> JumbledParams
    {
        if (members.empty())
            throw InvalidInput{ "family_jumbled needs at least one member" };
        double p = members.front().p, beta = 0.0;
        for (auto & m : members) {
            make_jumbled_params(m.p, m.beta);
            if (std::abs(m.p - p) > p_tolerance)
                throw InvalidInput{ "family members have different p (" + to_string(p) + " vs " + to_string(m.p) + ")" };
            beta = std::max(beta, m.beta);
        }
        return { p, beta * std::sqrt(double(members.size())) };
    }

    auto joined_from_jumbled(JumbledParams params) -> int
    {
        make_jumbled_params(params.p, params.beta);
        return int(std::floor(params.beta / params.p)) + 1;
    }
}
