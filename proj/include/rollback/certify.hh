/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_CERTIFY_HH
#define ROLLBACK_CERTIFY_HH

#include <rollback/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rollback
{
    /// (p, β) with 0 < p < 1 ≤ β.
    struct JumbledParams
    {
        double p;
        double beta;
    };

    /// Throws InvalidInput unless 0 < p < 1 ≤ β.
    auto make_jumbled_params(double p, double beta) -> JumbledParams;

    enum class CertMethod
    {
        exhaustive,
        sampled,
        spectral
    };

    auto to_string(CertMethod) -> std::string;

    /// A pair (X, Y) with X ⊆ V × [t] and Y ⊆ V that witnesses a failed condition.
    struct CertWitness
    {
        ColouredVertexSet left;
        std::vector<int> right;
    };

    struct CertReport
    {
        bool pass = false;
        CertMethod method = CertMethod::exhaustive;
        std::optional<double> measured;
        std::optional<CertWitness> witness;

        /// Exhaustive and spectral results are proofs; sampled results are evidence only.
        auto certifying() const -> bool { return method != CertMethod::sampled; }
    };

    struct CertifyOptions
    {
        /// Joinedness: maximum C(n·t, s) to enumerate.
        std::uint64_t joined_cap = 100'000'000;

        /// Exhaustive jumbledness enumerates all Y ⊆ V, so the cost is 2^n · n·t log(n·t).
        int jumbled_max_vertices = 20;

        std::uint64_t samples = 1'000'000;
        std::uint64_t seed = 0;
        int threads = 1;

        /// Dense eigendecomposition limit.
        int spectral_max_vertices = 5000;
    };

    /// s-joined test for the family (B_𝒢 s-bijoined), using |V ∖ Γ(X)| < s for every |X| = s.
    auto is_joined(const GraphFamily & family, int s, const CertifyOptions & = { }) -> CertReport;

    /// Smallest s ≤ cap for which the family is s-joined, if any.
    auto min_joined(const GraphFamily & family, int cap, const CertifyOptions & = { }) -> std::optional<int>;

    enum class JumbledMode
    {
        exhaustive,
        sampled
    };

    /// measured carries max |e(X,Y) − p|X||Y|| / √(|X||Y|) over the checked pairs.
    auto jumbled_check(const GraphFamily & family, JumbledParams params, JumbledMode mode,
            const CertifyOptions & = { }) -> CertReport;

    /// Maximum normalised deficit over every X ⊆ V × [t], Y ⊆ V (both non-empty), with an
    /// extremal pair.
    struct DeficitResult
    {
        double deficit = 0.0;
        CertWitness witness;
    };

    auto max_jumbled_deficit(const GraphFamily & family, double p, const CertifyOptions & = { }) -> DeficitResult;

    struct Spectrum
    {
        int degree;
        std::vector<double> eigenvalues;    // descending
        double lambda;                      // largest |eigenvalue| after dropping the top one
    };

    /// Dense symmetric eigendecomposition of a regular graph's adjacency matrix.
    auto adjacency_spectrum(const Graph & g, const CertifyOptions & = { }) -> Spectrum;

    /// (d/n, max(λ, 1)) for a d-regular graph. Throws PreconditionError if g is not regular.
    auto spectral_jumbled(const Graph & g, const CertifyOptions & = { }) -> JumbledParams;

    /// (p, β_max · √t) for t members sharing p.
    auto family_jumbled(const std::vector<JumbledParams> & members) -> JumbledParams;

    /// ⌊β/p⌋ + 1, the least integer s > β/p.
    auto joined_from_jumbled(JumbledParams params) -> int;
}

#endif
