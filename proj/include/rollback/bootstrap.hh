/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_BOOTSTRAP_HH
#define ROLLBACK_BOOTSTRAP_HH

#include <rollback/certify.hh>
#include <rollback/engine.hh>
#include <rollback/graph.hh>
#include <rollback/targets.hh>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rollback
{
    struct CarvedRegions
    {
        ColouredVertexSet blocker;              // U_0
        std::vector<int> v_prime;               // V' = V ∖ U_0|_V
        std::vector<int> w;                     // W = V' ∖ Y_0
        std::vector<int> y0;
        /// Carving was infeasible and hypotheses were relaxed: V' = W = V.
        bool skipped = false;
    };

    struct BlockerOptions
    {
        std::uint64_t cap = 100'000'000;
        int threads = 1;
    };

    /**
     * U_0 with |U_0| ≤ s such that every X ⊆ (V × [t]) ∖ U_0 with |X| ≤ 2s has
     * |N*(X, Y_0 ∖ U_0|_V)| ≥ D|X|, built by absorbing the first violating X until none is left.
     * Throws HostNotJoined if U_0 outgrows s.
     */
    auto find_blocker(const GraphFamily & family, std::span<const int> y0, const GoodnessParams & params,
            const BlockerOptions & options = { }) -> ColouredVertexSet;

    /// Y_0 is the 3sD + 4s lowest-indexed vertices outside anchors.
    auto carve_regions(const GraphFamily & family, const GoodnessParams & params, std::span<const int> anchors = { },
            const BlockerOptions & options = { }) -> CarvedRegions;

    /**
     * First vertex (of allowed, or of V when empty) whose degree into the allowed set is at least
     * (1 - c)p|allowed| in every colour. Checks |allowed| ≥ c^{-1} t^{1/2} β / p first.
     */
    auto min_mono_degree_vertex(const GraphFamily & family, double c, const JumbledParams & params,
            std::span<const int> allowed = { }) -> int;

    /// s = ⌈2 t^{1/2} β / p⌉, the joinedness a (p, β)-jumbled family of t graphs provides.
    auto jumbled_working_s(int t, const JumbledParams & params) -> int;

    enum class AnchorPolicy
    {
        /// The lowest-indexed vertices of W.
        lowest,
        /// The lowest vertices of W with pairwise disjoint closed neighbourhoods, topped up with
        /// the lowest remaining ones. Helps sparse hosts, where low ids tend to be adjacent.
        spread
    };

    auto parse_anchor_policy(const std::string &) -> AnchorPolicy;

    struct PipelineOptions
    {
        EngineOptions engine;
        BlockerOptions blocker;
        /// Run is_joined at s before embedding (when it fits under joined_cap).
        bool certify_host = true;
        std::uint64_t joined_cap = 100'000'000;
        /// Exact goodness check after the base and after every path (when under the engine cap).
        bool verify_milestones = false;
        /// How anchors are picked when the caller gives none.
        AnchorPolicy anchors = AnchorPolicy::lowest;
    };

    struct PipelineResult
    {
        /// Target ids are those of 𝓗; host ids are those of the input family.
        Embedding embedding;

        /// The family the roll-back engine worked in, its ids in the input family, and the
        /// embedding there. Goodness statements refer to this one.
        std::shared_ptr<const GraphFamily> working_host;
        std::vector<int> working_to_host;
        Embedding working;

        CarvedRegions regions;
        int s = 1;
        bool host_certified = false;
        std::vector<Step> log;
        std::vector<std::string> warnings;
        std::vector<GoodnessReport> milestones;
    };

    /**
     * Anchors the roots h_i of the forest 𝓗_0 (the base of the decomposition) at v_i, grows the
     * forest, then adds the paths. Empty anchors means automatic choice inside W (see AnchorPolicy).
     */
    auto embed_rooted_forest_anchored(std::shared_ptr<const GraphFamily> host, const EdgeColouredRootedGraph & h,
            const PathConstructibleDecomposition & decomposition, std::span<const int> roots,
            std::span<const int> anchors, const GoodnessParams & params, const PipelineOptions & options = { }) -> PipelineResult;

    auto embed_subdivision_joined(std::shared_ptr<const GraphFamily> host, const Subdivision & subdivision,
            const GoodnessParams & params, const PipelineOptions & options = { }) -> PipelineResult;

    auto embed_expansion_joined(std::shared_ptr<const GraphFamily> host, const Expansion & expansion,
            const GoodnessParams & params, const PipelineOptions & options = { }) -> PipelineResult;

    struct StarForestResult
    {
        CarvedRegions regions;
        std::shared_ptr<const GraphFamily> working_host;
        std::vector<int> working_to_host;
        Embedding working;                  // all roots, inside G[V']
        int s = 1;
        std::vector<std::string> warnings;
    };

    auto embed_star_forest(std::shared_ptr<const GraphFamily> host, const StarForest & forest, double c,
            const JumbledParams & params, int d, const PipelineOptions & options = { }) -> StarForestResult;

    /// The jumbled pipeline: star forest of branch vertices and their neighbours, then
    /// leaf-to-leaf path connections with the branch vertices removed from the host.
    auto embed_subdivision_jumbled(std::shared_ptr<const GraphFamily> host, const Subdivision & subdivision,
            double c, const JumbledParams & params, int d, const PipelineOptions & options = { }) -> PipelineResult;
}

#endif
