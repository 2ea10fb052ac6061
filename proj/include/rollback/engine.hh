/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_ENGINE_HH
#define ROLLBACK_ENGINE_HH

#include <rollback/graph.hh>
#include <rollback/targets.hh>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace rollback
{
    struct GoodnessParams
    {
        int s = 1;
        int d = 1;

        /// Size bound the engine maintains goodness at.
        auto bound() const -> int { return 2 * s; }
        auto validate() const -> void;
    };

    enum class VerifyMode
    {
        exact,
        incremental,
        best_effort
    };

    auto to_string(VerifyMode) -> std::string;
    auto parse_verify_mode(const std::string &) -> VerifyMode;

    /**
     * An injective map from target vertices to host vertices, with every target edge of colour c
     * landing on an edge of G_c. Mutators keep the map, its inverse and the used-vertex set in
     * step with the target.
     */
    class Embedding
    {
    public:
        explicit Embedding(std::shared_ptr<const GraphFamily> host);
        Embedding(std::shared_ptr<const GraphFamily> host, EdgeColouredRootedGraph target, std::vector<int> map);

        auto host() const -> const GraphFamily & { return *_host; }
        auto host_ptr() const -> const std::shared_ptr<const GraphFamily> & { return _host; }
        auto target() const -> const EdgeColouredRootedGraph & { return _target; }
        auto map() const -> const std::vector<int> & { return _map; }
        auto image(int h) const -> int { return _map[h]; }

        /// Target vertex at host vertex v, or -1.
        auto preimage(int v) const -> int { return _preimage[v]; }

        /// φ(𝓗) as a host bitset.
        auto used() const -> const Bitset & { return _used; }

        /// P_φ(𝓗): (φ(h), colour of h's parent edge) over non-roots h.
        auto parent_pairs() const -> ColouredVertexSet;

        /// deg_{H_i}(φ^{-1}(v)), zero outside the image.
        auto host_degree(int v, int colour) const -> int;

        /// Injectivity, colour adjacency and target structure. Throws InvalidInput naming the
        /// first violation.
        auto revalidate() const -> void;

        auto add_root(int host_vertex) -> int;
        auto add_child(int parent, int colour, int host_vertex) -> int;

        /// Adds (h, h2) in colour r and promotes both ends and their ancestors to roots.
        auto add_edge(int h, int h2, int colour) -> void;

        /// Removes a non-root of total degree 1 or an isolated root; later ids shift down.
        auto remove_leaf(int h) -> void;

        /// Renumbers target vertices; see EdgeColouredRootedGraph::relabel.
        auto relabel(std::span<const int> new_id) const -> Embedding;

        /// The same target and map over a different host of the same size (e.g. the full host
        /// after working in a restriction, with the map translated by the caller).
        auto with_host(std::shared_ptr<const GraphFamily> host, std::vector<int> map) const -> Embedding;

    private:
        std::shared_ptr<const GraphFamily> _host;
        EdgeColouredRootedGraph _target;
        std::vector<int> _map, _preimage;
        Bitset _used;

        auto check_host_vertex(int v) const -> void;
    };

    /**
     * Per-embedding data for fast residuals: R(X, φ) = |Γ(X) ∩ free| - Σ_{x ∈ X} weight[x], with
     * weight[(v, i)] = D - deg_{H_i}(φ^{-1}(v)) + [(v, i) ∈ P_φ].
     */
    struct ResidualTable
    {
        Bitset free;
        std::vector<int> weight;        // by flat index
    };

    auto make_residual_table(const Embedding & e, int d) -> ResidualTable;

    /// R(X, φ) straight from the definition.
    auto residual(const Embedding & e, const GoodnessParams & params, const ColouredVertexSet & xs) -> long;

    struct GoodnessReport
    {
        bool pass = true;
        VerifyMode mode = VerifyMode::exact;
        int bound = 0;
        std::optional<ColouredVertexSet> witness;
        std::optional<long> witness_residual;
        /// Smallest residual seen (exact mode: over all sets, on a pass).
        std::optional<long> min_residual;
        std::uint64_t sets_checked = 0;

        auto proof() const -> bool { return mode == VerifyMode::exact; }
    };

    struct VerifyOptions
    {
        VerifyMode mode = VerifyMode::exact;
        int bound = -1;                         // -1 means 2s
        std::uint64_t cap = 100'000'000;
        int threads = 1;
        /// Sets (as sorted flat indices) rechecked by incremental mode; near-tight sets seen during
        /// the check are added.
        std::set<std::vector<int>> * cache = nullptr;
        int near_tight = 2;
        std::size_t cache_limit = 100'000;
    };

    /// Checks R(X, φ) ≥ 0 for |X| ≤ bound in the requested mode.
    auto verify_good(const Embedding & e, const GoodnessParams & params, const VerifyOptions & options = { }) -> GoodnessReport;

    /// 1[(φ(w), r) ∈ X] - 1[a ∈ Γ(X)], after checking the extension (w, r, a) is legal.
    auto delta_residual(const Embedding & e, const GoodnessParams & params, int w, int r, int a,
            const ColouredVertexSet & xs) -> int;

    /// One new vertex below an existing or earlier new vertex. parent < 0 refers to new vertex
    /// number (-parent - 1); parent ≥ 0 is an existing target vertex.
    struct ForestVertex
    {
        int parent;
        int colour;
    };

    struct EngineOptions
    {
        VerifyMode mode = VerifyMode::exact;
        std::uint64_t cap = 100'000'000;
        int threads = 1;
        /// Throw on a failed size hypothesis; otherwise log a warning and carry on.
        bool enforce_hypotheses = true;
        /// The host is known to be s-joined (certified or assumed by the caller).
        bool host_certified = false;
        /// When no candidate passes verification, take the one with the largest residual seen.
        bool best_effort_fallback = false;
        bool shuffle = false;
        std::uint64_t seed = 0;
        /// Node budget for the direct path search used when a best-effort connection fails.
        std::uint64_t path_search_budget = 2'000'000;
    };

    class Engine;

    /// Called after each path of a decomposition is embedded, with a short description.
    using MilestoneHook = std::function<void (Engine &, const std::string &)>;

    struct Step
    {
        std::string kind;
        std::vector<int> data;
        std::string note;
    };

    /**
     * Owns an embedding and applies the roll-back operations to it, keeping a step log. All
     * operations either succeed or leave the embedding as it was.
     */
    class Engine
    {
    public:
        Engine(Embedding embedding, GoodnessParams params, EngineOptions options = { });

        auto embedding() const -> const Embedding & { return _embedding; }
        auto params() const -> const GoodnessParams & { return _params; }
        auto options() const -> const EngineOptions & { return _options; }
        auto log() const -> const std::vector<Step> & { return _log; }
        auto warnings() const -> std::vector<std::string>;

        auto verify(std::optional<VerifyMode> mode = std::nullopt) -> GoodnessReport;

        /// Size hypothesis |V| ≤ limit, named for messages.
        auto check_hypothesis(bool holds, const std::string & what) -> void;

        auto note(std::string kind, std::vector<int> data = { }, std::string text = "") -> void;

        auto add_root(int host_vertex) -> int;
        auto extend_vertex(int w, int r) -> int;
        auto extend_forest(std::span<const ForestVertex> forest) -> std::vector<int>;
        auto add_edge(int h, int h2, int r) -> void;
        auto remove_leaf(int u) -> void;

        /**
         * Joins existing vertices a and b by a new path whose edge colours, read from a, are the
         * pattern. Returns the path's vertices from a to b.
         */
        auto connect_path(int a, int b, const PathPattern & pattern) -> std::vector<int>;

        /// Embeds the remaining paths of a decomposition, given target ids for the vertices of 𝓗
        /// already present (placed[h] ≥ 0). Updates placed.
        auto embed_paths(const EdgeColouredRootedGraph & h, const PathConstructibleDecomposition & decomposition,
                std::vector<int> & placed) -> void;

        auto set_milestone_hook(MilestoneHook hook) -> void { _milestone = std::move(hook); }
        auto milestone(const std::string & what) -> void;

    private:
        Embedding _embedding;
        GoodnessParams _params;
        EngineOptions _options;
        std::vector<Step> _log;
        std::set<std::vector<int>> _cache;
        std::uint64_t _shuffle_counter = 0;
        MilestoneHook _milestone;

        auto extend_vertex_unchecked(int w, int r) -> int;
        auto candidate_order(std::vector<int> candidates) -> std::vector<int>;
        auto roll_back_to(int size) -> void;
        auto direct_path(int a, int b, const PathPattern & pattern) -> std::optional<std::vector<int>>;
    };

    /**
     * Embeds a tree with a single root h0 so that h0 lands on v0. The returned embedding's target
     * is the input tree (same ids).
     */
    auto embed_tree_anchored(std::shared_ptr<const GraphFamily> host, const EdgeColouredRootedGraph & tree,
            int v0, const GoodnessParams & params, const EngineOptions & options = { }) -> Embedding;

    /**
     * Extends an embedding of the base of a decomposition to all of 𝓗. base_map[i] is the target
     * id, inside engine, of decomposition.base[i]. Returns the embedding relabelled to 𝓗's ids.
     */
    auto embed_path_constructible(Engine & engine, const EdgeColouredRootedGraph & h,
            const PathConstructibleDecomposition & decomposition, std::span<const int> base_map) -> Embedding;

    struct GrowthStep
    {
        int vertex;
        int parent;
        int colour;
    };

    /// Breadth-first order in which to grow the vertices of g reachable from starts, using only
    /// edges accepted by use_edge (all edges when empty).
    auto growth_order(const EdgeColouredRootedGraph & g, std::span<const int> starts,
            const std::function<bool (int, int)> & use_edge = { }) -> std::vector<GrowthStep>;
}

#endif
