/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_FFDIST_HH
#define ROLLBACK_FFDIST_HH

#include <rollback/bootstrap.hh>
#include <rollback/certify.hh>
#include <rollback/graph.hh>
#include <rollback/targets.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rollback
{
    auto is_odd_prime(int q) -> bool;

    /// A point of F_q^d. Vertex ids of distance graphs are the base-q digits of the coordinates,
    /// first coordinate most significant.
    struct FieldPoint
    {
        int q = 3;
        int d = 2;
        std::vector<int> coords;

        auto validate() const -> void;
        auto index() const -> int;
        static auto from_index(int q, int d, int index) -> FieldPoint;
        auto to_string() const -> std::string;

        friend auto operator==(const FieldPoint &, const FieldPoint &) -> bool = default;
    };

    /// Σ (x_i - y_i)^2 mod q.
    auto ff_norm(const FieldPoint & x, const FieldPoint & y) -> int;

    /// q^d, or PreconditionError when it exceeds cap.
    auto field_size(int q, int d, int cap) -> int;

    inline constexpr int distance_vertex_cap = 20'000;

    struct DistanceGraphSpec
    {
        int q = 3;
        int d = 2;
        std::vector<int> distances;         // R, sorted, colour i is distances[i]

        auto validate() const -> void;
        /// Colour carrying distance r, or nullopt.
        auto colour_of(int r) const -> std::optional<int>;
    };

    struct DistanceGraph
    {
        Graph graph;
        std::vector<FieldPoint> points;     // by vertex id
    };

    /// |{z : ||z|| = r}| by convolution over coordinates.
    auto sphere_size(int q, int d, int r) -> long;

    auto build_distance_graph(int q, int d, int r, int cap = distance_vertex_cap) -> DistanceGraph;

    struct DistanceFamily
    {
        GraphFamily family;
        DistanceGraphSpec spec;
        std::vector<FieldPoint> points;
    };

    auto build_distance_family(const DistanceGraphSpec & spec, int cap = distance_vertex_cap) -> DistanceFamily;

    /// Eigenvalues of the distance graph as character sums, λ_a = Σ_{||z|| = r} cos(2π a·z / q),
    /// indexed by the point a.
    auto character_spectrum(int q, int d, int r, int cap = distance_vertex_cap) -> std::vector<double>;

    struct SpectralParams
    {
        JumbledParams measured;             // p = degree / q^d, β = largest nontrivial |eigenvalue|
        int degree = 0;
        double beta_paper = 0.0;            // 2 q^{(d-1)/2}
    };

    /// Dense spectrum via certify; throws InternalInconsistency if β exceeds 2 q^{(d-1)/2}.
    auto spectral_params(int q, int d, int r, const CertifyOptions & options = { }) -> SpectralParams;

    struct ThresholdReport
    {
        int s = 1;                          // joined_from_jumbled of the measured family parameters
        int ell_small = 0;                  // (d + 2)⌈log2 q⌉ + 16
        int ell_large = 0;                  // 2⌈1/ε⌉ + 16
        double c_small = 0.0;               // 72 |R|^{1/2} q^{(d+1)/2}
        double c_large = 0.0;               // 200 |R|^{1/2+ε} q^{(1+ε)(d+1)/2}
        double p = 0.0;
        double beta = 0.0;
        double s_nominal = 0.0;             // 4 |R|^{1/2} q^{(d+1)/2}, for comparison only
    };

    /// C_small^2 = 5184 |R| q^{d+1}, exactly.
    auto c_small_squared(int q, int d, int distance_count) -> unsigned __int128;

    /// The formula part only: s, p and β are left at their defaults.
    auto threshold_formulas(int q, int d, int distance_count, double epsilon) -> ThresholdReport;

    /// Formulas plus measured p, β and s from the spectra of the members.
    auto thresholds(const DistanceGraphSpec & spec, double epsilon, const CertifyOptions & options = { }) -> ThresholdReport;

    struct PointSet
    {
        int q = 3;
        int d = 2;
        std::vector<FieldPoint> points;
    };

    /// Header "q=..,d=..", then one point per line, comma-separated coordinates. Blank lines and
    /// lines starting with '#' are skipped.
    auto parse_point_set(std::istream & in) -> PointSet;
    auto write_point_set(std::ostream & out, const PointSet & points) -> void;
    auto all_points(int q, int d, int cap = distance_vertex_cap) -> PointSet;

    struct DistanceEmbeddingOptions
    {
        PipelineOptions pipeline;
        GoodnessParams params{ 0, 3 };      // s = 0 means measure it
        int joined_cap = 64;                // largest s tried by min_joined
        double epsilon = 0.5;               // for the fallback s from the thresholds
        /// Outside exact mode, failed searches are retried with shuffled candidates, seeds
        /// seed + 1, seed + 2, ..., up to this many runs in total.
        int attempts = 1;
    };

    struct DistanceEmbedding
    {
        PipelineResult result;
        std::vector<FieldPoint> image;      // by target vertex
        std::vector<int> realised;          // ||φ(u) - φ(v)|| per target edge, in edges() order
        int s = 1;
        bool s_measured = false;
        std::vector<std::string> warnings;
    };

    /**
     * Embeds a subdivision whose edge colours are distances (residues in R) into the distance
     * family restricted to E, then revalidates every edge with ff_norm.
     */
    auto embed_distance_subdivision(const PointSet & e, const DistanceGraphSpec & spec,
            const Subdivision & target, const DistanceEmbeddingOptions & options = { }) -> DistanceEmbedding;
}

#endif
