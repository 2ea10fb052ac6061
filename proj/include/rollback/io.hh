/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_IO_HH
#define ROLLBACK_IO_HH

#include <rollback/bootstrap.hh>
#include <rollback/certify.hh>
#include <rollback/engine.hh>
#include <rollback/ffdist.hh>
#include <rollback/graph.hh>
#include <rollback/targets.hh>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rollback
{
    using Json = nlohmann::ordered_json;

    /// A family file: the graphs plus, for distance families, the field and the point labels.
    struct FamilyFile
    {
        GraphFamily family;
        std::optional<DistanceGraphSpec> spec;
        std::vector<FieldPoint> points;         // by vertex id, empty unless spec
    };

    auto family_to_json(const FamilyFile & file) -> Json;
    auto family_from_json(const Json & j) -> FamilyFile;

    /// A target file: the graph, and the decomposition and branch vertices when it has them.
    struct TargetFile
    {
        std::string kind = "general";           // subdivision, expansion, star-forest, tree, general
        EdgeColouredRootedGraph graph;
        std::vector<int> branches;
        std::optional<PathConstructibleDecomposition> decomposition;
        /// Colours are distances (residues) rather than colour indices.
        bool distance_labels = false;

        auto subdivision() const -> Subdivision;
    };

    auto target_to_json(const EdgeColouredRootedGraph & g) -> Json;
    auto target_graph_from_json(const Json & j) -> EdgeColouredRootedGraph;
    auto target_file_to_json(const TargetFile & file) -> Json;
    auto target_file_from_json(const Json & j) -> TargetFile;

    auto step_to_json(const Step & step) -> Json;
    auto goodness_to_json(const GoodnessReport & report) -> Json;
    auto cert_to_json(const CertReport & report) -> Json;
    auto coloured_set_to_json(const ColouredVertexSet & xs) -> Json;

    /// An embedding file: map from target vertices to host vertices, the target itself, and
    /// whatever provenance the producer recorded.
    struct EmbeddingFile
    {
        EdgeColouredRootedGraph target;
        std::vector<int> map;
        Json provenance = Json::object();
    };

    auto embedding_to_json(const Embedding & e, Json provenance = Json::object()) -> Json;
    auto embedding_from_json(const Json & j) -> EmbeddingFile;

    auto pipeline_provenance(const PipelineResult & result) -> Json;

    /// Graphviz: one graph per colour, then the merged multigraph with colour attributes.
    auto family_to_dot(const GraphFamily & family, int colour) -> std::string;
    auto family_to_dot_merged(const GraphFamily & family) -> std::string;
    auto target_to_dot(const EdgeColouredRootedGraph & g) -> std::string;

    auto read_json_file(const std::string & path) -> Json;
    auto write_text_file(const std::string & path, const std::string & text) -> void;
}

#endif
