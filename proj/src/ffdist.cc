/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rollback/errors.hh>
#include <rollback/ffdist.hh>

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace rollback
{
    using std::to_string;

    auto is_odd_prime(int q) -> bool
    {
        if (q < 3 || q % 2 == 0)
            return false;
        for (int f = 3 ; f * f <= q ; f += 2)
            if (q % f == 0)
                return false;
        return true;
    }

    auto field_size(int q, int d, int cap) -> int
    {
        if (! is_odd_prime(q))
            throw PreconditionError{ "q = " + to_string(q) + " is not an odd prime" };
        if (d < 1)
            throw PreconditionError{ "dimension must be positive" };
        long size = 1;
        for (int i = 0 ; i < d ; ++i) {
            size *= q;
            if (size > cap)
                throw PreconditionError{ "q^d exceeds the vertex cap " + to_string(cap) };
        }
        return int(size);
    }

    auto FieldPoint::validate() const -> void
    {
        if (! is_odd_prime(q))
            throw InvalidInput{ "q = " + std::to_string(q) + " is not an odd prime" };
        if (int(coords.size()) != d)
            throw InvalidInput{ "point has " + std::to_string(coords.size()) + " coordinates, expected " + std::to_string(d) };
        for (int c : coords)
            if (c < 0 || c >= q)
                throw InvalidInput{ "coordinate " + std::to_string(c) + " outside 0.." + std::to_string(q - 1) };
    }

    auto FieldPoint::index() const -> int
    {
        int result = 0;
        for (int c : coords)
            result = result * q + c;
        return result;
    }

    auto FieldPoint::from_index(int q, int d, int index) -> FieldPoint
    {
        FieldPoint result{ q, d, vector<int>(d) };
        for (int i = d - 1 ; i >= 0 ; --i) {
            result.coords[i] = index % q;
            index /= q;
        }
        return result;
    }

    auto FieldPoint::to_string() const -> string
    {
        string result = "(";
        for (std::size_t i = 0 ; i < coords.size() ; ++i)
            result += (i ? "," : "") + std::to_string(coords[i]);
        return result + ")";
    }

    auto ff_norm(const FieldPoint & x, const FieldPoint & y) -> int
    {
        if (x.q != y.q || x.d != y.d)
            throw InvalidInput{ "points from different fields" };
        long sum = 0;
        for (int i = 0 ; i < x.d ; ++i) {
            long diff = x.coords[i] - y.coords[i];
            sum += diff * diff;
        }
        return int(sum % x.q);
    }

    auto DistanceGraphSpec::validate() const -> void
    {
        if (! is_odd_prime(q))
            throw PreconditionError{ "q = " + to_string(q) + " is not an odd prime" };
        if (d < 1)
            throw PreconditionError{ "dimension must be positive" };
        if (distances.empty())
            throw PreconditionError{ "distance set R is empty" };
        for (std::size_t i = 0 ; i < distances.size() ; ++i) {
            int r = distances[i];
            if (r == 0)
                throw PreconditionError{ "distance 0 is not allowed" };
            if (r < 0 || r >= q)
                throw PreconditionError{ "distance " + to_string(r) + " is not a residue mod " + to_string(q) };
            if (i > 0 && distances[i - 1] >= r)
                throw PreconditionError{ "distances must be sorted and distinct" };
        }
    }

    auto DistanceGraphSpec::colour_of(int r) const -> optional<int>
    {
        auto it = std::lower_bound(distances.begin(), distances.end(), r);
        if (it == distances.end() || *it != r)
            return std::nullopt;
        return int(it - distances.begin());
    }

    auto sphere_size(int q, int d, int r) -> long
    {
        if (! is_odd_prime(q))
            throw PreconditionError{ "q = " + to_string(q) + " is not an odd prime" };
        // counts[v] = number of vectors so far with norm v
        vector<long> counts(q, 0), next(q);
        counts[0] = 1;
        for (int i = 0 ; i < d ; ++i) {
            std::fill(next.begin(), next.end(), 0);
            for (int v = 0 ; v < q ; ++v)
                for (int x = 0 ; x < q ; ++x)
                    next[(v + x * x) % q] += counts[v];
            counts.swap(next);
        }
        return counts[((r % q) + q) % q];
    }

    auto build_distance_graph(int q, int d, int r, int cap) -> DistanceGraph
    {
        if (r % q == 0)
            throw PreconditionError{ "distance must be nonzero mod q" };
        DistanceFamily family = build_distance_family({ q, d, { ((r % q) + q) % q } }, cap);
        return { family.family.graph(0), std::move(family.points) };
    }

    auto build_distance_family(const DistanceGraphSpec & spec, int cap) -> DistanceFamily
    {
        spec.validate();
        int q = spec.q, d = spec.d, n = field_size(q, d, cap);

        DistanceFamily result;
        result.spec = spec;
        for (int v = 0 ; v < n ; ++v)
            result.points.push_back(FieldPoint::from_index(q, d, v));

        // the sphere of each radius, as difference vectors
        vector<vector<int>> sphere(q);
        for (int z = 0 ; z < n ; ++z)
            sphere[ff_norm(result.points[z], result.points[0])].push_back(z);

        vector<Graph> graphs;
        for (int r : spec.distances) {
            vector<Bitset> rows(n, Bitset(n));
            for (int x = 0 ; x < n ; ++x) {
                auto & px = result.points[x].coords;
                for (int z : sphere[r]) {
                    auto & pz = result.points[z].coords;
                    int y = 0;
                    for (int i = 0 ; i < d ; ++i)
                        y = y * q + (px[i] + pz[i]) % q;
                    rows[x].set(y);
                }
            }
            graphs.push_back(Graph::from_rows(std::move(rows)));
        }
        result.family = GraphFamily{ std::move(graphs) };
        return result;
    }

    auto character_spectrum(int q, int d, int r, int cap) -> vector<double>
    {
        int n = field_size(q, d, cap);
        if (r % q == 0)
            throw PreconditionError{ "distance must be nonzero mod q" };
        vector<FieldPoint> points;
        for (int v = 0 ; v < n ; ++v)
            points.push_back(FieldPoint::from_index(q, d, v));
        vector<int> sphere;
        for (int z = 0 ; z < n ; ++z)
            if (ff_norm(points[z], points[0]) == ((r % q) + q) % q)
                sphere.push_back(z);

        vector<double> cosines(q);
        for (int k = 0 ; k < q ; ++k)
            cosines[k] = std::cos(2 * std::numbers::pi * k / q);

        vector<double> result(n);
        for (int a = 0 ; a < n ; ++a) {
            double sum = 0;
            for (int z : sphere) {
                int dot = 0;
                for (int i = 0 ; i < d ; ++i)
                    dot += points[a].coords[i] * points[z].coords[i];
                sum += cosines[dot % q];
            }
            result[a] = sum;
        }
        return result;
    }

    auto spectral_params(int q, int d, int r, const CertifyOptions & options) -> SpectralParams
    {
        auto g = build_distance_graph(q, d, r, std::max(distance_vertex_cap, options.spectral_max_vertices));
        auto spectrum = adjacency_spectrum(g.graph, options);
        SpectralParams result;
        result.degree = spectrum.degree;
        result.measured = { double(spectrum.degree) / g.graph.size(), spectrum.lambda };
        result.beta_paper = 2 * std::pow(double(q), (d - 1) / 2.0);
        if (spectrum.lambda > result.beta_paper + 1e-9)
            throw InternalInconsistency{ "measured beta " + to_string(spectrum.lambda) + " exceeds 2q^((d-1)/2) = "
                + to_string(result.beta_paper) + " for q = " + to_string(q) + ", d = " + to_string(d) + ", r = " + to_string(r) };
        return result;
    }

    auto c_small_squared(int q, int d, int distance_count) -> unsigned __int128
    {
        unsigned __int128 result = 5184u * unsigned(distance_count);
        for (int i = 0 ; i < d + 1 ; ++i)
            result *= unsigned(q);
        return result;
    }

    auto threshold_formulas(int q, int d, int distance_count, double epsilon) -> ThresholdReport
    {
        if (! is_odd_prime(q))
            throw PreconditionError{ "q = " + to_string(q) + " is not an odd prime" };
        if (d < 1 || distance_count < 1)
            throw PreconditionError{ "need d >= 1 and a nonempty R" };
        if (! (epsilon > 0 && epsilon <= 0.5))
            throw PreconditionError{ "epsilon must lie in (0, 1/2]" };

        ThresholdReport result;
        int log_q = 0;
        while ((1L << log_q) < q)
            ++log_q;
        result.ell_small = (d + 2) * log_q + 16;
        result.ell_large = 2 * int(std::ceil(1.0 / epsilon - 1e-12)) + 16;
        double big_r = distance_count, half = (d + 1) / 2.0;
        // C^2 is an exact integer below 2^53 here, and sqrt is correctly rounded, so perfect
        // squares come out exact.
        auto squared = c_small_squared(q, d, distance_count);
        if (squared >= (unsigned __int128){ 1 } << 53)
            throw PreconditionError{ "C_small^2 does not fit a double exactly" };
        result.c_small = std::sqrt(double(squared));
        result.c_large = 200 * std::pow(big_r, 0.5 + epsilon) * std::pow(double(q), (1 + epsilon) * half);
        result.s_nominal = 4 * std::sqrt(big_r) * std::pow(double(q), half);
        return result;
    }

    auto thresholds(const DistanceGraphSpec & spec, double epsilon, const CertifyOptions & options) -> ThresholdReport
    {
        spec.validate();
        auto result = threshold_formulas(spec.q, spec.d, int(spec.distances.size()), epsilon);
        vector<JumbledParams> members;
        for (int r : spec.distances)
            members.push_back(spectral_params(spec.q, spec.d, r, options).measured);
        auto family = family_jumbled(members);
        result.p = family.p;
        result.beta = family.beta;
        result.s = joined_from_jumbled(family);
        return result;
    }

    auto parse_point_set(std::istream & in) -> PointSet
    {
        PointSet result;
        string line;
        bool header = false;
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            line.erase(std::remove_if(line.begin(), line.end(), [] (unsigned char c) { return std::isspace(c); }), line.end());
            if (line.empty() || line[0] == '#')
                continue;
            if (! header) {
                bool have_q = false, have_d = false;
                std::stringstream fields{ line };
                string field;
                while (std::getline(fields, field, ',')) {
                    auto eq = field.find('=');
                    if (eq == string::npos)
                        throw InvalidInput{ "line " + to_string(line_number) + ": header must be q=..,d=.." };
                    auto key = field.substr(0, eq);
                    int value = 0;
                    try {
                        value = std::stoi(field.substr(eq + 1));
                    }
                    catch (const std::exception &) {
                        throw InvalidInput{ "line " + to_string(line_number) + ": bad header value '" + field + "'" };
                    }
                    if (key == "q")
                        result.q = value, have_q = true;
                    else if (key == "d")
                        result.d = value, have_d = true;
                    else
                        throw InvalidInput{ "line " + to_string(line_number) + ": unknown header key '" + key + "'" };
                }
                if (! have_q || ! have_d)
                    throw InvalidInput{ "line " + to_string(line_number) + ": header must give q and d" };
                if (! is_odd_prime(result.q))
                    throw InvalidInput{ "q = " + to_string(result.q) + " is not an odd prime" };
                header = true;
                continue;
            }
            FieldPoint point{ result.q, result.d, { } };
            std::stringstream fields{ line };
            string field;
            while (std::getline(fields, field, ',')) {
                try {
                    point.coords.push_back(std::stoi(field));
                }
                catch (const std::exception &) {
                    throw InvalidInput{ "line " + to_string(line_number) + ": bad coordinate '" + field + "'" };
                }
            }
            try {
                point.validate();
            }
            catch (const InvalidInput & e) {
                throw InvalidInput{ "line " + to_string(line_number) + ": " + e.what() };
            }
            if (std::find(result.points.begin(), result.points.end(), point) != result.points.end())
                throw InvalidInput{ "line " + to_string(line_number) + ": duplicate point " + point.to_string() };
            result.points.push_back(std::move(point));
        }
        if (! header)
            throw InvalidInput{ "point set has no q=..,d=.. header" };
        return result;
    }

    auto write_point_set(std::ostream & out, const PointSet & points) -> void
    {
        out << "q=" << points.q << ",d=" << points.d << "\n";
        for (auto & p : points.points) {
            for (std::size_t i = 0 ; i < p.coords.size() ; ++i)
                out << (i ? "," : "") << p.coords[i];
            out << "\n";
        }
    }

    auto all_points(int q, int d, int cap) -> PointSet
    {
        int n = field_size(q, d, cap);
        PointSet result{ q, d, { } };
        for (int v = 0 ; v < n ; ++v)
            result.points.push_back(FieldPoint::from_index(q, d, v));
        return result;
    }

    auto embed_distance_subdivision(const PointSet & e, const DistanceGraphSpec & spec,
            const Subdivision & target, const DistanceEmbeddingOptions & options) -> DistanceEmbedding
    {
        spec.validate();
        if (e.q != spec.q || e.d != spec.d)
            throw PreconditionError{ "point set lives in a different field from the distance spec" };

        // distances to colours
        int branch_count = int(target.branches.size());
        vector<vector<PathPattern>> patterns(branch_count, vector<PathPattern>(branch_count));
        std::size_t next_path = 0;
        for (int i = 0 ; i < branch_count ; ++i)
            for (int j = i + 1 ; j < branch_count ; ++j) {
                auto pattern = path_pattern(target.target, target.paths.at(next_path++));
                for (int & c : pattern.colours) {
                    auto colour = spec.colour_of(c);
                    if (! colour)
                        throw PreconditionError{ "target uses distance " + to_string(c) + ", which is not in R" };
                    c = *colour;
                }
                patterns[i][j] = std::move(pattern);
            }
        auto coloured = build_subdivision(branch_count, patterns);

        // the family on E
        auto full = build_distance_family(spec);
        vector<int> ids;
        for (auto & p : e.points) {
            p.validate();
            ids.push_back(p.index());
        }
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw InvalidInput{ "point set has duplicates" };
        if (ids.empty())
            throw PreconditionError{ "point set is empty" };
        auto restricted = restrict_family(full.family, ids);
        auto host = std::make_shared<const GraphFamily>(restricted.family);
        int n = host->size();

        int s = options.params.s;
        bool s_measured = false;
        vector<string> warnings;
        if (s <= 0) {
            optional<int> measured;
            try {
                CertifyOptions co;
                co.joined_cap = options.pipeline.joined_cap;
                co.threads = options.pipeline.engine.threads;
                measured = min_joined(*host, std::min(options.joined_cap, n), co);
            }
            catch (const CapExceeded & ex) {
                warnings.push_back(string{ "min_joined not measured: " } + ex.what());
            }
            if (measured) {
                s = *measured;
                s_measured = true;
            }
            else {
                s = thresholds(spec, options.epsilon).s;
                warnings.push_back("using the theoretical s = " + to_string(s) + " from the spectral parameters");
            }
        }
        if (n <= s || n < coloured.target.size())
            throw PreconditionError{ "no feasible s: |E| = " + to_string(n) + ", s = " + to_string(s)
                + ", |V(H)| = " + to_string(coloured.target.size()) };

        auto pipeline = options.pipeline;
        if (s_measured) {
            pipeline.engine.host_certified = true;
            pipeline.certify_host = false;
        }
        auto params = options.params;
        params.s = s;
        auto run = [&] {
            int attempts = pipeline.engine.mode == VerifyMode::exact ? 1 : std::max(1, options.attempts);
            for (int attempt = 0 ; ; ++attempt) {
                auto current = pipeline;
                if (attempt > 0) {
                    current.engine.shuffle = true;
                    current.engine.seed = pipeline.engine.seed + attempt;
                }
                try {
                    return embed_subdivision_joined(host, coloured, params, current);
                }
                catch (const Error & ex) {
                    bool retry = dynamic_cast<const SearchFailure *>(&ex) || dynamic_cast<const HostNotJoined *>(&ex);
                    if (! retry || attempt + 1 >= attempts)
                        throw;
                    warnings.push_back("attempt " + to_string(attempt) + " failed (" + ex.what() + "); retrying with seed "
                            + to_string(pipeline.engine.seed + attempt + 1));
                }
            }
        };
        auto out = run();
        DistanceEmbedding result{ std::move(out), { }, { }, s, s_measured, std::move(warnings) };
        result.warnings.insert(result.warnings.end(), result.result.warnings.begin(), result.result.warnings.end());

        // back to points, and check every edge with ff_norm
        auto & emb = result.result.embedding;
        for (int h = 0 ; h < emb.target().size() ; ++h)
            result.image.push_back(full.points[restricted.new_to_old[emb.image(h)]]);
        for (auto & edge : target.target.edges()) {
            int realised = ff_norm(result.image[edge.u], result.image[edge.v]);
            if (realised != edge.colour)
                throw InternalInconsistency{ "edge " + to_string(edge.u) + "-" + to_string(edge.v) + " realises distance "
                    + to_string(realised) + ", expected " + to_string(edge.colour) };
            result.realised.push_back(realised);
        }
        return result;
    }
}
