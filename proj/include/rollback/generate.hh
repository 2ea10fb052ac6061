/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_GENERATE_HH
#define ROLLBACK_GENERATE_HH

#include <rollback/graph.hh>

#include <cstdint>

namespace rollback
{
    /// t copies of K_n.
    auto complete_family(int n, int t = 1) -> GraphFamily;

    /// K_n minus the perfect matching {2i, 2i + 1}; n even.
    auto complete_minus_matching(int n) -> Graph;

    /// G(n, p), every pair kept independently.
    auto random_graph(int n, double p, std::uint64_t seed) -> Graph;

    /// t independent G(n, p) graphs; colour i uses seed + i.
    auto random_family(int n, int t, double p, std::uint64_t seed) -> GraphFamily;

    /// g plus extra isolated vertices.
    auto with_isolated(const Graph & g, int extra) -> Graph;

    /// The single-colour family {g}.
    auto single(Graph g) -> GraphFamily;
}

#endif
