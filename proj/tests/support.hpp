#pragma once

// Random generators and independent oracles shared by the test suites.

#include "hyperpack/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace hyperpack::testing {

/// C(n, r) by Pascal's triangle, independent of the library's binomial.
inline std::uint64_t pascal(unsigned n, unsigned r)
{
    if (r > n)
        return 0;
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (unsigned i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (unsigned j = 1; j <= i; ++j)
            c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c[n][r];
}

inline VertexSet random_subset(std::mt19937_64& rng, std::size_t n, std::size_t k)
{
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{1});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    return VertexSet::from_unsorted(std::move(all));
}

/// Uniformly random k-graph on n vertices with exactly m distinct edges
/// (m is clamped to C(n,k)).
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t k, std::size_t m)
{
    m = std::min<std::size_t>(m, pascal(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    std::set<VertexSet> edges;
    while (edges.size() < m)
        edges.insert(random_subset(rng, n, k));
    return Hypergraph(n, k, {edges.begin(), edges.end()});
}

/// Random graph sharing roughly half its edges with `base`, so the identity
/// bijection usually starts with conflicts.
inline Hypergraph overlapping_hypergraph(std::mt19937_64& rng, const Hypergraph& base, std::size_t m)
{
    std::set<VertexSet> edges;
    for (const auto& e : base.edges())
        if (edges.size() < m && rng() % 2 == 0)
            edges.insert(e);
    while (edges.size() < std::min<std::size_t>(m, pascal(static_cast<unsigned>(base.n()), static_cast<unsigned>(base.k()))))
        edges.insert(random_subset(rng, base.n(), base.k()));
    return Hypergraph(base.n(), base.k(), {edges.begin(), edges.end()});
}

/// True iff some permutation maps no edge of h1 onto an edge of h2; plain
/// enumeration of all n! permutations with std::set lookups.
inline bool packs_by_enumeration(const Hypergraph& h1, const Hypergraph& h2)
{
    std::set<std::vector<Vertex>> target;
    for (const auto& e : h2.edges())
        target.insert(std::vector<Vertex>(e.begin(), e.end()));
    std::vector<Vertex> perm(h1.n());
    std::iota(perm.begin(), perm.end(), Vertex{1});
    do {
        bool clash = false;
        for (const auto& e : h1.edges()) {
            std::vector<Vertex> img;
            for (Vertex v : e)
                img.push_back(perm[v - 1]);
            std::sort(img.begin(), img.end());
            if (target.contains(img)) {
                clash = true;
                break;
            }
        }
        if (! clash)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Hypergraph graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
{
    std::vector<VertexSet> out;
    for (auto [a, b] : edges)
        out.push_back(VertexSet::from_unsorted({a, b}));
    return Hypergraph(n, 2, std::move(out));
}

} // namespace hyperpack::testing
