#pragma once

#include "hyperpack/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

namespace hyperpack {

/// Largest n for which edges are additionally kept as 64-bit masks.
inline constexpr std::size_t mask_limit = 64;

/// A k-uniform hypergraph on the vertices 1..n. Isolated vertices are implicit.
/// Immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Validates every edge (arity k, labels in 1..n) and rejects duplicates.
    Hypergraph(std::size_t n, std::size_t k, std::vector<VertexSet> edges);

    /// K_n^(k).
    static Hypergraph complete(std::size_t n, std::size_t k);

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    /// Edges in lexicographic order.
    const std::vector<VertexSet>& edges() const noexcept { return edges_; }

    /// Indices into edges() of the edges containing v.
    std::span<const std::size_t> incident(Vertex v) const { return incidence_[v - 1]; }

    /// Membership test; uses the bitmask table when n <= 64.
    bool contains(const VertexSet& e) const;

    /// Membership test through the sorted edge list only (O(log m)).
    bool contains_sorted(const VertexSet& e) const;

    bool has_masks() const noexcept { return n_ <= mask_limit; }
    bool contains_mask(std::uint64_t m) const { return mask_set_.contains(m); }

    /// The same hypergraph with one more edge.
    Hypergraph with_edge(const VertexSet& e) const;
    /// The same hypergraph without edge e (which must be present).
    Hypergraph without_edge(const VertexSet& e) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b)
    {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::vector<VertexSet> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::unordered_set<std::uint64_t> mask_set_;
};

/// A permutation of 1..n, read as f: V(H1) -> V(H2).
class Bijection {
public:
    Bijection() = default;
    /// images[i] is f(i+1); must be a permutation of 1..n.
    explicit Bijection(std::vector<Vertex> images);

    static Bijection identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    Vertex operator()(Vertex v) const { return images_[v - 1]; }
    std::span<const Vertex> images() const noexcept { return images_; }

    Bijection inverse() const;

    friend bool operator==(const Bijection&, const Bijection&) = default;

private:
    std::vector<Vertex> images_;
};

/// d(U): number of edges of h containing u.
std::size_t degree(const Hypergraph& h, const VertexSet& u);

/// Delta_l(h): maximum degree over all l-subsets; 0 when h has no edges.
std::size_t max_degree(const Hypergraph& h, std::size_t l);

/// f(U), sorted.
VertexSet apply(const Bijection& f, const VertexSet& u);

/// Edges C of h2 whose preimage f^-1(C) is an edge of h1, in lexicographic
/// order. Empty iff f is a packing of h1 and h2.
std::vector<VertexSet> conflicts(const Hypergraph& h1, const Hypergraph& h2, const Bijection& f);

/// Number of conflicts, counted from the h1 side.
std::size_t conflict_count(const Hypergraph& h1, const Hypergraph& h2, const Bijection& f);

/// Throws std::invalid_argument unless both hypergraphs share n and k.
void require_compatible(const Hypergraph& h1, const Hypergraph& h2);

} // namespace hyperpack
