#pragma once

#include "hyperpack/arith.hpp"
#include "hyperpack/designs.hpp"
#include "hyperpack/hypergraph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperpack {

enum class ExtremalKind { even_k, odd_k, even_k_padded };

std::string_view name(ExtremalKind kind);

struct ExtremalParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t alpha = 0;       ///< k/2 (even kinds)
    std::size_t kernels = 0;     ///< number of disjoint α-kernels in H1 (even kinds)
    std::size_t padding = 0;     ///< isolated vertices appended to H2 (padded kind)
    std::size_t copies = 0;      ///< t, disjoint design copies in H2 (odd kind)
    std::size_t clique_size = 0; ///< (k-2)t+1 (odd kind)
    std::size_t design_n = 0;    ///< points per design copy
};

/// A pair of k-uniform hypergraphs on n vertices that do not pack, bounding
/// m(n,k) from above by claimed_total.
struct ExtremalPair {
    Hypergraph h1;
    Hypergraph h2;
    ExtremalKind kind;
    ExtremalParams params;
    Count claimed_total = 0;
};

/// Construction failures that are answers rather than usage errors.
class ExtremalError : public std::runtime_error {
public:
    enum class Reason { divisibility, design_not_found, design_budget };
    ExtremalError(Reason reason, const std::string& what) :
        std::runtime_error(what),
        reason_(reason)
    {
    }
    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

/// A Steiner system S(t,k,n) (λ = 1): the Bose/Skolem construction for triple
/// systems, exact-cover search otherwise. Throws ExtremalError on failure.
Design steiner_system(std::size_t t, std::size_t n, std::size_t k, std::int64_t budget = default_design_budget);

/// k = 2α even. H1: kernel K = {1..α} joined to every α-subset of
/// {α+1..n}. H2: an α-(n,k,1) design.
ExtremalPair build_even_pair(std::size_t n, std::size_t k, std::int64_t budget = default_design_budget);

/// k odd. H1: complete k-graph on the clique {1..(k-2)t+1} plus every
/// (k-1)-subset of the clique joined to every outside vertex. H2: t disjoint
/// copies of a (k-1)-(n/t,k,1) design on consecutive label blocks.
/// t defaults to floor(n^((k-2)/(2k-3))) and must divide n.
ExtremalPair build_odd_pair(std::size_t n, std::size_t k, std::optional<std::size_t> t = std::nullopt,
    std::int64_t budget = default_design_budget);

/// Even k with r isolated vertices: H2 is an α-(n-r,k,1) design on 1..n-r and
/// n-r+1..n are isolated. H1 has s = r+1 disjoint kernels K_i (consecutive
/// label blocks from 1), each joined to every α-subset of V \ K_i.
/// r = 0 gives build_even_pair.
ExtremalPair build_even_pair_padded(std::size_t n, std::size_t k, std::size_t r,
    std::int64_t budget = default_design_budget);

struct Certificate {
    bool ok = false;
    /// Human-readable statements of every property that was checked and held.
    std::vector<std::string> verified;
    std::string failure;
    std::optional<VertexSet> witness;
};

/// Replays the even-k non-packing argument: every α-subset of H2's
/// non-isolated part lies in an edge, every kernel joined with any α-subset
/// outside it is an edge of H1, and there are more kernels than isolated
/// vertices.
Certificate verify_nonpacking_even(const ExtremalPair& pair);

/// Replays the odd-k argument: the pigeonhole ⌈clique/t⌉ >= k-1, each copy's
/// (k-1)-subsets extend to an edge of that copy, and every (k-1)-subset of the
/// clique forms an edge with every other vertex.
Certificate verify_nonpacking_odd(const ExtremalPair& pair);

Certificate verify_nonpacking(const ExtremalPair& pair);

/// C(n-α,α) + C(n,α)/C(2α,α) when the α-(n,k,1) divisibility conditions hold.
std::optional<Count> even_upper_bound(std::size_t n, std::size_t k);

/// floor(n^((k-2)/(2k-3))).
std::size_t default_odd_copies(std::size_t n, std::size_t k);

/// Size of the odd construction, when t | n and the (k-1)-(n/t,k,1)
/// divisibility conditions hold.
std::optional<Count> odd_upper_bound(std::size_t n, std::size_t k, std::size_t t);

/// Numerator and denominator of the odd-k exponent (k^2-k-1)/(2k-3).
std::pair<std::int64_t, std::int64_t> odd_exponent(std::size_t k);

} // namespace hyperpack
