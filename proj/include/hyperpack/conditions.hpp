#pragma once

#include "hyperpack/arith.hpp"
#include "hyperpack/hypergraph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperpack {

enum class ConditionId {
    ss_product, ///< |E1|·|E2| < C(n,2), graphs
    ss_degree,  ///< 2·Δ(G1)·Δ(G2) < n, graphs
    ss_size,    ///< |E1|+|E2| <= ⌈3n/2⌉-2, graphs
    naroski,    ///< |E1|·|E2| < C(n,k)
    rrt,        ///< Δ(H1)Δ_{k-1}(H2) + Δ(H2)Δ_{k-1}(H1) < n-k+2
    beta        ///< Δ_β(H1)Δ_{k-β}(H2) + Δ_{k-β}(H1)Δ_β(H2) < C(n,β)-C(k,β)+2
};

std::string_view name(ConditionId id);

/// One evaluated sufficient packing condition.
struct ConditionReport {
    ConditionId id;
    Count lhs = 0;
    Count rhs = 0;
    bool guarantees_packing = false;
    /// The β that was evaluated; set only for ConditionId::beta.
    std::optional<int> beta;

    /// β when this BETA report is satisfied, otherwise empty.
    std::optional<int> witness_beta() const
    {
        return guarantees_packing ? beta : std::nullopt;
    }

    /// "condition=<id> lhs=<v> rhs=<v> packs=<bool> [beta=<v>]"
    std::string to_text() const;

    friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

ConditionReport check_ss_product(const Hypergraph& g1, const Hypergraph& g2);
ConditionReport check_ss_degree(const Hypergraph& g1, const Hypergraph& g2);
ConditionReport check_ss_size(const Hypergraph& g1, const Hypergraph& g2);
ConditionReport check_naroski(const Hypergraph& h1, const Hypergraph& h2);
ConditionReport check_rrt(const Hypergraph& h1, const Hypergraph& h2);
ConditionReport check_beta(const Hypergraph& h1, const Hypergraph& h2, int beta);

/// Scans β = 1..k-1 and returns the first satisfied report. When none is
/// satisfied, returns the report with the smallest lhs-rhs gap (smallest β on
/// ties).
ConditionReport check_beta_any(const Hypergraph& h1, const Hypergraph& h2);

/// Every applicable condition: the graph-only ones when k = 2, then NAROSKI,
/// RRT and the best BETA report.
std::vector<ConditionReport> check_all(const Hypergraph& h1, const Hypergraph& h2);

/// Largest total edge count |E1|+|E2| for which the size corollary
/// |E1|+|E2| < 2·sqrt(C(n,k)) guarantees a packing, i.e. ⌈2·sqrt(C(n,k))⌉-1.
Count packing_threshold(std::int64_t n, std::int64_t k);

/// Lower bound on m(n,k) implied by the corollary: packing_threshold + 1.
Count m_lower_bound(std::int64_t n, std::int64_t k);

/// m(n,2) = ⌈3n/2⌉-1.
Count m_graph(std::int64_t n);

} // namespace hyperpack
