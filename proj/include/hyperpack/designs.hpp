#pragma once

#include "hyperpack/arith.hpp"
#include "hyperpack/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperpack {

/// Parameters of a t-(n,k,λ) design.
struct DesignSpec {
    std::size_t t = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t lambda = 1;

    /// Throws std::invalid_argument unless 1 <= t <= k <= n and λ >= 1.
    void validate() const;
    /// λ·C(n,t)/C(k,t); only meaningful when the divisibility conditions hold.
    Count block_count() const;
    std::string str() const;

    friend bool operator==(const DesignSpec&, const DesignSpec&) = default;
};

/// A block collection claiming to be a t-(n,k,λ) design. Blocks are kept
/// sorted; verify_design checks the defining property.
struct Design {
    DesignSpec spec;
    std::vector<VertexSet> blocks;
};

struct DivisibilityTerm {
    std::size_t i;
    Count divisor;  ///< C(k-i, t-i)
    Count dividend; ///< λ·C(n-i, t-i)
    bool divides;
};

struct DivisibilityResult {
    bool holds = true;
    std::vector<DivisibilityTerm> terms; ///< one per i = 0..t-1
};

/// C(k-i,t-i) | λ·C(n-i,t-i) for every 0 <= i <= t-1.
DivisibilityResult divisibility_check(const DesignSpec& spec);

enum class ConstructStatus { found, not_found, budget_exceeded };

struct ConstructResult {
    ConstructStatus status;
    std::optional<Design> design;
    std::string reason;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t default_design_budget = 10'000'000;

/// Deterministic exact (multi-)cover search: columns are t-subsets that must
/// each be covered λ times, rows are k-subsets. The most constrained column is
/// branched on first, candidate rows in lexicographic order. For λ = 1 the
/// block {1..k} is fixed up front. `budget` bounds the number of rows tried.
ConstructResult construct_design(const DesignSpec& spec, std::int64_t budget = default_design_budget);

/// Steiner triple system on n ≡ 1, 3 (mod 6) points via the Bose (n ≡ 3) or
/// Skolem (n ≡ 1) construction. No search.
Design construct_sts(std::size_t n);

struct DesignCheck {
    bool ok = false;
    /// First t-subset (lexicographic) whose coverage differs from λ.
    std::optional<VertexSet> violation;
    std::size_t coverage = 0;
};

/// Exhaustive t-subset scan. Throws std::invalid_argument for malformed blocks
/// (wrong size, labels outside 1..n, duplicates).
DesignCheck verify_design(const Design& d);

Hypergraph design_to_hypergraph(const Design& d);

/// "design t=<t> lambda=<λ>", the comment line written with design files.
std::string design_comment(const DesignSpec& spec);
/// Parses t and λ from a design comment; empty if `comment` is not one.
std::optional<std::pair<std::size_t, std::size_t>> parse_design_comment(const std::string& comment);

} // namespace hyperpack
