#pragma once

#include "hyperpack/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hyperpack {

/// One accepted switch: the images of u_set and v_set (both in V(H1)) were
/// exchanged, pairing them in ascending label order.
struct SwitchStep {
    int beta = 0;
    VertexSet u_set;
    VertexSet v_set;
    std::size_t conflicts_before = 0;
    std::size_t conflicts_after = 0;

    friend bool operator==(const SwitchStep&, const SwitchStep&) = default;
};

enum class PackOutcome { packed, no_packing_proven, unknown };

struct PackStats {
    std::uint64_t bijections_examined = 0; ///< candidate switches or search nodes
    std::uint64_t switches = 0;
    std::uint64_t restarts = 0;

    friend bool operator==(const PackStats&, const PackStats&) = default;
};

struct PackResult {
    PackOutcome outcome = PackOutcome::unknown;
    std::optional<Bijection> packing;
    /// Switches of the final descent (restarts clear it).
    std::vector<SwitchStep> trace;
    PackStats stats;
    /// β used by the switching solver, 0 for the exhaustive search.
    int beta = 0;
    /// Conflicts of the starting bijection of the final descent.
    std::size_t initial_conflicts = 0;

    friend bool operator==(const PackResult&, const PackResult&) = default;
};

inline constexpr int default_max_restarts = 50;

struct SwitchingOptions {
    /// Starting bijection; identity when empty.
    std::optional<Bijection> initial;
    std::uint64_t seed = 0;
    int max_restarts = default_max_restarts;
    /// Recount every conflict from scratch after each switch and compare with
    /// the incremental count.
    bool full_recount_check = false;
};

/// Conflict-reducing switching. While conflicts remain, take the
/// lexicographically smallest conflict C and its smallest β-subset U' (moving
/// on to later subsets and conflicts only when one admits no improving
/// switch), and exchange the preimages U = f^-1(U') with the first β-subset V
/// of V(H1) \ f^-1(C) whose exchange strictly lowers the conflict count. When
/// no such switch exists anywhere, restart from a seeded random bijection; give
/// up with Unknown after max_restarts restarts.
PackResult switching_pack(const Hypergraph& h1, const Hypergraph& h2, int beta, const SwitchingOptions& options = {});

/// Uses the β witnessed by check_beta_any when there is one, otherwise tries
/// every β ascending.
PackResult switching_pack_auto(const Hypergraph& h1, const Hypergraph& h2, std::uint64_t seed = 0,
    bool full_recount_check = false);

inline constexpr std::int64_t default_brute_force_budget = 10'000'000;

/// Exhaustive backtracking over vertex assignments. H1 vertices are placed in
/// order of descending degree, images tried in ascending order, and a partial
/// assignment is pruned as soon as a fully placed H1 edge lands on an H2 edge.
PackResult brute_force_pack(const Hypergraph& h1, const Hypergraph& h2,
    std::int64_t node_budget = default_brute_force_budget);

/// True iff f maps no edge of h1 onto an edge of h2.
bool validate_packing(const Hypergraph& h1, const Hypergraph& h2, const Bijection& f);

std::string_view name(PackOutcome outcome);

} // namespace hyperpack
