#include "hyperpack/conditions.hpp"
#include "hyperpack/extremal.hpp"
#include "hyperpack/solver.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hyperpack;
using namespace hyperpack::testing;

TEST_CASE("even pair n=13 k=4")
{
    auto p = build_even_pair(13, 4);
    CHECK(p.kind == ExtremalKind::even_k);
    CHECK(p.h1.size() == pascal(11, 2));
    CHECK(p.h2.size() == pascal(13, 2) / pascal(4, 2));
    CHECK(p.claimed_total == 68);
    CHECK(even_upper_bound(13, 4) == Count(68));

    auto cert = verify_nonpacking_even(p);
    CHECK(cert.ok);
    CHECK(cert.verified.size() == 4);

    // every edge of H1 contains the kernel, whose degree is C(n-α, α)
    const VertexSet kernel{1, 2};
    for (const auto& e : p.h1.edges())
        CHECK(e.includes(kernel));
    CHECK(degree(p.h1, kernel) == pascal(11, 2));
    CHECK(max_degree(p.h1, 2) == pascal(11, 2));
    CHECK(max_degree(p.h2, 2) == 1);
    CHECK_THROWS_AS(verify_nonpacking_odd(p), std::invalid_argument);
}

TEST_CASE("even pair divisibility failures")
{
    CHECK_THROWS_AS(build_even_pair(7, 2), ExtremalError);
    CHECK_THROWS_AS(build_even_pair(9, 2), ExtremalError);
    CHECK_FALSE(even_upper_bound(7, 2).has_value());
    CHECK_THROWS_AS(build_even_pair(14, 4), ExtremalError);
    CHECK_THROWS_AS(build_even_pair(13, 3), std::invalid_argument);
    try {
        build_even_pair(7, 2);
    }
    catch (const ExtremalError& e) {
        CHECK(e.reason() == ExtremalError::Reason::divisibility);
    }
}

TEST_CASE("even toy case is confirmed exhaustively")
{
    auto p = build_even_pair(4, 2);
    CHECK(p.h1 == graph(4, {{1, 2}, {1, 3}, {1, 4}}));
    CHECK(p.h2.size() == 2);
    CHECK(p.claimed_total == 5);
    CHECK(verify_nonpacking_even(p).ok);
    CHECK(brute_force_pack(p.h1, p.h2).outcome == PackOutcome::no_packing_proven);
    CHECK_FALSE(packs_by_enumeration(p.h1, p.h2));

    auto q = build_even_pair(6, 2);
    CHECK(verify_nonpacking_even(q).ok);
    CHECK(brute_force_pack(q.h1, q.h2).outcome == PackOutcome::no_packing_proven);
    auto r = build_even_pair(8, 2);
    CHECK(brute_force_pack(r.h1, r.h2).outcome == PackOutcome::no_packing_proven);
}

TEST_CASE("even certificate failures")
{
    auto p = build_even_pair(13, 4);
    auto broken = p;
    broken.h2 = p.h2.without_edge(p.h2.edges().front());
    broken.claimed_total -= 1;
    auto cert = verify_nonpacking_even(broken);
    CHECK_FALSE(cert.ok);
    REQUIRE(cert.witness);
    CHECK(cert.witness->size() == 2);
    CHECK(degree(broken.h2, *cert.witness) == 0);

    auto thin = p;
    thin.h1 = p.h1.without_edge(VertexSet{1, 2, 12, 13});
    thin.claimed_total -= 1;
    auto c2 = verify_nonpacking_even(thin);
    CHECK_FALSE(c2.ok);
    CHECK(c2.witness == VertexSet{1, 2, 12, 13});

    auto lying = p;
    lying.claimed_total = 60;
    CHECK_FALSE(verify_nonpacking_even(lying).ok);
}

TEST_CASE("odd pair n=27 k=3")
{
    CHECK(default_odd_copies(27, 3) == 3);
    auto p = build_odd_pair(27, 3);
    CHECK(p.params.copies == 3);
    CHECK(p.params.clique_size == 4);
    CHECK(p.h1.size() == pascal(4, 3) + pascal(4, 2) * 23);
    CHECK(p.h1.size() == 142);
    CHECK(p.h2.size() == 36);
    CHECK(p.claimed_total == 178);
    CHECK(odd_upper_bound(27, 3, 3) == Count(178));
    CHECK(verify_nonpacking_odd(p).ok);

    // 27^(5/3) = 243
    auto [num, den] = odd_exponent(3);
    CHECK(num == 5);
    CHECK(den == 3);
    CHECK(ipow(27, num) == ipow(243, den));
    CHECK(p.claimed_total <= 243);
}

TEST_CASE("odd pair n=21 k=3 with t override")
{
    CHECK(default_odd_copies(21, 3) == 2);
    CHECK_THROWS_AS(build_odd_pair(21, 3), std::invalid_argument); // 2 does not divide 21
    auto p = build_odd_pair(21, 3, 3);
    CHECK(p.params.design_n == 7);
    CHECK(p.h1.size() == 4 + 6 * 17);
    CHECK(p.h2.size() == 21);
    CHECK(verify_nonpacking_odd(p).ok);
    CHECK(p.claimed_total <= 27 * 9); // 21^(5/3) < 21^2 and the n=21 total is 127
    CHECK(ipow(p.claimed_total, 3) <= ipow(21, 5));

    for (std::uint64_t seed = 0; seed < 5; ++seed)
        CHECK(switching_pack_auto(p.h1, p.h2, seed).outcome != PackOutcome::packed);
}

TEST_CASE("odd certificate pigeonhole")
{
    auto p = build_odd_pair(27, 3);
    auto shrunk = p;
    shrunk.params.clique_size = (p.params.k - 2) * p.params.copies;
    auto cert = verify_nonpacking_odd(shrunk);
    CHECK_FALSE(cert.ok);
    CHECK(cert.failure.find("pigeonhole") != std::string::npos);

    auto broken = p;
    broken.h2 = p.h2.without_edge(p.h2.edges().back());
    broken.claimed_total -= 1;
    auto c2 = verify_nonpacking_odd(broken);
    CHECK_FALSE(c2.ok);
    REQUIRE(c2.witness);
    CHECK(degree(broken.h2, *c2.witness) == 0);

    CHECK_THROWS_AS(build_odd_pair(27, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_odd_pair(28, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_nonpacking_even(p), std::invalid_argument);
}

TEST_CASE("odd toy pair is confirmed exhaustively")
{
    // t = 1: H1 is a triangle-closed star on a 2-clique, H2 an STS(7)
    auto p = build_odd_pair(7, 3, 1);
    CHECK(verify_nonpacking_odd(p).ok);
    CHECK(brute_force_pack(p.h1, p.h2).outcome == PackOutcome::no_packing_proven);
}

TEST_CASE("padded even pair")
{
    auto p = build_even_pair_padded(14, 4, 1);
    CHECK(p.kind == ExtremalKind::even_k_padded);
    CHECK(p.params.kernels == 2);
    CHECK(p.params.design_n == 13);
    CHECK(p.h2.size() == 13);
    CHECK(p.h2.incident(14).empty());
    // two kernels, each with C(12,2) edges, sharing {1,2,3,4}
    CHECK(p.h1.size() == 2 * pascal(12, 2) - 1);
    CHECK(verify_nonpacking_even(p).ok);
    // larger than the unpadded formula at n=14 but within a constant factor of n^2
    CHECK(p.claimed_total > pascal(12, 2) + pascal(14, 2) / 6);
    CHECK(p.claimed_total <= 3 * pascal(14, 2));

    auto zero = build_even_pair_padded(13, 4, 0);
    auto plain = build_even_pair(13, 4);
    CHECK(zero.kind == ExtremalKind::even_k);
    CHECK(zero.h1 == plain.h1);
    CHECK(zero.h2 == plain.h2);

    CHECK_THROWS_AS(build_even_pair_padded(15, 4, 1), ExtremalError);

    SUBCASE("small padded pairs are confirmed exhaustively")
    {
        for (auto [n, r] : {std::pair{5, 1}, std::pair{6, 2}, std::pair{7, 1}}) {
            CAPTURE(n);
            auto q = build_even_pair_padded(n, 2, r);
            CHECK(verify_nonpacking_even(q).ok);
            CHECK(brute_force_pack(q.h1, q.h2).outcome == PackOutcome::no_packing_proven);
        }
    }

    SUBCASE("kernels joined only to the common complement do pack")
    {
        // n=5, k=2, r=1: kernels {1},{2}, complement {3,4,5}; H2 = perfect
        // matching on 1..4 plus isolated 5
        auto literal = graph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
        auto q = build_even_pair_padded(5, 2, 1);
        auto r = brute_force_pack(literal, q.h2);
        CHECK(r.outcome == PackOutcome::packed);
        CHECK(packs_by_enumeration(literal, q.h2));

        // same failure at n=14, k=4: map both kernels onto one block of the plane
        std::vector<VertexSet> edges;
        const auto rest = vertex_range(5, 14);
        for (const VertexSet& kernel : {VertexSet{1, 2}, VertexSet{3, 4}})
            for (const auto& a : subsets(rest, 2))
                edges.push_back(kernel.set_union(a));
        Hypergraph literal14(14, 4, edges);
        auto padded = build_even_pair_padded(14, 4, 1);
        // identity sends K1 ∪ K2 = {1,2,3,4} onto the first block, which is no edge of literal14
        CHECK(padded.h2.contains(VertexSet{1, 2, 3, 4}));
        CHECK(validate_packing(literal14, padded.h2, Bijection::identity(14)));
    }
}

TEST_CASE("bounds stay consistent")
{
    std::vector<ExtremalPair> pairs{build_even_pair(4, 2), build_even_pair(13, 4), build_odd_pair(27, 3),
        build_odd_pair(21, 3, 3), build_even_pair_padded(14, 4, 1), build_even_pair(16, 4)};
    for (const auto& p : pairs) {
        REQUIRE(verify_nonpacking(p).ok);
        CHECK(packing_threshold(static_cast<std::int64_t>(p.params.n), static_cast<std::int64_t>(p.params.k)) < p.claimed_total);
    }
}
