#include "hyperpack/extremal.hpp"

#include <algorithm>

namespace hyperpack {

std::string_view name(ExtremalKind kind)
{
    switch (kind) {
    case ExtremalKind::even_k: return "EvenK";
    case ExtremalKind::odd_k: return "OddK";
    case ExtremalKind::even_k_padded: return "EvenKPadded";
    }
    return "?";
}

namespace {
    auto si(std::size_t v) { return static_cast<std::int64_t>(v); }

    std::string divisibility_failure(const DesignSpec& spec, const DivisibilityResult& div)
    {
        std::string s = "divisibility conditions fail for a " + spec.str() + " design:";
        for (const auto& term : div.terms)
            if (! term.divides)
                s += " i=" + std::to_string(term.i) + " (" + to_string(term.divisor) + " does not divide " + to_string(term.dividend) + ")";
        return s;
    }

    std::vector<VertexSet> kernel_edges(const VertexSet& kernel, const VertexSet& rest, std::size_t alpha)
    {
        std::vector<VertexSet> out;
        for_each_subset(rest, alpha, [&](const VertexSet& a) {
            out.push_back(kernel.set_union(a));
            return true;
        });
        return out;
    }

    Hypergraph relabel_copies(const Design& d, std::size_t copies)
    {
        std::vector<VertexSet> edges;
        const auto width = static_cast<Vertex>(d.spec.n);
        for (std::size_t c = 0; c < copies; ++c)
            for (const auto& b : d.blocks) {
                std::vector<Vertex> shifted;
                for (Vertex v : b)
                    shifted.push_back(v + static_cast<Vertex>(c) * width);
                edges.emplace_back(std::move(shifted));
            }
        return Hypergraph(d.spec.n * copies, d.spec.k, std::move(edges));
    }

    ExtremalPair build_kernel_pair(std::size_t n, std::size_t k, std::size_t r, std::int64_t budget)
    {
        if (k < 2 || k % 2 != 0)
            throw std::invalid_argument("even construction needs even k >= 2, got k=" + std::to_string(k));
        const std::size_t alpha = k / 2;
        const std::size_t kernels = r + 1;
        if (r >= n || n - r < k || kernels * alpha + alpha > n)
            throw std::invalid_argument("n=" + std::to_string(n) + " is too small for k=" + std::to_string(k)
                + " with " + std::to_string(r) + " padding vertices");

        const std::size_t design_n = n - r;
        auto design = steiner_system(alpha, design_n, k, budget);
        auto h2 = Hypergraph(n, k, design.blocks);

        const auto all = vertex_range(1, static_cast<Vertex>(n));
        std::vector<VertexSet> edges;
        for (std::size_t i = 0; i < kernels; ++i) {
            auto kernel = vertex_range(static_cast<Vertex>(i * alpha + 1), static_cast<Vertex>((i + 1) * alpha));
            for (auto& e : kernel_edges(kernel, all.set_difference(kernel), alpha))
                edges.push_back(std::move(e));
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        auto h1 = Hypergraph(n, k, std::move(edges));

        ExtremalParams params;
        params.n = n;
        params.k = k;
        params.alpha = alpha;
        params.kernels = kernels;
        params.padding = r;
        params.design_n = design_n;
        Count total = checked_add(h1.size(), h2.size());
        return ExtremalPair{std::move(h1), std::move(h2), r == 0 ? ExtremalKind::even_k : ExtremalKind::even_k_padded,
            params, total};
    }

    Certificate fail(Certificate cert, std::string why, std::optional<VertexSet> witness = std::nullopt)
    {
        cert.ok = false;
        cert.failure = std::move(why);
        cert.witness = std::move(witness);
        return cert;
    }
}

Design steiner_system(std::size_t t, std::size_t n, std::size_t k, std::int64_t budget)
{
    DesignSpec spec{t, n, k, 1};
    spec.validate();
    auto div = divisibility_check(spec);
    if (! div.holds)
        throw ExtremalError(ExtremalError::Reason::divisibility, divisibility_failure(spec, div));
    if (t == 2 && k == 3)
        return construct_sts(n);
    auto result = construct_design(spec, budget);
    switch (result.status) {
    case ConstructStatus::found: return *result.design;
    case ConstructStatus::not_found: throw ExtremalError(ExtremalError::Reason::design_not_found, result.reason);
    case ConstructStatus::budget_exceeded:
        throw ExtremalError(ExtremalError::Reason::design_budget, spec.str() + " design search: " + result.reason);
    }
    throw std::logic_error("unreachable");
}

ExtremalPair build_even_pair(std::size_t n, std::size_t k, std::int64_t budget)
{
    return build_kernel_pair(n, k, 0, budget);
}

ExtremalPair build_even_pair_padded(std::size_t n, std::size_t k, std::size_t r, std::int64_t budget)
{
    return build_kernel_pair(n, k, r, budget);
}

ExtremalPair build_odd_pair(std::size_t n, std::size_t k, std::optional<std::size_t> t, std::int64_t budget)
{
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("odd construction needs odd k >= 3, got k=" + std::to_string(k));
    const std::size_t copies = t.value_or(default_odd_copies(n, k));
    if (copies == 0 || n % copies != 0)
        throw std::invalid_argument("t=" + std::to_string(copies) + " does not divide n=" + std::to_string(n));
    const std::size_t clique = (k - 2) * copies + 1;
    if (clique > n)
        throw std::invalid_argument("clique of size " + std::to_string(clique) + " does not fit in n=" + std::to_string(n));
    const std::size_t design_n = n / copies;
    if (design_n < k)
        throw std::invalid_argument("design copies on " + std::to_string(design_n) + " points are smaller than k");

    auto design = steiner_system(k - 1, design_n, k, budget);
    auto h2 = relabel_copies(design, copies);

    const auto core = vertex_range(1, static_cast<Vertex>(clique));
    auto edges = subsets(core, k);
    for_each_subset(core, k - 1, [&](const VertexSet& s) {
        for (Vertex v = static_cast<Vertex>(clique) + 1; v <= n; ++v)
            edges.push_back(s.set_union(VertexSet{v}));
        return true;
    });
    auto h1 = Hypergraph(n, k, std::move(edges));

    ExtremalParams params;
    params.n = n;
    params.k = k;
    params.copies = copies;
    params.clique_size = clique;
    params.design_n = design_n;
    Count total = checked_add(h1.size(), h2.size());
    return ExtremalPair{std::move(h1), std::move(h2), ExtremalKind::odd_k, params, total};
}

Certificate verify_nonpacking_even(const ExtremalPair& pair)
{
    if (pair.kind == ExtremalKind::odd_k)
        throw std::invalid_argument("verify_nonpacking_even needs an EvenK or EvenKPadded pair");
    const auto& p = pair.params;
    const auto& h1 = pair.h1;
    const auto& h2 = pair.h2;
    Certificate cert;

    if (h1.n() != p.n || h2.n() != p.n || h1.k() != p.k || h2.k() != p.k || p.alpha * 2 != p.k)
        return fail(cert, "hypergraph parameters do not match the recorded (n,k,alpha)");
    if (checked_add(h1.size(), h2.size()) != pair.claimed_total)
        return fail(cert, "claimed total " + to_string(pair.claimed_total) + " differs from |E(H1)|+|E(H2)|");
    cert.verified.push_back("claimed total " + to_string(pair.claimed_total) + " = |E(H1)| + |E(H2)| = "
        + std::to_string(h1.size()) + " + " + std::to_string(h2.size()));

    if (p.kernels <= p.padding || p.kernels * p.alpha > p.n)
        return fail(cert, "need more kernels (" + std::to_string(p.kernels) + ") than isolated vertices ("
            + std::to_string(p.padding) + ")");
    cert.verified.push_back(std::to_string(p.kernels) + " disjoint kernels exceed " + std::to_string(p.padding)
        + " isolated vertices of H2, so some kernel maps entirely into H2's non-isolated part");

    const auto core = vertex_range(1, static_cast<Vertex>(p.design_n));
    for (const auto& e : h2.edges())
        if (e.back() > p.design_n)
            return fail(cert, "H2 edge " + e.str() + " touches a vertex meant to be isolated", e);

    std::optional<VertexSet> uncovered;
    for_each_subset(core, p.alpha, [&](const VertexSet& s) {
        if (degree(h2, s) > 0)
            return true;
        uncovered = s;
        return false;
    });
    if (uncovered)
        return fail(cert, "alpha-subset " + uncovered->str() + " of H2 lies in no edge", uncovered);
    cert.verified.push_back("every " + std::to_string(p.alpha) + "-subset of {1.." + std::to_string(p.design_n)
        + "} lies in an edge of H2");

    const auto all = vertex_range(1, static_cast<Vertex>(p.n));
    for (std::size_t i = 0; i < p.kernels; ++i) {
        auto kernel = vertex_range(static_cast<Vertex>(i * p.alpha + 1), static_cast<Vertex>((i + 1) * p.alpha));
        std::optional<VertexSet> missing;
        for_each_subset(all.set_difference(kernel), p.alpha, [&](const VertexSet& a) {
            auto e = kernel.set_union(a);
            if (h1.contains(e))
                return true;
            missing = e;
            return false;
        });
        if (missing)
            return fail(cert, "kernel " + kernel.str() + " joined with " + missing->set_difference(kernel).str()
                + " is not an edge of H1", missing);
        cert.verified.push_back("kernel " + kernel.str() + " forms an edge of H1 with every "
            + std::to_string(p.alpha) + "-subset outside it");
    }
    cert.ok = true;
    return cert;
}

Certificate verify_nonpacking_odd(const ExtremalPair& pair)
{
    if (pair.kind != ExtremalKind::odd_k)
        throw std::invalid_argument("verify_nonpacking_odd needs an OddK pair");
    const auto& p = pair.params;
    const auto& h1 = pair.h1;
    const auto& h2 = pair.h2;
    Certificate cert;

    if (h1.n() != p.n || h2.n() != p.n || h1.k() != p.k || h2.k() != p.k || p.copies == 0)
        return fail(cert, "hypergraph parameters do not match the recorded (n,k,t)");
    if (checked_add(h1.size(), h2.size()) != pair.claimed_total)
        return fail(cert, "claimed total " + to_string(pair.claimed_total) + " differs from |E(H1)|+|E(H2)|");
    cert.verified.push_back("claimed total " + to_string(pair.claimed_total) + " = |E(H1)| + |E(H2)| = "
        + std::to_string(h1.size()) + " + " + std::to_string(h2.size()));

    const std::size_t per_copy = (p.clique_size + p.copies - 1) / p.copies;
    if (per_copy < p.k - 1)
        return fail(cert, "pigeonhole fails: ceil(" + std::to_string(p.clique_size) + "/" + std::to_string(p.copies)
            + ") = " + std::to_string(per_copy) + " < k-1 = " + std::to_string(p.k - 1));
    cert.verified.push_back("pigeonhole: ceil(" + std::to_string(p.clique_size) + "/" + std::to_string(p.copies)
        + ") = " + std::to_string(per_copy) + " >= k-1, so k-1 clique vertices share a copy");

    if (p.copies * p.design_n != p.n)
        return fail(cert, "design copies do not partition the vertex set");
    for (const auto& e : h2.edges())
        if ((e.front() - 1) / p.design_n != (e.back() - 1) / p.design_n)
            return fail(cert, "H2 edge " + e.str() + " crosses two copies", e);
    for (std::size_t c = 0; c < p.copies; ++c) {
        auto block = vertex_range(static_cast<Vertex>(c * p.design_n + 1), static_cast<Vertex>((c + 1) * p.design_n));
        std::optional<VertexSet> uncovered;
        for_each_subset(block, p.k - 1, [&](const VertexSet& s) {
            if (degree(h2, s) > 0)
                return true;
            uncovered = s;
            return false;
        });
        if (uncovered)
            return fail(cert, "(k-1)-subset " + uncovered->str() + " of copy " + std::to_string(c + 1) + " lies in no edge",
                uncovered);
    }
    cert.verified.push_back("H2 is " + std::to_string(p.copies) + " disjoint copies on " + std::to_string(p.design_n)
        + " vertices and every " + std::to_string(p.k - 1) + "-subset of a copy extends to an edge of it");

    const auto all = vertex_range(1, static_cast<Vertex>(p.n));
    if (p.clique_size > p.n)
        return fail(cert, "clique larger than n");
    std::optional<VertexSet> missing;
    for_each_subset(vertex_range(1, static_cast<Vertex>(p.clique_size)), p.k - 1, [&](const VertexSet& s) {
        for (Vertex v : all) {
            if (s.contains(v))
                continue;
            auto e = s.set_union(VertexSet{v});
            if (! h1.contains(e)) {
                missing = e;
                return false;
            }
        }
        return true;
    });
    if (missing)
        return fail(cert, "H1 is missing the clique edge " + missing->str(), missing);
    cert.verified.push_back("every " + std::to_string(p.k - 1) + "-subset of the clique {1.." + std::to_string(p.clique_size)
        + "} forms an edge of H1 with every other vertex");
    cert.ok = true;
    return cert;
}

Certificate verify_nonpacking(const ExtremalPair& pair)
{
    return pair.kind == ExtremalKind::odd_k ? verify_nonpacking_odd(pair) : verify_nonpacking_even(pair);
}

std::optional<Count> even_upper_bound(std::size_t n, std::size_t k)
{
    if (k < 2 || k % 2 != 0 || k > n)
        throw std::invalid_argument("even_upper_bound needs even k with 2 <= k <= n");
    const std::size_t alpha = k / 2;
    if (! divisibility_check(DesignSpec{alpha, n, k, 1}).holds)
        return std::nullopt;
    return checked_add(binomial(si(n - alpha), si(alpha)), binomial(si(n), si(alpha)) / binomial(si(k), si(alpha)));
}

std::size_t default_odd_copies(std::size_t n, std::size_t k)
{
    if (k < 3)
        throw std::invalid_argument("default_odd_copies needs k >= 3");
    return static_cast<std::size_t>(floor_rational_power(si(n), si(k - 2), si(2 * k - 3)));
}

std::optional<Count> odd_upper_bound(std::size_t n, std::size_t k, std::size_t t)
{
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("odd_upper_bound needs odd k >= 3");
    if (t == 0 || n % t != 0)
        return std::nullopt;
    const std::size_t clique = (k - 2) * t + 1, design_n = n / t;
    if (clique > n || design_n < k || ! divisibility_check(DesignSpec{k - 1, design_n, k, 1}).holds)
        return std::nullopt;
    Count h1 = checked_add(binomial(si(clique), si(k)), checked_mul(binomial(si(clique), si(k - 1)), si(n - clique)));
    Count h2 = checked_mul(t, binomial(si(design_n), si(k - 1)) / si(k));
    return checked_add(h1, h2);
}

std::pair<std::int64_t, std::int64_t> odd_exponent(std::size_t k)
{
    return {si(k * k - k - 1), si(2 * k - 3)};
}

} // namespace hyperpack
