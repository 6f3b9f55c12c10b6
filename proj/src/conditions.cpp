#include "hyperpack/conditions.hpp"

#include <stdexcept>

namespace hyperpack {

std::string_view name(ConditionId id)
{
    switch (id) {
    case ConditionId::ss_product: return "SS_PRODUCT";
    case ConditionId::ss_degree: return "SS_DEGREE";
    case ConditionId::ss_size: return "SS_SIZE";
    case ConditionId::naroski: return "NAROSKI";
    case ConditionId::rrt: return "RRT";
    case ConditionId::beta: return "BETA";
    }
    return "?";
}

std::string ConditionReport::to_text() const
{
    std::string s = "condition=" + std::string(name(id)) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs)
        + " packs=" + (guarantees_packing ? "true" : "false");
    if (beta)
        s += " beta=" + std::to_string(*beta);
    return s;
}

namespace {
    void require_graphs(const Hypergraph& g1, const Hypergraph& g2)
    {
        require_compatible(g1, g2);
        if (g1.k() != 2)
            throw std::invalid_argument("graph condition requires k=2, got k=" + std::to_string(g1.k()));
    }

    ConditionReport strict(ConditionId id, Count lhs, Count rhs)
    {
        return ConditionReport{id, lhs, rhs, lhs < rhs, std::nullopt};
    }

    Count delta(const Hypergraph& h, std::size_t l)
    {
        return static_cast<Count>(max_degree(h, l));
    }

    auto as_int(std::size_t v)
    {
        return static_cast<std::int64_t>(v);
    }
}

ConditionReport check_ss_product(const Hypergraph& g1, const Hypergraph& g2)
{
    require_graphs(g1, g2);
    return strict(ConditionId::ss_product, checked_mul(g1.size(), g2.size()), binomial(as_int(g1.n()), 2));
}

ConditionReport check_ss_degree(const Hypergraph& g1, const Hypergraph& g2)
{
    require_graphs(g1, g2);
    return strict(ConditionId::ss_degree, checked_mul(2, checked_mul(delta(g1, 1), delta(g2, 1))), g1.n());
}

ConditionReport check_ss_size(const Hypergraph& g1, const Hypergraph& g2)
{
    require_graphs(g1, g2);
    Count lhs = checked_add(g1.size(), g2.size());
    Count n = g1.n();
    Count rhs = (3 * n + 1) / 2 - 2;
    return ConditionReport{ConditionId::ss_size, lhs, rhs, lhs <= rhs, std::nullopt};
}

ConditionReport check_naroski(const Hypergraph& h1, const Hypergraph& h2)
{
    require_compatible(h1, h2);
    return strict(ConditionId::naroski, checked_mul(h1.size(), h2.size()), binomial(as_int(h1.n()), as_int(h1.k())));
}

ConditionReport check_rrt(const Hypergraph& h1, const Hypergraph& h2)
{
    require_compatible(h1, h2);
    const auto k = h1.k();
    if (k < 2)
        throw std::invalid_argument("RRT condition requires k >= 2");
    Count lhs = checked_add(checked_mul(delta(h1, 1), delta(h2, k - 1)), checked_mul(delta(h2, 1), delta(h1, k - 1)));
    Count rhs = Count(h1.n()) - Count(k) + 2;
    return strict(ConditionId::rrt, lhs, rhs);
}

ConditionReport check_beta(const Hypergraph& h1, const Hypergraph& h2, int beta)
{
    require_compatible(h1, h2);
    const auto k = as_int(h1.k());
    if (beta <= 0 || beta >= k)
        throw std::invalid_argument("beta=" + std::to_string(beta) + " must satisfy 0 < beta < k=" + std::to_string(k));
    const auto b = static_cast<std::size_t>(beta);
    const auto c = static_cast<std::size_t>(k - beta);
    Count lhs = checked_add(checked_mul(delta(h1, b), delta(h2, c)), checked_mul(delta(h1, c), delta(h2, b)));
    Count rhs = checked_add(checked_sub(binomial(as_int(h1.n()), beta), binomial(k, beta)), 2);
    auto report = strict(ConditionId::beta, lhs, rhs);
    report.beta = beta;
    return report;
}

ConditionReport check_beta_any(const Hypergraph& h1, const Hypergraph& h2)
{
    require_compatible(h1, h2);
    const auto k = as_int(h1.k());
    if (k < 2)
        throw std::invalid_argument("no beta with 0 < beta < k exists for k=" + std::to_string(k));
    std::optional<ConditionReport> best;
    for (int beta = 1; beta < k; ++beta) {
        auto r = check_beta(h1, h2, beta);
        if (r.guarantees_packing)
            return r;
        if (! best || r.lhs - r.rhs < best->lhs - best->rhs)
            best = r;
    }
    return *best;
}

std::vector<ConditionReport> check_all(const Hypergraph& h1, const Hypergraph& h2)
{
    require_compatible(h1, h2);
    std::vector<ConditionReport> out;
    if (h1.k() == 2) {
        out.push_back(check_ss_product(h1, h2));
        out.push_back(check_ss_degree(h1, h2));
        out.push_back(check_ss_size(h1, h2));
    }
    out.push_back(check_naroski(h1, h2));
    if (h1.k() >= 2) {
        out.push_back(check_rrt(h1, h2));
        out.push_back(check_beta_any(h1, h2));
    }
    return out;
}

Count packing_threshold(std::int64_t n, std::int64_t k)
{
    if (k < 1 || k > n)
        throw std::invalid_argument("packing_threshold requires 1 <= k <= n");
    // largest x with x < 2·sqrt(C), i.e. x^2 < 4C
    return isqrt(checked_sub(checked_mul(4, binomial(n, k)), 1));
}

Count m_lower_bound(std::int64_t n, std::int64_t k)
{
    return packing_threshold(n, k) + 1;
}

Count m_graph(std::int64_t n)
{
    if (n < 2)
        throw std::invalid_argument("m(n,2) requires n >= 2");
    return (Count(3) * n + 1) / 2 - 1;
}

} // namespace hyperpack
