#include "hyperpack/designs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hyperpack {

void DesignSpec::validate() const
{
    if (t < 1 || t > k || k > n || lambda < 1)
        throw std::invalid_argument("invalid design parameters " + str() + ": need 1 <= t <= k <= n and lambda >= 1");
}

Count DesignSpec::block_count() const
{
    auto si = [](std::size_t v) { return static_cast<std::int64_t>(v); };
    return checked_mul(lambda, binomial(si(n), si(t))) / binomial(si(k), si(t));
}

std::string DesignSpec::str() const
{
    return std::to_string(t) + "-(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + ")";
}

DivisibilityResult divisibility_check(const DesignSpec& spec)
{
    spec.validate();
    DivisibilityResult result;
    for (std::size_t i = 0; i < spec.t; ++i) {
        auto si = [](std::size_t v) { return static_cast<std::int64_t>(v); };
        DivisibilityTerm term;
        term.i = i;
        term.divisor = binomial(si(spec.k - i), si(spec.t - i));
        term.dividend = checked_mul(spec.lambda, binomial(si(spec.n - i), si(spec.t - i)));
        term.divides = term.dividend % term.divisor == 0;
        result.holds = result.holds && term.divides;
        result.terms.push_back(term);
    }
    return result;
}

namespace {
    /// Colexicographic ranking of the t-subsets of 1..n.
    class SubsetIndex {
    public:
        SubsetIndex(std::size_t n, std::size_t t) :
            t_(t),
            table_(n + 1, std::vector<std::uint64_t>(t + 1, 0))
        {
            for (std::size_t m = 0; m <= n; ++m)
                for (std::size_t j = 0; j <= t; ++j)
                    table_[m][j] = static_cast<std::uint64_t>(binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(j)));
            count_ = table_[n][t];
        }

        std::uint64_t count() const { return count_; }

        template <typename Labels>
        std::uint64_t rank(const Labels& s) const
        {
            std::uint64_t r = 0;
            std::size_t i = 0;
            for (Vertex v : s)
                r += table_[v - 1][++i];
            return r;
        }

    private:
        std::size_t t_;
        std::vector<std::vector<std::uint64_t>> table_;
        std::uint64_t count_ = 0;
    };

    constexpr std::uint64_t max_explicit_subsets = 20'000'000;

    void check_search_size(std::size_t n, std::size_t r, const char* what)
    {
        auto c = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r));
        if (c > Count(max_explicit_subsets))
            throw std::invalid_argument(std::string(what) + ": C(" + std::to_string(n) + "," + std::to_string(r) + ") = "
                + to_string(c) + " subsets is too large for explicit enumeration");
    }

    class CoverSearch {
    public:
        CoverSearch(const DesignSpec& spec, std::uint64_t budget) :
            spec_(spec),
            budget_(budget),
            index_(spec.n, spec.t)
        {
            const auto points = vertex_range(1, static_cast<Vertex>(spec.n));
            rows_ = subsets(points, spec.k);
            // columns in lexicographic order of their t-subset
            col_of_rank_.assign(index_.count(), 0);
            std::size_t col = 0;
            for_each_subset(points, spec.t, [&](const VertexSet& s) {
                col_of_rank_[index_.rank(s)] = col++;
                return true;
            });
            cols_ = col;
            row_cols_.resize(rows_.size());
            col_rows_.resize(cols_);
            for (std::size_t r = 0; r < rows_.size(); ++r)
                for_each_subset(rows_[r], spec.t, [&](const VertexSet& s) {
                    auto c = col_of_rank_[index_.rank(s)];
                    row_cols_[r].push_back(c);
                    col_rows_[c].push_back(r);
                    return true;
                });
            coverage_.assign(cols_, 0);
            chosen_.assign(rows_.size(), false);
            deficit_ = cols_ * spec.lambda;
        }

        ConstructResult run()
        {
            if (spec_.lambda == 1 && ! rows_.empty())
                choose(0); // {1..k}; any Steiner system can be relabelled to contain it
            ConstructResult result{ConstructStatus::not_found, std::nullopt, {}, 0};
            bool found = false;
            try {
                found = search();
            }
            catch (const BudgetExhausted&) {
                result.status = ConstructStatus::budget_exceeded;
                result.reason = "node budget of " + std::to_string(budget_) + " exhausted";
                result.nodes = nodes_;
                return result;
            }
            result.nodes = nodes_;
            if (! found) {
                result.reason = "search space exhausted: no " + spec_.str() + " design exists";
                return result;
            }
            Design d{spec_, {}};
            for (std::size_t r = 0; r < rows_.size(); ++r)
                if (chosen_[r])
                    d.blocks.push_back(rows_[r]);
            result.status = ConstructStatus::found;
            result.design = std::move(d);
            return result;
        }

    private:
        struct BudgetExhausted {};

        bool available(std::size_t r) const
        {
            if (chosen_[r])
                return false;
            for (auto c : row_cols_[r])
                if (coverage_[c] >= spec_.lambda)
                    return false;
            return true;
        }

        void choose(std::size_t r)
        {
            chosen_[r] = true;
            for (auto c : row_cols_[r])
                ++coverage_[c];
            deficit_ -= row_cols_[r].size();
        }

        void unchoose(std::size_t r)
        {
            chosen_[r] = false;
            for (auto c : row_cols_[r])
                --coverage_[c];
            deficit_ += row_cols_[r].size();
        }

        bool search()
        {
            if (deficit_ == 0)
                return true;

            std::size_t best_col = cols_, best_count = SIZE_MAX;
            for (std::size_t c = 0; c < cols_ && best_count > 0; ++c) {
                if (coverage_[c] >= spec_.lambda)
                    continue;
                std::size_t count = 0;
                for (auto r : col_rows_[c])
                    if (available(r))
                        ++count;
                // a column needing more rows than are left is dead
                if (count < spec_.lambda - coverage_[c])
                    count = 0;
                if (count < best_count) {
                    best_count = count;
                    best_col = c;
                }
            }
            if (best_count == 0)
                return false;

            for (auto r : col_rows_[best_col]) {
                if (! available(r))
                    continue;
                if (++nodes_ > budget_)
                    throw BudgetExhausted{};
                choose(r);
                if (search())
                    return true;
                unchoose(r);
            }
            return false;
        }

        DesignSpec spec_;
        std::uint64_t budget_;
        SubsetIndex index_;
        std::vector<VertexSet> rows_;
        std::vector<std::size_t> col_of_rank_;
        std::size_t cols_ = 0;
        std::vector<std::vector<std::size_t>> row_cols_;
        std::vector<std::vector<std::size_t>> col_rows_;
        std::vector<std::size_t> coverage_;
        std::vector<bool> chosen_;
        std::size_t deficit_ = 0;
        std::uint64_t nodes_ = 0;
    };
}

ConstructResult construct_design(const DesignSpec& spec, std::int64_t budget)
{
    spec.validate();
    if (budget <= 0)
        throw std::invalid_argument("design search budget must be positive");

    auto div = divisibility_check(spec);
    if (! div.holds) {
        std::string reason = "divisibility conditions fail for " + spec.str() + ":";
        for (const auto& term : div.terms)
            if (! term.divides)
                reason += " i=" + std::to_string(term.i) + " (" + to_string(term.divisor) + " does not divide " + to_string(term.dividend) + ")";
        return ConstructResult{ConstructStatus::not_found, std::nullopt, reason, 0};
    }

    check_search_size(spec.n, spec.k, "design search");
    auto result = CoverSearch(spec, static_cast<std::uint64_t>(budget)).run();
    if (result.design) {
        auto check = verify_design(*result.design);
        if (! check.ok)
            throw std::logic_error("design search produced an invalid design for " + spec.str());
    }
    return result;
}

Design construct_sts(std::size_t n)
{
    if (n < 3 || (n % 6 != 1 && n % 6 != 3))
        throw std::invalid_argument("Steiner triple systems need n ≡ 1 or 3 (mod 6) and n >= 3, got n=" + std::to_string(n));

    std::vector<VertexSet> blocks;
    auto triple = [&](Vertex a, Vertex b, Vertex c) { blocks.push_back(VertexSet::from_unsorted({a, b, c})); };

    if (n % 6 == 3) {
        // Bose: points (x, i) with x in Z_q, q = n/3 odd, i in Z_3; label i·q + x + 1.
        // x∘y = (x+y)/2 mod q is an idempotent commutative quasigroup.
        const std::size_t q = n / 3;
        const std::size_t half = (q + 1) / 2;
        auto pt = [q](std::size_t x, std::size_t i) { return static_cast<Vertex>((i % 3) * q + x + 1); };
        auto op = [q, half](std::size_t x, std::size_t y) { return (x + y) * half % q; };
        for (std::size_t x = 0; x < q; ++x)
            triple(pt(x, 0), pt(x, 1), pt(x, 2));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t x = 0; x < q; ++x)
                for (std::size_t y = x + 1; y < q; ++y)
                    triple(pt(x, i), pt(y, i), pt(op(x, y), i + 1));
    }
    else {
        // Skolem: points (x, i) with x in Z_2m, i in Z_3, plus ∞ = n.
        // x∘y is the half-idempotent commutative quasigroup of order 2m.
        const std::size_t q = (n - 1) / 3, m = q / 2;
        auto pt = [q](std::size_t x, std::size_t i) { return static_cast<Vertex>((i % 3) * q + x + 1); };
        const auto inf = static_cast<Vertex>(n);
        auto op = [q, m](std::size_t x, std::size_t y) {
            std::size_t s = (x + y) % q;
            return s % 2 == 0 ? s / 2 : (s - 1) / 2 + m;
        };
        for (std::size_t x = 0; x < m; ++x)
            triple(pt(x, 0), pt(x, 1), pt(x, 2));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t x = 0; x < m; ++x)
                triple(inf, pt(x + m, i), pt(x, i + 1));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t x = 0; x < q; ++x)
                for (std::size_t y = x + 1; y < q; ++y)
                    triple(pt(x, i), pt(y, i), pt(op(x, y), i + 1));
    }

    std::sort(blocks.begin(), blocks.end());
    Design d{DesignSpec{2, n, 3, 1}, std::move(blocks)};
    auto check = verify_design(d);
    if (! check.ok)
        throw std::logic_error("STS construction failed verification for n=" + std::to_string(n));
    return d;
}

DesignCheck verify_design(const Design& d)
{
    const auto& spec = d.spec;
    spec.validate();
    check_search_size(spec.n, spec.t, "design verification");

    auto blocks = d.blocks;
    for (const auto& b : blocks) {
        if (b.size() != spec.k)
            throw std::invalid_argument("block " + b.str() + " does not have " + std::to_string(spec.k) + " points");
        if (b.back() > spec.n)
            throw std::invalid_argument("block " + b.str() + " has a point outside 1.." + std::to_string(spec.n));
    }
    std::sort(blocks.begin(), blocks.end());
    if (auto dup = std::adjacent_find(blocks.begin(), blocks.end()); dup != blocks.end())
        throw std::invalid_argument("duplicate block " + dup->str());

    SubsetIndex index(spec.n, spec.t);
    std::vector<std::size_t> coverage(index.count(), 0);
    for (const auto& b : blocks)
        for_each_subset(b, spec.t, [&](const VertexSet& s) {
            ++coverage[index.rank(s)];
            return true;
        });

    DesignCheck result;
    result.ok = true;
    for_each_subset(vertex_range(1, static_cast<Vertex>(spec.n)), spec.t, [&](const VertexSet& s) {
        auto c = coverage[index.rank(s)];
        if (c == spec.lambda)
            return true;
        result.ok = false;
        result.violation = s;
        result.coverage = c;
        return false;
    });
    return result;
}

Hypergraph design_to_hypergraph(const Design& d)
{
    return Hypergraph(d.spec.n, d.spec.k, d.blocks);
}

std::string design_comment(const DesignSpec& spec)
{
    return "design t=" + std::to_string(spec.t) + " lambda=" + std::to_string(spec.lambda);
}

std::optional<std::pair<std::size_t, std::size_t>> parse_design_comment(const std::string& comment)
{
    std::istringstream ss(comment);
    std::string word, t_field, l_field;
    if (! (ss >> word >> t_field >> l_field) || word != "design")
        return std::nullopt;
    if (t_field.rfind("t=", 0) != 0 || l_field.rfind("lambda=", 0) != 0)
        return std::nullopt;
    try {
        return std::pair{std::stoul(t_field.substr(2)), std::stoul(l_field.substr(7))};
    }
    catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace hyperpack
