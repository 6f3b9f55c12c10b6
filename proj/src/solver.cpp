#include "hyperpack/solver.hpp"
#include "hyperpack/conditions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hyperpack {

std::string_view name(PackOutcome outcome)
{
    switch (outcome) {
    case PackOutcome::packed: return "packed";
    case PackOutcome::no_packing_proven: return "no-packing-proven";
    case PackOutcome::unknown: return "unknown";
    }
    return "?";
}

bool validate_packing(const Hypergraph& h1, const Hypergraph& h2, const Bijection& f)
{
    return conflicts(h1, h2, f).empty();
}

namespace {
    /// Current bijection plus a per-H1-edge conflict flag, updated locally on
    /// each switch.
    class SwitchState {
    public:
        SwitchState(const Hypergraph& h1, const Hypergraph& h2, const Bijection& f) :
            h1_(h1),
            h2_(h2),
            image_(f.images().begin(), f.images().end()),
            preimage_(image_.size()),
            conflict_(h1.size(), false),
            mark_(h1.size(), 0)
        {
            for (std::size_t v = 0; v < image_.size(); ++v)
                preimage_[image_[v] - 1] = static_cast<Vertex>(v + 1);
            for (std::size_t e = 0; e < h1.size(); ++e)
                if ((conflict_[e] = edge_conflicts(e)))
                    ++count_;
        }

        std::size_t count() const { return count_; }
        Bijection bijection() const { return Bijection(image_); }

        std::size_t full_recount() const
        {
            std::size_t c = 0;
            for (std::size_t e = 0; e < h1_.size(); ++e)
                c += edge_conflicts(e);
            return c;
        }

        /// Current conflicts as H2 edges, lexicographic.
        std::vector<VertexSet> conflict_images() const
        {
            std::vector<VertexSet> out;
            for (std::size_t e = 0; e < h1_.size(); ++e)
                if (conflict_[e])
                    out.push_back(image_of(h1_.edges()[e]));
            std::sort(out.begin(), out.end());
            return out;
        }

        VertexSet image_of(const VertexSet& s) const
        {
            std::vector<Vertex> out;
            out.reserve(s.size());
            for (Vertex v : s)
                out.push_back(image_[v - 1]);
            std::sort(out.begin(), out.end());
            return VertexSet(std::move(out));
        }

        VertexSet preimage_of(const VertexSet& s) const
        {
            std::vector<Vertex> out;
            out.reserve(s.size());
            for (Vertex v : s)
                out.push_back(preimage_[v - 1]);
            std::sort(out.begin(), out.end());
            return VertexSet(std::move(out));
        }

        Vertex preimage(Vertex w) const { return preimage_[w - 1]; }

        /// Conflict count after exchanging f(u_i) and f(v_i) for each i.
        std::size_t count_after_swap(std::span<const Vertex> u, std::span<const Vertex> v)
        {
            collect_affected(u, v);
            std::size_t before = 0;
            for (auto e : affected_)
                before += conflict_[e];
            swap_images(u, v);
            std::size_t after = 0;
            for (auto e : affected_)
                after += edge_conflicts(e);
            swap_images(u, v);
            return count_ - before + after;
        }

        void commit_swap(std::span<const Vertex> u, std::span<const Vertex> v)
        {
            collect_affected(u, v);
            swap_images(u, v);
            for (auto e : affected_) {
                bool now = edge_conflicts(e);
                if (now != conflict_[e]) {
                    conflict_[e] = now;
                    now ? ++count_ : --count_;
                }
            }
        }

    private:
        bool edge_conflicts(std::size_t e) const
        {
            const auto& edge = h1_.edges()[e];
            if (h2_.has_masks()) {
                std::uint64_t m = 0;
                for (Vertex v : edge)
                    m |= std::uint64_t{1} << (image_[v - 1] - 1);
                return h2_.contains_mask(m);
            }
            return h2_.contains_sorted(image_of(edge));
        }

        void swap_images(std::span<const Vertex> u, std::span<const Vertex> v)
        {
            for (std::size_t i = 0; i < u.size(); ++i) {
                std::swap(image_[u[i] - 1], image_[v[i] - 1]);
                preimage_[image_[u[i] - 1] - 1] = u[i];
                preimage_[image_[v[i] - 1] - 1] = v[i];
            }
        }

        void collect_affected(std::span<const Vertex> u, std::span<const Vertex> v)
        {
            ++epoch_;
            affected_.clear();
            for (auto side : {u, v})
                for (Vertex x : side)
                    for (auto e : h1_.incident(x))
                        if (mark_[e] != epoch_) {
                            mark_[e] = epoch_;
                            affected_.push_back(e);
                        }
        }

        const Hypergraph& h1_;
        const Hypergraph& h2_;
        std::vector<Vertex> image_;
        std::vector<Vertex> preimage_;
        std::vector<bool> conflict_;
        std::size_t count_ = 0;
        std::vector<std::uint32_t> mark_;
        std::uint32_t epoch_ = 0;
        std::vector<std::size_t> affected_;
    };

    /// Finds and applies the first strictly improving switch. Returns false
    /// when no conflict admits one.
    bool improve(SwitchState& state, const Hypergraph& h1, int beta, std::vector<SwitchStep>& trace, PackStats& stats)
    {
        const auto b = static_cast<std::size_t>(beta);
        const auto all = vertex_range(1, static_cast<Vertex>(h1.n()));
        const std::size_t before = state.count();

        for (const auto& c : state.conflict_images()) {
            const auto pool = all.set_difference(state.preimage_of(c));
            bool done = false;
            for_each_subset(c, b, [&](const VertexSet& u_image) {
                // u_i = f^-1(u'_i), kept aligned with ascending u'
                std::vector<Vertex> u;
                for (Vertex w : u_image)
                    u.push_back(state.preimage(w));
                for_each_subset(pool, b, [&](const VertexSet& v) {
                    ++stats.bijections_examined;
                    auto after = state.count_after_swap(u, v.labels());
                    if (after >= before)
                        return true;
                    state.commit_swap(u, v.labels());
                    trace.push_back(SwitchStep{beta, VertexSet::from_unsorted(u), v, before, after});
                    ++stats.switches;
                    done = true;
                    return false;
                });
                return ! done;
            });
            if (done)
                return true;
        }
        return false;
    }

    Bijection random_bijection(std::size_t n, std::uint64_t seed, std::uint64_t restart)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
        std::mt19937_64 rng(seq);
        std::vector<Vertex> images(n);
        std::iota(images.begin(), images.end(), Vertex{1});
        // Fisher-Yates with an explicit draw so the stream is library independent
        for (std::size_t i = n; i > 1; --i) {
            std::size_t j = rng() % i;
            std::swap(images[i - 1], images[j]);
        }
        return Bijection(std::move(images));
    }
}

PackResult switching_pack(const Hypergraph& h1, const Hypergraph& h2, int beta, const SwitchingOptions& options)
{
    require_compatible(h1, h2);
    if (beta <= 0 || static_cast<std::size_t>(beta) >= h1.k())
        throw std::invalid_argument("beta=" + std::to_string(beta) + " must satisfy 0 < beta < k=" + std::to_string(h1.k()));
    if (options.max_restarts < 0)
        throw std::invalid_argument("max_restarts must be non-negative");

    PackResult result;
    result.beta = beta;
    auto start = options.initial.value_or(Bijection::identity(h1.n()));
    if (start.size() != h1.n())
        throw std::invalid_argument("initial bijection size does not match n");

    for (std::uint64_t restart = 0;; ++restart) {
        SwitchState state(h1, h2, start);
        result.trace.clear();
        result.initial_conflicts = state.count();
        while (state.count() > 0 && improve(state, h1, beta, result.trace, result.stats)) {
            if (options.full_recount_check && state.full_recount() != state.count())
                throw std::logic_error("incremental conflict count diverged from full recount");
        }
        if (state.count() == 0) {
            auto f = state.bijection();
            if (! validate_packing(h1, h2, f))
                throw std::logic_error("switching produced an invalid packing");
            result.outcome = PackOutcome::packed;
            result.packing = std::move(f);
            return result;
        }
        if (restart >= static_cast<std::uint64_t>(options.max_restarts))
            break;
        ++result.stats.restarts;
        start = random_bijection(h1.n(), options.seed, restart);
    }
    result.outcome = PackOutcome::unknown;
    return result;
}

PackResult switching_pack_auto(const Hypergraph& h1, const Hypergraph& h2, std::uint64_t seed, bool full_recount_check)
{
    require_compatible(h1, h2);
    SwitchingOptions options;
    options.seed = seed;
    options.full_recount_check = full_recount_check;

    auto witness = check_beta_any(h1, h2).witness_beta();
    if (witness)
        return switching_pack(h1, h2, *witness, options);

    PackStats total;
    PackResult last;
    for (int beta = 1; static_cast<std::size_t>(beta) < h1.k(); ++beta) {
        last = switching_pack(h1, h2, beta, options);
        total.bijections_examined += last.stats.bijections_examined;
        total.switches += last.stats.switches;
        total.restarts += last.stats.restarts;
        if (last.outcome == PackOutcome::packed)
            break;
    }
    last.stats = total;
    return last;
}

PackResult brute_force_pack(const Hypergraph& h1, const Hypergraph& h2, std::int64_t node_budget)
{
    require_compatible(h1, h2);
    if (node_budget <= 0)
        throw std::invalid_argument("node budget must be positive");

    const std::size_t n = h1.n();
    PackResult result;

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{1});
    std::stable_sort(order.begin(), order.end(),
        [&](Vertex a, Vertex b) { return h1.incident(a).size() > h1.incident(b).size(); });
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[order[i] - 1] = i;

    // edges to test once their last vertex (in placement order) is placed
    std::vector<std::vector<std::size_t>> closes(n);
    for (std::size_t e = 0; e < h1.size(); ++e) {
        std::size_t last = 0;
        for (Vertex v : h1.edges()[e])
            last = std::max(last, position[v - 1]);
        closes[last].push_back(e);
    }

    std::vector<Vertex> image(n, 0);
    std::vector<bool> used(n + 1, false);
    std::uint64_t nodes = 0;
    const auto budget = static_cast<std::uint64_t>(node_budget);
    bool exhausted_budget = false;

    auto clashes = [&](std::size_t depth) {
        for (auto e : closes[depth]) {
            std::vector<Vertex> img;
            for (Vertex v : h1.edges()[e])
                img.push_back(image[v - 1]);
            if (h2.contains(VertexSet::from_unsorted(std::move(img))))
                return true;
        }
        return false;
    };

    auto search = [&](auto& self, std::size_t depth) -> bool {
        if (depth == n)
            return true;
        const Vertex v = order[depth];
        for (Vertex w = 1; w <= n; ++w) {
            if (used[w])
                continue;
            if (++nodes > budget) {
                exhausted_budget = true;
                return false;
            }
            image[v - 1] = w;
            used[w] = true;
            if (! clashes(depth) && self(self, depth + 1))
                return true;
            used[w] = false;
            if (exhausted_budget)
                return false;
        }
        image[v - 1] = 0;
        return false;
    };

    bool found = search(search, 0);
    result.stats.bijections_examined = nodes;
    if (found) {
        Bijection f(image);
        if (! validate_packing(h1, h2, f))
            throw std::logic_error("exhaustive search produced an invalid packing");
        result.outcome = PackOutcome::packed;
        result.packing = std::move(f);
    }
    else
        result.outcome = exhausted_budget ? PackOutcome::unknown : PackOutcome::no_packing_proven;
    return result;
}

} // namespace hyperpack
