#include "hyperpack/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hyperpack {

Hypergraph::Hypergraph(std::size_t n, std::size_t k, std::vector<VertexSet> edges) :
    n_(n),
    k_(k),
    edges_(std::move(edges)),
    incidence_(n)
{
    if (! edges_.empty() && (k_ < 1 || k_ > n_))
        throw std::invalid_argument("uniformity k=" + std::to_string(k_) + " out of range for n=" + std::to_string(n_));
    for (const auto& e : edges_) {
        if (e.size() != k_)
            throw std::invalid_argument("edge " + e.str() + " does not have exactly " + std::to_string(k_) + " vertices");
        if (e.back() > n_)
            throw std::invalid_argument("edge " + e.str() + " has a label outside 1.." + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("duplicate edge " + dup->str());

    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (Vertex v : edges_[i])
            incidence_[v - 1].push_back(i);

    if (has_masks()) {
        mask_set_.reserve(edges_.size());
        for (const auto& e : edges_)
            mask_set_.insert(e.mask());
    }
}

Hypergraph Hypergraph::complete(std::size_t n, std::size_t k)
{
    return Hypergraph(n, k, subsets(vertex_range(1, static_cast<Vertex>(n)), k));
}

bool Hypergraph::contains(const VertexSet& e) const
{
    if (e.size() != k_ || e.empty() || e.back() > n_)
        return false;
    if (has_masks())
        return mask_set_.contains(e.mask());
    return contains_sorted(e);
}

bool Hypergraph::contains_sorted(const VertexSet& e) const
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Hypergraph Hypergraph::with_edge(const VertexSet& e) const
{
    auto edges = edges_;
    edges.push_back(e);
    return Hypergraph(n_, k_, std::move(edges));
}

Hypergraph Hypergraph::without_edge(const VertexSet& e) const
{
    auto edges = edges_;
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e)
        throw std::invalid_argument("edge " + e.str() + " not present");
    edges.erase(it);
    return Hypergraph(n_, k_, std::move(edges));
}

Bijection::Bijection(std::vector<Vertex> images) :
    images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (Vertex v : images_) {
        if (v < 1 || v > images_.size() || seen[v - 1])
            throw std::invalid_argument("bijection is not a permutation of 1.." + std::to_string(images_.size()));
        seen[v - 1] = true;
    }
}

Bijection Bijection::identity(std::size_t n)
{
    std::vector<Vertex> images(n);
    std::iota(images.begin(), images.end(), Vertex{1});
    return Bijection(std::move(images));
}

Bijection Bijection::inverse() const
{
    std::vector<Vertex> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[images_[i] - 1] = static_cast<Vertex>(i + 1);
    return Bijection(std::move(inv));
}

void require_compatible(const Hypergraph& h1, const Hypergraph& h2)
{
    if (h1.n() != h2.n() || h1.k() != h2.k())
        throw std::invalid_argument("hypergraph parameters differ: (n,k)=(" + std::to_string(h1.n()) + "," + std::to_string(h1.k())
            + ") vs (" + std::to_string(h2.n()) + "," + std::to_string(h2.k()) + ")");
}

std::size_t degree(const Hypergraph& h, const VertexSet& u)
{
    if (! u.empty() && u.back() > h.n())
        throw std::invalid_argument("subset " + u.str() + " has a label outside 1.." + std::to_string(h.n()));
    if (u.size() > h.k())
        throw std::invalid_argument("subset " + u.str() + " is larger than the uniformity");
    if (u.empty())
        return h.size();
    // scan the incidence list of the rarest vertex
    Vertex pivot = u.front();
    for (Vertex v : u)
        if (h.incident(v).size() < h.incident(pivot).size())
            pivot = v;
    std::size_t count = 0;
    for (std::size_t idx : h.incident(pivot))
        if (h.edges()[idx].includes(u))
            ++count;
    return count;
}

std::size_t max_degree(const Hypergraph& h, std::size_t l)
{
    if (l < 1 || l > h.k())
        throw std::invalid_argument("degree order l=" + std::to_string(l) + " outside 1.." + std::to_string(h.k()));
    if (l == h.k())
        return h.empty() ? 0 : 1;
    std::size_t best = 0;
    if (h.has_masks()) {
        std::unordered_map<std::uint64_t, std::size_t> counts;
        for (const auto& e : h.edges())
            for_each_subset(e, l, [&](const VertexSet& s) {
                best = std::max(best, ++counts[s.mask()]);
                return true;
            });
    }
    else {
        std::unordered_map<VertexSet, std::size_t, VertexSetHash> counts;
        for (const auto& e : h.edges())
            for_each_subset(e, l, [&](const VertexSet& s) {
                best = std::max(best, ++counts[s]);
                return true;
            });
    }
    return best;
}

VertexSet apply(const Bijection& f, const VertexSet& u)
{
    std::vector<Vertex> out;
    out.reserve(u.size());
    for (Vertex v : u) {
        if (v > f.size())
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside the bijection's domain");
        out.push_back(f(v));
    }
    std::sort(out.begin(), out.end());
    return VertexSet(std::move(out));
}

std::vector<VertexSet> conflicts(const Hypergraph& h1, const Hypergraph& h2, const Bijection& f)
{
    require_compatible(h1, h2);
    if (f.size() != h1.n())
        throw std::invalid_argument("bijection size does not match n");
    const auto inv = f.inverse();
    std::vector<VertexSet> out;
    for (const auto& c : h2.edges())
        if (h1.contains(apply(inv, c)))
            out.push_back(c);
    return out;
}

std::size_t conflict_count(const Hypergraph& h1, const Hypergraph& h2, const Bijection& f)
{
    require_compatible(h1, h2);
    if (f.size() != h1.n())
        throw std::invalid_argument("bijection size does not match n");
    std::size_t count = 0;
    for (const auto& e : h1.edges())
        if (h2.contains(apply(f, e)))
            ++count;
    return count;
}

} // namespace hyperpack
