#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hyperpack {

/// 1-based vertex label.
using Vertex = std::uint32_t;

/// Sorted, duplicate-free set of vertex labels. Used for edges, kernels,
/// design blocks and the subsets moved by a switch.
class VertexSet {
public:
    VertexSet() = default;

    /// Takes labels that must already be strictly increasing and positive.
    VertexSet(std::initializer_list<Vertex> labels);
    explicit VertexSet(std::vector<Vertex> labels);

    /// Sorts the labels; rejects duplicates and zero.
    static VertexSet from_unsorted(std::vector<Vertex> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    Vertex operator[](std::size_t i) const { return labels_[i]; }
    Vertex front() const { return labels_.front(); }
    Vertex back() const { return labels_.back(); }
    auto begin() const noexcept { return labels_.begin(); }
    auto end() const noexcept { return labels_.end(); }
    std::span<const Vertex> labels() const noexcept { return labels_; }

    bool contains(Vertex v) const;
    bool includes(const VertexSet& other) const;
    bool disjoint(const VertexSet& other) const;

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_difference(const VertexSet& other) const;

    /// Bitmask with bit (v-1) set per label; requires back() <= 64.
    std::uint64_t mask() const;

    std::string str() const;

    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> labels_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept;
};

/// {first, ..., last}; empty when last < first.
VertexSet vertex_range(Vertex first, Vertex last);

/// Visit every r-subset of `pool` (which must be sorted) in lexicographic
/// order. The visitor returns false to stop early; the function returns false
/// iff it was stopped.
template <typename Visitor>
bool for_each_subset(std::span<const Vertex> pool, std::size_t r, Visitor&& visit)
{
    const std::size_t m = pool.size();
    if (r > m)
        return true;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i)
        idx[i] = i;
    std::vector<Vertex> buf(r);
    while (true) {
        for (std::size_t i = 0; i < r; ++i)
            buf[i] = pool[idx[i]];
        if (! visit(VertexSet(buf)))
            return false;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == m - r + i - 1)
            --i;
        if (i == 0)
            return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

template <typename Visitor>
bool for_each_subset(const VertexSet& pool, std::size_t r, Visitor&& visit)
{
    return for_each_subset(pool.labels(), r, std::forward<Visitor>(visit));
}

/// All r-subsets of `pool` in lexicographic order.
std::vector<VertexSet> subsets(const VertexSet& pool, std::size_t r);

} // namespace hyperpack

template <>
struct std::hash<hyperpack::VertexSet> : hyperpack::VertexSetHash {};
