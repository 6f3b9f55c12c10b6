#include "hyperpack/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperpack {

namespace {
    void check_strictly_increasing(const std::vector<Vertex>& labels)
    {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == 0)
                throw std::invalid_argument("vertex labels are 1-based, got 0");
            if (i > 0 && labels[i - 1] >= labels[i])
                throw std::invalid_argument("vertex set must be strictly increasing");
        }
    }
}

VertexSet::VertexSet(std::initializer_list<Vertex> labels) :
    labels_(labels)
{
    check_strictly_increasing(labels_);
}

VertexSet::VertexSet(std::vector<Vertex> labels) :
    labels_(std::move(labels))
{
    check_strictly_increasing(labels_);
}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> labels)
{
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("duplicate vertex in set");
    return VertexSet(std::move(labels));
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(labels_.begin(), labels_.end(), v);
}

bool VertexSet::includes(const VertexSet& other) const
{
    return std::includes(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end());
}

bool VertexSet::disjoint(const VertexSet& other) const
{
    auto a = labels_.begin(), b = other.labels_.begin();
    while (a != labels_.end() && b != other.labels_.end()) {
        if (*a == *b)
            return false;
        (*a < *b) ? ++a : ++b;
    }
    return true;
}

VertexSet VertexSet::set_union(const VertexSet& other) const
{
    std::vector<Vertex> out;
    out.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet VertexSet::set_difference(const VertexSet& other) const
{
    std::vector<Vertex> out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

std::uint64_t VertexSet::mask() const
{
    std::uint64_t m = 0;
    for (Vertex v : labels_) {
        if (v > 64)
            throw std::out_of_range("vertex label exceeds bitmask width");
        m |= std::uint64_t{1} << (v - 1);
    }
    return m;
}

std::string VertexSet::str() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(labels_[i]);
    }
    return s + "}";
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept
{
    // FNV-1a over the labels
    std::size_t h = 1469598103934665603ULL;
    for (Vertex v : s) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return h;
}

VertexSet vertex_range(Vertex first, Vertex last)
{
    std::vector<Vertex> out;
    for (Vertex v = first; v <= last && v >= first; ++v)
        out.push_back(v);
    return VertexSet(std::move(out));
}

std::vector<VertexSet> subsets(const VertexSet& pool, std::size_t r)
{
    std::vector<VertexSet> out;
    for_each_subset(pool, r, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

} // namespace hyperpack
