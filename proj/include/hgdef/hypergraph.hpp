#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "hgdef/errors.hpp"

namespace hgdef {

/// Subset of a fixed vertex universe {0, ..., width-1}, stored as a bit mask.
/// Two sets are comparable only when their widths agree; mixing universes is a
/// UsageError. The width cap keeps every set operation O(1) on two words.
class VertexSet {
public:
    static constexpr int max_width = 128;

    VertexSet() = default;

    explicit VertexSet(int width) : width_(width) {
        if (width < 0)
            throw UsageError("VertexSet width must be nonnegative");
        if (width > max_width)
            throw CapacityError("VertexSet supports at most 128 vertices, got " +
                                std::to_string(width));
    }

    static VertexSet full(int width) {
        VertexSet s(width);
        for (int v = 0; v < width; ++v)
            s.add(v);
        return s;
    }

    static VertexSet of(int width, std::initializer_list<int> members) {
        VertexSet s(width);
        for (int v : members)
            s.add(v);
        return s;
    }

    static VertexSet of(int width, const std::vector<int>& members) {
        VertexSet s(width);
        for (int v : members)
            s.add(v);
        return s;
    }

    int width() const noexcept { return width_; }

    bool contains(int v) const {
        check_vertex(v);
        return (words_[static_cast<unsigned>(v) >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check_vertex(v);
        words_[static_cast<unsigned>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check_vertex(v);
        words_[static_cast<unsigned>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const noexcept {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }

    bool empty() const noexcept { return words_[0] == 0 && words_[1] == 0; }

    /// Members in ascending order.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int w = 0; w < 2; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(w * 64 + b);
                bits &= bits - 1;
            }
        }
        return out;
    }

    VertexSet operator|(const VertexSet& other) const {
        check_same_width(other);
        VertexSet r(width_);
        r.words_ = {words_[0] | other.words_[0], words_[1] | other.words_[1]};
        return r;
    }

    VertexSet operator&(const VertexSet& other) const {
        check_same_width(other);
        VertexSet r(width_);
        r.words_ = {words_[0] & other.words_[0], words_[1] & other.words_[1]};
        return r;
    }

    /// this \ other.
    VertexSet difference(const VertexSet& other) const {
        check_same_width(other);
        VertexSet r(width_);
        r.words_ = {words_[0] & ~other.words_[0], words_[1] & ~other.words_[1]};
        return r;
    }

    int intersection_size(const VertexSet& other) const {
        check_same_width(other);
        return std::popcount(words_[0] & other.words_[0]) +
               std::popcount(words_[1] & other.words_[1]);
    }

    /// |this \ other|.
    int difference_size(const VertexSet& other) const {
        check_same_width(other);
        return std::popcount(words_[0] & ~other.words_[0]) +
               std::popcount(words_[1] & ~other.words_[1]);
    }

    bool is_subset_of(const VertexSet& other) const {
        check_same_width(other);
        return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
    }

    bool intersects(const VertexSet& other) const {
        check_same_width(other);
        return (words_[0] & other.words_[0]) != 0 || (words_[1] & other.words_[1]) != 0;
    }

    bool operator==(const VertexSet&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= width_)
            throw UsageError("vertex " + std::to_string(v) + " outside universe of width " +
                             std::to_string(width_));
    }

    void check_same_width(const VertexSet& other) const {
        if (width_ != other.width_)
            throw UsageError("vertex sets over different universes (widths " +
                             std::to_string(width_) + " and " + std::to_string(other.width_) +
                             ")");
    }

    std::array<std::uint64_t, 2> words_{0, 0};
    int width_ = 0;
};

/// A subseteq_s B: |A \ B| <= s. Monotone in s; at s = 0 it is plain containment.
inline bool subseteq_s(const VertexSet& a, const VertexSet& b, int s) {
    if (s < 0)
        throw UsageError("subseteq_s threshold must be nonnegative");
    return a.difference_size(b) <= s;
}

/// Finite set system: n vertices (indices 0..n-1) plus an ordered list of
/// nonempty hyperedges. Edge order and duplicate edges are preserved exactly;
/// the edge index is an identity (it becomes a Kneser vertex). Immutable after
/// construction.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(int n_vertices, std::vector<VertexSet> edges);

    static Hypergraph from_edge_lists(int n_vertices,
                                      const std::vector<std::vector<int>>& edges);

    int n_vertices() const noexcept { return n_; }
    int n_edges() const noexcept { return static_cast<int>(edges_.size()); }

    const VertexSet& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
    const std::vector<VertexSet>& edges() const noexcept { return edges_; }

    /// Smallest edge size; absent when there are no edges.
    std::optional<int> min_edge_size() const;

    /// Number of incident edges per vertex (duplicates count separately).
    std::vector<int> degrees() const;

    bool operator==(const Hypergraph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> edges_;
};

} // namespace hgdef
