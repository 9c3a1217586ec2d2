#include "hgdef/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace hgdef {

Hypergraph::Hypergraph(int n_vertices, std::vector<VertexSet> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
    if (n_vertices < 0)
        throw UsageError("hypergraph vertex count must be nonnegative");
    if (n_vertices > VertexSet::max_width)
        throw CapacityError("hypergraph supports at most 128 vertices, got " +
                            std::to_string(n_vertices));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].width() != n_)
            throw UsageError("edge " + std::to_string(i) + " has universe width " +
                             std::to_string(edges_[i].width()) + ", hypergraph has " +
                             std::to_string(n_));
        if (edges_[i].empty())
            throw UsageError("edge " + std::to_string(i) + " is empty");
    }
}

Hypergraph Hypergraph::from_edge_lists(int n_vertices,
                                       const std::vector<std::vector<int>>& edges) {
    std::vector<VertexSet> sets;
    sets.reserve(edges.size());
    for (const auto& e : edges)
        sets.push_back(VertexSet::of(n_vertices, e));
    return Hypergraph(n_vertices, std::move(sets));
}

std::optional<int> Hypergraph::min_edge_size() const {
    if (edges_.empty())
        return std::nullopt;
    int best = edges_[0].count();
    for (const auto& e : edges_)
        best = std::min(best, e.count());
    return best;
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_)
        for (int v : e.members())
            ++deg[static_cast<std::size_t>(v)];
    return deg;
}

} // namespace hgdef
