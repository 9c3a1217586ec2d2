#include "hgdef/kneser.hpp"

#include <string>
#include <vector>

namespace hgdef {

namespace {

// Depth-first enumeration of index r-subsets in lexicographic order. A partial
// tuple is extended by index `next` only if `next` is pairwise-compatible with
// everything already chosen; the pairwise condition is hereditary, so the prune
// is sound.
void extend(const std::vector<std::vector<bool>>& compatible, int m, int r,
            std::vector<int>& chosen, std::vector<VertexSet>& out) {
    if (static_cast<int>(chosen.size()) == r) {
        VertexSet edge(m);
        for (int i : chosen)
            edge.add(i);
        out.push_back(edge);
        return;
    }
    int remaining = r - static_cast<int>(chosen.size());
    int first = chosen.empty() ? 0 : chosen.back() + 1;
    for (int next = first; next + remaining <= m; ++next) {
        bool ok = true;
        for (int i : chosen) {
            if (!compatible[static_cast<std::size_t>(i)][static_cast<std::size_t>(next)]) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        chosen.push_back(next);
        extend(compatible, m, r, chosen, out);
        chosen.pop_back();
    }
}

} // namespace

Hypergraph build_kneser(const Hypergraph& base, KneserSpec spec) {
    if (spec.r < 2)
        throw DomainError("Kneser uniformity r must be at least 2, got " +
                          std::to_string(spec.r));
    if (spec.s < 0)
        throw DomainError("Kneser threshold s must be nonnegative, got " +
                          std::to_string(spec.s));
    const int m = base.n_edges();
    for (int i = 0; i < m; ++i) {
        if (base.edge(i).count() <= spec.s)
            throw DomainError("edge " + std::to_string(i) + " has size " +
                              std::to_string(base.edge(i).count()) +
                              " <= s = " + std::to_string(spec.s));
    }
    if (m > VertexSet::max_width)
        throw CapacityError("base has " + std::to_string(m) +
                            " edges; Kneser vertices are capped at 128");

    // Pairwise intersection table, computed once; each pair is inspected many
    // times across r-subsets.
    std::vector<std::vector<bool>> compatible(
        static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool ok = base.edge(i).intersection_size(base.edge(j)) <= spec.s;
            compatible[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ok;
            compatible[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = ok;
        }

    std::vector<VertexSet> edges;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(spec.r));
    extend(compatible, m, spec.r, chosen, edges);
    return Hypergraph(m, std::move(edges));
}

} // namespace hgdef
