#include "hgdef/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hgdef {

namespace {

// Vertices by descending degree, ties by index (fail-first).
std::vector<int> degree_order(const Hypergraph& h) {
    std::vector<int> deg = h.degrees();
    std::vector<int> order(static_cast<std::size_t>(h.n_vertices()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    });
    return order;
}

void require_colorable(const Hypergraph& h) {
    for (int i = 0; i < h.n_edges(); ++i)
        if (h.edge(i).count() < 2)
            throw DomainError("edge " + std::to_string(i) +
                              " has a single vertex and can never carry two colors");
}

// Greedy clique on the adjacency structure of a 2-uniform hypergraph; the
// clique size is a sound chromatic lower bound. Returns 0 when some edge is
// not a pair.
int clique_lower_bound(const Hypergraph& h) {
    const int n = h.n_vertices();
    for (const auto& e : h.edges())
        if (e.count() != 2)
            return 0;
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
    for (const auto& e : h.edges()) {
        auto uv = e.members();
        adj[static_cast<std::size_t>(uv[0])].add(uv[1]);
        adj[static_cast<std::size_t>(uv[1])].add(uv[0]);
    }
    std::vector<int> order = degree_order(h);
    int best = 0;
    for (int seed : order) {
        VertexSet clique(n);
        clique.add(seed);
        VertexSet candidates = adj[static_cast<std::size_t>(seed)];
        for (int v : order) {
            if (!candidates.contains(v))
                continue;
            clique.add(v);
            candidates = candidates & adj[static_cast<std::size_t>(v)];
        }
        best = std::max(best, clique.count());
    }
    return best;
}

// Incremental per-edge state: how many member vertices are colored, and the
// common color while the edge is still monochromatic (-1 once diverse).
struct EdgeState {
    int colored = 0;
    int mono = -1;
};

class PaletteSearch {
public:
    PaletteSearch(const Hypergraph& h, const std::vector<int>& order)
        : h_(h), order_(order), colors_(static_cast<std::size_t>(h.n_vertices()), -1),
          edge_size_(static_cast<std::size_t>(h.n_edges())),
          incident_(static_cast<std::size_t>(h.n_vertices())) {
        for (int i = 0; i < h.n_edges(); ++i) {
            edge_size_[static_cast<std::size_t>(i)] = h.edge(i).count();
            for (int v : h.edge(i).members())
                incident_[static_cast<std::size_t>(v)].push_back(i);
        }
    }

    // Complete search for a proper coloring with exactly <= palette colors.
    // Returns true and fills `out` on success; false means no such coloring
    // exists (only trustworthy when the budget did not trip).
    bool run(int palette, std::optional<std::uint64_t> budget, std::uint64_t& nodes,
             bool& budget_hit, Coloring& out) {
        state_.assign(static_cast<std::size_t>(h_.n_edges()), EdgeState{});
        std::fill(colors_.begin(), colors_.end(), -1);
        undo_.clear();
        palette_ = palette;
        budget_ = budget;
        nodes_ = &nodes;
        budget_hit_ = false;
        bool found = dfs(0, 0);
        budget_hit = budget_hit_;
        if (found) {
            out.colors = colors_;
            out.palette_size = palette;
        }
        return found;
    }

private:
    bool dfs(std::size_t depth, int max_used) {
        if (depth == order_.size())
            return true;
        int v = order_[depth];
        // Canonical-coloring rule: a new color may only be the next unused one.
        int limit = std::min(palette_ - 1, max_used);
        for (int c = 0; c <= limit; ++c) {
            ++*nodes_;
            if (budget_ && *nodes_ > *budget_) {
                budget_hit_ = true;
                return false;
            }
            if (assign(v, c)) {
                if (dfs(depth + 1, std::max(max_used, c + 1)))
                    return true;
                unassign(v, c);
            }
            if (budget_hit_)
                return false;
        }
        return false;
    }

    bool assign(int v, int c) {
        const auto& inc = incident_[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k < inc.size(); ++k) {
            int e = inc[k];
            EdgeState& st = state_[static_cast<std::size_t>(e)];
            int next_mono = st.colored == 0 ? c : (st.mono == c ? c : -1);
            if (st.colored + 1 == edge_size_[static_cast<std::size_t>(e)] && next_mono != -1) {
                // Fully colored and monochromatic: roll back the edges touched so far.
                pop_undo(k);
                return false;
            }
            undo_.push_back({e, st.mono});
            st.mono = next_mono;
            ++st.colored;
        }
        colors_[static_cast<std::size_t>(v)] = c;
        return true;
    }

    void unassign(int v, int /*c*/) {
        pop_undo(incident_[static_cast<std::size_t>(v)].size());
        colors_[static_cast<std::size_t>(v)] = -1;
    }

    void pop_undo(std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            auto [e, old_mono] = undo_.back();
            undo_.pop_back();
            EdgeState& st = state_[static_cast<std::size_t>(e)];
            --st.colored;
            st.mono = old_mono;
        }
    }

    const Hypergraph& h_;
    const std::vector<int>& order_;
    std::vector<int> colors_;
    std::vector<int> edge_size_;
    std::vector<std::vector<int>> incident_;
    std::vector<EdgeState> state_;
    std::vector<std::pair<int, int>> undo_;
    int palette_ = 0;
    std::optional<std::uint64_t> budget_;
    std::uint64_t* nodes_ = nullptr;
    bool budget_hit_ = false;
};

} // namespace

bool is_proper_coloring(const Hypergraph& h, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != h.n_vertices())
        throw UsageError("coloring covers " + std::to_string(c.colors.size()) +
                         " vertices, hypergraph has " + std::to_string(h.n_vertices()));
    for (const auto& e : h.edges()) {
        auto members = e.members();
        int first = c.colors[static_cast<std::size_t>(members[0])];
        bool diverse = false;
        for (int v : members) {
            if (c.colors[static_cast<std::size_t>(v)] != first) {
                diverse = true;
                break;
            }
        }
        if (!diverse)
            return false;
    }
    return true;
}

Coloring greedy_upper_bound(const Hypergraph& h) {
    require_colorable(h);
    const int n = h.n_vertices();
    Coloring result;
    result.colors.assign(static_cast<std::size_t>(n), -1);
    if (n == 0)
        return result;

    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (int i = 0; i < h.n_edges(); ++i)
        for (int v : h.edge(i).members())
            incident[static_cast<std::size_t>(v)].push_back(i);

    int max_color = -1;
    for (int v : degree_order(h)) {
        int c = 0;
        for (;; ++c) {
            // Color c is forbidden iff it would complete a monochromatic edge.
            bool ok = true;
            for (int ei : incident[static_cast<std::size_t>(v)]) {
                const auto& e = h.edge(ei);
                bool mono = true;
                for (int u : e.members()) {
                    if (u == v)
                        continue;
                    if (result.colors[static_cast<std::size_t>(u)] != c) {
                        mono = false;
                        break;
                    }
                }
                if (mono) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                break;
        }
        result.colors[static_cast<std::size_t>(v)] = c;
        max_color = std::max(max_color, c);
    }
    result.palette_size = max_color + 1;
    return result;
}

ChiResult chromatic_number_exact(const Hypergraph& h, std::optional<std::uint64_t> budget) {
    ChiResult result;
    if (h.n_vertices() == 0) {
        result.lower = result.upper = 0;
        result.witness.palette_size = 0;
        return result;
    }
    if (h.n_edges() == 0) {
        result.lower = result.upper = 1;
        result.witness.colors.assign(static_cast<std::size_t>(h.n_vertices()), 0);
        result.witness.palette_size = 1;
        return result;
    }
    require_colorable(h);

    Coloring greedy = greedy_upper_bound(h);
    int ub = greedy.palette_size;
    int lb = std::max(2, clique_lower_bound(h));

    std::vector<int> order = degree_order(h);
    PaletteSearch search(h, order);
    for (int t = lb; t <= ub; ++t) {
        Coloring witness;
        bool budget_hit = false;
        bool found = search.run(t, budget, result.nodes_explored, budget_hit, witness);
        if (found) {
            result.status = SolveStatus::exact;
            result.lower = result.upper = t;
            result.witness = witness;
            return result;
        }
        if (budget_hit) {
            result.status = SolveStatus::inconclusive;
            result.lower = t; // palettes below t are exhaustively refuted
            result.upper = ub;
            result.witness = greedy;
            return result;
        }
        // t colors exhaustively refuted; lower bound rises.
    }
    // Unreachable: the greedy witness guarantees success at t == ub.
    result.lower = result.upper = ub;
    result.witness = greedy;
    return result;
}

} // namespace hgdef
