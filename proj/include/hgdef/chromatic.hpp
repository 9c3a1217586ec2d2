#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgdef/hypergraph.hpp"
#include "hgdef/status.hpp"

namespace hgdef {

/// Total vertex -> color map with colors in {0, ..., palette_size-1}.
struct Coloring {
    std::vector<int> colors;
    int palette_size = 0;
};

struct ChiResult {
    SolveStatus status = SolveStatus::exact;
    int lower = 0;
    int upper = 0;
    /// Proper coloring with palette_size == upper.
    Coloring witness;
    std::uint64_t nodes_explored = 0;

    /// The chromatic number; valid only when status == exact.
    int value() const {
        if (status != SolveStatus::exact)
            throw UsageError("chromatic number is inconclusive; only bounds are available");
        return lower;
    }
};

/// True iff no hyperedge is monochromatic (weak properness). Vacuously true
/// when there are no edges.
bool is_proper_coloring(const Hypergraph& h, const Coloring& c);

/// Deterministic greedy coloring (vertices by descending degree, ties by
/// index; smallest non-conflicting color). Always proper; an upper bound
/// for the exact search.
Coloring greedy_upper_bound(const Hypergraph& h);

/// Exact weak chromatic number with witness: 0 for the empty hypergraph, 1
/// when there are vertices but no edges, otherwise the least palette size
/// admitting a proper coloring. Search is iterative deepening over the
/// palette size with canonical-coloring symmetry breaking; the result and
/// witness are deterministic. An edge of size 1 can never carry two colors,
/// so such inputs are rejected.
ChiResult chromatic_number_exact(const Hypergraph& h,
                                 std::optional<std::uint64_t> budget = std::nullopt);

} // namespace hgdef
