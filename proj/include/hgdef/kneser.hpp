#pragma once

#include "hgdef/hypergraph.hpp"

namespace hgdef {

/// Parameters of the generalized Kneser hypergraph KG^r(F, s): r >= 2 is the
/// uniformity of the result, s >= 0 the pairwise-intersection threshold.
/// Additionally s < |e| must hold for every edge e of the base; that is
/// checked against the concrete base at construction time.
struct KneserSpec {
    int r = 2;
    int s = 0;
};

/// Build KG^r(F, s): one vertex per edge of the base (vertex i = i-th stored
/// edge), and an r-set {i1 < ... < ir} of edge indices forms a hyperedge iff
/// every pair of the corresponding base edges intersects in at most s
/// vertices. Edges are emitted in lexicographic index order.
Hypergraph build_kneser(const Hypergraph& base, KneserSpec spec);

} // namespace hgdef
