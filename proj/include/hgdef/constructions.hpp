#pragma once

#include <optional>

#include "hgdef/defect.hpp"
#include "hgdef/hypergraph.hpp"

namespace hgdef {

/// Complete k-uniform hypergraph K_n^k: n vertices, all k-subsets as edges in
/// lexicographic order. k == 0 would create an empty edge and is rejected.
Hypergraph complete_uniform(int n, int k);

/// Parameters of the tailed-complete family (CLI name `thm2`): every n-subset
/// of a (2n+k)-element base, extended by one fixed tail S of s extra vertices,
/// with k = l-2. The family has chromatic number l at threshold s while its
/// equitable defect at the same threshold is l+s.
struct Thm2Params {
    int l = 2; ///< target chromatic number, >= 2
    int s = 1; ///< tail size, >= 1
    int n = 1; ///< block size of the underlying complete hypergraph, >= 1
};

/// Vertices: base labels 1..2n+k, then the s tail vertices. One edge e ∪ S per
/// n-subset e, in lexicographic order of e; every edge has size n+s.
Hypergraph thm2_family(const Thm2Params& p);

struct Thm2Predicted {
    int chi;
    int ecd;
};

/// (chi, ecd) = (l, l+s) for KG^2(F, s) over the tailed-complete family.
Thm2Predicted thm2_predicted(const Thm2Params& p);

/// The explicit equitable partition witnessing ecd^2(F, s) <= l+s:
/// Y1 = first n-1 base vertices, Y2 = next n-1, Y0 = the rest plus the tail.
DefectCertificate thm2_upper_certificate(const Thm2Params& p);

/// Parameters of the disjoint-blocks family (CLI name `thm3`): k pairwise
/// disjoint blocks of size s+1, each one a hyperedge. For every threshold
/// l in {s/2+1, ..., s} both defects equal k(2l-s+1) while the chromatic
/// number of KG^2(F, s) stays at k.
struct Thm3Params {
    int k = 1; ///< number of blocks, >= 1
    int s = 2; ///< even, >= 2
};

/// k(s+1) vertices; block i covers labels i(s+1)+1 .. (i+1)(s+1).
Hypergraph thm3_family(const Thm3Params& p);

struct Thm3Predicted {
    int chi;
    int cd;
    int ecd;
};

/// (chi, cd, ecd) = (k, k(2l-s+1), k(2l-s+1)); the formula is only claimed
/// for l in {s/2+1, ..., s}, anything else is a domain error.
Thm3Predicted thm3_predicted(const Thm3Params& p, int l);

/// The explicit equitable partition witnessing the upper bound at threshold l:
/// from each block, s-l vertices go to Y1 and the next s-l to Y2.
DefectCertificate thm3_upper_certificate(const Thm3Params& p, int l);

/// ceil((n - r(k-1)) / (r-1)), the chromatic number of KG^r(K_n^k, 0);
/// absent when n < r(k-1)+1 (the hypothesis of the formula fails).
std::optional<int> closed_form_chi_complete(int n, int k, int r);

/// n - r(k-1), the defect cd^r(K_n^k, 0); absent when n < r(k-1)+1.
std::optional<int> closed_form_cd_complete(int n, int k, int r);

} // namespace hgdef
