#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgdef/hypergraph.hpp"
#include "hgdef/status.hpp"

#include <json.hpp>

namespace hgdef {

/// Partition {X0, X1, ..., Xr} of the vertex set witnessing a defect upper
/// bound: for every edge e and every part Xi, |e \ Xi| >= s+1 (e is not
/// s-almost-contained in Xi). Parts may be empty. When `equitable` is set the
/// part sizes must pairwise differ by at most 1.
struct DefectCertificate {
    VertexSet x0;
    std::vector<VertexSet> parts;
    bool equitable = false;
};

struct DefectResult {
    SolveStatus status = SolveStatus::exact;
    int lower = 0;
    int upper = 0;
    /// Valid certificate with |x0| == upper.
    DefectCertificate certificate;
    std::uint64_t nodes_explored = 0;

    /// The defect value; valid only when status == exact.
    int value() const {
        if (status != SolveStatus::exact)
            throw UsageError("defect value is inconclusive; only bounds are available");
        return lower;
    }
};

/// Check every certificate invariant against f at threshold s: the sets
/// partition V(f), no part s-almost-contains an edge, and (when the equitable
/// flag is set) part sizes are balanced.
bool verify_certificate(const Hypergraph& f, int s, const DefectCertificate& cert);

/// s-th r-colorability defect cd^r(f, s): minimum |X0| over partitions
/// {X0, X1, ..., Xr} of V(f) with |e \ Xi| >= s+1 for every edge and part.
/// Exhaustive branch-and-bound; deterministic value and certificate.
DefectResult cd_exact(const Hypergraph& f, int r, int s,
                      std::optional<std::uint64_t> budget = std::nullopt);

/// Equitable variant: additionally the part sizes pairwise differ by at most
/// one. Always >= cd_exact on the same input.
DefectResult ecd_exact(const Hypergraph& f, int r, int s,
                       std::optional<std::uint64_t> budget = std::nullopt);

/// Wire form used by the harness: {value, x0, parts, equitable, threshold_s, r}
/// with 1-based sorted vertex lists.
nlohmann::ordered_json certificate_json(const DefectCertificate& cert, int threshold_s);

} // namespace hgdef
