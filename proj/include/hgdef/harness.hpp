#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgdef/hypergraph.hpp"

#include <json.hpp>

namespace hgdef {

enum class ClaimStatus { pass, fail, inconclusive };

std::string to_string(ClaimStatus status);

/// One verified statement: a claim id, the instance parameters, the predicted
/// value (or inequality descriptor), what was actually computed, and whether
/// the computation settles the claim. `pass` is only reported when both sides
/// were computed by exhaustive search; a tripped budget yields `inconclusive`,
/// never a guess.
struct Claim {
    std::string id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json predicted;
    nlohmann::ordered_json computed = nlohmann::ordered_json::object();
    ClaimStatus status = ClaimStatus::inconclusive;
};

struct VerificationReport {
    std::vector<Claim> claims;
    nlohmann::ordered_json corpus; // fuzz metadata; null otherwise
    double elapsed_ms = 0.0;

    int count(ClaimStatus status) const;
};

/// chi(KG^r(f, s)) >= ceil(ecd^r(f, floor(s/2)) / (r-1)). This inequality is a
/// theorem, so on correct solvers the claim can only pass (or come back
/// inconclusive under a budget); a fail indicates an implementation bug.
Claim check_aj_bound(const Hypergraph& f, int r, int s,
                     std::optional<std::uint64_t> budget = std::nullopt);

/// Evaluate the strengthened inequalities obtained by replacing floor(s/2)
/// with x in the defect bound: chi(KG^r(f,s)) >= ceil(cd^r(f,x)/(r-1)) and the
/// ecd variant. Requires floor(s/2) <= x <= s. The claim records whether each
/// variant HOLDS or is VIOLATED; it passes once both sides are computed
/// exactly (neither outcome is an error: the point of the family generators is
/// that the strengthening fails for x > floor(s/2)).
Claim check_strengthened_bound(const Hypergraph& f, int r, int s, int x,
                               std::optional<std::uint64_t> budget = std::nullopt);

struct FuzzConfig {
    std::uint64_t seed = 42;
    int trials = 200;
    int max_n = 8;
    int max_edges = 8;
    std::vector<int> r_values = {2, 3};
    int s_max = 2;
    std::optional<std::uint64_t> budget;
};

/// Random-instance sweep: per trial draws a hypergraph (edge sizes > s by
/// construction), then checks the defect bound, ecd >= cd, and monotonicity of
/// both defects in s. Deterministic given the seed.
VerificationReport fuzz_corpus(const FuzzConfig& config);

enum class GridKind { small, full };

/// Re-verify the bundled family claims: closed forms for complete
/// hypergraphs, the tailed-complete family (chi = l, ecd = l+s, proof
/// certificate, ecd-strengthening violated at x = s), the disjoint-blocks
/// family (chi = k, cd = ecd = k(2l-s+1), certificate, cd-strengthening
/// violated at x = l), plus the always-true defect bounds on every instance.
VerificationReport reproduce_paper(GridKind grid,
                                   std::optional<std::uint64_t> budget = std::nullopt);

nlohmann::ordered_json report_json(const VerificationReport& report);

/// Aligned human-readable rendering of the same content.
std::string render_table(const VerificationReport& report);

/// 0 = all pass, 1 = any fail, 2 = any inconclusive and no fail.
int report_exit_code(const VerificationReport& report);

} // namespace hgdef
