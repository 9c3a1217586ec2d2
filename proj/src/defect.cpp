#include "hgdef/defect.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include <json.hpp>

namespace hgdef {

namespace {

// Vertices by descending tightness (approximated by edge degree), ties by index.
std::vector<int> tightness_order(const Hypergraph& f) {
    std::vector<int> deg = f.degrees();
    std::vector<int> order(static_cast<std::size_t>(f.n_vertices()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    });
    return order;
}

void check_preconditions(const Hypergraph& f, int r, int s) {
    if (r < 2)
        throw DomainError("defect requires r >= 2, got " + std::to_string(r));
    if (s < 0)
        throw DomainError("defect requires s >= 0, got " + std::to_string(s));
    for (int i = 0; i < f.n_edges(); ++i)
        if (f.edge(i).count() <= s)
            throw DomainError("edge " + std::to_string(i) + " has size " +
                              std::to_string(f.edge(i).count()) +
                              " <= s = " + std::to_string(s));
}

// Exhaustive DFS over vertex assignments. Branch values are the parts
// X1..Xr (symmetry-broken: a vertex may open part j only if parts 1..j-1 are
// already in use) and X0 last, so low-|X0| incumbents appear early.
class DefectSearch {
public:
    DefectSearch(const Hypergraph& f, int r, int s, bool equitable)
        : f_(f), r_(r), equitable_(equitable), order_(tightness_order(f)),
          assignment_(static_cast<std::size_t>(f.n_vertices()), 0),
          part_size_(static_cast<std::size_t>(r), 0),
          incident_(static_cast<std::size_t>(f.n_vertices())) {
        const int m = f.n_edges();
        cap_.reserve(static_cast<std::size_t>(m));
        for (int e = 0; e < m; ++e) {
            cap_.push_back(f.edge(e).count() - s - 1);
            for (int v : f.edge(e).members())
                incident_[static_cast<std::size_t>(v)].push_back(e);
        }
        count_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(r), 0);
    }

    DefectResult run(std::optional<std::uint64_t> budget) {
        budget_ = budget;
        // X0 = V is always feasible, so a certificate exists from the start.
        incumbent_value_ = f_.n_vertices();
        incumbent_.assign(static_cast<std::size_t>(f_.n_vertices()), 0);
        dfs(0, 0, 0);

        DefectResult result;
        result.nodes_explored = nodes_;
        result.certificate = make_certificate(incumbent_);
        result.upper = incumbent_value_;
        if (budget_hit_) {
            result.status = SolveStatus::inconclusive;
            result.lower = 0;
        } else {
            result.status = SolveStatus::exact;
            result.lower = incumbent_value_;
        }
        return result;
    }

private:
    void dfs(std::size_t depth, int x0_size, int parts_used) {
        if (budget_hit_)
            return;
        if (x0_size >= incumbent_value_)
            return; // cannot improve: |X0| only grows along a branch
        if (depth == order_.size()) {
            incumbent_value_ = x0_size;
            incumbent_ = assignment_;
            return;
        }
        int v = order_[depth];
        int open_limit = std::min(parts_used + 1, r_);
        for (int part = 1; part <= open_limit; ++part) {
            ++nodes_;
            if (budget_ && nodes_ > *budget_) {
                budget_hit_ = true;
                return;
            }
            if (!part_admits(v, part))
                continue;
            if (equitable_ && !balance_completable(part, depth))
                continue;
            place(v, part);
            dfs(depth + 1, x0_size, std::max(parts_used, part));
            unplace(v, part);
            if (budget_hit_)
                return;
        }
        // X0 last; the x0_size guard at node entry bounds it. Sending v to X0
        // also consumes a vertex the parts may still need for balance.
        ++nodes_;
        if (budget_ && nodes_ > *budget_) {
            budget_hit_ = true;
            return;
        }
        if (equitable_ && !balance_completable(0, depth))
            return;
        assignment_[static_cast<std::size_t>(v)] = 0;
        dfs(depth + 1, x0_size + 1, parts_used);
    }

    // A part admits v iff no incident edge would exceed its cap |e| - s - 1.
    bool part_admits(int v, int part) const {
        for (int e : incident_[static_cast<std::size_t>(v)])
            if (count_[idx(e, part)] + 1 > cap_[static_cast<std::size_t>(e)])
                return false;
        return true;
    }

    // Exact completability test: after placing one more vertex into `part`
    // (part == 0 means into X0), every part must still be able to climb
    // within one of the maximum using only the vertices left unassigned.
    bool balance_completable(int part, std::size_t depth) const {
        int remaining = static_cast<int>(order_.size() - depth) - 1;
        int max_size = 0;
        for (int j = 0; j < r_; ++j) {
            int sz = part_size_[static_cast<std::size_t>(j)] + (j + 1 == part ? 1 : 0);
            max_size = std::max(max_size, sz);
        }
        int deficit = 0;
        for (int j = 0; j < r_; ++j) {
            int sz = part_size_[static_cast<std::size_t>(j)] + (j + 1 == part ? 1 : 0);
            deficit += std::max(0, (max_size - 1) - sz);
        }
        return deficit <= remaining;
    }

    void place(int v, int part) {
        assignment_[static_cast<std::size_t>(v)] = part;
        ++part_size_[static_cast<std::size_t>(part - 1)];
        for (int e : incident_[static_cast<std::size_t>(v)])
            ++count_[idx(e, part)];
    }

    void unplace(int v, int part) {
        --part_size_[static_cast<std::size_t>(part - 1)];
        for (int e : incident_[static_cast<std::size_t>(v)])
            --count_[idx(e, part)];
    }

    std::size_t idx(int e, int part) const {
        return static_cast<std::size_t>(e) * static_cast<std::size_t>(r_) +
               static_cast<std::size_t>(part - 1);
    }

    DefectCertificate make_certificate(const std::vector<int>& assignment) const {
        DefectCertificate cert;
        const int n = f_.n_vertices();
        cert.x0 = VertexSet(n);
        cert.parts.assign(static_cast<std::size_t>(r_), VertexSet(n));
        for (int v = 0; v < n; ++v) {
            int a = assignment[static_cast<std::size_t>(v)];
            if (a == 0)
                cert.x0.add(v);
            else
                cert.parts[static_cast<std::size_t>(a - 1)].add(v);
        }
        cert.equitable = equitable_;
        return cert;
    }

    const Hypergraph& f_;
    int r_;
    bool equitable_;
    std::vector<int> order_;
    std::vector<int> assignment_;
    std::vector<int> part_size_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> cap_;
    std::vector<int> count_; // |e ∩ Xi| counters, edge-major
    std::vector<int> incumbent_;
    int incumbent_value_ = 0;
    std::uint64_t nodes_ = 0;
    std::optional<std::uint64_t> budget_;
    bool budget_hit_ = false;
};

} // namespace

bool verify_certificate(const Hypergraph& f, int s, const DefectCertificate& cert) {
    if (s < 0)
        throw UsageError("threshold s must be nonnegative");
    const int n = f.n_vertices();
    if (cert.x0.width() != n)
        throw UsageError("certificate X0 is over a different universe");
    VertexSet seen = cert.x0;
    int total = cert.x0.count();
    for (const auto& part : cert.parts) {
        if (part.width() != n)
            throw UsageError("certificate part is over a different universe");
        if (seen.intersects(part))
            return false; // overlapping sets
        seen = seen | part;
        total += part.count();
    }
    if (total != n)
        return false; // not a partition of V

    for (const auto& e : f.edges())
        for (const auto& part : cert.parts)
            if (subseteq_s(e, part, s))
                return false;

    if (cert.equitable) {
        for (std::size_t i = 0; i < cert.parts.size(); ++i)
            for (std::size_t j = i + 1; j < cert.parts.size(); ++j)
                if (std::abs(cert.parts[i].count() - cert.parts[j].count()) > 1)
                    return false;
    }
    return true;
}

DefectResult cd_exact(const Hypergraph& f, int r, int s, std::optional<std::uint64_t> budget) {
    check_preconditions(f, r, s);
    DefectSearch search(f, r, s, /*equitable=*/false);
    return search.run(budget);
}

DefectResult ecd_exact(const Hypergraph& f, int r, int s, std::optional<std::uint64_t> budget) {
    check_preconditions(f, r, s);
    DefectSearch search(f, r, s, /*equitable=*/true);
    return search.run(budget);
}

nlohmann::ordered_json certificate_json(const DefectCertificate& cert, int threshold_s) {
    nlohmann::ordered_json j;
    j["value"] = cert.x0.count();
    nlohmann::ordered_json x0 = nlohmann::ordered_json::array();
    for (int v : cert.x0.members())
        x0.push_back(v + 1);
    j["x0"] = std::move(x0);
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const auto& part : cert.parts) {
        nlohmann::ordered_json p = nlohmann::ordered_json::array();
        for (int v : part.members())
            p.push_back(v + 1);
        parts.push_back(std::move(p));
    }
    j["parts"] = std::move(parts);
    j["equitable"] = cert.equitable;
    j["threshold_s"] = threshold_s;
    j["r"] = cert.parts.size();
    return j;
}

} // namespace hgdef
