#include "hgdef/constructions.hpp"

#include <string>
#include <vector>

namespace hgdef {

namespace {

// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        current[static_cast<std::size_t>(i)] = i;
    if (k == 0)
        return out;
    while (true) {
        out.push_back(current);
        int i = k - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++current[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

void check_thm2(const Thm2Params& p) {
    if (p.l < 2)
        throw DomainError("tailed-complete family requires l >= 2, got " + std::to_string(p.l));
    if (p.s < 1)
        throw DomainError("tailed-complete family requires s >= 1, got " + std::to_string(p.s));
    if (p.n < 1)
        throw DomainError("tailed-complete family requires n >= 1, got " + std::to_string(p.n));
}

void check_thm3(const Thm3Params& p) {
    if (p.k < 1)
        throw DomainError("disjoint-blocks family requires k >= 1, got " + std::to_string(p.k));
    if (p.s < 2 || p.s % 2 != 0)
        throw DomainError("disjoint-blocks family requires an even s >= 2, got " +
                          std::to_string(p.s));
}

void check_thm3_threshold(const Thm3Params& p, int l) {
    if (l < p.s / 2 + 1 || l > p.s)
        throw DomainError("threshold l = " + std::to_string(l) +
                          " is outside the claimed range " + std::to_string(p.s / 2 + 1) +
                          ".." + std::to_string(p.s));
}

} // namespace

Hypergraph complete_uniform(int n, int k) {
    if (n < 1)
        throw DomainError("complete hypergraph requires n >= 1, got " + std::to_string(n));
    if (k < 1 || k > n)
        throw DomainError("complete hypergraph requires 1 <= k <= n, got k = " +
                          std::to_string(k) + ", n = " + std::to_string(n));
    std::vector<VertexSet> edges;
    for (const auto& subset : k_subsets(n, k))
        edges.push_back(VertexSet::of(n, subset));
    return Hypergraph(n, std::move(edges));
}

Hypergraph thm2_family(const Thm2Params& p) {
    check_thm2(p);
    const int k = p.l - 2;
    const int base = 2 * p.n + k;
    const int n_vertices = base + p.s;
    // Tail vertices sit after the base so base labels keep their combinatorial
    // meaning.
    VertexSet tail(n_vertices);
    for (int t = 0; t < p.s; ++t)
        tail.add(base + t);
    std::vector<VertexSet> edges;
    for (const auto& subset : k_subsets(base, p.n)) {
        VertexSet e(n_vertices);
        for (int v : subset)
            e.add(v);
        edges.push_back(e | tail);
    }
    return Hypergraph(n_vertices, std::move(edges));
}

Thm2Predicted thm2_predicted(const Thm2Params& p) {
    check_thm2(p);
    return {p.l, p.l + p.s};
}

DefectCertificate thm2_upper_certificate(const Thm2Params& p) {
    check_thm2(p);
    const int k = p.l - 2;
    const int base = 2 * p.n + k;
    const int n_vertices = base + p.s;
    DefectCertificate cert;
    cert.equitable = true;
    VertexSet y1(n_vertices), y2(n_vertices), y0(n_vertices);
    for (int v = 0; v < p.n - 1; ++v)
        y1.add(v);
    for (int v = p.n - 1; v < 2 * p.n - 2; ++v)
        y2.add(v);
    for (int v = 2 * p.n - 2; v < n_vertices; ++v)
        y0.add(v);
    cert.x0 = y0;
    cert.parts = {y1, y2};
    return cert;
}

Hypergraph thm3_family(const Thm3Params& p) {
    check_thm3(p);
    const int block = p.s + 1;
    const int n_vertices = p.k * block;
    std::vector<VertexSet> edges;
    for (int i = 0; i < p.k; ++i) {
        VertexSet e(n_vertices);
        for (int v = i * block; v < (i + 1) * block; ++v)
            e.add(v);
        edges.push_back(e);
    }
    return Hypergraph(n_vertices, std::move(edges));
}

Thm3Predicted thm3_predicted(const Thm3Params& p, int l) {
    check_thm3(p);
    check_thm3_threshold(p, l);
    int defect = p.k * (2 * l - p.s + 1);
    return {p.k, defect, defect};
}

DefectCertificate thm3_upper_certificate(const Thm3Params& p, int l) {
    check_thm3(p);
    check_thm3_threshold(p, l);
    const int block = p.s + 1;
    const int n_vertices = p.k * block;
    const int take = p.s - l; // per block, this many vertices into each of Y1, Y2
    DefectCertificate cert;
    cert.equitable = true;
    VertexSet y1(n_vertices), y2(n_vertices), y0(n_vertices);
    for (int i = 0; i < p.k; ++i) {
        int start = i * block;
        for (int t = 0; t < take; ++t)
            y1.add(start + t);
        for (int t = take; t < 2 * take; ++t)
            y2.add(start + t);
        for (int t = 2 * take; t < block; ++t)
            y0.add(start + t);
    }
    cert.x0 = y0;
    cert.parts = {y1, y2};
    return cert;
}

std::optional<int> closed_form_chi_complete(int n, int k, int r) {
    if (n < r * (k - 1) + 1)
        return std::nullopt;
    int numerator = n - r * (k - 1);
    return (numerator + r - 2) / (r - 1); // ceil for positive numerator
}

std::optional<int> closed_form_cd_complete(int n, int k, int r) {
    if (n < r * (k - 1) + 1)
        return std::nullopt;
    return n - r * (k - 1);
}

} // namespace hgdef
