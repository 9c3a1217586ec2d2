// Acceptance harness: re-checks every advertised guarantee end to end and
// prints exactly one PASS/FAIL line per criterion. The library criteria run
// in-process; the CLI criteria drive the installed binary (argv[1]).

#include <array>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "corpus.hpp"
#include "hgdef/chromatic.hpp"
#include "hgdef/constructions.hpp"
#include "hgdef/defect.hpp"
#include "hgdef/harness.hpp"
#include "hgdef/kneser.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string g_cli; // path to the hgdef binary
fs::path g_tmp;    // scratch directory for generated instance files

RunResult run_command(const std::string& command) {
    std::array<char, 4096> buffer{};
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + command);
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        out.append(buffer.data(), got);
    const int status = pclose(pipe);
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = std::move(out);
    return result;
}

long long binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long value = 1;
    for (int i = 1; i <= k; ++i)
        value = value * (n - k + i) / i;
    return value;
}

// --- criterion 1: cd^r(K_n^k, 0) = n - r(k-1) on the full grid ------------

Outcome criterion1() {
    int points = 0;
    for (int r : {2, 3})
        for (int k : {1, 2, 3})
            for (int n = r * (k - 1) + 1; n <= 7; ++n) {
                const int expected = n - r * (k - 1);
                const auto closed = hgdef::closed_form_cd_complete(n, k, r);
                const auto result = hgdef::cd_exact(hgdef::complete_uniform(n, k), r, 0);
                std::ostringstream at;
                at << "r=" << r << " k=" << k << " n=" << n;
                if (!closed.has_value() || *closed != expected)
                    return {false, "closed form wrong at " + at.str()};
                if (result.status != hgdef::SolveStatus::exact)
                    return {false, "cd not exact at " + at.str()};
                if (result.value() != expected)
                    return {false, "cd = " + std::to_string(result.value()) + " != " +
                                       std::to_string(expected) + " at " + at.str()};
                ++points;
            }
    return {true, std::to_string(points) + " grid points equal n - r(k-1)"};
}

// --- criterion 2: chi(KG^r(K_n^k, 0)) matches the ceiling formula ----------

Outcome criterion2() {
    int points = 0;
    for (int r : {2, 3})
        for (int k : {1, 2, 3})
            for (int n = r * (k - 1) + 1; n <= 7; ++n) {
                if (binom(n, k) > 35)
                    continue;
                const auto expected = hgdef::closed_form_chi_complete(n, k, r);
                const auto kg =
                    hgdef::build_kneser(hgdef::complete_uniform(n, k), {r, 0});
                const auto result = hgdef::chromatic_number_exact(kg);
                std::ostringstream at;
                at << "r=" << r << " k=" << k << " n=" << n;
                if (!expected.has_value())
                    return {false, "closed form unexpectedly absent at " + at.str()};
                if (result.status != hgdef::SolveStatus::exact)
                    return {false, "chi not exact at " + at.str()};
                if (result.value() != *expected)
                    return {false, "chi = " + std::to_string(result.value()) + " != " +
                                       std::to_string(*expected) + " at " + at.str()};
                ++points;
            }
    return {true, std::to_string(points) + " grid points equal ceil((n-r(k-1))/(r-1))"};
}

// --- criterion 3: tailed-complete family has chi = l, ecd = l+s ------------

Outcome criterion3() {
    int points = 0;
    for (int l : {2, 3})
        for (int s : {1, 2})
            for (int n : {2, 3}) {
                const auto f = hgdef::thm2_family({l, s, n});
                std::ostringstream at;
                at << "l=" << l << " s=" << s << " n=" << n;
                const auto chi =
                    hgdef::chromatic_number_exact(hgdef::build_kneser(f, {2, s}));
                if (chi.status != hgdef::SolveStatus::exact || chi.value() != l)
                    return {false, "chi != l at " + at.str()};
                const auto ecd = hgdef::ecd_exact(f, 2, s);
                if (ecd.status != hgdef::SolveStatus::exact || ecd.value() != l + s)
                    return {false, "ecd != l+s at " + at.str()};
                ++points;
            }
    return {true, std::to_string(points) + " grid points have chi = l and ecd = l+s"};
}

// --- criterion 4: the explicit equitable partition witnesses ecd <= l+s ----

Outcome criterion4() {
    int points = 0;
    for (int l : {2, 3})
        for (int s : {1, 2})
            for (int n : {2, 3}) {
                const hgdef::Thm2Params p{l, s, n};
                const auto f = hgdef::thm2_family(p);
                const auto cert = hgdef::thm2_upper_certificate(p);
                std::ostringstream at;
                at << "l=" << l << " s=" << s << " n=" << n;
                if (!cert.equitable || !hgdef::verify_certificate(f, s, cert))
                    return {false, "certificate rejected at " + at.str()};
                if (cert.x0.count() != l + s)
                    return {false, "|Y0| = " + std::to_string(cert.x0.count()) + " != l+s at " +
                                       at.str()};
                ++points;
            }
    return {true, std::to_string(points) + " certificates valid with |Y0| = l+s"};
}

// --- criterion 5: disjoint-blocks family: cd = ecd = k(2l-s+1), chi = k ----

Outcome criterion5() {
    int points = 0;
    for (int k : {1, 2, 3})
        for (int s : {2, 4}) {
            const auto f = hgdef::thm3_family({k, s});
            const auto chi = hgdef::chromatic_number_exact(hgdef::build_kneser(f, {2, s}));
            if (chi.status != hgdef::SolveStatus::exact || chi.value() != k)
                return {false, "chi != k at k=" + std::to_string(k) + " s=" + std::to_string(s)};
            for (int l = s / 2 + 1; l <= s; ++l) {
                const int expected = k * (2 * l - s + 1);
                const auto cd = hgdef::cd_exact(f, 2, l);
                const auto ecd = hgdef::ecd_exact(f, 2, l);
                std::ostringstream at;
                at << "k=" << k << " s=" << s << " l=" << l;
                if (cd.status != hgdef::SolveStatus::exact ||
                    ecd.status != hgdef::SolveStatus::exact)
                    return {false, "defect not exact at " + at.str()};
                if (cd.value() != expected || ecd.value() != expected)
                    return {false, "cd/ecd = " + std::to_string(cd.value()) + "/" +
                                       std::to_string(ecd.value()) + " != " +
                                       std::to_string(expected) + " at " + at.str()};
                ++points;
            }
        }
    return {true, std::to_string(points) + " (k,s,l) points equal k(2l-s+1) with chi = k"};
}

// --- criterion 6: `verify strengthened` reports the violations -------------

Outcome criterion6() {
    int violated = 0;

    const auto check = [&](const std::string& gen_args, const fs::path& file, int s, int x,
                           const char* variant_key) -> std::optional<std::string> {
        const auto gen = run_command('"' + g_cli + "\" gen " + gen_args + " -o " + file.string());
        if (gen.exit_code != 0)
            return "gen " + gen_args + " exited with " + std::to_string(gen.exit_code);
        const std::string cmd = '"' + g_cli + "\" verify strengthened --r 2 --s " +
                                std::to_string(s) + " --x " + std::to_string(x) + " -i " +
                                file.string() + " --json";
        const auto run = run_command(cmd);
        if (run.exit_code != 0)
            return "verify strengthened (" + gen_args + ", x=" + std::to_string(x) +
                   ") exited with " + std::to_string(run.exit_code);
        const auto report = nlohmann::json::parse(run.out);
        if (report["claims"].size() != 1)
            return "expected exactly one claim for " + gen_args;
        const auto& claim = report["claims"][0];
        if (claim["status"] != "pass")
            return "claim not settled for " + gen_args + ": " + claim["status"].dump();
        if (claim["computed"][variant_key] != "VIOLATED")
            return std::string(variant_key) + " = " + claim["computed"][variant_key].dump() +
                   " (expected VIOLATED) for " + gen_args + " x=" + std::to_string(x);
        ++violated;
        return std::nullopt;
    };

    for (int l : {2, 3})
        for (int s : {1, 2})
            for (int n : {2, 3}) {
                std::ostringstream args, name;
                args << "thm2 --l " << l << " --s " << s << " --n " << n;
                name << "thm2_" << l << '_' << s << '_' << n << ".hg";
                if (auto err = check(args.str(), g_tmp / name.str(), s, s, "ecd_variant"))
                    return {false, *err};
            }
    for (int k : {1, 2, 3})
        for (int s : {2, 4})
            for (int x = s / 2 + 1; x <= s; ++x) {
                std::ostringstream args, name;
                args << "thm3 --k " << k << " --s " << s;
                name << "thm3_" << k << '_' << s << ".hg";
                if (auto err = check(args.str(), g_tmp / name.str(), s, x, "cd_variant"))
                    return {false, *err};
            }
    return {true, std::to_string(violated) + " strengthened claims reported VIOLATED, exit 0"};
}

// --- criterion 7: seeded fuzz sweep finds no violations --------------------

Outcome criterion7() {
    const auto run =
        run_command('"' + g_cli + "\" fuzz --seed 42 --trials 200 --max-n 8 --json");
    if (run.exit_code != 0)
        return {false, "fuzz exited with " + std::to_string(run.exit_code)};
    const auto report = nlohmann::json::parse(run.out);
    const auto& summary = report["summary"];
    if (summary["fail"] != 0 || summary["inconclusive"] != 0)
        return {false, "summary = " + summary.dump()};
    if (report["corpus"]["seed"] != 42 || report["corpus"]["trials"] != 200 ||
        report["corpus"]["max_n"] != 8)
        return {false, "corpus metadata = " + report["corpus"].dump()};
    return {true, "all " + summary["total"].dump() + " claims pass over 200 trials"};
}

// --- criterion 8: solvers agree with brute-force oracles -------------------

Outcome criterion8() {
    oracles::Rng rng(2026);
    int checks = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = oracles::draw_instance(rng, 8, 8);
        std::ostringstream at;
        at << "trial " << trial << " (n=" << inst.f.n_vertices() << " m=" << inst.f.n_edges()
           << " r=" << inst.r << " s=" << inst.s << ")";

        const auto kg = hgdef::build_kneser(inst.f, {inst.r, inst.s});
        const auto chi = hgdef::chromatic_number_exact(kg);
        if (chi.status != hgdef::SolveStatus::exact || chi.value() != oracles::chi_brute(kg))
            return {false, "chi oracle mismatch at " + at.str()};

        const auto cd = hgdef::cd_exact(inst.f, inst.r, inst.s);
        const auto ecd = hgdef::ecd_exact(inst.f, inst.r, inst.s);
        if (cd.status != hgdef::SolveStatus::exact ||
            cd.value() != oracles::defect_brute(inst.f, inst.r, inst.s, false))
            return {false, "cd oracle mismatch at " + at.str()};
        if (ecd.status != hgdef::SolveStatus::exact ||
            ecd.value() != oracles::defect_brute(inst.f, inst.r, inst.s, true))
            return {false, "ecd oracle mismatch at " + at.str()};
        checks += 3;
    }
    return {true, std::to_string(checks) + " oracle comparisons agree on 100 instances"};
}

// --- criterion 9: monotone in s, and ecd >= cd everywhere ------------------

Outcome criterion9() {
    oracles::Rng rng(2026); // the criterion-8 corpus
    int comparisons = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = oracles::draw_instance(rng, 8, 8);
        const auto min_size = inst.f.min_edge_size();
        const int s_max = min_size.has_value() ? *min_size - 1 : 2;
        std::ostringstream at;
        at << "trial " << trial << " (n=" << inst.f.n_vertices() << " m=" << inst.f.n_edges()
           << " r=" << inst.r << ")";
        int prev_cd = -1;
        int prev_ecd = -1;
        for (int s = 0; s <= s_max; ++s) {
            const int cd = hgdef::cd_exact(inst.f, inst.r, s).value();
            const int ecd = hgdef::ecd_exact(inst.f, inst.r, s).value();
            if (ecd < cd)
                return {false, "ecd < cd at s=" + std::to_string(s) + ", " + at.str()};
            if (cd < prev_cd || ecd < prev_ecd)
                return {false, "defect dropped from s=" + std::to_string(s - 1) + " to s=" +
                                   std::to_string(s) + ", " + at.str()};
            prev_cd = cd;
            prev_ecd = ecd;
            ++comparisons;
        }
    }
    return {true, std::to_string(comparisons) + " (instance, s) points ordered correctly"};
}

// --- criterion 10: reports are byte-identical modulo the timing field ------

std::string strip_timing(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.find("\"elapsed_ms\"") == std::string::npos)
            out << line << '\n';
    return out.str();
}

Outcome criterion10() {
    const std::string cmd = '"' + g_cli + "\" verify paper --grid small --json";
    const auto first = run_command(cmd);
    const auto second = run_command(cmd);
    if (first.exit_code != 0 || second.exit_code != 0)
        return {false, "exit codes " + std::to_string(first.exit_code) + " and " +
                           std::to_string(second.exit_code)};
    if (strip_timing(first.out) != strip_timing(second.out))
        return {false, "reports differ beyond the timing field"};
    const auto report = nlohmann::json::parse(first.out);
    if (report["summary"]["fail"] != 0 || report["summary"]["inconclusive"] != 0)
        return {false, "small grid not clean: " + report["summary"].dump()};
    return {true, "two runs byte-identical after stripping elapsed_ms"};
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance_tests <path-to-hgdef-cli>\n";
        return 2;
    }
    g_cli = argv[1];
    g_tmp = fs::temp_directory_path() / "hgdef_acceptance";
    fs::create_directories(g_tmp);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"closed-form cd on complete hypergraphs", criterion1},
        {"closed-form chi on complete hypergraphs", criterion2},
        {"tailed-complete family values", criterion3},
        {"tailed-complete proof certificate", criterion4},
        {"disjoint-blocks family values", criterion5},
        {"strengthened-bound counterexamples via CLI", criterion6},
        {"defect bound fuzz sweep", criterion7},
        {"brute-force oracle equivalence", criterion8},
        {"monotonicity and ecd >= cd", criterion9},
        {"report determinism", criterion10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << i + 1 << ": " << (outcome.pass ? "PASS" : "FAIL") << " - "
                  << criteria[i].first << ": " << outcome.detail << std::endl;
        if (!outcome.pass)
            ++failures;
    }
    if (failures != 0)
        std::cout << failures << " criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
