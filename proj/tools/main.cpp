// hgdef: exact Kneser-hypergraph chromatic numbers and colorability defects.
//
// Single binary with subcommands; `--json` switches any verification or
// solver subcommand from the human table to one JSON object on stdout.
// Exit codes: 0 = success / all claims pass, 1 = error or any claim fails,
// 2 = a search hit its node budget and the result is inconclusive.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgdef/chromatic.hpp"
#include "hgdef/constructions.hpp"
#include "hgdef/defect.hpp"
#include "hgdef/errors.hpp"
#include "hgdef/harness.hpp"
#include "hgdef/hypergraph.hpp"
#include "hgdef/io.hpp"
#include "hgdef/kneser.hpp"

namespace {

void emit_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw hgdef::UsageError("cannot open output file: " + path);
    }
    out << text;
}

void print_json(const nlohmann::ordered_json& value) {
    std::cout << value.dump(2) << '\n';
}

std::string join_members(const hgdef::VertexSet& set) {
    std::string out;
    for (int v : set.members()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(v + 1);
    }
    return out.empty() ? "-" : out;
}

int emit_chi(const hgdef::ChiResult& result, bool json) {
    const bool exact = result.status == hgdef::SolveStatus::exact;
    if (json) {
        nlohmann::ordered_json obj;
        obj["status"] = exact ? "exact" : "inconclusive";
        if (exact) {
            obj["chi"] = result.upper;
            nlohmann::ordered_json colors = nlohmann::ordered_json::array();
            for (int c : result.witness.colors) {
                colors.push_back(c + 1);
            }
            obj["colors"] = std::move(colors);
            obj["palette_size"] = result.witness.palette_size;
        } else {
            obj["lower"] = result.lower;
            obj["upper"] = result.upper;
        }
        obj["nodes_explored"] = result.nodes_explored;
        print_json(obj);
    } else if (exact) {
        std::cout << "chi = " << result.upper << '\n';
        std::string colors;
        for (int c : result.witness.colors) {
            if (!colors.empty()) {
                colors += ' ';
            }
            colors += std::to_string(c + 1);
        }
        std::cout << "coloring = " << (colors.empty() ? "-" : colors) << '\n'
                  << "nodes = " << result.nodes_explored << '\n';
    } else {
        std::cout << "status = inconclusive (budget exhausted)\n"
                  << "bounds = [" << result.lower << ", " << result.upper << "]\n"
                  << "nodes = " << result.nodes_explored << '\n';
    }
    return exact ? 0 : 2;
}

int emit_defect(const char* name, const hgdef::DefectResult& result, int threshold_s,
                bool json) {
    const bool exact = result.status == hgdef::SolveStatus::exact;
    if (json) {
        if (exact) {
            print_json(hgdef::certificate_json(result.certificate, threshold_s));
        } else {
            nlohmann::ordered_json obj;
            obj["status"] = "inconclusive";
            obj["lower"] = result.lower;
            obj["upper"] = result.upper;
            obj["incumbent"] = hgdef::certificate_json(result.certificate, threshold_s);
            print_json(obj);
        }
    } else {
        if (exact) {
            std::cout << name << " = " << result.upper << '\n';
        } else {
            std::cout << "status = inconclusive (budget exhausted)\n"
                      << "bounds = [" << result.lower << ", " << result.upper << "]\n";
        }
        std::cout << "X0 = " << join_members(result.certificate.x0) << '\n';
        for (std::size_t i = 0; i < result.certificate.parts.size(); ++i) {
            std::cout << 'X' << i + 1 << " = "
                      << join_members(result.certificate.parts[i]) << '\n';
        }
        std::cout << "equitable = " << (result.certificate.equitable ? "true" : "false")
                  << '\n'
                  << "nodes = " << result.nodes_explored << '\n';
    }
    return exact ? 0 : 2;
}

int emit_report(const hgdef::VerificationReport& report, bool json) {
    if (json) {
        print_json(hgdef::report_json(report));
    } else {
        std::cout << hgdef::render_table(report);
    }
    return hgdef::report_exit_code(report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic numbers and colorability defects of Kneser hypergraphs"};
    app.require_subcommand(1);
    int exit_code = 0;

    // gen -------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a hypergraph family instance");
    gen->require_subcommand(1);

    struct {
        int n = 0, k = 0;
        std::string out;
    } gc;
    auto* gen_complete = gen->add_subcommand("complete", "complete k-uniform hypergraph");
    gen_complete->add_option("--n", gc.n, "number of vertices")->required();
    gen_complete->add_option("--k", gc.k, "edge size")->required();
    gen_complete->add_option("-o,--output", gc.out, "output file (default stdout)");
    gen_complete->callback([&] {
        emit_text(hgdef::emit_hypergraph(hgdef::complete_uniform(gc.n, gc.k)), gc.out);
    });

    hgdef::Thm2Params g2;
    std::string g2_out;
    auto* gen_thm2 = gen->add_subcommand("thm2", "tailed-complete family");
    gen_thm2->add_option("--l", g2.l, "target chromatic number (>= 2)")->required();
    gen_thm2->add_option("--s", g2.s, "tail size (>= 1)")->required();
    gen_thm2->add_option("--n", g2.n, "block size (>= 1)")->required();
    gen_thm2->add_option("-o,--output", g2_out, "output file (default stdout)");
    gen_thm2->callback([&] { emit_text(hgdef::emit_hypergraph(hgdef::thm2_family(g2)), g2_out); });

    hgdef::Thm3Params g3;
    std::string g3_out;
    auto* gen_thm3 = gen->add_subcommand("thm3", "disjoint-blocks family");
    gen_thm3->add_option("--k", g3.k, "number of blocks (>= 1)")->required();
    gen_thm3->add_option("--s", g3.s, "block size minus one (even, >= 2)")->required();
    gen_thm3->add_option("-o,--output", g3_out, "output file (default stdout)");
    gen_thm3->callback([&] { emit_text(hgdef::emit_hypergraph(hgdef::thm3_family(g3)), g3_out); });

    // kneser ----------------------------------------------------------------
    struct {
        int r = 2, s = 0;
        std::string in, out;
    } kn;
    auto* kneser = app.add_subcommand("kneser", "build the generalized Kneser hypergraph");
    kneser->add_option("--r", kn.r, "tuple size (>= 2)")->required();
    kneser->add_option("--s", kn.s, "intersection threshold (>= 0)")->required();
    kneser->add_option("-i,--input", kn.in, "input hypergraph file")->required();
    kneser->add_option("-o,--output", kn.out, "output file (default stdout)");
    kneser->callback([&] {
        const hgdef::Hypergraph base = hgdef::read_hypergraph_file(kn.in);
        emit_text(hgdef::emit_hypergraph(
                      hgdef::build_kneser(base, hgdef::KneserSpec{kn.r, kn.s})),
                  kn.out);
    });

    // chi ---------------------------------------------------------------
    struct {
        std::string in;
        std::uint64_t budget = 0;
        bool json = false;
    } ch;
    auto* chi = app.add_subcommand("chi", "exact weak chromatic number");
    chi->add_option("-i,--input", ch.in, "input hypergraph file")->required();
    auto* chi_budget = chi->add_option("--budget", ch.budget, "search node budget");
    chi->add_flag("--json", ch.json, "emit JSON instead of text");
    chi->callback([&] {
        const hgdef::Hypergraph h = hgdef::read_hypergraph_file(ch.in);
        const auto budget = chi_budget->count()
                                ? std::optional<std::uint64_t>(ch.budget)
                                : std::nullopt;
        exit_code = emit_chi(hgdef::chromatic_number_exact(h, budget), ch.json);
    });

    // cd / ecd ----------------------------------------------------------
    struct DefectArgs {
        int r = 2, s = 0;
        std::string in;
        std::uint64_t budget = 0;
        bool json = false;
    };
    DefectArgs dc, de;
    for (auto [name, help, args] :
         {std::tuple{"cd", "exact colorability defect", &dc},
          std::tuple{"ecd", "exact equitable colorability defect", &de}}) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--r", args->r, "number of parts (>= 2)")->required();
        sub->add_option("--s", args->s, "intersection threshold (>= 0)")->required();
        sub->add_option("-i,--input", args->in, "input hypergraph file")->required();
        auto* budget_opt = sub->add_option("--budget", args->budget, "search node budget");
        sub->add_flag("--json", args->json, "emit JSON instead of text");
        const bool equitable = name[0] == 'e';
        sub->callback([&, args, budget_opt, equitable] {
            const hgdef::Hypergraph f = hgdef::read_hypergraph_file(args->in);
            const auto budget = budget_opt->count()
                                    ? std::optional<std::uint64_t>(args->budget)
                                    : std::nullopt;
            const hgdef::DefectResult result =
                equitable ? hgdef::ecd_exact(f, args->r, args->s, budget)
                          : hgdef::cd_exact(f, args->r, args->s, budget);
            exit_code = emit_defect(equitable ? "ecd" : "cd", result, args->s, args->json);
        });
    }

    // verify --------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check bounds and reproduce family claims");
    verify->require_subcommand(1);

    struct {
        int r = 2, s = 0;
        std::string in;
        std::uint64_t budget = 0;
        bool json = false;
    } va;
    auto* verify_aj = verify->add_subcommand("aj", "defect lower bound on chi");
    verify_aj->add_option("--r", va.r, "tuple size (>= 2)")->required();
    verify_aj->add_option("--s", va.s, "intersection threshold (>= 0)")->required();
    verify_aj->add_option("-i,--input", va.in, "input hypergraph file")->required();
    auto* va_budget = verify_aj->add_option("--budget", va.budget, "search node budget");
    verify_aj->add_flag("--json", va.json, "emit JSON instead of text");
    verify_aj->callback([&] {
        const hgdef::Hypergraph f = hgdef::read_hypergraph_file(va.in);
        const auto budget =
            va_budget->count() ? std::optional<std::uint64_t>(va.budget) : std::nullopt;
        hgdef::VerificationReport report;
        report.claims.push_back(hgdef::check_aj_bound(f, va.r, va.s, budget));
        exit_code = emit_report(report, va.json);
    });

    struct {
        int r = 2, s = 0, x = 0;
        std::string in;
        std::uint64_t budget = 0;
        bool json = false;
    } vs;
    auto* verify_str =
        verify->add_subcommand("strengthened", "bound with x in place of floor(s/2)");
    verify_str->add_option("--r", vs.r, "tuple size (>= 2)")->required();
    verify_str->add_option("--s", vs.s, "intersection threshold (>= 0)")->required();
    verify_str->add_option("--x", vs.x, "defect threshold, floor(s/2) <= x <= s")->required();
    verify_str->add_option("-i,--input", vs.in, "input hypergraph file")->required();
    auto* vs_budget = verify_str->add_option("--budget", vs.budget, "search node budget");
    verify_str->add_flag("--json", vs.json, "emit JSON instead of text");
    verify_str->callback([&] {
        const hgdef::Hypergraph f = hgdef::read_hypergraph_file(vs.in);
        const auto budget =
            vs_budget->count() ? std::optional<std::uint64_t>(vs.budget) : std::nullopt;
        hgdef::VerificationReport report;
        report.claims.push_back(
            hgdef::check_strengthened_bound(f, vs.r, vs.s, vs.x, budget));
        exit_code = emit_report(report, vs.json);
    });

    struct {
        std::string grid = "small";
        std::uint64_t budget = 0;
        bool json = false;
    } vp;
    auto* verify_paper = verify->add_subcommand("paper", "re-verify the bundled family claims");
    verify_paper->add_option("--grid", vp.grid, "grid size")
        ->check(CLI::IsMember({"small", "full"}));
    auto* vp_budget = verify_paper->add_option("--budget", vp.budget, "per-claim node budget");
    verify_paper->add_flag("--json", vp.json, "emit JSON instead of text");
    verify_paper->callback([&] {
        const auto budget =
            vp_budget->count() ? std::optional<std::uint64_t>(vp.budget) : std::nullopt;
        const auto grid =
            vp.grid == "full" ? hgdef::GridKind::full : hgdef::GridKind::small;
        exit_code = emit_report(hgdef::reproduce_paper(grid, budget), vp.json);
    });

    // fuzz ------------------------------------------------------------------
    hgdef::FuzzConfig fz;
    bool fz_json = false;
    std::uint64_t fz_budget = 0;
    auto* fuzz = app.add_subcommand("fuzz", "random-instance property sweep");
    fuzz->add_option("--seed", fz.seed, "RNG seed");
    fuzz->add_option("--trials", fz.trials, "number of random instances");
    fuzz->add_option("--max-n", fz.max_n, "maximum vertex count");
    fuzz->add_option("--max-edges", fz.max_edges, "maximum edge count");
    auto* fz_budget_opt = fuzz->add_option("--budget", fz_budget, "per-claim node budget");
    fuzz->add_flag("--json", fz_json, "emit JSON instead of text");
    fuzz->callback([&] {
        if (fz_budget_opt->count()) {
            fz.budget = fz_budget;
        }
        exit_code = emit_report(hgdef::fuzz_corpus(fz), fz_json);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1; // keep --help at 0, fold CLI11 codes to 1
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
