#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "specdiss/canonical.hpp"
#include "specdiss/dissociation.hpp"
#include "specdiss/errors.hpp"
#include "specdiss/family.hpp"
#include "specdiss/graph.hpp"
#include "specdiss/reduced.hpp"
#include "specdiss/search.hpp"
#include "specdiss/spectral.hpp"
#include "specdiss/verify.hpp"

using namespace specdiss;
using nlohmann::json;

namespace {

Graph graph_from_arg(const std::string& arg) {
    std::string text = arg;
    if (text == "-") {
        if (!std::getline(std::cin, text)) throw invalid_parameter("no input on stdin");
    }
    // family spec syntax first, then graph6
    if (!text.empty() && (text[0] == 'G' || text[0] == 'H') && text.find('(') != std::string::npos)
        return build_family(FamilySpec::parse(text));
    return decode_graph6(text);
}

int print_report(const VerifyReport& rep, const RunConfig& cfg) {
    if (cfg.format == RunConfig::Format::json) {
        std::cout << rep.to_json() << "\n";
    } else {
        for (const auto& line : rep.lines) std::cout << "  " << line << "\n";
        std::cout << (rep.ok ? "PASS " : "FAIL ") << rep.name << "\n";
    }
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for minimum spectral radius at dissociation number n-3"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    app.add_option("--tolerance", cfg.tolerance, "floating tolerance for iterative solves")->capture_default_str();
    app.add_option("--workers", cfg.workers, "worker threads (0 = all cores, env SPECDISS_WORKERS overrides)");
    app.add_option("--format", format, "output format: text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output-dir", cfg.output_dir, "directory for search checkpoints and reports");
    app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();

    // rho
    std::string rho_arg;
    auto* rho_cmd = app.add_subcommand("rho", "spectral radius and Perron vector of a graph6 string or family spec");
    rho_cmd->add_option("graph", rho_arg, "graph6 text, family spec like G(1,0,0;6,5,6), or - for stdin")->required();

    // diss
    std::string diss_arg;
    auto* diss_cmd = app.add_subcommand("diss", "dissociation number and witness set");
    diss_cmd->add_option("graph", diss_arg, "graph6 text or - for stdin")->required();

    // family build
    auto* family_cmd = app.add_subcommand("family", "family graph constructions");
    auto* family_build = family_cmd->add_subcommand("build", "build a family graph");
    std::string family_type = "G";
    FamilySpec build_spec;
    bool family_dot = false;
    family_build->add_option("--type", family_type, "G or H")->check(CLI::IsMember({"G", "H"}));
    family_build->add_option("--a", build_spec.a, "leaves at the first anchor");
    family_build->add_option("--b", build_spec.b, "leaves at the middle anchor");
    family_build->add_option("--c", build_spec.c, "leaves at the last anchor");
    family_build->add_option("--p", build_spec.p, "pendant 2-paths at the first anchor");
    family_build->add_option("--q", build_spec.q, "pendant 2-paths at the middle anchor");
    family_build->add_option("--r", build_spec.r, "pendant 2-paths at the last anchor");
    family_build->add_flag("--dot", family_dot, "also emit DOT");

    // reduced solve
    auto* reduced_cmd = app.add_subcommand("reduced", "reduced 3x3 fixed-point model");
    auto* reduced_solve = reduced_cmd->add_subcommand("solve", "fixed-point rho compared against the direct eigensolve");
    std::string reduced_spec_text;
    reduced_solve->add_option("--spec", reduced_spec_text, "family spec, e.g. G(0,0,0;2,1,2)")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string verify_what;
    int verify_samples = 1000;
    int verify_count = 100;
    verify_cmd->add_option("suite", verify_what, "lemma14 | cor15 | casepolys | remark | smith | monotonicity")
        ->required()
        ->check(CLI::IsMember({"lemma14", "cor15", "casepolys", "remark", "smith", "monotonicity"}));
    verify_cmd->add_option("--samples", verify_samples, "sample points per case polynomial");
    verify_cmd->add_option("--count", verify_count, "random instances for lemma14");

    // search
    auto* search_cmd = app.add_subcommand("search", "isomorph-free extremal searches");
    int search_n = 0, search_psi = -1;
    auto* search_trees = search_cmd->add_subcommand("trees", "free trees of order n");
    auto* search_graphs = search_cmd->add_subcommand("graphs", "all connected graphs of order n (n <= 7)");
    auto* search_family = search_cmd->add_subcommand("family", "parameterized family specs at order n");
    for (auto* sc : {search_trees, search_graphs, search_family}) {
        sc->add_option("--n", search_n, "graph order")->required();
        if (sc != search_family) sc->add_option("--psi", search_psi, "dissociation number (default n-3)");
    }

    // theorem1
    auto* theorem_cmd = app.add_subcommand("theorem1", "expected extremal spec for order n");
    int theorem_n = 0;
    bool theorem_confirm = false;
    theorem_cmd->add_option("--n", theorem_n, "graph order (n >= 12)")->required();
    theorem_cmd->add_flag("--confirm", theorem_confirm, "run the matching search and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.format = format == "json" ? RunConfig::Format::json : RunConfig::Format::text;

    try {
        if (*rho_cmd) {
            Graph g = graph_from_arg(rho_arg);
            Spectrum s = spectral_radius(g, cfg.tolerance > 0 ? std::min(cfg.tolerance, 1e-10) : 1e-12);
            if (cfg.format == RunConfig::Format::json) {
                json j{{"n", g.size()}, {"rho", s.rho}, {"residual", s.residual}, {"iterations", s.iterations},
                       {"perron", s.perron}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::printf("n = %d\nrho = %.12f\nresidual = %.3e (%d iterations)\nperron =", g.size(), s.rho,
                            s.residual, s.iterations);
                for (double v : s.perron) std::printf(" %.6f", v);
                std::printf("\n");
            }
            return 0;
        }
        if (*diss_cmd) {
            Graph g = graph_from_arg(diss_arg);
            auto [d, cert] = diss_exact(g);
            if (cfg.format == RunConfig::Format::json) {
                json j{{"n", g.size()}, {"diss", d}, {"witness", cert.set}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::printf("diss = %d\nwitness =", d);
                for (int v : cert.set) std::printf(" %d", v);
                std::printf("\n");
            }
            return 0;
        }
        if (*family_build) {
            build_spec.family = family_type == "H" ? FamilyType::H : FamilyType::G;
            Graph g = build_family(build_spec);
            if (cfg.format == RunConfig::Format::json) {
                json j{{"spec", build_spec.to_string()}, {"n", g.size()}, {"g6", encode_graph6(g)}};
                if (family_dot) j["dot"] = to_dot(g);
                std::cout << j.dump(2) << "\n";
            } else {
                std::printf("%s\n", encode_graph6(g).c_str());
                if (family_dot) std::printf("%s", to_dot(g).c_str());
            }
            return 0;
        }
        if (*reduced_solve) {
            FamilySpec spec = FamilySpec::parse(reduced_spec_text);
            double reduced_rho = solve_rho_reduced(spec);
            double direct_rho = spectral_radius(build_family(spec), 1e-12).rho;
            if (cfg.format == RunConfig::Format::json) {
                json j{{"spec", spec.to_string()},
                       {"rho_reduced", reduced_rho},
                       {"rho_direct", direct_rho},
                       {"gap", std::abs(reduced_rho - direct_rho)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::printf("rho (fixed point) = %.12f\nrho (direct)      = %.12f\ngap = %.3e\n", reduced_rho,
                            direct_rho, std::abs(reduced_rho - direct_rho));
            }
            return 0;
        }
        if (*verify_cmd) {
            if (verify_what == "lemma14") return print_report(verify_lemma14(verify_count, cfg), cfg);
            if (verify_what == "cor15") return print_report(verify_cor15(), cfg);
            if (verify_what == "casepolys") {
                VerifyReport polys = verify_casepolys(verify_samples);
                VerifyReport chains = verify_ordering_chains();
                int rc = print_report(polys, cfg);
                int rc2 = print_report(chains, cfg);
                return rc != 0 || rc2 != 0 ? 1 : 0;
            }
            if (verify_what == "remark") {
                RemarkReport rep = verify_remark(cfg);
                if (cfg.format == RunConfig::Format::json) {
                    json cases = json::array();
                    for (const auto& c : rep.cases)
                        cases.push_back({{"n", c.n},
                                         {"expected", c.expected_name},
                                         {"expected_g6", c.expected_graph6},
                                         {"winner_g6", c.winner.graph6},
                                         {"rho", c.winner.rho},
                                         {"status", c.pass ? "PASS" : "FAIL"}});
                    std::cout << json{{"name", "remark-small-cases"}, {"cases", cases},
                                      {"status", rep.ok ? "PASS" : "FAIL"}}
                                     .dump(2)
                              << "\n";
                } else {
                    for (const auto& c : rep.cases)
                        std::printf("  %s n=%d expected %s, winner %s (rho = %.9f)\n", c.pass ? "PASS" : "FAIL", c.n,
                                    c.expected_name.c_str(), c.winner.graph6.c_str(), c.winner.rho);
                    std::printf("%s remark-small-cases\n", rep.ok ? "PASS" : "FAIL");
                }
                return rep.ok ? 0 : 1;
            }
            if (verify_what == "smith") return print_report(verify_smith_sweep(cfg), cfg);
            if (verify_what == "monotonicity") return print_report(verify_monotonicity(cfg), cfg);
        }
        if (*search_trees || *search_graphs) {
            int psi = search_psi >= 0 ? search_psi : search_n - 3;
            GraphStream stream =
                *search_trees ? enumerate_free_trees(search_n) : enumerate_labeled_connected(search_n);
            SearchResult res = min_rho_search(std::move(stream), search_n, psi, cfg, cfg.output_dir);
            std::cout << res.to_json() << "\n";
            return 0;
        }
        if (*search_family) {
            FamilySearchResult res = family_search(search_n, cfg);
            json j = json::parse(res.result.to_json());
            j["winner_spec"] = res.winner_spec.to_string();
            j["h_type_won"] = res.h_type_won;
            j["g_candidates"] = res.g_candidates;
            j["h_candidates"] = res.h_candidates;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*theorem_cmd) {
            FamilySpec expected = theorem1_extremal(theorem_n);
            std::string confirmation = "not-run";
            if (theorem_confirm) {
                if (theorem_n <= 22) {
                    PatternReport rep = verify_theorem_pattern(theorem_n, theorem_n, cfg);
                    confirmation = rep.ok ? "confirmed-by-tree-search" : "MISMATCH";
                } else {
                    FamilySearchResult res = family_search(theorem_n, cfg);
                    confirmation = res.winner_spec == expected ? "confirmed-by-family-search" : "MISMATCH";
                }
            }
            if (cfg.format == RunConfig::Format::json) {
                json j{{"n", theorem_n}, {"expected", expected.to_string()}, {"confirmation", confirmation}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::printf("n = %d -> %s (%s)\n", theorem_n, expected.to_string().c_str(), confirmation.c_str());
            }
            return confirmation == "MISMATCH" ? 1 : 0;
        }
    } catch (const parse_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const invalid_parameter& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
