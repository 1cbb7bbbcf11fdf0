#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "p1codes/errors.hpp"
#include "p1codes/scenarios.hpp"

using namespace p1codes;

namespace {

void apply_env_overrides(RunConfig& cfg) {
    auto get = [](const char* name, std::uint64_t& target) {
        if (const char* v = std::getenv(name)) target = std::strtoull(v, nullptr, 10);
    };
    get("P1CODES_CLOSURE_BOUND", cfg.budgets.closure_bound);
    get("P1CODES_ENUM_BUDGET", cfg.budgets.enumeration_budget);
    get("P1CODES_SAMPLE_TRIALS", cfg.budgets.sample_trials);
    get("P1CODES_SN_SCAN_MAX_N", cfg.budgets.sn_scan_max_n);
    get("P1CODES_PGL_SCAN_MAX_Q", cfg.budgets.pgl_scan_max_q);
    get("P1CODES_FIELD_ORDER_BUDGET", cfg.budgets.field_order_budget);
}

Family parse_family(const std::string& name) {
    auto fam = family_from_name(name);
    if (!fam || *fam == Family::Custom)
        throw CLI::ValidationError("--family",
                                   "expected one of cyclic, dihedral, a4, s4, a5, semidirect, psl2, pgl2");
    return *fam;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    json j;
    in >> j;
    return j;
}

FieldPtr field_for_q(std::uint64_t q, const RunConfig& cfg) {
    std::uint64_t p;
    unsigned k;
    if (!prime_power_decompose(q, p, k))
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return Field::make(p, k, cfg.budgets.field_order_budget);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evaluation codes on the projective line with prescribed automorphism groups"};
    app.require_subcommand(1);

    RunConfig cfg;
    apply_env_overrides(cfg);
    bool serial = false;
    app.add_option("--seed", cfg.seed, "seed for all randomized procedures");
    app.add_option("--trials", cfg.budgets.sample_trials, "sampled-certificate trial count");
    app.add_option("--enum-budget", cfg.budgets.enumeration_budget, "codeword enumeration budget");
    app.add_option("--sn-max-n", cfg.budgets.sn_scan_max_n, "largest n for the exhaustive S_n scan");
    app.add_option("--pgl-max-q", cfg.budgets.pgl_scan_max_q, "largest q for the exhaustive PGL scan");
    app.add_option("--closure-bound", cfg.budgets.closure_bound, "group closure element cap");
    app.add_option("--field-budget", cfg.budgets.field_order_budget, "largest constructible field order");
    app.add_flag("--serial", serial, "run the scan kernels on one thread");
    app.add_option("-o,--output", cfg.output_path, "write the JSON report here instead of stdout");

    std::string family_str, example, divisor_str, points_str, artifact_path;
    std::uint64_t q = 0, qmax = 4096;
    FamilyParams params;
    bool force = false;

    CLI::App* orbits = app.add_subcommand("orbits", "group order, special orbits, ramification profile");
    orbits->add_option("--family", family_str)->required();
    orbits->add_option("--q", q)->required();
    orbits->add_option("--delta", params.delta);
    orbits->add_option("--m", params.m);
    orbits->add_option("--t", params.t);
    orbits->add_flag("--force", force, "report what exists even over an insufficient field");

    CLI::App* construct = app.add_subcommand("construct", "build a code artifact");
    construct->add_option("--example", example, "named scenario: rs62, cyc3, ex41, ex42desk");
    construct->add_option("--q", q);
    construct->add_option("--D", divisor_str, "divisor, e.g. \"2*0 + 1*inf\"");
    construct->add_option("--points", points_str, "evaluation points, e.g. \"1,2,3,4,5,6\"");

    CLI::App* analyze = app.add_subcommand("analyze", "parameters, MDS certificate, spectra, duality");
    analyze->add_option("artifact", artifact_path, "code artifact JSON")->required();

    CLI::App* autos = app.add_subcommand("autos", "induced permutation action and automorphism checks");
    autos->add_option("artifact", artifact_path, "code artifact JSON")->required();
    autos->add_option("--family", family_str)->required();
    autos->add_option("--delta", params.delta);
    autos->add_option("--m", params.m);
    autos->add_option("--t", params.t);

    CLI::App* rep = app.add_subcommand("rep", "representation of a group on L(D)");
    rep->add_option("--family", family_str)->required();
    rep->add_option("--q", q)->required();
    rep->add_option("--D", divisor_str)->required();
    rep->add_option("--delta", params.delta);
    rep->add_option("--m", params.m);
    rep->add_option("--t", params.t);

    CLI::App* search = app.add_subcommand("search-field", "smallest sufficient field for a family");
    search->add_option("--family", family_str)->required();
    search->add_option("--qmax", qmax);
    search->add_option("--delta", params.delta);
    search->add_option("--m", params.m);
    search->add_option("--t", params.t);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.exec = serial ? ExecMode::Serial : ExecMode::Parallel;

    try {
        bool all_ok = true;
        json out;
        if (orbits->parsed()) {
            out = orbits_report(parse_family(family_str), params, q, force, cfg, all_ok);
        } else if (construct->parsed()) {
            if (!example.empty()) {
                BuiltCode built = build_named(example, cfg);
                out = construct_report(built, cfg);
            } else {
                if (q == 0 || divisor_str.empty() || points_str.empty())
                    throw std::invalid_argument("construct needs --example or all of --q, --D, --points");
                FieldPtr f = field_for_q(q, cfg);
                Divisor D = parse_divisor(*f, divisor_str);
                auto pts = parse_points(*f, points_str);
                Divisor E(*f);
                for (const auto& p : pts) E.add_term(p, 1);
                LinearCode code = ag_code(D, E);
                out = code_artifact_to_json(code, cfg, "explicit", {});
            }
        } else if (analyze->parsed()) {
            LoadedCode loaded = code_artifact_from_json(load_json(artifact_path));
            out = analyze_code(loaded.code, cfg, all_ok);
        } else if (autos->parsed()) {
            LoadedCode loaded = code_artifact_from_json(load_json(artifact_path));
            GroupOnP1 g = make_family(parse_family(family_str), params, *loaded.field,
                                      cfg.budgets.closure_bound);
            out = autos_report(loaded.code, g, cfg, all_ok);
        } else if (rep->parsed()) {
            FieldPtr f = field_for_q(q, cfg);
            GroupOnP1 g = make_family(parse_family(family_str), params, *f, cfg.budgets.closure_bound);
            Divisor D = parse_divisor(*f, divisor_str);
            out = rep_report(g, D, cfg, all_ok);
        } else if (search->parsed()) {
            out = search_field_report(parse_family(family_str), params, qmax, cfg);
        }
        write_output(out, cfg.output_path);
        return all_ok ? 0 : 1;
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
