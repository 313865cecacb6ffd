// Command-line front end: homology tables, closed-form series, check suites
// and windowed comparisons between any two of table / formula / fixture.
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "koszulkh/dga.hpp"
#include "koszulkh/formulas.hpp"
#include "koszulkh/homology.hpp"
#include "koszulkh/verifier.hpp"

namespace {

using namespace koszulkh;

// "k1=v1,k2=v2,flag" -> map (flag gets value "1")
std::map<std::string, std::string> parse_kv(const std::string& s) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            kv[item] = "1";
        else
            kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

int require_int(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw std::invalid_argument("missing '" + key + "' in source spec");
    return std::stoi(it->second);
}

MultiSeries formula_series(const std::string& name, int n, bool reduced, int q_cutoff) {
    if (name == "pn") return bosonic_full(n, q_cutoff);
    if (name == "pnred") return bosonic_reduced(n, q_cutoff);
    if (name == "ln") return bosonic_lower(n, q_cutoff);
    if (name == "z2") return z2_closed_form(n, q_cutoff);
    if (name == "fermion-n") return fermionic_recursive(n, q_cutoff);
    if (name == "fermion-limit") return fermionic_limit(q_cutoff);
    if (name == "rr-left") return rr_side(RogersSide::left, q_cutoff);
    if (name == "rr-right") return rr_side(RogersSide::right, q_cutoff);
    if (name == "krr-a") return krr_side(RogersSide::left, q_cutoff);
    if (name == "krr-b") return krr_side(RogersSide::right, q_cutoff);
    if (name == "appendix") return appendix_series(n, reduced, q_cutoff);
    if (name == "state-sum") return state_sum(n, q_cutoff);
    if (name == "presentation") return presentation_hilbert(n, q_cutoff);
    throw std::invalid_argument("unknown formula '" + name + "'");
}

// source spec: "table:n=7[,reduced][,coeff=q][,diff=standard]"
//            | "formula:pn,n=4[,reduced]" | "fixture:t79-rational"
MultiSeries source_series(const std::string& spec, int q_max) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("source must look like kind:args, got '" + spec + "'");
    std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
    if (kind == "fixture") return fixture_series(rest);
    auto kv = parse_kv(rest);
    if (kind == "table") {
        GeneratorSpec gs{require_int(kv, "n"), kv.count("reduced") > 0};
        Ring ring = Ring::parse(kv.count("coeff") ? kv.at("coeff") : "q");
        DifferentialSpec d =
            DifferentialSpec::parse(kv.count("diff") ? kv.at("diff") : "standard");
        return betti_series(homology_table(gs, d, ring, q_max));
    }
    if (kind == "formula") {
        auto comma = rest.find(',');
        std::string name = rest.substr(0, comma == std::string::npos ? rest.size() : comma);
        auto args = parse_kv(comma == std::string::npos ? "" : rest.substr(comma + 1));
        int n = args.count("n") ? std::stoi(args.at("n")) : 0;
        return formula_series(name, n, args.count("reduced") > 0, q_max);
    }
    throw std::invalid_argument("unknown source kind '" + kind + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Koszul complex calculator for stable torus-knot homology"};
    app.require_subcommand(1);
    int exit_code = 0;

    // homology
    auto* hom = app.add_subcommand("homology", "compute a bigraded homology table");
    int hom_n = 0, hom_qmax = 0;
    bool hom_reduced = false;
    std::string hom_coeff = "q", hom_diff = "standard", hom_out = "json";
    hom->add_option("--n", hom_n, "strand count")->required();
    hom->add_option("--qmax", hom_qmax, "largest q degree")->required();
    hom->add_option("--coeff", hom_coeff, "coefficients: q | int | zp:<p>");
    hom->add_option("--diff", hom_diff, "differential: standard | generic:<seed>");
    hom->add_flag("--reduced", hom_reduced, "use the reduced complex");
    hom->add_option("--out", hom_out, "output: json | table");
    hom->callback([&] {
        GeneratorSpec spec{hom_n, hom_reduced};
        HomologyTable table = homology_table(spec, DifferentialSpec::parse(hom_diff),
                                             Ring::parse(hom_coeff), hom_qmax);
        if (hom_out == "table")
            print_table(std::cout, table);
        else if (hom_out == "json")
            std::cout << table_to_json(table) << "\n";
        else
            throw std::invalid_argument("unknown output mode '" + hom_out + "'");
    });

    // series
    auto* ser = app.add_subcommand("series", "evaluate a closed-form series");
    int ser_n = 0, ser_qmax = 0;
    bool ser_reduced = false;
    std::string ser_formula;
    ser->add_option("--formula", ser_formula,
                    "pn | pnred | ln | z2 | fermion-n | fermion-limit | rr-left | "
                    "rr-right | krr-a | krr-b | appendix | state-sum | presentation")
        ->required();
    ser->add_option("--qmax", ser_qmax, "q cutoff")->required();
    ser->add_option("--n", ser_n, "strand count (formulas that need one)");
    ser->add_flag("--reduced", ser_reduced, "reduced variant (appendix)");
    ser->callback([&] {
        std::cout << formula_series(ser_formula, ser_n, ser_reduced, ser_qmax).to_json()
                  << "\n";
    });

    // verify
    auto* ver = app.add_subcommand("verify", "run a check suite, one JSON line per check");
    int ver_n = 0, ver_qmax = 0;
    bool ver_slow = false;
    std::string ver_suite;
    ver->add_option("--suite", ver_suite,
                    "mu | relations | lee | potential | torsion[:<p>] | identities | "
                    "reduction | generic-contrast | all")
        ->required();
    ver->add_option("--n", ver_n, "restrict to one strand count");
    ver->add_option("--qmax", ver_qmax, "override the q cutoff where applicable");
    ver->add_flag("--slow", ver_slow, "include the slow checks");
    ver->callback([&] {
        auto reports = run_suite(ver_suite, ver_n, ver_qmax, ver_slow);
        for (const auto& rep : reports) {
            std::cout << rep.to_json_line() << "\n";
            if (!rep.pass) exit_code = 1;
        }
    });

    // compare
    auto* cmp = app.add_subcommand("compare", "compare two series sources in a window");
    int cmp_qmax = 0, cmp_tmax = -1;
    std::string cmp_left, cmp_right;
    cmp->add_option("--left", cmp_left, "table:... | formula:... | fixture:<name>")
        ->required();
    cmp->add_option("--right", cmp_right, "table:... | formula:... | fixture:<name>")
        ->required();
    cmp->add_option("--qmax", cmp_qmax, "compare terms with q <= qmax")->required();
    cmp->add_option("--tmax", cmp_tmax, "also require t <= tmax");
    cmp->callback([&] {
        MultiSeries lhs = source_series(cmp_left, cmp_qmax);
        MultiSeries rhs = source_series(cmp_right, cmp_qmax);
        CheckReport rep = compare_series_check(cmp_left + " vs " + cmp_right, lhs, rhs,
                                               Window{cmp_qmax, cmp_tmax});
        std::cout << rep.to_json_line() << "\n";
        if (!rep.pass) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
