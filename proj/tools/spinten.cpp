#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spinten/verify.hpp"

namespace {

spinten::Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string cleaned;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') cleaned += c;
    std::stringstream ss(cleaned);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return spinten::Partition(parts);
}

void emit_report(const spinten::Report& report, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << report.json_text();
        std::cerr << report.tsv();
    } else {
        std::ofstream os(out_file);
        os << report.json_text();
        std::ofstream ts(out_file + ".tsv");
        ts << report.tsv();
        std::cerr << report.tsv();
    }
    std::cerr << "suite " << report.suite << ": "
              << (report.all_pass() ? "PASS" : "FAIL") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic-2 representation toolkit for symmetric and "
                 "alternating groups"};
    app.require_subcommand(1);

    spinten::VerifyOptions opt;
    std::string out_file;
    app.add_option("--seed", opt.seed, "word-stream seed (default 1)");
    app.add_option("--threads", opt.threads, "worker threads (default 1)");
    app.add_option("--cache-dir", opt.cache_dir, "representation cache directory");
    app.add_flag("--force", opt.force, "lift resource guards / refresh caches");
    app.add_option("--out", out_file, "write the JSON report here (plus .tsv)");

    // enum
    auto* cmd_enum = app.add_subcommand("enum", "enumerate a partition family");
    std::string family = "all";
    int enum_n = 0;
    cmd_enum->add_option("--family", family,
                         "all|2regular|odd|odd-distinct|benson");
    cmd_enum->add_option("--n", enum_n, "weight")->required();

    // crystal
    auto* cmd_crystal =
        app.add_subcommand("crystal", "signature data of a partition");
    std::string lambda_text;
    int prime = 2;
    cmd_crystal->add_option("--lambda", lambda_text, "partition, e.g. 3,2")
        ->required();
    cmd_crystal->add_option("--p", prime, "prime (default 2)");

    // spinchar
    auto* cmd_spinchar =
        app.add_subcommand("spinchar", "spin character value on an odd class");
    std::string sc_lambda, sc_alpha;
    cmd_spinchar->add_option("--lambda", sc_lambda, "2-regular label")->required();
    cmd_spinchar->add_option("--alpha", sc_alpha, "odd-parts class")->required();

    // rep build
    auto* cmd_rep = app.add_subcommand("rep", "representation utilities");
    auto* cmd_rep_build =
        cmd_rep->add_subcommand("build", "build (and cache) the irreducibles");
    int rep_n = 0;
    cmd_rep_build->add_option("--n", rep_n, "group size")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verification suites");
    int max_n_mt = 9, max_n_scan = 7, max_n_benson = 9, max_n_branching = 8,
        max_n_spinchar = 12;
    std::vector<int> perm_ns = {5, 7, 9};
    auto* v_mt = cmd_verify->add_subcommand(
        "mt", "basic-spin tensor endpoint (n = 5..max-n)");
    v_mt->add_option("--max-n", max_n_mt, "default 9");
    auto* v_scan =
        cmd_verify->add_subcommand("scan", "all-pairs tensor scan (n = 5..max-n)");
    v_scan->add_option("--max-n", max_n_scan, "default 7");
    auto* v_benson =
        cmd_verify->add_subcommand("benson", "splitting criterion vs meataxe");
    v_benson->add_option("--max-n", max_n_benson, "default 9");
    auto* v_branching =
        cmd_verify->add_subcommand("branching", "restriction endo/multiplicities");
    v_branching->add_option("--max-n", max_n_branching, "default 8");
    auto* v_perm =
        cmd_verify->add_subcommand("perm", "permutation module structure");
    v_perm->add_option("--n", perm_ns, "odd n list (default 5 7 9)");
    auto* v_spinchar =
        cmd_verify->add_subcommand("spinchar", "character parity/degree suites");
    v_spinchar->add_option("--max-n", max_n_spinchar, "default 12");

    // filter
    auto* cmd_filter =
        app.add_subcommand("filter", "candidate shapes surviving the filters");
    int filter_n = 0;
    cmd_filter->add_option("--n", filter_n, "group size")->required();

    // Allow the global options (--seed, --out, ...) after a subcommand name.
    for (CLI::App* sub :
         {cmd_enum, cmd_crystal, cmd_spinchar, cmd_rep, cmd_rep_build,
          cmd_verify, v_mt, v_scan, v_benson, v_branching, v_perm, v_spinchar,
          cmd_filter})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_enum) {
            spinten::Family fam;
            if (family == "all")
                fam = spinten::Family::All;
            else if (family == "2regular")
                fam = spinten::Family::TwoRegular;
            else if (family == "odd")
                fam = spinten::Family::OddParts;
            else if (family == "odd-distinct")
                fam = spinten::Family::OddDistinct;
            else if (family == "benson")
                fam = spinten::Family::BensonSplit;
            else
                throw std::invalid_argument("unknown family: " + family);
            for (const auto& p : spinten::enumerate(fam, enum_n))
                std::cout << p.str() << "\n";
            return 0;
        }
        if (*cmd_crystal) {
            spinten::Partition lam = parse_partition(lambda_text);
            for (int i = 0; i < prime; ++i) {
                auto sig = spinten::signature(lam, i, prime);
                std::cout << "residue " << i << ": eps " << sig.eps << ", phi "
                          << sig.phi;
                if (sig.good)
                    std::cout << ", good (" << sig.good->row << ","
                              << sig.good->col << ")";
                if (sig.cogood)
                    std::cout << ", cogood (" << sig.cogood->row << ","
                              << sig.cogood->col << ")";
                std::cout << "\n";
            }
            std::cout << "JS: " << (spinten::is_JS(lam, prime) ? "yes" : "no")
                      << "\n";
            return 0;
        }
        if (*cmd_spinchar) {
            spinten::Partition lam = parse_partition(sc_lambda);
            spinten::Partition alpha = parse_partition(sc_alpha);
            std::cout << "value " << spinten::spin_char(lam, alpha) << "\n";
            std::cout << "parity " << spinten::zeta_parity(lam, alpha) << "\n";
            auto lb = spinten::zeta_valuation_lb(lam, alpha);
            std::cout << "valuation_lb "
                      << (lb ? std::to_string(*lb) : std::string("inf")) << "\n";
            return 0;
        }
        if (*cmd_rep_build) {
            auto library = spinten::irreducibles_cached(rep_n, opt);
            for (const auto& r : library)
                std::cout << (r.label ? r.label->str() : std::string("?"))
                          << " dim " << r.degree << "\n";
            return 0;
        }
        spinten::Report report;
        bool ran = false;
        if (*v_mt) {
            report = spinten::verify_mt(max_n_mt, opt);
            ran = true;
        } else if (*v_scan) {
            report = spinten::verify_scan(max_n_scan, opt);
            ran = true;
        } else if (*v_benson) {
            report = spinten::verify_benson(max_n_benson, opt);
            ran = true;
        } else if (*v_branching) {
            report = spinten::verify_branching(max_n_branching, opt);
            ran = true;
        } else if (*v_perm) {
            report = spinten::verify_perm(perm_ns, opt);
            ran = true;
        } else if (*v_spinchar) {
            report = spinten::verify_spinchar(max_n_spinchar, opt);
            ran = true;
        } else if (*cmd_filter) {
            report = spinten::filter_report(filter_n, opt);
            ran = true;
        }
        if (!ran) {
            std::cerr << "no action selected\n";
            return 2;
        }
        emit_report(report, out_file);
        return report.all_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
