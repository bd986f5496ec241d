// qtcat command line: q,t-Catalan tables, the phi map, catalan diagrams,
// generator constructions and the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qtcat/alternant.hpp"
#include "qtcat/catalan_diagrams.hpp"
#include "qtcat/checks.hpp"
#include "qtcat/constructions.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/partitions.hpp"
#include "qtcat/phi.hpp"

using namespace qtcat;

namespace {

int write_out(const std::string &out, const std::string &content) {
    if (out.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream f(out);
    if (!f) {
        std::cerr << "cannot open " << out << "\n";
        return 2;
    }
    f << content;
    return 0;
}

std::string table_text(const CatalanTable &t) {
    // grid with (0,0) at the bottom-left, q-exponent horizontal
    std::ostringstream os;
    uint32_t side = t.side();
    for (uint32_t d2 = side; d2-- > 0;) {
        for (uint32_t d1 = 0; d1 < side; d1++) {
            const mpz_class &c = t.at(d1, d2);
            if (d1) os << " ";
            if (c == 0) os << ".";
            else os << c.get_str();
        }
        os << "\n";
    }
    return os.str();
}

Partition parse_partition(const std::string &s) {
    Partition nu;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) nu.push_back(uint32_t(std::stoul(item)));
    std::sort(nu.begin(), nu.end());
    return nu;
}

std::string certificate_text(const GeneratorCertificate &cert) {
    std::ostringstream os;
    os << "nu = (";
    for (size_t i = 0; i < cert.nu.size(); i++) os << (i ? "," : "") << cert.nu[i];
    os << ")  bidegree = (" << cert.bidegree.first << "," << cert.bidegree.second << ")\n";
    for (const auto &t : cert.element.terms)
        os << "  " << t.coeff.get_str() << " * Delta[ " << t.diagram.str() << " ]\n";
    os << "  phi  = " << cert.phi_value.str() << "\n";
    os << "  json = " << cert.phi_value.to_json() << "\n";
    return os.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"q,t-Catalan tables and the diagram-to-rho-ring toolkit"};
    app.require_subcommand(1);
    std::string out;

    // table
    auto *tab = app.add_subcommand("table", "print the C_n(q,t) coefficient table");
    uint32_t tab_n = 7;
    std::string tab_fmt = "text";
    tab->add_option("--n", tab_n, "number of points")->required();
    tab->add_option("--format", tab_fmt, "text|csv|json")->check(CLI::IsMember({"text", "csv", "json"}));
    tab->add_option("--out", out, "write to file");

    // coeff
    auto *co = app.add_subcommand("coeff", "print one coefficient of C_n(q,t)");
    uint32_t co_n = 7;
    uint64_t co_d1 = 0, co_d2 = 0;
    co->add_option("--n", co_n)->required();
    co->add_option("--d1", co_d1)->required();
    co->add_option("--d2", co_d2)->required();
    co->add_option("--out", out, "write to file");

    // phi
    auto *ph = app.add_subcommand("phi", "evaluate phi on a diagram");
    std::string ph_diagram, ph_method = "det";
    ph->add_option("--diagram", ph_diagram, "e.g. \"(-1,1);(0,0);(0,1)\"")->required();
    ph->add_option("--method", ph_method, "det|perm|both")->check(CLI::IsMember({"det", "perm", "both"}));
    ph->add_option("--out", out, "write to file");

    // diagrams
    auto *dg = app.add_subcommand("diagrams", "list theta(Lambda_n) diagrams or census counts");
    uint32_t dg_n = 4;
    int64_t dg_d1 = -1, dg_d2 = -1;
    bool dg_census = false;
    dg->add_option("--n", dg_n)->required();
    dg->add_option("--d1", dg_d1, "filter by x-degree");
    dg->add_option("--d2", dg_d2, "filter by y-degree");
    dg->add_flag("--census", dg_census, "print bidegree census instead of diagrams");
    dg->add_option("--out", out, "write to file");

    // construct
    auto *cons = app.add_subcommand("construct", "generator constructions");
    cons->require_subcommand(1);
    uint32_t c_n = 7;
    uint64_t c_d1 = 0, c_d2 = 0;
    std::string c_partition;
    auto *dnu = cons->add_subcommand("dnu", "single-diagram construction (k <= n-4)");
    auto *fnu = cons->add_subcommand("fnu", "alternating-element construction (k <= n-3)");
    auto *basis = cons->add_subcommand("basis", "full rank certificate for one bidegree");
    for (auto *sc : {dnu, fnu}) {
        sc->add_option("--n", c_n)->required();
        sc->add_option("--d1", c_d1)->required();
        sc->add_option("--d2", c_d2)->required();
        sc->add_option("--partition", c_partition, "nu, e.g. \"1,1,2\"")->required();
        sc->add_option("--out", out, "write to file");
    }
    basis->add_option("--n", c_n)->required();
    basis->add_option("--d1", c_d1)->required();
    basis->add_option("--d2", c_d2)->required();
    basis->add_option("--out", out, "write to file");

    // check
    auto *ck = app.add_subcommand("check", "run verification suites");
    std::string ck_suite = "all", ck_range = "3..7";
    uint64_t ck_seed = 42;
    uint32_t ck_trials = 200;
    bool ck_json = false, ck_parallel = false;
    ck->add_option("--suite", ck_suite, "suite name or 'all'");
    ck->add_option("--n-range", ck_range, "A..B");
    ck->add_option("--seed", ck_seed, "randomized-suite seed");
    ck->add_option("--trials", ck_trials, "randomized-suite trial count");
    ck->add_flag("--json", ck_json, "machine-readable reports");
    ck->add_flag("--parallel", ck_parallel, "distribute independent cells");
    ck->add_option("--out", out, "write to file");

    // export
    auto *ex = app.add_subcommand("export", "export the table");
    ex->require_subcommand(1);
    auto *ex_csv = ex->add_subcommand("csv");
    auto *ex_json = ex->add_subcommand("json");
    uint32_t ex_n = 7;
    for (auto *sc : {ex_csv, ex_json}) {
        sc->add_option("--n", ex_n)->required();
        sc->add_option("--out", out, "write to file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*tab) {
            CatalanTable t = build_table(tab_n);
            if (tab_fmt == "csv") return write_out(out, t.to_csv());
            if (tab_fmt == "json") return write_out(out, t.to_json() + "\n");
            return write_out(out, table_text(t));
        }
        if (*co) {
            CatalanTable t = build_table(co_n);
            return write_out(out, t.at(uint32_t(co_d1), uint32_t(co_d2)).get_str() + "\n");
        }
        if (*ph) {
            PointDiagram d = parse_diagram(ph_diagram);
            std::ostringstream os;
            if (ph_method == "det") {
                os << phi_determinant(d).to_json() << "\n";
            } else if (ph_method == "perm") {
                os << phi_permutation(d).to_json() << "\n";
            } else {
                RhoPoly a = phi_determinant(d), b = phi_permutation(d);
                if (!(a == b)) {
                    std::cerr << "phi: det and perm forms disagree\n";
                    return 1;
                }
                os << a.to_json() << "\n";
            }
            return write_out(out, os.str());
        }
        if (*dg) {
            std::ostringstream os;
            if (dg_census) {
                os << census(dg_n).to_csv();
            } else {
                enumerate_Lambda(dg_n, [&](const StaircasePartition &lam) {
                    PointDiagram d = theta(lam);
                    Bidegree b = d.bidegree();
                    if (dg_d1 >= 0 && b.first != dg_d1) return;
                    if (dg_d2 >= 0 && b.second != dg_d2) return;
                    os << d.str() << "\n";
                });
            }
            return write_out(out, os.str());
        }
        if (*cons) {
            std::ostringstream os;
            if (*basis) {
                BasisReport rep = basis_certificate(c_n, c_d1, c_d2);
                os << "rank " << rep.rank << " = p(d2,k) at (d1,d2)=(" << c_d1 << "," << c_d2
                   << ")\n";
                for (const auto &cert : rep.certificates) os << certificate_text(cert);
            } else {
                Partition nu = parse_partition(c_partition);
                GeneratorCertificate cert = (*dnu) ? construct_D_nu(c_n, c_d1, c_d2, nu)
                                                   : construct_f_nu(c_n, c_d1, c_d2, nu);
                os << certificate_text(cert);
            }
            return write_out(out, os.str());
        }
        if (*ck) {
            auto sep = ck_range.find("..");
            if (sep == std::string::npos) {
                std::cerr << "check: --n-range must be A..B\n";
                return 2;
            }
            CheckOptions copt;
            copt.n_lo = uint32_t(std::stoul(ck_range.substr(0, sep)));
            copt.n_hi = uint32_t(std::stoul(ck_range.substr(sep + 2)));
            copt.seed = ck_seed;
            copt.trials = ck_trials;
            copt.parallel = ck_parallel;
            std::vector<std::string> suites =
                ck_suite == "all" ? check_suite_names() : std::vector<std::string>{ck_suite};
            std::ostringstream os;
            bool all_ok = true;
            bool first = true;
            if (ck_json) os << "[";
            for (const auto &s : suites) {
                CheckReport rep = run_check_suite(s, copt);
                all_ok = all_ok && rep.passed();
                if (ck_json) {
                    if (!first) os << ",\n ";
                    os << rep.to_json();
                } else {
                    os << rep.str() << "\n";
                }
                first = false;
            }
            if (ck_json) os << "]\n";
            int rc = write_out(out, os.str());
            return rc != 0 ? rc : (all_ok ? 0 : 1);
        }
        if (*ex) {
            CatalanTable t = build_table(ex_n);
            return write_out(out, (*ex_csv) ? t.to_csv() : t.to_json() + "\n");
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
