#include "qtcat/checks.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qtcat/alternant.hpp"
#include "qtcat/catalan_diagrams.hpp"
#include "qtcat/constructions.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/partitions.hpp"
#include "qtcat/phi.hpp"
#include "qtcat/random_diagrams.hpp"
#include "qtcat/rho.hpp"

namespace qtcat {

std::string CheckReport::str() const {
    std::ostringstream os;
    os << (passed() ? "PASS" : "FAIL") << " " << suite << " [n " << n_range << "] cases="
       << cases_run << " failures=" << failures.size() << " (" << elapsed_seconds << "s)";
    for (size_t i = 0; i < failures.size() && i < 10; i++)
        os << "\n  inputs: " << failures[i].inputs << "\n    expected: " << failures[i].expected
           << "\n    got: " << failures[i].got;
    if (failures.size() > 10) os << "\n  ... " << failures.size() - 10 << " more";
    return os.str();
}

static std::string json_escape(const std::string &s) {
    std::string o;
    for (char c : s) {
        if (c == '"' || c == '\\') o += '\\';
        o += c;
    }
    return o;
}

std::string CheckReport::to_json() const {
    std::ostringstream os;
    os << "{\"suite\": \"" << suite << "\", \"n_range\": \"" << n_range
       << "\", \"cases_run\": " << cases_run << ", \"passed\": " << (passed() ? "true" : "false")
       << ", \"elapsed_seconds\": " << elapsed_seconds << ", \"failures\": [";
    for (size_t i = 0; i < failures.size(); i++) {
        if (i) os << ", ";
        os << "{\"inputs\": \"" << json_escape(failures[i].inputs) << "\", \"expected\": \""
           << json_escape(failures[i].expected) << "\", \"got\": \""
           << json_escape(failures[i].got) << "\"}";
    }
    os << "]}";
    return os.str();
}

namespace {

struct SuiteRunner {
    CheckReport rep;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::mutex mu;

    explicit SuiteRunner(const std::string &name, const CheckOptions &opt, uint32_t lo,
                         uint32_t hi) {
        rep.suite = name;
        uint32_t a = std::max(opt.n_lo, lo), b = std::min(opt.n_hi, hi);
        rep.n_range = std::to_string(a) + ".." + std::to_string(b);
        nlo = a;
        nhi = b;
    }
    uint32_t nlo, nhi;

    void expect(bool ok, const std::string &inputs, const std::string &expected,
                const std::string &got) {
        std::lock_guard<std::mutex> g(mu);
        rep.cases_run++;
        if (!ok) rep.failures.push_back({inputs, expected, got});
    }

    CheckReport finish() {
        rep.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }
};

void parallel_cells(bool parallel, size_t count, const std::function<void(size_t)> &fn) {
    if (!parallel || count < 2) {
        for (size_t i = 0; i < count; i++) fn(i);
        return;
    }
    unsigned workers = std::max(2u, std::thread::hardware_concurrency());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; w++)
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto &t : pool) t.join();
}

} // namespace

CheckReport check_lemma32(const CheckOptions &opt) {
    SuiteRunner run("lemma32", opt, 2, 7);
    uint32_t trials = opt.trials;

    // (i) some |P_i| >= i forces phi = 0: plant a point with |P| >= n
    for (uint32_t t = 0; t < trials; t++) {
        Rng rng = split_rng(opt.seed, "lemma32.i", t);
        uint32_t n = 2 + uint32_t(rng() % (run.nhi - 1));
        PointDiagram base = random_dprime_diagram(rng, n - 1, int32_t(n) - 1, 3);
        std::vector<PlanarPoint> pts(base.points());
        int32_t y = int32_t(rng() % 3);
        pts.push_back({int32_t(n + 2 + rng() % 3) - y, y}); // |P| >= n+2, x beyond the base
        PointDiagram d(pts, Flavor::Dprime);
        bool violates = false;
        for (size_t i = 1; i <= d.size(); i++)
            if (d[i - 1].total() >= int64_t(i)) violates = true;
        if (!violates) continue; // the planted point may not be extreme enough
        RhoPoly v = phi_determinant(d);
        run.expect(v.is_zero(), "(i) D=" + d.str(), "phi = 0", v.str());
    }

    // (ii) prefix padding by Q_1..Q_m with |Q_i| = i-1
    for (uint32_t t = 0; t < trials; t++) {
        Rng rng = split_rng(opt.seed, "lemma32.ii", t);
        uint32_t n = 2 + uint32_t(rng() % 4);
        uint32_t m = 1 + uint32_t(rng() % 3);
        PointDiagram d = random_dprime_diagram(rng, n, 3, 3);
        std::vector<PlanarPoint> pts;
        for (uint32_t i = 1; i <= m; i++) {
            int32_t y = int32_t(rng() % (i + 2));
            pts.push_back({int32_t(i) - 1 - y, y});
        }
        for (const auto &p : d.points()) pts.push_back({p.x + int32_t(m), p.y});
        PointDiagram padded(pts, Flavor::Dprime);
        run.expect(phi_determinant(padded) == phi_determinant(d),
                   "(ii) D=" + d.str() + " padded=" + padded.str(), phi_determinant(d).str(),
                   phi_determinant(padded).str());
    }

    // (iii) translation by (-t, t)
    for (uint32_t t = 0; t < trials; t++) {
        Rng rng = split_rng(opt.seed, "lemma32.iii", t);
        uint32_t n = 2 + uint32_t(rng() % std::min(run.nhi - 1, 5u));
        int32_t sh = 1 + int32_t(rng() % 3);
        PointDiagram d = random_dprime_diagram(rng, n, 3, 3);
        std::vector<PlanarPoint> pts;
        for (const auto &p : d.points()) pts.push_back({p.x - sh, p.y + sh});
        PointDiagram moved(pts, Flavor::Dprime);
        run.expect(phi_determinant(moved) == phi_determinant(d), "(iii) D=" + d.str(),
                   phi_determinant(d).str(), phi_determinant(moved).str());
    }

    // (iv) block factorization
    for (uint32_t t = 0; t < trials; t++) {
        Rng rng = split_rng(opt.seed, "lemma32.iv", t);
        uint32_t blocks_n = 2 + uint32_t(rng() % 2);
        std::vector<PlanarPoint> pts;
        RhoPoly expected(1);
        int32_t T = 0;
        bool ok = true;
        std::ostringstream inputs;
        for (uint32_t r = 0; r < blocks_n && ok; r++) {
            uint32_t sz = 1 + uint32_t(rng() % 3);
            std::vector<int64_t> profile = {0};
            for (uint32_t i = 2; i <= sz; i++) profile.push_back(int64_t(rng() % i)); // <= i-1
            std::sort(profile.begin(), profile.end());
            try {
                PointDiagram b = random_profile_diagram(rng, profile, 4);
                expected = expected * phi_determinant(b);
                inputs << " B" << r << "=" << b.str();
                for (const auto &p : b.points()) pts.push_back({p.x + T, p.y});
                T += int32_t(sz);
            } catch (const std::exception &) {
                ok = false;
            }
        }
        if (!ok) continue;
        PointDiagram d(pts, Flavor::Dprime);
        run.expect(phi_determinant(d) == expected, "(iv)" + inputs.str(), expected.str(),
                   phi_determinant(d).str());
    }

    // (v) Vandermonde constant, exhaustive n <= 5 over distinct b_i <= 8
    {
        std::vector<uint32_t> bs;
        std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t start, uint32_t left) {
            if (bs.size() >= 2) {
                std::vector<PlanarPoint> pts;
                for (uint32_t b : bs) pts.push_back({-int32_t(b), int32_t(b)});
                PointDiagram d(pts, Flavor::Dprime);
                mpz_class num = 1;
                std::vector<uint32_t> sorted_desc(bs.rbegin(), bs.rend());
                for (size_t i = 0; i < sorted_desc.size(); i++)
                    for (size_t j = i + 1; j < sorted_desc.size(); j++)
                        num *= mpz_class(sorted_desc[i]) - mpz_class(sorted_desc[j]);
                mpz_class den = 1, f = 1;
                for (size_t i = 1; i < bs.size(); i++) {
                    f *= mpz_class(i);
                    den *= f;
                }
                bool threw = false;
                mpz_class c;
                try {
                    c = vandermonde_constant(d);
                } catch (const std::exception &) {
                    threw = true;
                }
                run.expect(!threw && c * den == num, "(v) D=" + d.str(),
                           "c = " + mpz_class(num / den).get_str(),
                           threw ? "exception" : c.get_str());
            }
            if (left == 0) return;
            for (uint32_t b = start; b <= 8; b++) {
                bs.push_back(b);
                rec(b + 1, left - 1);
                bs.pop_back();
            }
        };
        rec(0, 5);
    }

    // (vi) staircase with one raised point gives rho_s
    for (uint32_t s = 1; s <= 8; s++) {
        std::vector<PlanarPoint> pts = {{-1, 1}, {0, 0}};
        for (uint32_t i = 1; i < s; i++) pts.push_back({int32_t(i), 0});
        PointDiagram d(pts, Flavor::Dprime);
        RhoPoly expect = RhoPoly::monomial(RhoMonomial{{s}});
        run.expect(phi_determinant(d) == expect, "(vi) s=" + std::to_string(s), expect.str(),
                   phi_determinant(d).str());
    }
    return run.finish();
}

CheckReport check_lemma34(const CheckOptions &opt) {
    SuiteRunner run("lemma34", opt, 2, 4);
    for (uint32_t t = 0; t < std::max(opt.trials, 100u); t++) {
        Rng rng = split_rng(opt.seed, "lemma34", t);
        uint32_t n = 2 + uint32_t(rng() % 3);
        PointDiagram d = random_d_diagram(rng, n, 3, 2);
        uint32_t c = rng() % 3, e = rng() % 3;
        bool ok = check_sum_lemma(d, c, e);
        run.expect(ok, "D=" + d.str() + " c=" + std::to_string(c) + " e=" + std::to_string(e),
                   "identity holds", ok ? "holds" : "violated");
    }
    return run.finish();
}

CheckReport check_lemma59_510(const CheckOptions &opt) {
    SuiteRunner run("lemma59_510", opt, 3, 8);
    for (uint32_t t = 0; t < std::max(opt.trials, 200u); t++) {
        Rng rng = split_rng(opt.seed, "lemma59", t);
        uint32_t w = 2 + uint32_t(rng() % 6); // w <= 7
        std::vector<int64_t> profile = {0, 0};
        for (uint32_t i = 3; i <= w + 1; i++) profile.push_back(int64_t(i) - 2);
        PointDiagram d = random_profile_diagram(rng, profile, 6);
        mpz_class c = mpz_class(d[0].y) - mpz_class(d[1].y);
        RhoPoly v = phi_determinant(d);
        bool ok = !v.is_zero();
        std::string got = v.str();
        if (ok) {
            auto [lm, lc] = leading(v);
            ok = lm == RhoMonomial{{w}} && lc == c;
        }
        run.expect(ok, "5.9 D=" + d.str(), "LT = " + c.get_str() + "*r" + std::to_string(w), got);
    }
    for (uint32_t t = 0; t < std::max(opt.trials, 200u); t++) {
        Rng rng = split_rng(opt.seed, "lemma510", t);
        uint32_t w = 2 + uint32_t(rng() % 5); // w <= 6
        uint32_t v0 = 2 + uint32_t(rng() % (w - 1));
        std::vector<int64_t> profile = {0, 0};
        for (uint32_t i = 3; i <= w - v0 + 3; i++) profile.push_back(int64_t(i) - 2);
        for (uint32_t i = w - v0 + 4; i <= w + 2; i++) profile.push_back(int64_t(i) - 3);
        PointDiagram d = random_profile_diagram(rng, profile, 6);
        mpz_class c = -(mpz_class(d[0].y) - d[1].y) *
                      (mpz_class(d[w - v0 + 2].y) - d[w - v0 + 3].y);
        RhoPoly val = phi_determinant(d);
        bool ok = !val.is_zero();
        std::string got = val.str();
        if (ok) {
            auto [lm, lc] = leading(val);
            ok = lm == RhoMonomial{{v0, w}} && lc == c;
        }
        run.expect(ok, "5.10 D=" + d.str() + " v=" + std::to_string(v0) + " w=" + std::to_string(w),
                   "LT = " + c.get_str() + "*r" + std::to_string(v0) + "r" + std::to_string(w),
                   got);
    }
    return run.finish();
}

CheckReport check_phi_dual(const CheckOptions &opt) {
    SuiteRunner run("phi_dual", opt, 1, 7);
    uint32_t trials = std::max(opt.trials, 500u);
    for (uint32_t t = 0; t < trials; t++) {
        Rng rng = split_rng(opt.seed, "phi_dual", t);
        uint32_t n = 1 + uint32_t(rng() % run.nhi);
        PointDiagram d = random_dprime_diagram(rng, n, 4, 3);
        RhoPoly a = phi_determinant(d), b = phi_permutation(d);
        run.expect(a == b, "D=" + d.str(), a.str(), b.str());
    }
    return run.finish();
}

CheckReport check_prop39(const CheckOptions &opt) {
    SuiteRunner run("prop39", opt, 1, 4);
    uint32_t done = 0, t = 0;
    while (done < std::max(opt.trials, 100u) && t < 100000) {
        Rng rng = split_rng(opt.seed, "prop39", t++);
        uint32_t n = 1 + uint32_t(rng() % run.nhi);
        PointDiagram d = random_d_diagram(rng, n, 3, 2);
        int64_t ysum = 0;
        for (const auto &p : d.points()) ysum += p.y;
        if (d.deficit() < 0 || ysum > 4) continue;
        done++;
        bool ok = true;
        std::string got = "expansion reproduces phi(D)";
        try {
            expand_to_staircase(d); // self-asserts Eq. (3.1)
        } catch (const std::exception &e) {
            ok = false;
            got = e.what();
        }
        run.expect(ok, "D=" + d.str(), "sum a_mu rho_mu = phi(D)", got);
    }
    return run.finish();
}

CheckReport check_theta(const CheckOptions &opt) {
    SuiteRunner run("theta", opt, 1, 9);
    for (uint32_t n = run.nlo; n <= run.nhi; n++) {
        enumerate_Lambda(n, [&](const StaircasePartition &lam) {
            PointDiagram d = theta(lam);
            bool img = is_catalan(d);
            bool rt = img && theta_inverse(d) == lam;
            std::ostringstream in;
            in << "n=" << n << " lambda=(";
            for (size_t i = 0; i < lam.size(); i++) in << (i ? "," : "") << lam[i];
            in << ")";
            run.expect(img && rt, in.str(), "theta image in D^catalan and round-trip",
                       img ? (rt ? "ok" : "round-trip failed") : "not in D^catalan");
        });
    }
    return run.finish();
}

CheckReport check_census(const CheckOptions &opt) {
    SuiteRunner run("census", opt, 1, 9);
    for (uint32_t n = run.nlo; n <= run.nhi; n++) {
        bool eq = census(n) == build_table(n);
        run.expect(eq, "n=" + std::to_string(n), "census == build_table", eq ? "equal" : "differ");
    }
    return run.finish();
}

CheckReport check_theoremA(const CheckOptions &opt) {
    SuiteRunner run("theoremA", opt, 3, 10);
    for (uint32_t n = run.nlo; n <= run.nhi; n++) {
        CatalanTable t = build_table(n);
        uint32_t choose2 = n * (n - 1) / 2;
        run.expect(t.symmetric(), "n=" + std::to_string(n) + " table symmetry",
                   "coeff(d1,d2) = coeff(d2,d1)", t.symmetric() ? "symmetric" : "asymmetric");
        for (uint32_t d1 = 0; d1 <= choose2; d1++) {
            for (uint32_t d2 = 0; d1 + d2 <= choose2; d2++) {
                uint32_t k = choose2 - d1 - d2;
                uint32_t delta = std::min(d1, d2);
                mpz_class coeff = t.at(d1, d2);
                mpz_class bound = count_partitions_bounded(delta, k);
                bool le = coeff <= bound;
                bool eq_pred = (k + 3 <= n) || (k + 2 == n && delta == 1) || (delta == 0);
                bool eq = coeff == bound;
                std::ostringstream in;
                in << "n=" << n << " (d1,d2)=(" << d1 << "," << d2 << ") k=" << k
                   << " delta=" << delta;
                run.expect(le && eq == eq_pred, in.str(),
                           "coeff <= p(delta,k)=" + bound.get_str() +
                               std::string(eq_pred ? ", equality" : ", strict"),
                           "coeff=" + coeff.get_str());
            }
        }
    }
    return run.finish();
}

CheckReport check_conjecture(const CheckOptions &opt) {
    SuiteRunner run("conjecture", opt, 6, 10);
    if (run.nlo > run.nhi)
        throw std::invalid_argument("check_conjecture: requested range misses 6 <= n <= 10");
    auto p_of = [](int64_t j) { return j < 0 ? mpz_class(0) : count_partitions(uint64_t(j)); };
    for (uint32_t n = run.nlo; n <= run.nhi; n++) {
        CatalanTable t = build_table(n);
        uint32_t choose2 = n * (n - 1) / 2;
        for (uint32_t d1 = 0; d1 <= choose2; d1++) {
            for (uint32_t d2 = 0; d1 + d2 <= choose2; d2++) {
                int64_t k = int64_t(choose2) - d1 - d2;
                int64_t delta = std::min(d1, d2);
                if (!(int64_t(n) - 2 <= k && k <= 2 * int64_t(n) - 8 && delta >= k)) continue;
                mpz_class pred = p_of(k);
                for (int64_t i = 0; i <= k - int64_t(n) + 1; i++) pred -= 2 * p_of(i);
                pred -= p_of(k - int64_t(n) + 2);
                std::ostringstream in;
                in << "n=" << n << " (d1,d2)=(" << d1 << "," << d2 << ") k=" << k;
                run.expect(t.at(d1, d2) == pred, in.str(), pred.get_str(),
                           t.at(d1, d2).get_str());
            }
        }
    }
    return run.finish();
}

CheckReport check_corollaryB(const CheckOptions &opt) {
    SuiteRunner run("corollaryB", opt, 3, 10);
    for (uint32_t n = run.nlo; n <= run.nhi; n++) {
        auto s = specialize_qq(build_table(n));
        uint32_t choose2 = n * (n - 1) / 2;
        for (uint32_t k = 0; k + 3 <= n; k++) {
            mpz_class f = corollaryB_formula(n, k);
            run.expect(s[choose2 - k] == f, "n=" + std::to_string(n) + " k=" + std::to_string(k),
                       f.get_str(), s[choose2 - k].get_str());
        }
    }
    return run.finish();
}

CheckReport check_basis(const CheckOptions &opt) {
    SuiteRunner run("basis", opt, 3, 10);
    struct Cell {
        uint32_t n, d1, d2, k;
    };
    std::vector<Cell> cells;
    for (uint32_t n = run.nlo; n <= run.nhi; n++) {
        uint32_t choose2 = n * (n - 1) / 2;
        for (uint32_t k = 0; k + 3 <= n; k++)
            for (uint32_t d2 = 0; 2 * d2 <= choose2 - k; d2++)
                cells.push_back({n, choose2 - k - d2, d2, k});
    }
    std::vector<CatalanTable> tables(run.nhi + 1);
    for (uint32_t n = run.nlo; n <= run.nhi; n++) tables[n] = build_table(n);
    parallel_cells(opt.parallel, cells.size(), [&](size_t i) {
        auto [n, d1, d2, k] = cells[i];
        std::ostringstream in;
        in << "n=" << n << " (d1,d2)=(" << d1 << "," << d2 << ") k=" << k;
        mpz_class want = count_partitions_bounded(d2, k);
        std::string got;
        bool ok = false;
        try {
            BasisReport rep = basis_certificate(n, d1, d2);
            ok = mpz_class(rep.rank) == want && want == tables[n].at(d1, d2);
            got = "rank=" + std::to_string(rep.rank);
        } catch (const std::exception &e) {
            got = e.what();
        }
        run.expect(ok, in.str(),
                   "rank = p(d2,k) = table entry = " + want.get_str() +
                       " (table " + tables[n].at(d1, d2).get_str() + ")",
                   got);
    });
    return run.finish();
}

std::vector<std::string> check_suite_names() {
    return {"lemma32",  "lemma34",    "lemma59_510", "phi_dual",   "prop39", "theta",
            "census",   "theoremA",   "conjecture",  "corollaryB", "basis"};
}

CheckReport run_check_suite(const std::string &name, const CheckOptions &opt) {
    if (name == "lemma32") return check_lemma32(opt);
    if (name == "lemma34") return check_lemma34(opt);
    if (name == "lemma59_510") return check_lemma59_510(opt);
    if (name == "phi_dual") return check_phi_dual(opt);
    if (name == "prop39") return check_prop39(opt);
    if (name == "theta") return check_theta(opt);
    if (name == "census") return check_census(opt);
    if (name == "theoremA") return check_theoremA(opt);
    if (name == "conjecture") return check_conjecture(opt);
    if (name == "corollaryB") return check_corollaryB(opt);
    if (name == "basis") return check_basis(opt);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckReport> check_all(const std::vector<std::string> &suites,
                                   const CheckOptions &opt) {
    std::vector<CheckReport> out;
    for (const auto &s : suites) out.push_back(run_check_suite(s, opt));
    return out;
}

} // namespace qtcat
