#include "qtcat/phi.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qtcat {

int phi_selfcheck_limit = 6;

FormalSum::FormalSum(PointDiagram d) { terms.push_back({mpq_class(1), std::move(d)}); }

FormalSum::FormalSum(std::vector<Term> ts) : terms(std::move(ts)) {
    if (terms.empty()) return;
    Bidegree b = terms[0].diagram.bidegree();
    for (const auto &t : terms)
        if (t.diagram.bidegree() != b)
            throw std::invalid_argument("FormalSum: diagrams must share one bidegree");
}

Bidegree FormalSum::bidegree() const {
    if (terms.empty()) throw std::domain_error("bidegree of empty formal sum");
    return terms[0].diagram.bidegree();
}

static void require_dprime(const PointDiagram &d) {
    for (const auto &p : d.points())
        if (p.total() < 0 || p.y < 0)
            throw std::invalid_argument("phi: diagram not in D'");
}

RhoPoly phi_permutation(const PointDiagram &d) {
    require_dprime(d);
    size_t n = d.size();
    if (n > 9) throw std::invalid_argument("phi_permutation: n > 9");
    int64_t k = d.deficit();
    std::vector<uint32_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    RhoPoly acc;
    do {
        int inv = 0;
        for (size_t i = 0; i < n; i++)
            for (size_t j = i + 1; j < n; j++)
                if (sigma[i] > sigma[j]) inv++;
        RhoPoly term(1);
        bool zero = false;
        for (size_t i = 0; i < n && !zero; i++) {
            RhoPoly h = h_series(uint32_t(d[i].y), int64_t(sigma[i]) - 1 - d[i].total());
            if (h.is_zero()) zero = true;
            else term = term * h;
        }
        if (!zero) {
            if (inv % 2) acc -= term;
            else acc += term;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return (k % 2) ? -acc : acc;
}

RhoPoly phi_determinant(const PointDiagram &d) {
    require_dprime(d);
    size_t n = d.size();
    if (n > 14) throw std::invalid_argument("phi_determinant: n > 14");
    int64_t k = d.deficit();
    std::vector<std::vector<RhoPoly>> M(n, std::vector<RhoPoly>(n));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            M[i][j] = h_series(uint32_t(d[i].y), int64_t(j) - d[i].total());
    RhoPoly det = determinant(M);
    return (k % 2) ? -det : det;
}

RhoPoly phi(const PointDiagram &d) {
    require_dprime(d);
    auto eval_small = [](const PointDiagram &b) {
        RhoPoly v = phi_determinant(b);
        if (int(b.size()) <= phi_selfcheck_limit) {
            RhoPoly w = phi_permutation(b);
            if (!(v == w))
                throw std::logic_error("phi: determinant and permutation forms disagree");
        }
        return v;
    };
    if (d.size() <= 14) return eval_small(d);
    // beyond the direct-determinant envelope, factor over blocks
    if (d[0].total() >= 1) return RhoPoly(); // |P_1| >= 1 forces phi = 0
    std::vector<PointDiagram> bs = blocks(d);
    if (bs.size() == 1) throw std::invalid_argument("phi: single block with n > 14");
    RhoPoly acc(1);
    for (const auto &b : bs) acc = acc * phi(b);
    return acc;
}

RhoPoly phi_sum(const FormalSum &s) {
    if (s.terms.empty()) return RhoPoly();
    std::map<RhoMonomial, mpq_class, MonoStorageGreater> acc;
    for (const auto &t : s.terms) {
        RhoPoly v = phi(t.diagram);
        for (const auto &[m, c] : v.terms()) {
            mpq_class &slot = acc[m];
            slot += t.coeff * mpq_class(c);
        }
    }
    RhoPoly out;
    for (auto &[m, c] : acc) {
        c.canonicalize();
        if (c == 0) continue;
        if (c.get_den() != 1)
            throw std::domain_error("phi_sum: non-integral coefficient " + c.get_str());
        out.add_term(m, c.get_num());
    }
    return out;
}

mpz_class vandermonde_constant(const PointDiagram &d) {
    size_t n = d.size();
    for (const auto &p : d.points())
        if (p.total() != 0)
            throw std::invalid_argument("vandermonde_constant: requires |P_i| = 0 for all i");
    // sorted by x ascending means b_1 > b_2 > ... > b_n
    mpz_class num = 1;
    for (size_t i = 0; i < n; i++)
        for (size_t j = i + 1; j < n; j++)
            num *= mpz_class(d[i].y) - mpz_class(d[j].y);
    mpz_class den = 1, f = 1;
    for (size_t i = 1; i < n; i++) {
        f *= mpz_class(i);
        den *= f;
    }
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("vandermonde_constant: non-integral quotient");
    if (q <= 0) throw std::logic_error("vandermonde_constant: non-positive constant");
    RhoMonomial m;
    m.parts.assign(n * (n - 1) / 2, 1);
    if (!(phi_determinant(d) == RhoPoly::monomial(m, q)))
        throw std::logic_error("vandermonde_constant: phi(D) != c * rho_1^C(n,2)");
    return q;
}

StaircaseExpansion expand_to_staircase(const PointDiagram &d) {
    size_t n = d.size();
    if (n > 5) throw std::invalid_argument("expand_to_staircase: n > 5");
    require_dprime(d);
    int64_t k = d.deficit();
    if (k < 0) throw std::invalid_argument("expand_to_staircase: deficit < 0");
    int64_t d2 = 0;
    for (const auto &p : d.points()) d2 += p.y;
    if (d2 > 6) throw std::invalid_argument("expand_to_staircase: total y-degree > 6");
    uint64_t N = uint64_t(d2) * uint64_t(k + 1) + 1; // N0 + 1

    StaircaseExpansion out;
    out.source = d;
    out.padding_length = N;

    // sequence (*): point index i repeated b_i times (heights processed
    // top-down; only count and per-point totals matter for the terminal data)
    std::vector<size_t> seq;
    for (size_t i = 0; i < n; i++)
        for (int32_t j = d[i].y; j >= 1; j--) seq.push_back(i);

    // A step on point i replaces P by P + (w+1, -1), so the terminal
    // x-coordinate relative to N is |P_i| + (sum of that point's w's).
    // Terminal configurations need those to fill {0,...,n-1}; the sign is
    // (-1)^k sgn(sigma) with sigma read off the filled slots.
    std::vector<int64_t> px(n);
    for (size_t i = 0; i < n; i++) px[i] = d[i].total();
    int sign_k = (k % 2) ? -1 : 1;
    Partition w_nonzero;
    std::function<void(size_t, int64_t)> rec2 = [&](size_t r, int64_t used) {
        if (r == seq.size()) {
            std::vector<uint32_t> sigma(n);
            std::vector<bool> seen(n, false);
            for (size_t i = 0; i < n; i++) {
                if (px[i] < 0 || px[i] >= int64_t(n) || seen[size_t(px[i])]) return;
                seen[size_t(px[i])] = true;
                sigma[i] = uint32_t(px[i]) + 1;
            }
            int inv = 0;
            for (size_t a = 0; a < n; a++)
                for (size_t b = a + 1; b < n; b++)
                    if (sigma[a] > sigma[b]) inv++;
            Partition mu = w_nonzero;
            std::sort(mu.begin(), mu.end());
            out.coefficients[mu] += sign_k * ((inv % 2) ? -1 : 1);
            return;
        }
        size_t i = seq[r];
        for (int64_t w = 0; w <= k - used; w++) {
            px[i] += w;
            if (w > 0) w_nonzero.push_back(uint32_t(w));
            rec2(r + 1, used + w);
            if (w > 0) w_nonzero.pop_back();
            px[i] -= w;
        }
    };
    rec2(0, 0);
    for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
        it = (it->second == 0) ? out.coefficients.erase(it) : std::next(it);

    // Eq. (3.1): sum a_mu rho_mu must equal phi(D)
    RhoPoly recon;
    for (const auto &[mu, c] : out.coefficients) recon += RhoPoly::monomial(RhoMonomial{mu}, c);
    if (!(recon == phi_determinant(d)))
        throw std::logic_error("expand_to_staircase: expansion does not reproduce phi(D)");
    return out;
}

} // namespace qtcat
