#include "qtcat/catalan_diagrams.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qtcat {

bool in_Lambda(const StaircasePartition &lam) {
    size_t n = lam.size();
    if (n == 0 || lam[n - 1] != 0) return false;
    for (size_t i = 0; i < n; i++) {
        if (lam[i] > n - 1 - i) return false;
        if (i > 0 && lam[i] > lam[i - 1]) return false;
    }
    return true;
}

void enumerate_Lambda(uint32_t n, const std::function<void(const StaircasePartition &)> &fn) {
    StaircasePartition lam(n, 0);
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t i, uint32_t prev) {
        if (i == n - 1) {
            lam[i] = 0;
            fn(lam);
            return;
        }
        uint32_t hi = std::min(prev, n - 1 - i);
        for (uint32_t v = hi;; v--) {
            lam[i] = v;
            rec(i + 1, v);
            if (v == 0) break;
        }
    };
    if (n >= 1) rec(0, n - 1);
}

PointDiagram theta(const StaircasePartition &lam) {
    if (!in_Lambda(lam)) throw std::invalid_argument("theta: not in Lambda_n");
    uint32_t n = uint32_t(lam.size());
    std::vector<PlanarPoint> pts;
    for (uint32_t i = 1; i <= n; i++) {
        int32_t a = int32_t(n) - int32_t(i) - int32_t(lam[i - 1]);
        int32_t b = 0;
        for (uint32_t j = i + 1; j <= n; j++) {
            int64_t diff = int64_t(lam[i - 1]) - lam[j - 1] + int64_t(i) - j;
            if (diff == 0 || diff == 1) b++;
        }
        pts.push_back({a, b});
    }
    return PointDiagram(std::move(pts), Flavor::D);
}

bool is_catalan(const PointDiagram &d) {
    if (!d.in_D()) return false;
    std::set<std::pair<int32_t, int32_t>> s;
    int32_t maxx = 0;
    for (const auto &p : d.points()) {
        s.insert({p.x, p.y});
        maxx = std::max(maxx, p.x);
    }
    // (a) column closure on the axis
    for (const auto &p : d.points())
        if (p.y == 0)
            for (int32_t i = 0; i < p.x; i++)
                if (!s.count({i, 0})) return false;
    // (b) column counts
    for (int32_t col = 0; col <= maxx + 1; col++) {
        int32_t cnt = 0, cnt_next = 0, maxj = -1;
        for (const auto &p : d.points()) {
            if (p.x == col) {
                cnt++;
                maxj = std::max(maxj, p.y);
            }
            if (p.x == col + 1) cnt_next++;
        }
        if (cnt == 0) {
            for (const auto &p : d.points())
                if (p.x >= col) return false;
            continue;
        }
        if (cnt_next + cnt < maxj + 1) return false;
    }
    return true;
}

StaircasePartition theta_inverse(const PointDiagram &d) {
    if (!is_catalan(d)) throw std::invalid_argument("theta_inverse: not in D^catalan");
    std::vector<PlanarPoint> pts(d.points().begin(), d.points().end());
    StaircasePartition lam;
    size_t n = pts.size();
    for (size_t step = 0; step < n; step++) {
        int32_t maxx = 0;
        for (const auto &p : pts) maxx = std::max(maxx, p.x);
        int32_t pmin = -1, q = -1;
        for (int32_t col = 0; col <= maxx && pmin < 0; col++) {
            int32_t cnt = 0, cnt_next = 0, maxj = -1;
            for (const auto &p : pts) {
                if (p.x == col) {
                    cnt++;
                    maxj = std::max(maxj, p.y);
                }
                if (p.x == col + 1) cnt_next++;
            }
            if (cnt > 0 && cnt_next + cnt <= maxj + 1) {
                pmin = col;
                q = maxj;
            }
        }
        if (pmin < 0) throw std::logic_error("theta_inverse: no saturated column");
        lam.push_back(uint32_t(int32_t(pts.size()) - 1 - pmin));
        pts.erase(std::find(pts.begin(), pts.end(), PlanarPoint{pmin, q}));
        if (!pts.empty() && !is_catalan(PointDiagram(pts, Flavor::D)))
            throw std::invalid_argument("theta_inverse: predicate fails after peel");
    }
    if (!in_Lambda(lam)) throw std::logic_error("theta_inverse: result not in Lambda_n");
    return lam;
}

CatalanTable census(uint32_t n) {
    if (n < 1 || n > 9) throw std::invalid_argument("census: need 1 <= n <= 9");
    CatalanTable t(n);
    enumerate_Lambda(n, [&](const StaircasePartition &lam) {
        Bidegree b = theta(lam).bidegree();
        t.add(uint32_t(b.first), uint32_t(b.second));
    });
    return t;
}

PointDiagram embed(const PointDiagram &d, uint32_t ell) {
    if (!d.in_D()) throw std::invalid_argument("embed: diagram must be in D");
    std::vector<PlanarPoint> pts;
    for (uint32_t i = 0; i < ell; i++) pts.push_back({int32_t(i), 0});
    for (const auto &p : d.points()) pts.push_back({p.x + int32_t(ell), p.y});
    return PointDiagram(std::move(pts), Flavor::D);
}

PointDiagram construct_k0(uint32_t n, uint64_t d1) {
    uint64_t choose2 = uint64_t(n) * (n - 1) / 2;
    if (d1 > choose2) throw std::invalid_argument("construct_k0: d1 out of range");
    // u = floor((2n+1-sqrt(4n^2-4n-8d1+9))/2), exactly in integers
    mpz_class S = 4 * mpz_class(n) * n - 4 * mpz_class(n) - 8 * mpz_class(d1) + 9;
    mpz_class root = sqrt(S); // floor sqrt
    int64_t u;
    if (root * root == S) u = mpz_class((2 * int64_t(n) + 1 - root) / 2).get_si();
    else u = mpz_class((2 * int64_t(n) - root) / 2).get_si();
    int64_t i = int64_t(n) * u - u * (u + 1) / 2 - int64_t(d1);
    std::vector<int32_t> xs;
    for (int64_t t = 0; t < i; t++) xs.push_back(int32_t(u - 1));
    for (int64_t t = 0; t < int64_t(n) - u - i; t++) xs.push_back(int32_t(u));
    for (int64_t v = u - 1; v >= 0; v--) xs.push_back(int32_t(v));
    if (xs.size() != n) throw std::logic_error("construct_k0: formula transcription bug (length)");
    std::vector<PlanarPoint> pts;
    for (size_t a = 0; a < n; a++) {
        int32_t y = 0;
        for (size_t b = a + 1; b < n; b++)
            if (xs[b] - xs[a] == 0 || xs[b] - xs[a] == 1) y++;
        pts.push_back({xs[a], y});
    }
    PointDiagram D(std::move(pts), Flavor::D);
    if (D.bidegree() != Bidegree{int64_t(d1), int64_t(choose2 - d1)})
        throw std::logic_error("construct_k0: wrong bidegree (formula transcription bug)");
    if (!is_catalan(D)) throw std::logic_error("construct_k0: output not in D^catalan");
    return D;
}

PointDiagram strict_growth_witness(uint32_t n, uint64_t d1, uint64_t d2) {
    uint64_t choose2 = uint64_t(n) * (n - 1) / 2;
    if (n < 4 || d2 < 2 || d1 < d2 || d1 + d2 + (n - 2) != choose2)
        throw std::invalid_argument("strict_growth_witness: need k = n-2, 2 <= d2 <= d1");
    PointDiagram base = construct_k0(n - 2, d1 - n + 3);
    std::vector<PlanarPoint> pts = {{0, 0}, {1, 0}, {0, 2}};
    for (const auto &p : base.points()) pts.push_back({p.x + 2, p.y});
    PointDiagram W(std::move(pts), Flavor::D);
    if (!is_catalan(W)) throw std::logic_error("strict_growth_witness: not in D^catalan");
    if (W.bidegree() != Bidegree{int64_t(d1 + n), int64_t(d2)})
        throw std::logic_error("strict_growth_witness: wrong bidegree");
    return W;
}

} // namespace qtcat
