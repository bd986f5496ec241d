#include "qtcat/alternant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qtcat {

void Alternant::add_term(const Exponents &e, const mpz_class &c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Bidegree Alternant::bidegree() const {
    if (terms_.empty()) return {0, 0};
    const auto &e = terms_.begin()->first;
    int64_t dx = 0, dy = 0;
    for (size_t i = 0; i < n_; i++) {
        dx += e[2 * i];
        dy += e[2 * i + 1];
    }
    return {dx, dy};
}

bool Alternant::is_bihomogeneous() const {
    if (terms_.empty()) return true;
    Bidegree b = bidegree();
    for (const auto &[e, c] : terms_) {
        int64_t dx = 0, dy = 0;
        for (size_t i = 0; i < n_; i++) {
            dx += e[2 * i];
            dy += e[2 * i + 1];
        }
        if (Bidegree{dx, dy} != b) return false;
    }
    return true;
}

bool Alternant::is_antisymmetric() const {
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) {
            for (const auto &[e, c] : terms_) {
                Exponents f = e;
                std::swap(f[2 * i], f[2 * j]);
                std::swap(f[2 * i + 1], f[2 * j + 1]);
                auto it = terms_.find(f);
                if (it == terms_.end() || it->second != -c) return false;
            }
        }
    }
    return true;
}

// determinant of [ x_i^{a_j} y_i^{b_j} ] by permutation sum; duplicate
// columns cancel on their own
static Alternant expand_det(const std::vector<std::pair<uint32_t, uint32_t>> &cols) {
    size_t n = cols.size();
    Alternant out(n);
    std::vector<uint32_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int inv = 0;
        for (size_t i = 0; i < n; i++)
            for (size_t j = i + 1; j < n; j++)
                if (sigma[i] > sigma[j]) inv++;
        Alternant::Exponents e(2 * n, 0);
        for (size_t i = 0; i < n; i++) {
            e[2 * i] = cols[sigma[i]].first;
            e[2 * i + 1] = cols[sigma[i]].second;
        }
        out.add_term(e, (inv % 2) ? -1 : 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

Alternant delta(const PointDiagram &d) {
    size_t n = d.size();
    if (n > 6) throw std::invalid_argument("delta: n > 6");
    if (!d.in_D()) throw std::invalid_argument("delta: negative exponent (diagram not in D)");
    std::vector<std::pair<uint32_t, uint32_t>> cols;
    for (const auto &p : d.points()) cols.push_back({uint32_t(p.x), uint32_t(p.y)});
    return expand_det(cols);
}

bool check_sum_lemma(const PointDiagram &d, uint32_t c, uint32_t e) {
    size_t n = d.size();
    if (n > 5) throw std::invalid_argument("check_sum_lemma: n > 5");
    Alternant lhs(n);
    Alternant base = delta(d);
    // (sum_i x_i^c y_i^e) * Delta(D)
    for (size_t i = 0; i < n; i++) {
        for (const auto &[exps, coeff] : base.terms()) {
            Alternant::Exponents f = exps;
            f[2 * i] += c;
            f[2 * i + 1] += e;
            lhs.add_term(f, coeff);
        }
    }
    Alternant rhs(n);
    std::vector<std::pair<uint32_t, uint32_t>> cols;
    for (const auto &p : d.points()) cols.push_back({uint32_t(p.x), uint32_t(p.y)});
    for (size_t i = 0; i < n; i++) {
        auto bumped = cols;
        bumped[i].first += c;
        bumped[i].second += e;
        Alternant t = expand_det(bumped);
        for (const auto &[exps, coeff] : t.terms()) rhs.add_term(exps, coeff);
    }
    return lhs == rhs;
}

} // namespace qtcat
