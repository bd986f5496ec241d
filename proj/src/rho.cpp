#include "qtcat/rho.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <iterator>
#include <map>
#include <mutex>
#include <sstream>

namespace qtcat {

Ordering compare_monomials(const RhoMonomial &a, const RhoMonomial &b) {
    if (a.weight() != b.weight())
        throw weight_mismatch_error("compare_monomials: weights differ");
    if (a.parts < b.parts) return Ordering::less;
    if (b.parts < a.parts) return Ordering::greater;
    return Ordering::equal;
}

RhoPoly::RhoPoly(mpz_class c) {
    if (c != 0) terms_.emplace(RhoMonomial{}, std::move(c));
}

RhoPoly RhoPoly::monomial(RhoMonomial m, mpz_class c) {
    RhoPoly p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool RhoPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    uint64_t w = terms_.begin()->first.weight();
    for (const auto &[m, c] : terms_)
        if (m.weight() != w) return false;
    return true;
}

uint64_t RhoPoly::weight() const {
    if (terms_.empty()) throw std::domain_error("weight of zero polynomial");
    if (!is_homogeneous()) throw std::domain_error("weight of non-homogeneous polynomial");
    return terms_.begin()->first.weight();
}

void RhoPoly::add_term(const RhoMonomial &m, const mpz_class &c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RhoPoly &RhoPoly::operator+=(const RhoPoly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
}

RhoPoly &RhoPoly::operator-=(const RhoPoly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, -c);
    return *this;
}

RhoPoly RhoPoly::operator-() const {
    RhoPoly r;
    for (const auto &[m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

RhoPoly RhoPoly::scaled(const mpz_class &c) const {
    RhoPoly r;
    if (c == 0) return r;
    for (const auto &[m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

RhoPoly operator*(const RhoPoly &a, const RhoPoly &b) {
    RhoPoly r;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            RhoMonomial m;
            m.parts.reserve(ma.parts.size() + mb.parts.size());
            std::merge(ma.parts.begin(), ma.parts.end(), mb.parts.begin(), mb.parts.end(),
                       std::back_inserter(m.parts));
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

std::string RhoPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        mpz_class a = abs(c);
        bool printed = false;
        if (a != 1 || m.is_one()) {
            os << a.get_str();
            printed = true;
        }
        size_t i = 0;
        while (i < m.parts.size()) {
            size_t j = i;
            while (j < m.parts.size() && m.parts[j] == m.parts[i]) j++;
            if (printed) os << "*";
            os << "r" << m.parts[i];
            if (j - i > 1) os << "^" << (j - i);
            printed = true;
            i = j;
        }
    }
    return os.str();
}

std::string RhoPoly::to_json() const {
    std::ostringstream os;
    uint64_t w = terms_.empty() ? 0 : terms_.begin()->first.weight();
    os << "{\"weight\": " << w << ", \"terms\": [";
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (!first) os << ", ";
        first = false;
        os << "{\"mono\": [";
        for (size_t i = 0; i < m.parts.size(); i++) os << (i ? "," : "") << m.parts[i];
        os << "], \"coeff\": \"" << c.get_str() << "\"}";
    }
    os << "]}";
    return os.str();
}

std::pair<RhoMonomial, mpz_class> leading(const RhoPoly &f) {
    if (f.is_zero()) throw std::domain_error("leading of zero polynomial");
    if (!f.is_homogeneous()) throw std::domain_error("leading of non-homogeneous polynomial");
    const auto &[m, c] = *f.terms().begin();
    return {m, c};
}

namespace {
std::map<std::pair<uint32_t, int64_t>, RhoPoly> h_cache;
std::mutex h_mutex;

RhoPoly h_compute(uint32_t b, int64_t w); // fwd

RhoPoly h_lookup(uint32_t b, int64_t w) {
    {
        std::lock_guard<std::mutex> g(h_mutex);
        auto it = h_cache.find({b, w});
        if (it != h_cache.end()) return it->second;
    }
    RhoPoly r = h_compute(b, w);
    std::lock_guard<std::mutex> g(h_mutex);
    h_cache.emplace(std::make_pair(b, w), r);
    return r;
}

RhoPoly h_compute(uint32_t b, int64_t w) {
    if (w < 0) return RhoPoly();
    if (w == 0) return RhoPoly(1);
    if (b == 0) return RhoPoly();
    // h(b,w) = sum_{j=0..w} rho_j h(b-1, w-j)
    RhoPoly acc = h_lookup(b - 1, w);
    for (int64_t j = 1; j <= w; j++) {
        RhoPoly sub = h_lookup(b - 1, w - j);
        RhoMonomial rj{{uint32_t(j)}};
        acc += RhoPoly::monomial(rj) * sub;
    }
    return acc;
}
} // namespace

RhoPoly h_series(uint32_t b, int64_t w) { return h_lookup(b, w); }

RhoPoly determinant(const std::vector<std::vector<RhoPoly>> &matrix) {
    size_t n = matrix.size();
    for (const auto &row : matrix)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    if (n == 0) return RhoPoly(1);
    if (n > 25) throw std::invalid_argument("determinant: size beyond supported envelope");
    // memo[mask] = det of rows 0..popcount-1 on the column set given by mask
    std::vector<RhoPoly> memo(size_t(1) << n);
    std::vector<bool> have(size_t(1) << n, false);
    memo[0] = RhoPoly(1);
    have[0] = true;
    std::function<const RhoPoly &(uint32_t)> minor = [&](uint32_t mask) -> const RhoPoly & {
        if (have[mask]) return memo[mask];
        int r = __builtin_popcount(mask) - 1;
        RhoPoly acc;
        int idx = 0;
        for (uint32_t j = 0; j < n; j++) {
            if (!(mask >> j & 1)) continue;
            const RhoPoly &e = matrix[r][j];
            if (!e.is_zero()) {
                RhoPoly t = e * minor(mask & ~(1u << j));
                if ((r + idx) % 2) acc -= t;
                else acc += t;
            }
            idx++;
        }
        memo[mask] = std::move(acc);
        have[mask] = true;
        return memo[mask];
    };
    return minor(uint32_t((size_t(1) << n) - 1));
}

} // namespace qtcat
