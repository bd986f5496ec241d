#include "qtcat/dyck.hpp"

#include <sstream>
#include <stdexcept>

#include "qtcat/partitions.hpp"

namespace qtcat {

uint64_t DyckPath::area() const {
    uint64_t a = 0;
    for (auto v : area_vector) a += v;
    return a;
}

uint64_t DyckPath::dinv() const {
    uint64_t d = 0;
    size_t m = area_vector.size();
    for (size_t i = 0; i < m; i++)
        for (size_t j = i + 1; j < m; j++)
            if (area_vector[i] == area_vector[j] || area_vector[i] == area_vector[j] + 1) d++;
    return d;
}

DyckPath path_from_area_vector(std::vector<uint32_t> a) {
    size_t n = a.size();
    DyckPath p;
    p.steps.reserve(2 * n);
    // row i (1-based, bottom row first) has its north step at x = i-1-a_i
    uint32_t x = 0;
    for (size_t i = 0; i < n; i++) {
        uint32_t xi = uint32_t(i) - a[i];
        if (a[i] > i || (i > 0 && a[i] > a[i - 1] + 1))
            throw std::invalid_argument("path_from_area_vector: invalid area vector");
        while (x < xi) {
            p.steps.push_back(false);
            x++;
        }
        p.steps.push_back(true);
    }
    while (x < n) {
        p.steps.push_back(false);
        x++;
    }
    p.area_vector = std::move(a);
    return p;
}

std::vector<uint32_t> area_vector_from_steps(const std::vector<bool> &steps, size_t n) {
    std::vector<uint32_t> a;
    a.reserve(n);
    uint32_t x = 0, y = 0;
    for (bool s : steps) {
        if (s) {
            a.push_back(y - x); // the (y+1)-th row: cells x..y-1 above the diagonal
            y++;
        } else {
            x++;
            if (x > y) throw std::invalid_argument("path below diagonal");
        }
    }
    if (a.size() != n || x != n) throw std::invalid_argument("area_vector_from_steps: bad path");
    return a;
}

void enumerate_dyck(uint32_t n, const std::function<void(const DyckPath &)> &fn) {
    if (n < 1 || n > 14) throw std::invalid_argument("enumerate_dyck: need 1 <= n <= 14");
    // odometer over valid area vectors: a_1 = 0, 0 <= a_{i+1} <= a_i + 1
    std::vector<uint32_t> a(n, 0);
    for (;;) {
        fn(path_from_area_vector(a));
        size_t i = n - 1;
        while (i >= 1 && a[i] > a[i - 1]) i--; // saturated entries (a_i = a_{i-1}+1)
        if (i == 0) return;
        a[i]++;
        for (size_t j = i + 1; j < n; j++) a[j] = 0;
    }
}

mpz_class catalan_number(uint32_t n) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
    return b / (n + 1);
}

CatalanTable::CatalanTable(uint32_t n) : n_(n), maxdeg_(n * (n - 1) / 2) {
    coeffs_.assign(size_t(maxdeg_ + 1) * (maxdeg_ + 1), 0);
}

const mpz_class &CatalanTable::at(uint32_t d1, uint32_t d2) const {
    static const mpz_class zero = 0;
    if (d1 > maxdeg_ || d2 > maxdeg_) return zero;
    return coeffs_[size_t(d1) * (maxdeg_ + 1) + d2];
}

void CatalanTable::add(uint32_t d1, uint32_t d2, const mpz_class &c) {
    coeffs_.at(size_t(d1) * (maxdeg_ + 1) + d2) += c;
}

mpz_class CatalanTable::total() const {
    mpz_class s = 0;
    for (const auto &c : coeffs_) s += c;
    return s;
}

bool CatalanTable::symmetric() const {
    for (uint32_t i = 0; i <= maxdeg_; i++)
        for (uint32_t j = i + 1; j <= maxdeg_; j++)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::string CatalanTable::to_csv() const {
    std::ostringstream os;
    os << "d1,d2,coeff\n";
    for (uint32_t d1 = 0; d1 <= maxdeg_; d1++)
        for (uint32_t d2 = 0; d2 <= maxdeg_; d2++)
            if (at(d1, d2) != 0) os << d1 << "," << d2 << "," << at(d1, d2).get_str() << "\n";
    return os.str();
}

std::string CatalanTable::to_json() const {
    std::ostringstream os;
    os << "{\"n\": " << n_ << ", \"entries\": [";
    bool first = true;
    for (uint32_t d1 = 0; d1 <= maxdeg_; d1++)
        for (uint32_t d2 = 0; d2 <= maxdeg_; d2++)
            if (at(d1, d2) != 0) {
                if (!first) os << ", ";
                first = false;
                os << "[" << d1 << "," << d2 << ",\"" << at(d1, d2).get_str() << "\"]";
            }
    os << "]}";
    return os.str();
}

CatalanTable build_table(uint32_t n) {
    CatalanTable t(n);
    enumerate_dyck(n, [&](const DyckPath &p) { t.add(uint32_t(p.area()), uint32_t(p.dinv())); });
    return t;
}

std::vector<mpz_class> specialize_qq(const CatalanTable &t) {
    uint32_t maxdeg = t.side() - 1;
    std::vector<mpz_class> s(maxdeg + 1, 0);
    for (uint32_t d1 = 0; d1 <= maxdeg; d1++)
        for (uint32_t d2 = 0; d2 <= maxdeg && d1 + d2 <= maxdeg; d2++) s[d1 + d2] += t.at(d1, d2);
    return s;
}

mpz_class corollaryB_formula(uint32_t n, uint32_t k) {
    if (n < 3 || k > n - 3) throw std::invalid_argument("corollaryB_formula: need 0 <= k <= n-3");
    mpz_class choose2 = mpz_class(n) * (n - 1) / 2;
    mpz_class acc = count_partitions(k) * (choose2 - 3 * int64_t(k) + 1);
    for (uint32_t i = 1; i < k; i++) acc += 2 * count_partitions_bounded(i, k);
    return acc;
}

} // namespace qtcat
