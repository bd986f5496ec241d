#include "qtcat/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qtcat {

uint64_t partition_weight(const Partition &nu) {
    uint64_t w = 0;
    for (auto p : nu) w += p;
    return w;
}

bool is_valid_partition(const Partition &nu) {
    for (size_t i = 0; i < nu.size(); i++) {
        if (nu[i] == 0) return false;
        if (i > 0 && nu[i - 1] > nu[i]) return false;
    }
    return true;
}

mpz_class count_partitions(uint64_t k) {
    return count_partitions_bounded(k, k);
}

mpz_class count_partitions_bounded(uint64_t b, uint64_t k) {
    if (k == 0) return 1;
    if (b == 0) return 0;
    // dp over part sizes 1..min(b', ...): p(b,k) = #partitions of k into parts
    // of size <= b is the conjugate count; at most b parts == largest part <= b.
    uint64_t maxpart = std::min(b, k);
    std::vector<mpz_class> dp(k + 1, 0);
    dp[0] = 1;
    for (uint64_t part = 1; part <= maxpart; part++)
        for (uint64_t v = part; v <= k; v++) dp[v] += dp[v - part];
    return dp[k];
}

std::vector<Partition> enumerate_partitions_bounded(uint32_t b, uint32_t k) {
    std::vector<Partition> out;
    Partition cur; // built largest-first, reversed on emit
    // descending order in the graded term order = emit larger first parts first;
    // the order compares weakly-increasing sequences lexicographically, and our
    // largest-first construction visits them in exactly that descending order
    // when we recurse on the smallest part last. Simpler: generate all, sort.
    std::function<void(uint32_t, uint32_t, uint32_t)> rec = [&](uint32_t rem, uint32_t maxpart,
                                                                uint32_t slots) {
        if (rem == 0) {
            Partition p(cur.rbegin(), cur.rend());
            out.push_back(std::move(p));
            return;
        }
        if (slots == 0) return;
        for (uint32_t v = std::min(rem, maxpart); v >= 1; v--) {
            cur.push_back(v);
            rec(rem - v, v, slots - 1);
            cur.pop_back();
        }
    };
    rec(k, k, b);
    std::sort(out.begin(), out.end(), [](const Partition &a, const Partition &b2) { return a > b2; });
    return out;
}

SubstringDecomposition substring_decompose(const Partition &nu) {
    if (nu.empty()) throw std::invalid_argument("substring_decompose: empty partition");
    if (!is_valid_partition(nu)) throw std::invalid_argument("substring_decompose: not a partition");
    SubstringDecomposition d;
    d.source = nu;
    uint32_t c = 0;
    while (c < nu.size() && nu[c] == 1) c++;
    d.ones_count = c;
    d.m = uint32_t(nu.size()) - c;
    if (c > 0) {
        uint32_t t = (c + 2) / 3; // ceil(c/3)
        for (uint32_t i = 0; i + 1 < t; i++) d.blocks.push_back({1, 1, 1});
        d.blocks.push_back(Partition(c - 3 * (t - 1), 1));
    }
    if (d.m > 0) {
        uint32_t t = (d.m + 1) / 2; // ceil(m/2)
        uint32_t i = c;
        for (uint32_t j = 0; j + 1 < t; j++) {
            d.blocks.push_back({nu[i], nu[i + 1]});
            i += 2;
        }
        d.blocks.push_back(Partition(nu.begin() + i, nu.end()));
    }
    return d;
}

} // namespace qtcat
