#ifndef QTCAT_DYCK_HPP
#define QTCAT_DYCK_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qtcat {

// Dyck path from (0,0) to (n,n): N/E steps never below the diagonal.
// Row i (bottom row = 1) contributes a_i full squares between path and
// diagonal; dinv counts pairs i<j with a_i = a_j or a_i = a_j + 1.
struct DyckPath {
    std::vector<bool> steps; // true = N, false = E; length 2n
    std::vector<uint32_t> area_vector;

    size_t n() const { return area_vector.size(); }
    uint64_t area() const;
    uint64_t dinv() const;
};

DyckPath path_from_area_vector(std::vector<uint32_t> a);
std::vector<uint32_t> area_vector_from_steps(const std::vector<bool> &steps, size_t n);

// visits every Dyck path exactly once (iterative area-vector odometer); n <= 14
void enumerate_dyck(uint32_t n, const std::function<void(const DyckPath &)> &fn);

mpz_class catalan_number(uint32_t n);

// coefficient grid of C_n(q,t): entry (d1,d2) = #paths with area d1, dinv d2
class CatalanTable {
  public:
    CatalanTable() = default;
    explicit CatalanTable(uint32_t n);

    uint32_t n() const { return n_; }
    uint32_t side() const { return maxdeg_ + 1; } // C(n,2)+1
    const mpz_class &at(uint32_t d1, uint32_t d2) const;
    void add(uint32_t d1, uint32_t d2, const mpz_class &c = 1);

    mpz_class total() const;
    bool symmetric() const;

    std::string to_csv() const;  // header d1,d2,coeff; nonzero entries
    std::string to_json() const; // {"n": n, "entries": [[d1,d2,"coeff"],...]}

    friend bool operator==(const CatalanTable &a, const CatalanTable &b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

  private:
    uint32_t n_ = 0;
    uint32_t maxdeg_ = 0;
    std::vector<mpz_class> coeffs_; // dense (maxdeg+1)^2, row-major by d1
};

CatalanTable build_table(uint32_t n);

// anti-diagonal sums s_d = sum_{d1+d2=d} coeffs(d1,d2), d = 0..C(n,2)
std::vector<mpz_class> specialize_qq(const CatalanTable &t);

// p(k)(C(n,2)-3k+1) + 2 sum_{i=1}^{k-1} p(i,k); requires 0 <= k <= n-3
mpz_class corollaryB_formula(uint32_t n, uint32_t k);

} // namespace qtcat

#endif
