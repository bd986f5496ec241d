#ifndef QTCAT_RHO_HPP
#define QTCAT_RHO_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qtcat/partitions.hpp"

namespace qtcat {

// Monomial rho_nu = rho_{nu_1} rho_{nu_2} ... indexed by a partition.
// The empty partition is the monomial 1 (weight 0).
struct RhoMonomial {
    Partition parts; // weakly increasing

    uint64_t weight() const { return partition_weight(parts); }
    bool is_one() const { return parts.empty(); }
    friend bool operator==(const RhoMonomial &a, const RhoMonomial &b) = default;
};

struct weight_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Ordering { less, equal, greater };

// Graded term order: defined within one weight class; lexicographic on the
// weakly increasing part sequences. Throws weight_mismatch_error when the
// weights differ.
Ordering compare_monomials(const RhoMonomial &a, const RhoMonomial &b);

// Storage order for polynomial terms: weight first, then the term order,
// both descending, so begin() of a homogeneous polynomial is its leading term.
struct MonoStorageGreater {
    bool operator()(const RhoMonomial &a, const RhoMonomial &b) const {
        uint64_t wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa > wb;
        return a.parts > b.parts; // lex on weakly increasing parts
    }
};

// Sparse element of Z[rho_1, rho_2, ...]. No stored coefficient is zero.
class RhoPoly {
  public:
    using TermMap = std::map<RhoMonomial, mpz_class, MonoStorageGreater>;

    RhoPoly() = default;
    explicit RhoPoly(mpz_class c); // constant
    static RhoPoly monomial(RhoMonomial m, mpz_class c = 1);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap &terms() const { return terms_; }

    bool is_homogeneous() const;
    // common weight of a nonzero homogeneous polynomial
    uint64_t weight() const;

    void add_term(const RhoMonomial &m, const mpz_class &c);

    RhoPoly &operator+=(const RhoPoly &o);
    RhoPoly &operator-=(const RhoPoly &o);
    friend RhoPoly operator+(RhoPoly a, const RhoPoly &b) { return a += b; }
    friend RhoPoly operator-(RhoPoly a, const RhoPoly &b) { return a -= b; }
    friend RhoPoly operator*(const RhoPoly &a, const RhoPoly &b);
    RhoPoly operator-() const;
    RhoPoly scaled(const mpz_class &c) const;

    friend bool operator==(const RhoPoly &a, const RhoPoly &b) { return a.terms_ == b.terms_; }

    // "2*r1^3*r2 - 1*r5" style rendering, terms in decreasing term order
    std::string str() const;
    // {"weight": k, "terms": [{"mono": [...], "coeff": "<decimal>"}]}
    std::string to_json() const;

  private:
    TermMap terms_;
};

// leading monomial and coefficient of a nonzero homogeneous polynomial;
// a nonzero constant yields the monomial 1
std::pair<RhoMonomial, mpz_class> leading(const RhoPoly &f);

// h(b,w): weight-w part of (1 + rho_1 + rho_2 + ...)^b. Zero for w < 0,
// one for w = 0, zero for b = 0 < w. Memoized globally.
RhoPoly h_series(uint32_t b, int64_t w);

// exact determinant by column-subset memoized Laplace expansion (2^n minors)
RhoPoly determinant(const std::vector<std::vector<RhoPoly>> &matrix);

} // namespace qtcat

#endif
