#ifndef QTCAT_ALTERNANT_HPP
#define QTCAT_ALTERNANT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "qtcat/diagram.hpp"

namespace qtcat {

// Sparse polynomial in x_1,y_1,...,x_n,y_n; key = exponent vector
// (a_1,b_1,...,a_n,b_n).
class Alternant {
  public:
    using Exponents = std::vector<uint32_t>;
    using TermMap = std::map<Exponents, mpz_class>;

    explicit Alternant(size_t n) : n_(n) {}

    size_t vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap &terms() const { return terms_; }
    void add_term(const Exponents &e, const mpz_class &c);

    Bidegree bidegree() const; // of the first term; asserts bi-homogeneity
    bool is_bihomogeneous() const;
    // swapping the variable pairs i and j negates the polynomial
    bool is_antisymmetric() const;

    friend bool operator==(const Alternant &a, const Alternant &b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

  private:
    size_t n_;
    TermMap terms_;
};

// Delta(D) = det[x_i^{a_j} y_i^{b_j}], permutation-sum expansion; n <= 6
Alternant delta(const PointDiagram &d);

// exact identity (sum_i x_i^c y_i^e) * Delta(D) =
// sum_i Delta(D with column i bumped by (c,e)); n <= 5
bool check_sum_lemma(const PointDiagram &d, uint32_t c, uint32_t e);

} // namespace qtcat

#endif
