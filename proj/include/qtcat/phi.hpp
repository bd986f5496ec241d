#ifndef QTCAT_PHI_HPP
#define QTCAT_PHI_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "qtcat/diagram.hpp"
#include "qtcat/rho.hpp"

namespace qtcat {

// formal sum of diagrams sharing one bidegree
struct FormalSum {
    struct Term {
        mpq_class coeff;
        PointDiagram diagram;
    };
    std::vector<Term> terms;

    FormalSum() = default;
    explicit FormalSum(PointDiagram d);
    FormalSum(std::vector<Term> ts); // throws on bidegree mismatch
    Bidegree bidegree() const;
};

// phi by literal enumeration of permutations; n <= 9
RhoPoly phi_permutation(const PointDiagram &d);

// phi as (-1)^k det[ h(b_i, j-1-|P_i|) ]; n <= 14
RhoPoly phi_determinant(const PointDiagram &d);

// public entry: determinant route, with the permutation-sum cross-check for
// n <= phi_selfcheck_limit (default 6; set 0 to disable). Past the direct
// determinant envelope (n > 14) the value is assembled as the product over
// blocks, so large staircase-shaped diagrams still evaluate.
extern int phi_selfcheck_limit;
RhoPoly phi(const PointDiagram &d);

// linear extension; result must have integer coefficients
RhoPoly phi_sum(const FormalSum &s);

// c with phi(D) = c * rho_1^C(n,2) when all |P_i| = 0; asserts against phi
mpz_class vandermonde_constant(const PointDiagram &d);

// Coefficients a_mu with phi(D) = sum a_mu rho_mu over mu in Pi_{d2,k},
// computed by the inductive staircase expansion (weights in [0,k] along the
// point/height sequence, terminal configurations whose x-coordinates fill
// {N,...,N+n-1}).
struct StaircaseExpansion {
    std::map<Partition, mpz_class> coefficients;
    PointDiagram source;
    uint64_t padding_length = 0; // N = N0 + 1
};

// requires k >= 0; guarded to n <= 5 and small total y
StaircaseExpansion expand_to_staircase(const PointDiagram &d);

} // namespace qtcat

#endif
