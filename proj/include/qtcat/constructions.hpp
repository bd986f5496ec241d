#ifndef QTCAT_CONSTRUCTIONS_HPP
#define QTCAT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qtcat/diagram.hpp"
#include "qtcat/phi.hpp"
#include "qtcat/rho.hpp"

namespace qtcat {

// One building block E_mu (a segment of the substring decomposition) at a
// requested y-degree, certificate-checked: LM(phi(diagram)) = rho_mu.
struct BuildingBlock {
    Partition mu;
    PointDiagram diagram; // in D'
    size_t size = 0;
    uint64_t weight = 0;
};

// y-minimal instance raised to y_budget by north-west moves; throws if the
// budget is outside the block's envelope or the certificate check fails
BuildingBlock building_block(const Partition &mu, uint32_t y_budget);

// Certificate for one nu: an alternating element (single diagram, signed
// pair, or in the documented corner family a (1,-2) pair) whose phi value
// has leading monomial rho_nu.
struct GeneratorCertificate {
    Partition nu;
    FormalSum element;
    Bidegree bidegree;
    RhoPoly phi_value;
    RhoMonomial leading;
};

// Theorem route for k <= n-4: a single diagram D_nu in D_n of bidegree
// (d1,d2) with LM(phi(D_nu)) = rho_nu. Self-verifying; throws on failure.
GeneratorCertificate construct_D_nu(uint32_t n, uint64_t d1, uint64_t d2, const Partition &nu);

// k <= n-3: single diagram when the assembly fits, otherwise a pair built
// from the 3-point run-block variants, otherwise the corner scheme.
GeneratorCertificate construct_f_nu(uint32_t n, uint64_t d1, uint64_t d2, const Partition &nu);

struct BasisReport {
    uint64_t rank = 0;
    std::vector<GeneratorCertificate> certificates;
};

// builds f_nu for every nu in Pi_{d2,k}; asserts the leading monomials are
// pairwise distinct and equal {rho_nu}, certifying rank p(d2,k)
BasisReport basis_certificate(uint32_t n, uint64_t d1, uint64_t d2);

} // namespace qtcat

#endif
