#ifndef QTCAT_CATALAN_DIAGRAMS_HPP
#define QTCAT_CATALAN_DIAGRAMS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "qtcat/diagram.hpp"
#include "qtcat/dyck.hpp"

namespace qtcat {

// lambda_1 >= ... >= lambda_{n-1} >= lambda_n = 0 with lambda_i <= n-i
using StaircasePartition = std::vector<uint32_t>;

bool in_Lambda(const StaircasePartition &lam);
void enumerate_Lambda(uint32_t n, const std::function<void(const StaircasePartition &)> &fn);

// D(lambda): a_i = n-i-lambda_i, b_i = #{ j>i : lambda_i-lambda_j+i-j in {0,1} }
PointDiagram theta(const StaircasePartition &lam);

// membership in D_n^catalan (column closure + column-count condition)
bool is_catalan(const PointDiagram &d);

// inverse by repeated peeling of the minimal saturated column; validates the
// predicate at every step
StaircasePartition theta_inverse(const PointDiagram &d);

// bidegree census of theta(Lambda_n); equals build_table(n)
CatalanTable census(uint32_t n);

// {(0,0),...,(ell-1,0)} u (D + (ell,0)); bidegree gains (C(ell,2)+n*ell, 0)
PointDiagram embed(const PointDiagram &d, uint32_t ell);

// the unique catalan diagram of bidegree (d1, C(n,2)-d1); integer arithmetic only
PointDiagram construct_k0(uint32_t n, uint64_t d1);

// Strict-growth witness for k = n-2, d2 >= 2 (proof of the equality theorem):
// {(0,0),(1,0),(0,2)} u (construct_k0(n-2, d1-n+3) + (2,0)), an element of
// D^catalan_{n+1} of bidegree (d1+n, d2) that is not an embed image.
PointDiagram strict_growth_witness(uint32_t n, uint64_t d1, uint64_t d2);

} // namespace qtcat

#endif
