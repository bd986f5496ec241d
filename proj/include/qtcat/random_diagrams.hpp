#ifndef QTCAT_RANDOM_DIAGRAMS_HPP
#define QTCAT_RANDOM_DIAGRAMS_HPP

#include <cstdint>
#include <random>

#include "qtcat/diagram.hpp"

namespace qtcat {

using Rng = std::mt19937_64;

// per-suite deterministic stream: one master seed, split by label and index
Rng split_rng(uint64_t seed, const std::string &label, uint64_t index = 0);

// n distinct points with y in [0, y_max], x in [-y, x_max]
PointDiagram random_dprime_diagram(Rng &rng, uint32_t n, int32_t x_max = 4, int32_t y_max = 3);

// n distinct points in N x N
PointDiagram random_d_diagram(Rng &rng, uint32_t n, int32_t x_max = 4, int32_t y_max = 3);

// random diagram with the given |P_i| profile (points drawn on each diagonal)
PointDiagram random_profile_diagram(Rng &rng, const std::vector<int64_t> &profile,
                                    int32_t y_max = 6);

} // namespace qtcat

#endif
