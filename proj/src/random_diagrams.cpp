#include "qtcat/random_diagrams.hpp"

#include <set>

namespace qtcat {

Rng split_rng(uint64_t seed, const std::string &label, uint64_t index) {
    uint64_t h = seed;
    for (unsigned char c : label) h = h * 1099511628211ULL + c;
    h ^= index * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return Rng(h);
}

static PointDiagram random_points(Rng &rng, uint32_t n, int32_t x_max, int32_t y_max,
                                  bool allow_negative) {
    std::set<std::pair<int32_t, int32_t>> s;
    std::uniform_int_distribution<int32_t> ydist(0, y_max);
    while (s.size() < n) {
        int32_t y = ydist(rng);
        int32_t lo = allow_negative ? -y : 0;
        std::uniform_int_distribution<int32_t> xdist(lo, x_max);
        s.insert({xdist(rng), y});
    }
    std::vector<PlanarPoint> pts;
    for (auto [x, y] : s) pts.push_back({x, y});
    return PointDiagram(std::move(pts), allow_negative ? Flavor::Dprime : Flavor::D);
}

PointDiagram random_dprime_diagram(Rng &rng, uint32_t n, int32_t x_max, int32_t y_max) {
    return random_points(rng, n, x_max, y_max, true);
}

PointDiagram random_d_diagram(Rng &rng, uint32_t n, int32_t x_max, int32_t y_max) {
    return random_points(rng, n, x_max, y_max, false);
}

PointDiagram random_profile_diagram(Rng &rng, const std::vector<int64_t> &profile, int32_t y_max) {
    std::set<std::pair<int32_t, int32_t>> s;
    for (int64_t t : profile) {
        for (int tries = 0; tries < 1000; tries++) {
            std::uniform_int_distribution<int32_t> ydist(0, y_max);
            int32_t y = ydist(rng);
            int32_t x = int32_t(t) - y;
            if (s.insert({x, y}).second) break;
            if (tries == 999) throw std::runtime_error("random_profile_diagram: cannot place point");
        }
    }
    std::vector<PlanarPoint> pts;
    for (auto [x, y] : s) pts.push_back({x, y});
    return PointDiagram(std::move(pts), Flavor::Dprime);
}

} // namespace qtcat
