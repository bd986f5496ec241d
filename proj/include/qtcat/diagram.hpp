#ifndef QTCAT_DIAGRAM_HPP
#define QTCAT_DIAGRAM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qtcat/partitions.hpp"

namespace qtcat {

struct PlanarPoint {
    int32_t x = 0; // may be negative in D'
    int32_t y = 0; // always >= 0
    int64_t total() const { return int64_t(x) + y; }
    friend bool operator==(const PlanarPoint &, const PlanarPoint &) = default;
};

// canonical order: by x+y, ties by x
bool point_less(const PlanarPoint &a, const PlanarPoint &b);

enum class Flavor {
    D,      // x >= 0, y >= 0
    Dprime, // x + y >= 0, y >= 0
};

using Bidegree = std::pair<int64_t, int64_t>;

// An ordered set of n distinct points, kept sorted in the canonical order.
class PointDiagram {
  public:
    PointDiagram() = default;
    // throws std::invalid_argument on duplicates or flavor violation
    PointDiagram(std::vector<PlanarPoint> pts, Flavor flavor);

    size_t size() const { return pts_.size(); }
    const std::vector<PlanarPoint> &points() const { return pts_; }
    const PlanarPoint &operator[](size_t i) const { return pts_[i]; }
    Flavor flavor() const { return flavor_; }

    Bidegree bidegree() const;
    // k = C(n,2) - sum |P_i|; may be negative for general D' input
    int64_t deficit() const;

    bool in_D() const; // all x >= 0
    friend bool operator==(const PointDiagram &a, const PointDiagram &b) {
        return a.pts_ == b.pts_;
    }
    friend bool operator<(const PointDiagram &a, const PointDiagram &b);

    std::string str() const; // "(x,y);(x,y);..."

  private:
    std::vector<PlanarPoint> pts_;
    Flavor flavor_ = Flavor::D;
};

PointDiagram make_diagram(std::vector<std::pair<int, int>> pts, Flavor flavor = Flavor::D);

// "(-1,1);(0,0);(0,1)", whitespace ignored; flavor chosen by point signs
PointDiagram parse_diagram(const std::string &text);

// S = { i : |P_i| = i-1 } (1-based); requires 1 in S. Splits at the indices
// of S and translates each piece back to the origin.
std::vector<PointDiagram> blocks(const PointDiagram &d);

// minimal staircase form: |P_i| in {i-1, i-2} for all i
bool is_staircase_form(const PointDiagram &d);

struct StaircaseForm {
    PointDiagram diagram;
    std::vector<uint32_t> marks; // S, 1-based
    Partition partition_type;
};

StaircaseForm make_staircase_form(const PointDiagram &d);

// positive entries of (i_1 - 1, i_2 - i_1 - 1, ..., n - i_l), sorted
Partition partition_type(const StaircaseForm &f);

// special minimal staircase form from (m, n, r, s):
// {(0,0),..,(n-1,0)} u {(r_i - 1, 1)} \ {(r_i + s_i, 0)}
StaircaseForm special_staircase(uint32_t m, uint32_t n, const std::vector<uint32_t> &r,
                                const std::vector<uint32_t> &s);

// swap x and y of every point; requires flavor D
PointDiagram transpose(const PointDiagram &d);

} // namespace qtcat

#endif
