#include "qtcat/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qtcat {

bool point_less(const PlanarPoint &a, const PlanarPoint &b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.x < b.x;
}

PointDiagram::PointDiagram(std::vector<PlanarPoint> pts, Flavor flavor)
    : pts_(std::move(pts)), flavor_(flavor) {
    std::sort(pts_.begin(), pts_.end(), point_less);
    for (size_t i = 0; i < pts_.size(); i++) {
        const auto &p = pts_[i];
        if (p.y < 0) throw std::invalid_argument("diagram: negative y at " + str());
        if (flavor_ == Flavor::D && p.x < 0)
            throw std::invalid_argument("diagram: negative x in flavor D");
        if (flavor_ == Flavor::Dprime && p.total() < 0)
            throw std::invalid_argument("diagram: x+y < 0 in flavor D'");
        if (i > 0 && pts_[i - 1] == p) throw std::invalid_argument("diagram: duplicate point");
    }
}

Bidegree PointDiagram::bidegree() const {
    int64_t dx = 0, dy = 0;
    for (const auto &p : pts_) {
        dx += p.x;
        dy += p.y;
    }
    return {dx, dy};
}

int64_t PointDiagram::deficit() const {
    int64_t n = int64_t(pts_.size());
    int64_t s = 0;
    for (const auto &p : pts_) s += p.total();
    return n * (n - 1) / 2 - s;
}

bool PointDiagram::in_D() const {
    for (const auto &p : pts_)
        if (p.x < 0) return false;
    return true;
}

bool operator<(const PointDiagram &a, const PointDiagram &b) {
    auto key = [](const PlanarPoint &p) { return std::pair<int32_t, int32_t>{p.x, p.y}; };
    return std::lexicographical_compare(a.pts_.begin(), a.pts_.end(), b.pts_.begin(), b.pts_.end(),
                                        [&](const PlanarPoint &u, const PlanarPoint &v) {
                                            return key(u) < key(v);
                                        });
}

std::string PointDiagram::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < pts_.size(); i++) {
        if (i) os << ";";
        os << "(" << pts_[i].x << "," << pts_[i].y << ")";
    }
    return os.str();
}

PointDiagram make_diagram(std::vector<std::pair<int, int>> pts, Flavor flavor) {
    std::vector<PlanarPoint> v;
    v.reserve(pts.size());
    for (auto [x, y] : pts) v.push_back({x, y});
    return PointDiagram(std::move(v), flavor);
}

PointDiagram parse_diagram(const std::string &text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    std::vector<PlanarPoint> pts;
    size_t i = 0;
    bool any_negative_x = false;
    while (i < s.size()) {
        if (s[i] == ';') {
            i++;
            continue;
        }
        if (s[i] != '(') throw std::invalid_argument("parse_diagram: expected '(' in " + text);
        size_t comma = s.find(',', i);
        size_t close = s.find(')', i);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::invalid_argument("parse_diagram: malformed point in " + text);
        int x = std::stoi(s.substr(i + 1, comma - i - 1));
        int y = std::stoi(s.substr(comma + 1, close - comma - 1));
        if (x < 0) any_negative_x = true;
        pts.push_back({x, y});
        i = close + 1;
    }
    if (pts.empty()) throw std::invalid_argument("parse_diagram: no points");
    return PointDiagram(std::move(pts), any_negative_x ? Flavor::Dprime : Flavor::D);
}

std::vector<PointDiagram> blocks(const PointDiagram &d) {
    size_t n = d.size();
    std::vector<size_t> S; // 1-based indices with |P_i| = i-1
    for (size_t i = 1; i <= n; i++)
        if (d[i - 1].total() == int64_t(i) - 1) S.push_back(i);
    if (S.empty() || S[0] != 1)
        throw std::invalid_argument("blocks: requires |P_1| = 0 (1 in S)");
    std::vector<PointDiagram> out;
    for (size_t r = 0; r < S.size(); r++) {
        size_t lo = S[r];
        size_t hi = (r + 1 < S.size()) ? S[r + 1] - 1 : n;
        std::vector<PlanarPoint> pts;
        for (size_t i = lo; i <= hi; i++)
            pts.push_back({d[i - 1].x - int32_t(lo - 1), d[i - 1].y});
        out.emplace_back(std::move(pts), Flavor::Dprime);
    }
    return out;
}

bool is_staircase_form(const PointDiagram &d) {
    for (size_t i = 1; i <= d.size(); i++) {
        int64_t t = d[i - 1].total();
        if (t != int64_t(i) - 1 && t != int64_t(i) - 2) return false;
    }
    return true;
}

StaircaseForm make_staircase_form(const PointDiagram &d) {
    if (!is_staircase_form(d))
        throw std::invalid_argument("staircase form: |P_i| must be i-1 or i-2");
    StaircaseForm f;
    f.diagram = d;
    for (size_t i = 1; i <= d.size(); i++)
        if (d[i - 1].total() == int64_t(i) - 1) f.marks.push_back(uint32_t(i));
    f.partition_type = partition_type(f);
    return f;
}

Partition partition_type(const StaircaseForm &f) {
    size_t n = f.diagram.size();
    Partition gaps;
    uint32_t prev = 0;
    for (uint32_t i : f.marks) {
        if (i - prev - 1 > 0) gaps.push_back(i - prev - 1);
        prev = i;
    }
    if (n > prev) gaps.push_back(uint32_t(n - prev));
    std::sort(gaps.begin(), gaps.end());
    return gaps;
}

StaircaseForm special_staircase(uint32_t m, uint32_t n, const std::vector<uint32_t> &r,
                                const std::vector<uint32_t> &s) {
    if (r.size() != m || s.size() != m)
        throw std::invalid_argument("special_staircase: r,s must have length m");
    for (uint32_t i = 0; i < m; i++) {
        uint32_t next_r = (i + 1 < m) ? r[i + 1] : n;
        if (r[i] < 1 || r[i] >= next_r)
            throw std::invalid_argument("special_staircase: need 1 <= r_1 < ... < r_m < n");
        if (s[i] > next_r - r[i] - 1)
            throw std::invalid_argument("special_staircase: need 0 <= s_i <= r_{i+1}-r_i-1");
    }
    std::set<std::pair<int, int>> pts;
    for (uint32_t i = 0; i < n; i++) pts.insert({int(i), 0});
    for (uint32_t i = 0; i < m; i++) {
        pts.insert({int(r[i]) - 1, 1});
        pts.erase({int(r[i] + s[i]), 0});
    }
    std::vector<PlanarPoint> v;
    for (auto [x, y] : pts) v.push_back({x, y});
    return make_staircase_form(PointDiagram(std::move(v), Flavor::D));
}

PointDiagram transpose(const PointDiagram &d) {
    std::vector<PlanarPoint> pts;
    pts.reserve(d.size());
    for (const auto &p : d.points()) {
        if (p.x < 0) throw std::invalid_argument("transpose: negative x (flavor D required)");
        pts.push_back({p.y, p.x});
    }
    return PointDiagram(std::move(pts), Flavor::D);
}

} // namespace qtcat
