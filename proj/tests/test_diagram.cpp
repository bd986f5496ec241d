#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qtcat/diagram.hpp"
#include "qtcat/random_diagrams.hpp"

using namespace qtcat;

TEST_CASE("make_diagram sorts, computes bidegree and deficit") {
    auto d = make_diagram({{1, 0}, {0, 0}, {2, 0}});
    CHECK(d.size() == 3);
    CHECK(d.bidegree() == Bidegree{3, 0});
    CHECK(d.deficit() == 0);
    CHECK(d[0] == PlanarPoint{0, 0});
    CHECK(d[2] == PlanarPoint{2, 0});

    auto dp = make_diagram({{-1, 1}, {0, 0}, {0, 1}, {0, 2}, {1, 1}}, Flavor::Dprime);
    CHECK(dp.bidegree() == Bidegree{0, 5});
    CHECK(dp.deficit() == 5);
    CHECK(dp.str() == "(-1,1);(0,0);(0,1);(0,2);(1,1)");

    CHECK_THROWS_AS(make_diagram({{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_diagram({{-1, 1}, {0, 0}}, Flavor::D), std::invalid_argument);
    CHECK_THROWS_AS(make_diagram({{-2, 1}, {0, 0}}, Flavor::Dprime), std::invalid_argument);
}

TEST_CASE("canonical order is a strict total order on a 10x10 grid") {
    std::vector<PlanarPoint> pts;
    for (int x = 0; x < 10; x++)
        for (int y = 0; y < 10; y++) pts.push_back({x, y});
    for (const auto &a : pts)
        for (const auto &b : pts) {
            if (a == b) {
                CHECK(!point_less(a, b));
            } else {
                CHECK(point_less(a, b) != point_less(b, a));
            }
            for (const auto &c : pts)
                if (point_less(a, b) && point_less(b, c)) CHECK(point_less(a, c));
        }
}

TEST_CASE("parse") {
    auto d = parse_diagram(" (-1, 1); (0,0) ;(0,1) ");
    CHECK(d.size() == 3);
    CHECK(d.flavor() == Flavor::Dprime);
    CHECK(parse_diagram(d.str()) == d);
    CHECK_THROWS_AS(parse_diagram(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("(1;2)"), std::invalid_argument);
}

TEST_CASE("blocks: worked example after Lemma 3.2") {
    auto d = make_diagram({{0, 0}, {0, 1}, {1, 0}, {2, 1}, {3, 0}, {2, 2}});
    auto bs = blocks(d);
    REQUIRE(bs.size() == 3);
    CHECK(bs[0] == make_diagram({{0, 0}}));
    CHECK(bs[1] == make_diagram({{-1, 1}, {0, 0}}, Flavor::Dprime));
    CHECK(bs[2] == make_diagram({{-1, 1}, {0, 0}, {-1, 2}}, Flavor::Dprime));

    auto two = blocks(make_diagram({{0, 0}, {1, 0}}));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == make_diagram({{0, 0}}));
    CHECK(two[1] == make_diagram({{0, 0}}));

    CHECK_THROWS_AS(blocks(make_diagram({{0, 1}, {1, 1}}, Flavor::D)), std::invalid_argument);
}

TEST_CASE("partition type") {
    // n=8 with |P| = (0,1,1,2,4,4,5,6): type (2,3)
    auto d = make_diagram({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {4, 0}, {3, 1}, {5, 0}, {6, 0}});
    std::vector<int64_t> prof;
    for (const auto &p : d.points()) prof.push_back(p.total());
    CHECK(prof == std::vector<int64_t>{0, 1, 1, 2, 4, 4, 5, 6});
    auto f = make_staircase_form(d);
    CHECK(f.marks == std::vector<uint32_t>{1, 2, 5});
    CHECK(f.partition_type == Partition{2, 3});

    auto stair = make_staircase_form(make_diagram({{0, 0}, {1, 0}, {2, 0}}));
    CHECK(stair.partition_type == Partition{});

    // |P| = (0,0,2): S = {1,3}, sequence (0,1,0) -> (1)
    auto g = make_staircase_form(make_diagram({{-1, 1}, {0, 0}, {0, 2}}, Flavor::Dprime));
    CHECK(g.marks == std::vector<uint32_t>{1, 3});
    CHECK(g.partition_type == Partition{1});

    CHECK_THROWS_AS(make_staircase_form(make_diagram({{0, 0}, {3, 0}})), std::invalid_argument);
}

TEST_CASE("special staircase forms") {
    auto f = special_staircase(3, 13, {2, 5, 7}, {2, 1, 5});
    CHECK(f.partition_type == Partition{1, 2, 5});
    CHECK(f.diagram.size() == 13);
    CHECK(is_staircase_form(f.diagram));

    auto axis = special_staircase(0, 5, {}, {});
    CHECK(axis.diagram == make_diagram({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}));

    // adds (0,1), removes (1,0): {(0,0),(0,1),(2,0),(3,0)}
    auto g = special_staircase(1, 4, {1}, {0});
    CHECK(g.partition_type == Partition{});
    CHECK(g.diagram == make_diagram({{0, 0}, {0, 1}, {2, 0}, {3, 0}}));

    CHECK_THROWS_AS(special_staircase(1, 4, {1}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(special_staircase(2, 4, {2, 1}, {0, 0}), std::invalid_argument);

    // randomized: output always satisfies the staircase condition and the
    // partition type equals the nonzero s_i sorted
    std::mt19937_64 rng(42);
    for (int t = 0; t < 300; t++) {
        uint32_t n = 3 + rng() % 10;
        uint32_t m = rng() % 3;
        std::vector<uint32_t> r, s;
        uint32_t lo = 1;
        for (uint32_t i = 0; i < m; i++) {
            if (lo >= n) break;
            uint32_t ri = lo + rng() % (n - lo);
            r.push_back(ri);
            lo = ri + 1;
        }
        m = uint32_t(r.size());
        for (uint32_t i = 0; i < m; i++) {
            uint32_t next = (i + 1 < m) ? r[i + 1] : n;
            s.push_back(rng() % (next - r[i]));
        }
        auto sf = special_staircase(m, n, r, s);
        CHECK(is_staircase_form(sf.diagram));
        Partition want;
        for (uint32_t v : s)
            if (v) want.push_back(v);
        std::sort(want.begin(), want.end());
        CHECK(sf.partition_type == want);
    }
}

TEST_CASE("transpose") {
    CHECK(transpose(make_diagram({{1, 0}, {0, 0}, {2, 0}})) ==
          make_diagram({{0, 1}, {0, 0}, {0, 2}}));
    std::mt19937_64 seed(1);
    Rng rng(seed());
    for (int t = 0; t < 200; t++) {
        PointDiagram d = random_d_diagram(rng, 2 + rng() % 5);
        auto [d1, d2] = d.bidegree();
        CHECK(transpose(d).bidegree() == Bidegree{d2, d1});
        CHECK(transpose(transpose(d)) == d);
        CHECK(transpose(d).deficit() == d.deficit());
    }
    CHECK_THROWS_AS(transpose(make_diagram({{-1, 1}, {0, 0}}, Flavor::Dprime)),
                    std::invalid_argument);
}
