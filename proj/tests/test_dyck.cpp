#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtcat/dyck.hpp"
#include "qtcat/partitions.hpp"

using namespace qtcat;

TEST_CASE("enumeration counts are Catalan numbers") {
    auto count = [](uint32_t n) {
        uint64_t c = 0;
        enumerate_dyck(n, [&](const DyckPath &) { c++; });
        return c;
    };
    CHECK(count(1) == 1);
    CHECK(count(3) == 5);
    CHECK(count(7) == 429);
    CHECK(catalan_number(7) == 429);
    CHECK(catalan_number(12) == 208012);
}

TEST_CASE("path statistics") {
    // diagonal-hugging path: area 0, dinv C(n,2)
    for (uint32_t n = 1; n <= 6; n++) {
        DyckPath hug = path_from_area_vector(std::vector<uint32_t>(n, 0));
        CHECK(hug.area() == 0);
        CHECK(hug.dinv() == n * (n - 1) / 2);
        std::vector<uint32_t> full(n);
        for (uint32_t i = 0; i < n; i++) full[i] = i;
        DyckPath sq = path_from_area_vector(full);
        CHECK(sq.area() == n * (n - 1) / 2);
        CHECK(sq.dinv() == 0);
        // the full square path is N^n E^n
        for (uint32_t i = 0; i < n; i++) CHECK(sq.steps[i] == true);
        for (uint32_t i = n; i < 2 * n; i++) CHECK(sq.steps[i] == false);
    }
    // steps round-trip
    enumerate_dyck(5, [](const DyckPath &p) {
        CHECK(area_vector_from_steps(p.steps, 5) == p.area_vector);
        CHECK(p.area() + p.dinv() <= 10);
    });
}

TEST_CASE("n=3 statistics multiset") {
    std::map<std::pair<uint64_t, uint64_t>, int> hist;
    enumerate_dyck(3, [&](const DyckPath &p) { hist[{p.area(), p.dinv()}]++; });
    std::map<std::pair<uint64_t, uint64_t>, int> want = {
        {{3, 0}, 1}, {{2, 1}, 1}, {{1, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 1}};
    CHECK(hist == want);
}

TEST_CASE("table totals and symmetry, n <= 12") {
    for (uint32_t n = 1; n <= 12; n++) {
        CatalanTable t = build_table(n);
        CHECK(t.total() == catalan_number(n));
        CHECK(t.symmetric());
    }
}

TEST_CASE("table entries for n=1 and n=7 spot values") {
    CatalanTable t1 = build_table(1);
    CHECK(t1.at(0, 0) == 1);
    CHECK(t1.total() == 1);
    CatalanTable t7 = build_table(7);
    CHECK(t7.at(0, 21) == 1);
    CHECK(t7.at(21, 0) == 1);
    CHECK(t7.at(7, 8) == 8);
    CHECK(t7.at(8, 8) == 6);
    CHECK(t7.at(13, 5) == 3);
    CHECK(t7.at(11, 6) == 5);
}

TEST_CASE("q=t specialization and Corollary B top coefficients") {
    CatalanTable t7 = build_table(7);
    auto s = specialize_qq(t7);
    CHECK(s[21] == 22);
    CHECK(s[20] == 19);
    CHECK(corollaryB_formula(7, 0) == 22);
    CHECK(corollaryB_formula(7, 1) == 19);
    CHECK(corollaryB_formula(7, 4) == 66);
    CHECK_THROWS_AS(corollaryB_formula(7, 5), std::invalid_argument);
    for (uint32_t n = 3; n <= 10; n++) {
        auto sp = specialize_qq(build_table(n));
        for (uint32_t k = 0; k + 3 <= n; k++)
            CHECK(sp[n * (n - 1) / 2 - k] == corollaryB_formula(n, k));
    }
}

TEST_CASE("csv and json export shapes") {
    CatalanTable t = build_table(2);
    CHECK(t.to_csv() == "d1,d2,coeff\n0,1,1\n1,0,1\n");
    CHECK(t.to_json() == "{\"n\": 2, \"entries\": [[0,1,\"1\"], [1,0,\"1\"]]}");
}
