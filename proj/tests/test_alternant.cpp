#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtcat/alternant.hpp"
#include "qtcat/random_diagrams.hpp"

using namespace qtcat;

TEST_CASE("delta on two points") {
    // {(0,0),(1,0)}: det [[1, x1],[1, x2]] = x2 - x1
    Alternant a = delta(make_diagram({{0, 0}, {1, 0}}));
    REQUIRE(a.terms().size() == 2);
    CHECK(a.terms().at({0, 0, 1, 0}) == 1); // x2
    CHECK(a.terms().at({1, 0, 0, 0}) == -1);

    Alternant b = delta(make_diagram({{0, 0}, {0, 1}}));
    CHECK(b.terms().at({0, 0, 0, 1}) == 1); // y2
    CHECK(b.terms().at({0, 1, 0, 0}) == -1);
}

TEST_CASE("delta of the axis staircase is the Vandermonde product") {
    for (uint32_t n = 2; n <= 4; n++) {
        std::vector<std::pair<int, int>> pts;
        for (uint32_t i = 0; i < n; i++) pts.push_back({int(i), 0});
        Alternant got = delta(make_diagram(pts));
        // expand prod_{i<j} (x_j - x_i) directly
        Alternant want(n);
        {
            std::vector<std::pair<Alternant::Exponents, mpz_class>> acc = {
                {Alternant::Exponents(2 * n, 0), 1}};
            for (size_t i = 0; i < n; i++)
                for (size_t j = i + 1; j < n; j++) {
                    std::vector<std::pair<Alternant::Exponents, mpz_class>> next;
                    for (auto &[e, c] : acc) {
                        auto e1 = e;
                        e1[2 * j] += 1;
                        next.push_back({e1, c});
                        auto e2 = e;
                        e2[2 * i] += 1;
                        next.push_back({e2, -c});
                    }
                    acc = std::move(next);
                }
            for (auto &[e, c] : acc) want.add_term(e, c);
        }
        CHECK(got == want);
    }
}

TEST_CASE("antisymmetry and bi-homogeneity on random diagrams") {
    for (uint32_t t = 0; t < 100; t++) {
        Rng rng = split_rng(42, "test_alternant", t);
        PointDiagram d = random_d_diagram(rng, 2 + rng() % 4, 4, 3);
        Alternant a = delta(d);
        CHECK(a.is_bihomogeneous());
        CHECK(a.is_antisymmetric());
        CHECK(a.bidegree() == d.bidegree());
    }
}

TEST_CASE("construction canonicalizes point order first") {
    auto d1 = make_diagram({{0, 0}, {2, 1}, {1, 0}});
    auto d2 = make_diagram({{2, 1}, {1, 0}, {0, 0}});
    CHECK(delta(d1) == delta(d2));
}

TEST_CASE("sum lemma") {
    CHECK(check_sum_lemma(make_diagram({{0, 0}, {1, 0}}), 1, 0));
    CHECK(check_sum_lemma(make_diagram({{0, 0}, {1, 0}}), 0, 0));
    for (uint32_t t = 0; t < 100; t++) {
        Rng rng = split_rng(42, "test_lemma34", t);
        PointDiagram d = random_d_diagram(rng, 2 + rng() % 3, 3, 2);
        CHECK(check_sum_lemma(d, rng() % 3, rng() % 3));
    }
}
