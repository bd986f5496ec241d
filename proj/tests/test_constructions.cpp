#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtcat/constructions.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/partitions.hpp"

using namespace qtcat;

static RhoMonomial M(std::initializer_list<uint32_t> parts) {
    RhoMonomial m;
    m.parts = parts;
    return m;
}

TEST_CASE("building blocks at minimal y") {
    BuildingBlock b = building_block({3}, 1);
    CHECK(b.diagram == make_diagram({{-1, 1}, {0, 0}, {1, 0}, {2, 0}}, Flavor::Dprime));
    CHECK(phi(b.diagram) == RhoPoly::monomial(M({3})));

    BuildingBlock t = building_block({1, 1, 1}, 3);
    CHECK(t.diagram == make_diagram({{-2, 2}, {-1, 1}, {0, 0}}, Flavor::Dprime));
    CHECK(phi(t.diagram) == RhoPoly::monomial(M({1, 1, 1})));

    BuildingBlock vw = building_block({2, 3}, 2);
    auto [lm, lc] = leading(phi(vw.diagram));
    CHECK(lm == M({2, 3}));
    CHECK(lc == -1);

    CHECK(building_block({1, 1}, 2).size == 4);
    CHECK_THROWS_AS(building_block({1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("building blocks keep their certificate at raised y-budgets") {
    std::vector<Partition> mus = {{1}, {1, 1}, {1, 1, 1}, {2}, {4}, {2, 2}, {2, 3}, {3, 5}};
    for (const auto &mu : mus) {
        uint32_t base = uint32_t(mu.size()); // minimal y-degree = #mu
        for (uint32_t extra = 0; extra <= 3; extra++) {
            BuildingBlock b = building_block(mu, base + extra);
            Bidegree bd = b.diagram.bidegree();
            CHECK(bd.second == int64_t(base + extra));
            CHECK(leading(phi(b.diagram)).first == RhoMonomial{mu});
        }
    }
}

TEST_CASE("construct_D_nu basics") {
    // empty partition: the unique staircase-type diagram, phi = 1
    auto c0 = construct_D_nu(5, 6, 4, {});
    CHECK(c0.phi_value == RhoPoly(1));
    CHECK(c0.element.terms.size() == 1);

    auto c = construct_D_nu(8, 20, 4, {4});
    CHECK(c.leading == M({4}));
    CHECK(c.bidegree == Bidegree{20, 4});

    CHECK_THROWS_AS(construct_D_nu(7, 14, 3, {1, 1, 2}), std::invalid_argument); // k = n-3
    CHECK_THROWS_AS(construct_D_nu(8, 21, 4, {4}), std::invalid_argument);       // |nu| != k
    CHECK_THROWS_AS(construct_D_nu(8, 4, 20, {4}), std::invalid_argument);       // d2 > d1
}

TEST_CASE("the worked instance n=18, k=14, y-degree 7") {
    // deficit 14 at n=18 with d2=7 forces d1 = C(18,2)-14-7 = 132
    Partition nu = {1, 1, 1, 2, 2, 3, 4};
    auto cert = construct_D_nu(18, 132, 7, nu);
    CHECK(cert.leading == M({1, 1, 1, 2, 2, 3, 4}));
    CHECK(cert.bidegree == Bidegree{132, 7});
    CHECK(cert.element.terms.size() == 1);
    CHECK(cert.element.terms[0].diagram.size() == 18);
}

TEST_CASE("construct_f_nu reaches the pair and corner strategies") {
    // plain single diagram
    auto a = construct_f_nu(7, 13, 5, {1, 2});
    CHECK(a.element.terms.size() == 1);
    CHECK(a.leading == M({1, 2}));

    // (1,1) run with no room for the 4-point block but with a spare singleton:
    // n=8, k=4, nu=(1,1,2): n0(4pt) = 1+4+3 = 8 <= 8, still single diagram
    auto b = construct_f_nu(8, 21, 3, {1, 1, 2});
    CHECK(b.leading == M({1, 1, 2}));

    // corner cell: n=7, k=4, nu=(1,1,2) has no unit-coefficient pair at all
    auto c = construct_f_nu(7, 14, 3, {1, 1, 2});
    CHECK(c.leading == M({1, 1, 2}));
    REQUIRE(c.element.terms.size() == 2);
    CHECK(c.element.terms[0].coeff == 1);
    CHECK(c.element.terms[1].coeff == -2);
    auto [lm, lc] = leading(c.phi_value);
    CHECK(lm == M({1, 1, 2}));

    // (1,1)-run where the four-point block still fits: single diagram
    auto d = construct_f_nu(9, 28, 3, {1, 1, 3});
    CHECK(d.leading == M({1, 1, 3}));
    CHECK(d.element.terms.size() == 1);

    // the corner family across its whole d2 range at n=8 (k=5)
    for (uint32_t d2 = 3; d2 <= 11; d2++) {
        auto cc = construct_f_nu(8, 23 - d2, d2, {1, 1, 3});
        CHECK(cc.leading == M({1, 1, 3}));
        CHECK(cc.element.terms.size() == 2);
    }
}

TEST_CASE("basis certificates match table entries") {
    CHECK(basis_certificate(7, 21, 0).rank == 1); // k=0
    auto r = basis_certificate(7, 13, 5);         // k=3
    CHECK(r.rank == 3);
    CHECK(count_partitions_bounded(5, 3) == 3);
    auto r2 = basis_certificate(7, 11, 6); // k=4
    CHECK(r2.rank == 5);
    CHECK(build_table(7).at(11, 6) == 5);
    // leading monomials pairwise distinct and equal {rho_nu}
    std::set<Partition> lms;
    for (const auto &cert : r2.certificates) lms.insert(cert.leading.parts);
    CHECK(lms.size() == 5);
    for (const auto &nu : enumerate_partitions_bounded(6, 4)) CHECK(lms.count(nu) == 1);

    CHECK_THROWS_AS(basis_certificate(7, 10, 6), std::invalid_argument); // k = 5 > n-3
}

TEST_CASE("full Theorem 5.2 range: k <= n-4, n <= 10") {
    for (uint32_t n = 4; n <= 10; n++) {
        uint32_t choose2 = n * (n - 1) / 2;
        for (uint32_t k = 0; k + 4 <= n; k++) {
            for (uint32_t d2 = 0; 2 * d2 <= choose2 - k; d2++) {
                uint32_t d1 = choose2 - k - d2;
                for (const auto &nu : enumerate_partitions_bounded(d2, k)) {
                    auto cert = construct_D_nu(n, d1, d2, nu);
                    CHECK(cert.leading == RhoMonomial{nu});
                }
            }
        }
    }
}
