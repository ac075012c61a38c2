#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "qreflect/perm.hpp"

using namespace qref;

TEST_CASE("composition order matches function application") {
    // a = (1 2), b = (2 3) on three points (0-based inside).
    const Perm a = perm_from_cycles(3, {{1, 2}});
    const Perm b = perm_from_cycles(3, {{2, 3}});
    const Perm ab = a * b;
    // (a*b)(p) = a(b(p)): 3 -> 2 -> 1 in 1-based labels.
    CHECK(ab.apply(2) == 0);
    CHECK((a * b).cycle_string() == "(1 2 3)");
    CHECK((b * a).cycle_string() == "(1 3 2)");
}

TEST_CASE("identity and order") {
    const Perm id = Perm::identity(5);
    CHECK(id.is_identity());
    CHECK(id.order() == 1);
    CHECK(id.cycle_string() == "()");
    const Perm c = perm_from_cycles(10, {{1, 6, 9, 4, 7}, {2, 5, 10, 3, 8}});
    CHECK(c.order() == 5);
    CHECK(c.cycle_string() == "(1 6 9 4 7)(2 5 10 3 8)");
    const Perm fourcycles = perm_from_cycles(10, {{3, 6, 4, 5}, {7, 9, 8, 10}});
    CHECK(fourcycles.order() == 4);
}

TEST_CASE("round trip through the cycle text") {
    const Perm p = perm_from_cycles(6, {{1, 4}, {2, 5, 6}});
    CHECK(p.cycle_string() == "(1 4)(2 5 6)");
    CHECK(p.order() == 6);
}

TEST_CASE("invalid cycles are rejected") {
    CHECK_THROWS_AS(perm_from_cycles(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(perm_from_cycles(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("closure sizes of small permutation groups") {
    // <(1 2), (1 2 3 4 5)> = S5.
    const auto s5 = perm_closure({perm_from_cycles(5, {{1, 2}}),
                                  perm_from_cycles(5, {{1, 2, 3, 4, 5}})});
    CHECK(s5.size() == 120);
    // <(1 2 3), (3 4 5)> = A5.
    const auto a5 = perm_closure({perm_from_cycles(5, {{1, 2, 3}}),
                                  perm_from_cycles(5, {{3, 4, 5}})});
    CHECK(a5.size() == 60);
    // Dihedral of order 10 on five points.
    const auto d5 = perm_closure({perm_from_cycles(5, {{1, 2, 3, 4, 5}}),
                                  perm_from_cycles(5, {{2, 5}, {3, 4}})});
    CHECK(d5.size() == 10);
}
